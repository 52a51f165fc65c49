#include "xwb/selftest.hpp"

#include <ostream>
#include <vector>

#include "xwb/braid.hpp"
#include "xwb/dlspace.hpp"
#include "xwb/field.hpp"
#include "xwb/isocrystal.hpp"
#include "xwb/laurent.hpp"
#include "xwb/matrix.hpp"
#include "xwb/weyl.hpp"

namespace xwb {

namespace {
bool expect(std::ostream& log, bool ok, const char* what) {
  if (!ok) log << "selftest failure: " << what << "\n";
  return ok;
}
}  // namespace

bool selftest_coeffring(std::ostream& log) {
  bool ok = true;
  auto f2 = FieldTab::make(2, 1, 1);
  // ring axioms on exact elements, exhaustive for width-2 windows over F_2
  std::vector<Laurent> xs;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      xs.push_back(Laurent::poly(f2, 0, {static_cast<Fq>(a), static_cast<Fq>(b)}));
  for (auto& x : xs)
    for (auto& y : xs)
      for (auto& z : xs) {
        ok &= expect(log, x.mul(y.add(z)).agree(x.mul(y).add(x.mul(z))) == TriState::yes,
                     "distributivity");
        ok &= expect(log, x.mul(y.mul(z)).agree(x.mul(y).mul(z)) == TriState::yes,
                     "associativity");
      }
  auto f4 = FieldTab::make(2, 1, 2);
  Laurent z = Laurent::from_coeff(f4, f4->gen());
  ok &= expect(log, z.frobenius(2).agree(z) == TriState::yes, "frobenius order");
  return ok;
}

bool selftest_latmat(std::ostream& log) {
  bool ok = true;
  auto f2 = FieldTab::make(2, 1, 1);
  Mat g(f2, 2);
  g.at(0, 0) = Laurent::one(f2);
  g.at(1, 0) = Laurent::t_power(f2, 1);
  g.at(1, 1) = Laurent::one(f2);
  BruhatData bd = bruhat_decompose(g);
  ok &= expect(log, bd.w == Perm{1, 0}, "bruhat cell of lower unipotent");
  ok &= expect(log, bd.u1.mul(bd.mono).mul(bd.u2).agree(g) != TriState::no, "multiply-back");
  ok &= expect(log, det_val(Mat::diag_tpowers(f2, {2, 5})).v == 7, "det_val diag");
  return ok;
}

bool selftest_isocrystal(std::ostream& log) {
  bool ok = true;
  auto f2 = FieldTab::make(2, 1, 1);
  SlopeClass c = newton_slopes(gl2_superbasic(f2, 0), 1);
  ok &= expect(log, c.kappa == 1 && c.slopes.size() == 1 && c.slopes[0].first == Rat(1, 2),
               "superbasic slopes");
  ok &= expect(log, newton_slopes(standard_rep(c, f2), 1) == c, "round-trip");
  ok &= expect(log, !meets_levi(c, LeviShape{{1, 1}}), "superbasic misses torus");
  return ok;
}

bool selftest_weyl(std::ostream& log) {
  bool ok = true;
  auto W = CoxeterSys::type_A(2);
  ok &= expect(log, W->size() == 6, "order of A2");
  auto cls = W->sigma_classes();
  ok &= expect(log, cls.size() == 3, "A2 has 3 classes");
  int w12 = W->parse_word("s1 s2"), w21 = W->parse_word("s2 s1");
  auto path = W->cyclic_shift_path(w12, w21);
  ok &= expect(log, path.has_value() && path->size() == 1, "one elementary shift");
  return ok;
}

bool selftest_braid(std::ostream& log) {
  bool ok = true;
  auto W = CoxeterSys::type_A(2);
  int c = W->parse_word("s1 s2");
  BraidNF cube = braid_pow_twisted(W, c, 3);
  BraidNF d2 = BraidNF::from_weyl(W, W->longest({0, 1})).pow(2);
  ok &= expect(log, cube == d2, "(s1 s2)^3 equals the squared half-twist");
  ok &= expect(log, !left_divides(BraidNF::from_weyl(W, W->longest({0, 1})),
                                  BraidNF::from_weyl(W, W->parse_word("s1"))),
               "w_S does not divide s1");
  return ok;
}

bool selftest_dlspace(std::ostream& log) {
  bool ok = true;
  auto f2 = FieldTab::make(2, 1, 1);
  Window win{0, 2, 1};
  auto pts = enumerate_flag_points(2, win, f2, 1 << 20);
  ok &= expect(log, pts.size() == 6, "P1 over F2[[t]]/t^2 has 6 points");
  CountReport rep = count_points({1, 0}, gl2_superbasic(f2, 0), win, f2, {});
  ok &= expect(log, rep.yes == 6, "superbasic w0 count");
  return ok;
}

bool selftest_all(std::ostream& log) {
  bool ok = true;
  ok &= selftest_coeffring(log);
  ok &= selftest_latmat(log);
  ok &= selftest_isocrystal(log);
  ok &= selftest_weyl(log);
  ok &= selftest_braid(log);
  ok &= selftest_dlspace(log);
  return ok;
}

}  // namespace xwb
