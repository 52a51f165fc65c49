#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "xwb/matrix.hpp"

using namespace xwb;

namespace {

Mat m2(FieldPtr f, const std::string& a, const std::string& b, const std::string& c,
       const std::string& d) {
  Mat m(f, 2);
  m.at(0, 0) = Laurent::parse(f, a);
  m.at(0, 1) = Laurent::parse(f, b);
  m.at(1, 0) = Laurent::parse(f, c);
  m.at(1, 1) = Laurent::parse(f, d);
  return m;
}

std::vector<Laurent> entry_grid(FieldPtr f) {
  // the exhaustive grid from the multiply-back property: {0, 1, t, t^-1, 1+t}
  return {Laurent::zero(f, 0), Laurent::one(f), Laurent::t_power(f, 1), Laurent::t_power(f, -1),
          Laurent::parse(f, "1 + 1*t^1")};
}

Mat random_exact(FieldPtr f, int n, std::mt19937& rng) {
  // product of elementary unipotents and a monomial diagonal: exactly
  // invertible with exact inverse-free conjugation paths
  Mat g = Mat::identity(f, n);
  std::uniform_int_distribution<int> pos(0, n - 1), coef(0, f->size() - 1), expo(-1, 1);
  for (int step = 0; step < 6; ++step) {
    int i = pos(rng), j = pos(rng);
    if (i == j) continue;
    Mat e = Mat::identity(f, n);
    e.at(i, j) = Laurent::t_power(f, expo(rng), static_cast<Fq>(std::max(1, coef(rng))));
    g = g.mul(e);
  }
  std::vector<long> ks;
  for (int i = 0; i < n; ++i) ks.push_back(expo(rng));
  return g.mul(Mat::diag_tpowers(f, ks));
}

}  // namespace

TEST_CASE("det_val examples") {
  auto f2 = FieldTab::make(2, 1, 1);
  CHECK(det_val(Mat::diag_tpowers(f2, {2, 5})) == Valuation::finite(7));
  Mat anti = m2(f2, "0", "1", "1*t^1", "0");
  CHECK(det_val(anti) == Valuation::finite(1));
  // det [[1, t^-1],[t, 1]] = 1 - 1 = 0 exactly; the cofactor oracle decides
  Mat g = m2(f2, "1", "1*t^-1", "1*t^1", "1");
  Laurent od = oracle::perm_det(g);
  CHECK(od.ord().is_exact_zero());
  CHECK(det_val(g).is_exact_zero());
  auto f3 = FieldTab::make(3, 1, 1);
  Mat g3 = m2(f3, "1", "1*t^-1", "1*t^1", "1");
  CHECK(det_val(g3).is_exact_zero());
  // inexact all-zero window cannot be certified
  Mat u(f2, 1);
  u.at(0, 0) = Laurent::zero(f2, 3, false);
  CHECK_THROWS_AS(det_val(u), XwbError);
}

TEST_CASE("det agrees with the permutation-sum oracle on random exact matrices") {
  auto f3 = FieldTab::make(3, 1, 1);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Mat g = random_exact(f3, 3, rng);
    CHECK(g.det().agree(oracle::perm_det(g)) == TriState::yes);
    CHECK(g.adjugate().mul(g).agree(Mat::identity(f3, 3).scale(g.det())) == TriState::yes);
  }
}

TEST_CASE("bruhat examples") {
  auto f2 = FieldTab::make(2, 1, 1);
  SUBCASE("identity") {
    BruhatData bd = bruhat_decompose(Mat::identity(f2, 2));
    CHECK(bd.w == Perm{0, 1});
    CHECK(bd.u1.agree(Mat::identity(f2, 2)) == TriState::yes);
    CHECK(bd.mono.agree(Mat::identity(f2, 2)) == TriState::yes);
    CHECK(bd.u2.agree(Mat::identity(f2, 2)) == TriState::yes);
  }
  SUBCASE("antidiagonal") {
    Mat s = m2(f2, "0", "1", "1", "0");
    BruhatData bd = bruhat_decompose(s);
    CHECK(bd.w == Perm{1, 0});
    CHECK(bd.mono.agree(s) == TriState::yes);
    CHECK(bd.u1.agree(Mat::identity(f2, 2)) == TriState::yes);
    CHECK(bd.u2.agree(Mat::identity(f2, 2)) == TriState::yes);
  }
  SUBCASE("lower unipotent over F_2((t))") {
    Mat g = m2(f2, "1", "0", "1*t^1", "1");
    BruhatData bd = bruhat_decompose(g);
    CHECK(bd.w == Perm{1, 0});
    CHECK(bd.u1.agree(m2(f2, "1", "1*t^-1", "0", "1")) == TriState::yes);
    CHECK(bd.mono.agree(m2(f2, "0", "1*t^-1", "1*t^1", "0")) == TriState::yes);
    CHECK(bd.u2.agree(m2(f2, "1", "1*t^-1", "0", "1")) == TriState::yes);
    CHECK(bd.u1.mul(bd.mono).mul(bd.u2).agree(g) == TriState::yes);
  }
}

TEST_CASE("relative position examples") {
  auto f2 = FieldTab::make(2, 1, 1);
  Mat g = m2(f2, "1", "0", "1*t^1", "1");
  CHECK(relative_position(g, g) == Perm{0, 1});
  CHECK(relative_position(Mat::identity(f2, 2), m2(f2, "0", "1", "1", "0")) == Perm{1, 0});
  auto f4 = FieldTab::make(2, 1, 2);
  Mat g1(f4, 2);
  g1.at(0, 0) = Laurent::one(f4);
  g1.at(1, 0) = Laurent::from_coeff(f4, f4->gen());
  g1.at(1, 1) = Laurent::one(f4);
  Mat g2 = g1.sigma();
  CHECK(relative_position(g1, g2) == Perm{1, 0});
}

TEST_CASE("fw_project examples") {
  auto f2 = FieldTab::make(2, 1, 1);
  Mat mono = m2(f2, "0", "1*t^2", "1*t^-1", "0");
  CHECK(fw_project(mono).agree(mono) == TriState::yes);
  Mat u = m2(f2, "1", "1 + 1*t^1", "0", "1");
  Mat u2 = m2(f2, "1", "1*t^2", "0", "1");
  CHECK(fw_project(u.mul(mono).mul(u2)).agree(mono) == TriState::yes);
  Mat g = m2(f2, "1", "0", "1*t^1", "1");
  CHECK(fw_project(g).agree(m2(f2, "0", "1*t^-1", "1*t^1", "0")) == TriState::yes);
}

TEST_CASE("multiply-back over the exhaustive GL2 grid") {
  for (int p : {2, 3}) {
    auto f = FieldTab::make(p, 1, 1);
    auto grid = entry_grid(f);
    int checked = 0;
    for (auto& a : grid)
      for (auto& b : grid)
        for (auto& c : grid)
          for (auto& d : grid) {
            Mat g(f, 2);
            g.at(0, 0) = a;
            g.at(0, 1) = b;
            g.at(1, 0) = c;
            g.at(1, 1) = d;
            if (!g.det().ord().is_finite()) continue;  // skip singular
            ++checked;
            BruhatData bd = bruhat_decompose(g);
            CHECK(bd.u1.mul(bd.mono).mul(bd.u2).agree(g) != TriState::no);
            CHECK(is_upper_unipotent_to_precision(bd.u1));
            CHECK(is_upper_unipotent_to_precision(bd.u2));
            CHECK(det_val(bd.u1) == Valuation::finite(0));
            CHECK(det_val(bd.u2) == Valuation::finite(0));
            CHECK(det_val(bd.mono).v == det_val(g).v);
            // monomial shape: one finite entry per row and column
            for (int j = 0; j < 2; ++j)
              for (int i = 0; i < 2; ++i) {
                if (i == bd.w[j]) CHECK(bd.mono.at(i, j).ord().is_finite());
                else CHECK_FALSE(bd.mono.at(i, j).ord().is_finite());
              }
          }
    CHECK(checked > 300);
  }
}

TEST_CASE("relative position invariance under common left and Borel right moves") {
  auto f3 = FieldTab::make(3, 1, 1);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Mat g1 = random_exact(f3, 2, rng);
    Mat g2 = random_exact(f3, 2, rng);
    Perm w = relative_position(g1, g2);
    Mat h = random_exact(f3, 2, rng);
    auto borel = [&](std::mt19937& r) {
      Mat b = Mat::identity(f3, 2);
      std::uniform_int_distribution<int> expo(-1, 1), coef(1, 2);
      b.at(0, 0) = Laurent::t_power(f3, expo(r), static_cast<Fq>(coef(r)));
      b.at(1, 1) = Laurent::t_power(f3, expo(r), static_cast<Fq>(coef(r)));
      b.at(0, 1) = Laurent::t_power(f3, expo(r), static_cast<Fq>(coef(r)));
      return b;
    };
    CHECK(relative_position(h.mul(g1).mul(borel(rng)), h.mul(g2).mul(borel(rng))) == w);
  }
}

TEST_CASE("fw_project is invariant under unipotent translation") {
  auto f2 = FieldTab::make(2, 1, 1);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> expo(-1, 2);
  for (int trial = 0; trial < 25; ++trial) {
    Mat g = random_exact(f2, 2, rng);
    Mat u = Mat::identity(f2, 2);
    u.at(0, 1) = Laurent::t_power(f2, expo(rng));
    Mat u2 = Mat::identity(f2, 2);
    u2.at(0, 1) = Laurent::t_power(f2, expo(rng));
    Mat a = fw_project(g);
    Mat b = fw_project(u.mul(g).mul(u2));
    CHECK(a.agree(b) != TriState::no);
  }
}

TEST_CASE("cell_of monomial valuations are exact") {
  auto f2 = FieldTab::make(2, 1, 1);
  Mat g = m2(f2, "1", "0", "1*t^1", "1");
  CellData cd = cell_of(g);
  CHECK(cd.w == Perm{1, 0});
  CHECK(cd.mono_ord == std::vector<long>{1, -1});
  // scaling the matrix shifts every monomial valuation uniformly
  CellData cs = cell_of(g.scale(Laurent::t_power(f2, 3)));
  CHECK(cs.mono_ord == std::vector<long>{4, 2});
}

TEST_CASE("in_UWU decides exact monomial membership") {
  auto f2 = FieldTab::make(2, 1, 1);
  Mat g = m2(f2, "1", "0", "1*t^1", "1");
  Mat w_true = m2(f2, "0", "1*t^-1", "1*t^1", "0");
  Mat w_false = m2(f2, "0", "1", "1*t^1", "0");
  CHECK(in_UWU(g, w_true) == TriState::yes);
  CHECK(in_UWU(g, w_false) == TriState::no);
  CHECK(in_UWU(g, Mat::identity(f2, 2)) == TriState::no);
}

TEST_CASE("matrix literal round-trip") {
  auto f2 = FieldTab::make(2, 1, 1);
  Mat g = m2(f2, "1 + 1*t^1", "1*t^-2", "0", "1");
  Mat h = Mat::parse(f2, g.str());
  CHECK(h.agree(g) == TriState::yes);
}

TEST_CASE("pivot certification failure raises a precision error with a hint") {
  auto f2 = FieldTab::make(2, 1, 1);
  Mat g(f2, 2);
  g.at(0, 0) = Laurent::one(f2);
  g.at(0, 1) = Laurent::one(f2);
  g.at(1, 0) = Laurent::zero(f2, 3, false);  // coefficients below t^3 unknown
  g.at(1, 1) = Laurent::one(f2);
  try {
    bruhat_decompose(g);
    CHECK(false);
  } catch (const XwbError& e) {
    CHECK(e.code == ErrCode::Precision);
    CHECK(e.widen_hint >= 1);
  }
}

TEST_CASE("multiply-back and factor shapes on random exact GL3 matrices") {
  auto f2 = FieldTab::make(2, 1, 1);
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> pick(0, 4);
  auto grid = entry_grid(f2);
  int checked = 0;
  while (checked < 150) {
    Mat g(f2, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.at(i, j) = grid[pick(rng)];
    if (!g.det().ord().is_finite()) continue;
    ++checked;
    BruhatData bd = bruhat_decompose(g);
    CHECK(bd.u1.mul(bd.mono).mul(bd.u2).agree(g) != TriState::no);
    CHECK(is_upper_unipotent_to_precision(bd.u1));
    CHECK(is_upper_unipotent_to_precision(bd.u2));
    CHECK(det_val(bd.mono).v == det_val(g).v);
    // cell data agrees between the exact and the normalized paths
    CellData cd = cell_of(g);
    CHECK(cd.w == bd.w);
    for (int j = 0; j < 3; ++j) {
      Valuation mv = bd.mono.at(bd.w[j], j).ord();
      CHECK(mv.is_finite());
      CHECK(mv.v == cd.mono_ord[j]);
    }
    // the exact membership decision recognizes the computed monomial part
    if (bd.mono.all_exact()) CHECK(in_UWU(g, bd.mono) == TriState::yes);
  }
}
