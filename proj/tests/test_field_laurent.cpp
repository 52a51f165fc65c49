#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "xwb/field.hpp"
#include "xwb/laurent.hpp"

using namespace xwb;

namespace {
Laurent L(FieldPtr f, const std::string& s) { return Laurent::parse(f, s); }

std::vector<Laurent> exact_grid(FieldPtr f, long lo, long width) {
  // every exact element with support inside [lo, lo+width)
  std::vector<Laurent> out;
  long total = 1;
  for (long i = 0; i < width; ++i) total *= f->size();
  for (long code = 0; code < total; ++code) {
    std::vector<Fq> c(width);
    long v = code;
    for (long i = 0; i < width; ++i) { c[i] = static_cast<Fq>(v % f->size()); v /= f->size(); }
    out.push_back(Laurent::poly(f, lo, c));
  }
  return out;
}
}  // namespace

TEST_CASE("field construction is deterministic and verified") {
  auto f4 = FieldTab::make(2, 1, 2);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});  // X^2+X+1, smallest encoding
  auto f9 = FieldTab::make(3, 1, 2);
  CHECK(f9->modulus() == std::vector<int>{1, 0, 1});  // X^2+1
  CHECK_THROWS_AS(FieldTab::make_explicit(2, 1, 2, {1, 0, 1}), XwbError);  // (X+1)^2
  // frobenius has exact order m on F_{q^m}
  auto f8 = FieldTab::make(2, 1, 3);
  for (int a = 0; a < f8->size(); ++a)
    CHECK(f8->frob_q_pow(static_cast<Fq>(a), 3) == a);
  bool all_fixed_by_one = true;
  for (int a = 0; a < f8->size(); ++a)
    if (f8->frob_q(static_cast<Fq>(a)) != a) all_fixed_by_one = false;
  CHECK_FALSE(all_fixed_by_one);
  // q = p^{e0} tower: F_4 as degree-1 extension of itself under q=4
  auto f4e = FieldTab::make(2, 2, 1);
  for (int a = 0; a < f4e->size(); ++a) CHECK(f4e->frob_q(static_cast<Fq>(a)) == a);
}

TEST_CASE("arith examples") {
  auto f2 = FieldTab::make(2, 1, 1);
  // char-2 cancellation
  Laurent a = L(f2, "1*t^3 + 1*t^5");
  Laurent b = L(f2, "1*t^3");
  Laurent s = a.add(b);
  CHECK(s.exact());
  CHECK(s.agree(L(f2, "1*t^5")) == TriState::yes);

  auto f3 = FieldTab::make(3, 1, 1);
  Laurent u = L(f3, "1 + 1*t^1");
  Laurent v = L(f3, "1 + 2*t^1");  // 1 - t
  Laurent prod = u.mul(v);
  CHECK(prod.exact());
  CHECK(prod.agree(L(f3, "1 + 2*t^2")) == TriState::yes);  // 1 - t^2

  // div(1, 1-t) at prec 3 over F_2: oracle first
  Laurent one3 = Laurent::one(f2).widen(3);
  Laurent d = L(f2, "1 + 1*t^1").widen(3);
  auto qc = oracle::series_div(one3, d, 0, 3);
  CHECK(qc == std::vector<Fq>{1, 1, 1});
  Laurent q = one3.div(d);
  CHECK_FALSE(q.exact());
  CHECK(q.prec() == 3);
  for (long e = 0; e < 3; ++e) CHECK(q.coeff(e) == qc[e]);
}

TEST_CASE("div errors") {
  auto f2 = FieldTab::make(2, 1, 1);
  Laurent unknown_zero = Laurent::zero(f2, 5, false);
  CHECK_THROWS_AS(Laurent::one(f2).div(unknown_zero), XwbError);
  try {
    Laurent::one(f2).div(unknown_zero);
  } catch (const XwbError& e) {
    CHECK(e.code == ErrCode::Precision);
    CHECK(e.widen_hint >= 1);
  }
  auto f3 = FieldTab::make(3, 1, 1);
  CHECK_THROWS_AS(Laurent::one(f2).add(Laurent::one(f3)), XwbError);  // FieldMismatch
}

TEST_CASE("ord examples and semantics") {
  auto f2 = FieldTab::make(2, 1, 1);
  CHECK(L(f2, "1*t^3 + 1*t^5").ord() == Valuation::finite(3));
  Laurent z4 = Laurent::zero(f2, 4, true);
  CHECK(z4.ord().is_exact_zero());
  Laurent x = L(f2, "1*t^-1 + 1");
  Laurent y = L(f2, "1*t^2");
  CHECK(x.mul(y).ord() == Valuation::finite(1));
  CHECK(Laurent::zero(f2, 4, false).ord() == Valuation::at_least(4));
}

TEST_CASE("frobenius examples") {
  auto f4 = FieldTab::make(2, 1, 2);
  Fq z = f4->gen();
  Laurent a = Laurent::poly(f4, 0, {z, z});
  Laurent fa = a.frobenius();
  Fq z2 = f4->mul(z, z);
  CHECK(fa.coeff(0) == z2);
  CHECK(fa.coeff(1) == z2);
  // fixed field
  Laurent c = L(f4, "1 + 1*t^4");
  CHECK(c.frobenius().agree(c) == TriState::yes);
  // ord preserved
  Laurent d = Laurent::t_power(f4, -2, z);
  CHECK(d.frobenius().ord() == d.ord());
}

TEST_CASE("is_unit tri-states") {
  auto f2 = FieldTab::make(2, 1, 1);
  CHECK(L(f2, "1*t^-1 + 1").is_unit() == TriState::yes);
  CHECK(Laurent::zero(f2, 0, true).is_unit() == TriState::no);
  CHECK(Laurent::zero(f2, 5, false).is_unit() == TriState::unknown);
}

TEST_CASE("ring axioms, exhaustive over F_2 width 3") {
  auto f2 = FieldTab::make(2, 1, 1);
  auto xs = exact_grid(f2, 0, 3);
  for (auto& x : xs)
    for (auto& y : xs) {
      CHECK(x.add(y).agree(y.add(x)) == TriState::yes);
      CHECK(x.mul(y).agree(y.mul(x)) == TriState::yes);
      for (auto& z : xs) {
        CHECK(x.add(y).add(z).agree(x.add(y.add(z))) == TriState::yes);
        CHECK(x.mul(y).mul(z).agree(x.mul(y.mul(z))) == TriState::yes);
        CHECK(x.mul(y.add(z)).agree(x.mul(y).add(x.mul(z))) == TriState::yes);
      }
    }
}

TEST_CASE("valuation additivity on an exact grid") {
  auto f3 = FieldTab::make(3, 1, 1);
  auto xs = exact_grid(f3, -1, 2);
  for (auto& x : xs)
    for (auto& y : xs) {
      if (!x.ord().is_finite() || !y.ord().is_finite()) continue;
      CHECK(x.mul(y).ord() == Valuation::finite(x.ord().v + y.ord().v));
    }
}

TEST_CASE("frobenius is a ring homomorphism of the right order") {
  auto f9 = FieldTab::make(3, 1, 2);
  auto xs = exact_grid(f9, 0, 1);
  for (auto& x : xs)
    for (auto& y : xs) {
      CHECK(x.add(y).frobenius().agree(x.frobenius().add(y.frobenius())) == TriState::yes);
      CHECK(x.mul(y).frobenius().agree(x.frobenius().mul(y.frobenius())) == TriState::yes);
      CHECK(x.frobenius(2).agree(x) == TriState::yes);
    }
}

TEST_CASE("div then mul returns the dividend to the contracted precision") {
  auto f2 = FieldTab::make(2, 1, 1);
  auto xs = exact_grid(f2, 0, 3);
  for (auto& a : xs)
    for (auto& b : xs) {
      if (!b.ord().is_finite()) continue;
      Laurent q = a.widen(6).div(b.widen(6));
      Laurent back = q.mul(b);
      CHECK(back.agree(a) != TriState::no);
    }
}

TEST_CASE("text and json round-trips") {
  auto f4 = FieldTab::make(2, 1, 2);
  Laurent a = Laurent::poly(f4, -2, {f4->gen(), 0, 1, f4->mul(f4->gen(), f4->gen())});
  Laurent t = Laurent::parse(f4, a.str());
  CHECK(t.identical(a));
  Laurent j = Laurent::from_json(a.json());
  CHECK(j.identical(a));
  Laurent trunc = a.truncate(1);
  CHECK(Laurent::parse(f4, trunc.str()).identical(trunc));
  CHECK(Laurent::from_json(trunc.json()).identical(trunc));
  CHECK(Laurent::from_json(Laurent::zero(f4, 3, false).json()).identical(Laurent::zero(f4, 3, false)));
}
