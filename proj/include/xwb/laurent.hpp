#ifndef XWB_LAURENT_HPP
#define XWB_LAURENT_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "xwb/field.hpp"

namespace xwb {

// ord values live in Z together with a +infinity sentinel (exact zero), so the
// type stays totally ordered.
constexpr long kOrdInf = std::numeric_limits<long>::max() / 4;

struct Valuation {
  enum class Kind { Finite, AtLeast } kind;
  long v;

  static Valuation finite(long v) { return {Kind::Finite, v}; }
  static Valuation at_least(long v) { return {Kind::AtLeast, v}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_exact_zero() const { return kind == Kind::AtLeast && v >= kOrdInf; }
  bool operator==(const Valuation& o) const { return kind == o.kind && v == o.v; }
  std::string str() const;
};

// Element of F_{q^m}((t)) carried on the coefficient window [v_lo, prec).
// `exact` means the tail beyond the window is known to vanish, so the value is
// the literal Laurent polynomial; otherwise coefficients at exponents >= prec
// are unknown. No normalization of leading coefficients ever happens
// implicitly; ord is a separate query.
class Laurent {
 public:
  Laurent() = default;
  Laurent(FieldPtr f, long v_lo, std::vector<Fq> coeffs, long prec, bool exact);

  static Laurent zero(FieldPtr f, long prec = 0, bool exact = true);
  static Laurent one(FieldPtr f) { return t_power(f, 0); }
  static Laurent t_power(FieldPtr f, long k, Fq c = 1);
  static Laurent from_coeff(FieldPtr f, Fq c) { return t_power(f, 0, c); }
  // Polynomial sum c[i] * t^(v_lo + i), exact.
  static Laurent poly(FieldPtr f, long v_lo, const std::vector<Fq>& c);

  const FieldPtr& field() const { return field_; }
  long v_lo() const { return v_lo_; }
  long prec() const { return prec_; }
  bool exact() const { return exact_; }
  const std::vector<Fq>& coeffs() const { return coeffs_; }
  Fq coeff(long e) const;  // 0 outside the window (valid for exact tails only below prec)

  bool is_zero_exact() const;
  Valuation ord() const;
  TriState is_unit() const;
  long effective_prec() const { return exact_ ? kOrdInf : prec_; }

  Laurent add(const Laurent& o) const;
  Laurent sub(const Laurent& o) const;
  Laurent neg() const;
  Laurent mul(const Laurent& o) const;
  // Division with interval-style precision propagation. Errors: DivByUnknown
  // when ord(o) cannot be certified Finite; FieldMismatch.
  Laurent div(const Laurent& o) const;
  Laurent frobenius(long k = 1) const;  // coefficientwise q^k-power, window kept
  Laurent shift(long k) const;          // multiply by t^k

  // For exact elements only: raise the declared window end (tail is known).
  Laurent widen(long new_prec) const;
  // Forget tail information beyond new_prec (result inexact unless unchanged).
  Laurent truncate(long new_prec) const;

  bool identical(const Laurent& o) const;
  // Compare as values: no if they differ at a visible exponent, yes if the
  // difference is exactly zero, unknown otherwise.
  TriState agree(const Laurent& o) const;

  std::string str() const;   // c*t^v + ... [+ O(t^prec)]
  std::string json() const;
  static Laurent parse(FieldPtr f, const std::string& s);
  static Laurent from_json(const std::string& s);

 private:
  void normalize();

  FieldPtr field_;
  long v_lo_ = 0;
  long prec_ = 0;
  std::vector<Fq> coeffs_;
  bool exact_ = true;
};

void check_same_field(const Laurent& a, const Laurent& b);

}  // namespace xwb

#endif
