#ifndef XWB_FIELD_HPP
#define XWB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace xwb {

// Error taxonomy shared by all modules. `code` maps onto CLI exit codes.
enum class ErrCode { Invalid = 1, Precision = 2, Budget = 3 };

class XwbError : public std::runtime_error {
 public:
  XwbError(ErrCode c, const std::string& msg, long widen_hint = 0)
      : std::runtime_error(msg), code(c), widen_hint(widen_hint) {}
  ErrCode code;
  // For Precision errors: extra low-order window width estimated to succeed.
  long widen_hint;
};

enum class TriState { yes, no, unknown };

using Fq = std::uint16_t;  // element index in a FieldTab

// F_{q^m} with q = p^{e0}, realized as F_p[X]/(modulus), modulus of degree
// m_exp = e0*m. Elements are indices 0..size-1 encoding coefficient vectors
// base p (index = sum c_i p^i). All arithmetic is table-driven; tables are
// built once and the object is immutable afterwards.
class FieldTab {
 public:
  // Deterministic construction: modulus is the irreducible polynomial of
  // degree m_exp over F_p with the smallest integer encoding sum c_i p^i.
  static std::shared_ptr<const FieldTab> make(int p, int e0, int m);
  static std::shared_ptr<const FieldTab> make_explicit(int p, int e0, int m_exp,
                                                       std::vector<int> modulus);

  int p() const { return p_; }
  int e0() const { return e0_; }
  int m_exp() const { return m_exp_; }
  int m() const { return m_exp_ / e0_; }  // extension degree over F_q
  long q() const { return q_; }           // q = p^{e0}, the Frobenius exponent
  int size() const { return size_; }      // p^{m_exp}
  const std::vector<int>& modulus() const { return modulus_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  Fq gen() const { return m_exp_ > 1 ? static_cast<Fq>(p_) : one(); }
  Fq minus_one() const { return neg(one()); }

  Fq add(Fq a, Fq b) const { return add_[a * size_ + b]; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const { return neg_[a]; }
  Fq mul(Fq a, Fq b) const { return mul_[a * size_ + b]; }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq frob_q(Fq a) const { return frob_[a]; }  // a^q
  Fq frob_q_pow(Fq a, long k) const;          // a^{q^k}
  Fq pow(Fq a, long e) const;

  Fq from_int(long c) const;                   // image of an integer (prime field)
  Fq from_coeffs(const std::vector<int>& c) const;
  std::vector<int> to_coeffs(Fq a) const;

  bool fixed_by_frob_pow(Fq a, long k) const { return frob_q_pow(a, k) == a; }

  // Printing/parsing of single coefficients: prime-field values print as
  // integers, extension elements as polynomials in the generator `z`.
  std::string to_string(Fq a) const;
  Fq parse(const std::string& s) const;

  bool same(const FieldTab& o) const {
    return p_ == o.p_ && e0_ == o.e0_ && m_exp_ == o.m_exp_ && modulus_ == o.modulus_;
  }

 private:
  FieldTab(int p, int e0, int m_exp, std::vector<int> modulus);
  void build_tables();

  int p_, e0_, m_exp_, size_;
  long q_;
  std::vector<int> modulus_;  // monic, length m_exp+1, modulus_[m_exp] == 1
  std::vector<Fq> add_, mul_, neg_, inv_, frob_;
};

using FieldPtr = std::shared_ptr<const FieldTab>;

}  // namespace xwb

#endif
