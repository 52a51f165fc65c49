#ifndef XWB_BRAID_HPP
#define XWB_BRAID_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xwb/weyl.hpp"

namespace xwb {

// Positive braid monoid of (W,S). Elements are held in left-greedy normal
// form: a sequence of nonidentity Weyl elements with every adjacent pair
// left-weighted (left descents of the right factor lie among right descents
// of the left factor). The empty sequence is the identity.
class BraidNF {
 public:
  BraidNF() = default;
  explicit BraidNF(CoxPtr w) : sys_(std::move(w)) {}
  static BraidNF from_weyl(CoxPtr w, int elt);
  static BraidNF from_factors(CoxPtr w, std::vector<int> factors);

  const CoxPtr& sys() const { return sys_; }
  const std::vector<int>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }
  long canonical_length() const { return static_cast<long>(factors_.size()); }
  long word_length() const;

  BraidNF mul(const BraidNF& o) const;
  BraidNF pow(long k) const;
  BraidNF sigma() const;  // apply the diagram automorphism

  bool operator==(const BraidNF& o) const { return factors_ == o.factors_; }

  std::string str() const;  // [a_1 | a_2 | ...]

 private:
  void normalize();
  CoxPtr sys_;
  std::vector<int> factors_;
};

// w sigma(w) sigma^2(w) ... sigma^{d-1}(w) in B^+.
BraidNF braid_pow_twisted(CoxPtr W, int w, long d);

// x = d * quotient for some positive braid, if any.
std::optional<BraidNF> left_divide(const BraidNF& d, const BraidNF& x);
bool left_divides(const BraidNF& d, const BraidNF& x);

// Smallest d <= d_max with w_I left-dividing w sigma(w) ... sigma^{d-1}(w).
// Requires I sigma-stable and supp(w) inside I.
std::optional<long> thm91_hypothesis(CoxPtr W, int w, const std::set<int>& I, long d_max);

// Nested chain I_1 >= I_2 >= ... >= I_r with the twisted d-fold power of w
// equal to w_{I_1}^2 ... w_{I_r}^2, searched by decreasing |I_1| then
// lexicographic order; nullopt when no chain exists.
std::optional<std::vector<std::set<int>>> good_certificate(CoxPtr W, int w, long d);

}  // namespace xwb

#endif
