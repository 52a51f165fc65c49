#ifndef XWB_WEYL_HPP
#define XWB_WEYL_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xwb/field.hpp"
#include "xwb/matrix.hpp"

namespace xwb {

// Finite Coxeter system with a diagram automorphism sigma. Elements are built
// once by breadth-first search in ShortLex order through the integer
// reflection representation (crystallographic bond labels 2,3,4,6), then all
// queries run off tables. Caps: rank <= 6, |W| <= 5040.
class CoxeterSys {
 public:
  static std::shared_ptr<CoxeterSys> type_A(int rank);
  static std::shared_ptr<CoxeterSys> from_matrix(const std::vector<std::vector<int>>& m);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(length_.size()); }
  int coxeter_entry(int s, int t) const { return cox_[s][t]; }

  // sigma: permutation of the generators preserving the Coxeter matrix.
  // Identity by default.
  void set_sigma(const std::vector<int>& perm);
  const std::vector<int>& sigma_gens() const { return sigma_; }
  long sigma_order() const;

  int e() const { return 0; }
  int length(int w) const { return length_[w]; }
  const std::vector<int>& word(int w) const { return word_[w]; }  // ShortLex reduced
  int right_mult(int w, int s) const { return rmult_[static_cast<size_t>(w) * rank_ + s]; }
  int left_mult(int s, int w) const { return lmult_[static_cast<size_t>(w) * rank_ + s]; }
  int mult(int a, int b) const;
  int inverse(int w) const { return inv_[w]; }
  int sigma_elt(int w) const;
  int from_word(const std::vector<int>& ws) const;
  int parse_word(const std::string& s) const;  // "s1 s2 s1" tokens, 1-based
  std::string word_str(int w) const;

  bool right_descent(int w, int s) const { return length(right_mult(w, s)) < length(w); }
  bool left_descent(int w, int s) const { return length(left_mult(s, w)) < length(w); }

  std::set<int> supp(int w) const;
  std::set<int> suppbar(int w) const;  // sigma-orbit closure of supp
  bool subset_sigma_stable(const std::set<int>& I) const;

  // longest element of the standard parabolic W_I
  int longest(const std::set<int>& I) const;

  // One-line permutation for type A (rank r <-> S_{r+1}); s_i swaps i, i+1.
  bool is_type_A() const { return type_A_; }
  Perm perm_of(int w) const;
  int from_perm(const Perm& p) const;

  struct SigmaClass {
    std::vector<int> members;  // sorted by element id
    int min_len = 0;
    std::vector<int> cmin;
    bool cuspidal = false;
  };
  std::vector<SigmaClass> sigma_classes() const;
  int class_min_length(int w) const;

  struct ShiftStep {
    int from, x, y, to;  // from = x*y, to = y*sigma(x), lengths additive
  };
  // Witness path of elementary cyclic shifts from w to w2, or nullopt.
  std::optional<std::vector<ShiftStep>> cyclic_shift_path(int w, int w2) const;

  struct DescentStep {
    int from, s, to;  // to = s * from * sigma(s), length non-increasing
  };
  std::vector<DescentStep> descent_to_min(int w) const;

  // Smallest k >= 1 with w sigma(w) ... sigma^{k-1}(w) = e and sigma^k = id.
  long twisted_order(int w) const;

 private:
  explicit CoxeterSys(const std::vector<std::vector<int>>& m);
  void build();

  int rank_ = 0;
  bool type_A_ = false;
  std::vector<std::vector<int>> cox_;
  std::vector<std::vector<int>> cartan_;  // integer pairing used by reflections
  std::vector<int> sigma_;
  std::vector<int> length_;
  std::vector<std::vector<int>> word_;
  std::vector<int> rmult_, lmult_, inv_;
};

using CoxPtr = std::shared_ptr<const CoxeterSys>;

struct WeylElt {
  CoxPtr sys;
  int id = 0;
  int length() const { return sys->length(id); }
  std::string str() const { return sys->word_str(id); }
};

}  // namespace xwb

#endif
