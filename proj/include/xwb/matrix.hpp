#ifndef XWB_MATRIX_HPP
#define XWB_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "xwb/laurent.hpp"

namespace xwb {

// Permutation in one-line "column to pivot row" form: w[j] is the row of the
// unique essential entry in column j of the monomial part.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)[j] = a[b[j]]
Perm perm_inv(const Perm& a);
int perm_length(const Perm& a);  // inversions

// Square matrix over F_{q^m}((t)) on coefficient windows.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, int n);  // zero matrix
  static Mat identity(FieldPtr f, int n);
  static Mat diag_tpowers(FieldPtr f, const std::vector<long>& ks);
  static Mat permutation(FieldPtr f, const Perm& w);  // entry 1 at (w[j], j)

  int n() const { return n_; }
  const FieldPtr& field() const { return f_; }
  Laurent& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const Laurent& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  Mat mul(const Mat& o) const;
  Mat add(const Mat& o) const;
  Mat scale(const Laurent& c) const;
  Mat sigma(long k = 1) const;  // entrywise coefficient Frobenius, t fixed
  Mat transpose() const;
  Laurent det() const;       // Laplace expansion, precision-propagating
  Mat adjugate() const;      // adj * M = det * I
  Mat widened(long prec) const;  // widen exact entries
  bool all_exact() const;

  TriState agree(const Mat& o) const;  // entrywise value comparison

  std::string str() const;   // rows ';'-separated, entries ','-separated
  std::string json() const;
  static Mat parse(FieldPtr f, const std::string& s);

 private:
  FieldPtr f_;
  int n_ = 0;
  std::vector<Laurent> e_;
};

// Valuation of det. Finite values are certified by a visible nonzero leading
// term; exact zero reports AtLeast(inf). Uncertifiable windows raise
// ErrCode::Precision.
Valuation det_val(const Mat& g);

// Bruhat cell data extracted fraction-free: the permutation w with
// g in BwB, plus the exact valuations of the monomial part, column by column
// (mono_ord[j] = ord of the essential entry in column j).
struct CellData {
  Perm w;
  std::vector<long> mono_ord;
};
CellData cell_of(const Mat& g);

struct BruhatData {
  Perm w;
  Mat u1;    // upper unipotent, in U cap wU^-w^{-1}
  Mat mono;  // t1*wdot*t2 part; off-pattern entries exactly zero
  Mat u2;    // upper unipotent
};
// Full decomposition g = u1 * mono * u2. Entries of the factors may be
// precision-capped when pivots are non-monomial; the permutation and the
// valuation data are always exact for exact inputs.
BruhatData bruhat_decompose(const Mat& g);

// w with g1^{-1} g2 in BwB; computed on adj(g1)*g2, which lies in the same
// cell since scalars act trivially on cells.
Perm relative_position(const Mat& g1, const Mat& g2);

// The monomial part t1*wdot*t2 of g (well defined on U\G/U).
Mat fw_project(const Mat& g);

// Decide X in U*W*U for a given exact monomial matrix W, entirely in exact
// arithmetic (scaled fraction-free elimination; no divisions). For inexact
// inputs the answer may be unknown.
TriState in_UWU(const Mat& X, const Mat& W);

bool is_upper_unipotent_to_precision(const Mat& u);

}  // namespace xwb

#endif
