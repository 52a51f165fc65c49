#ifndef XWB_ISOCRYSTAL_HPP
#define XWB_ISOCRYSTAL_HPP

#include <string>
#include <vector>

#include "xwb/matrix.hpp"

namespace xwb {

struct Rat {
  long num = 0;
  long den = 1;
  Rat() = default;
  Rat(long n, long d);
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rat& o) const { return num * o.den < o.num * den; }
  bool operator>(const Rat& o) const { return o < *this; }
  std::string str() const;
};

// Slope datum of a sigma-conjugacy class of GL_n over F_qbar((t)): multiset of
// Newton slopes in lowest terms, sorted descending, with the Kottwitz integer.
// Each slope a/b in lowest terms occurs with multiplicity divisible by b.
struct SlopeClass {
  int n = 0;
  std::vector<std::pair<Rat, int>> slopes;  // (slope, multiplicity), descending
  long kappa = 0;

  void validate() const;  // throws InvalidClass conditions via ErrCode::Invalid
  std::string str() const;   // [5/1, 1/2^2; kappa=k]
  std::string json() const;  // {n, slopes:[[num,den,mult]], kappa}
  bool operator==(const SlopeClass& o) const {
    return n == o.n && slopes == o.slopes && kappa == o.kappa;
  }
};

// Ordered block sizes of a standard Levi of GL_n.
struct LeviShape {
  std::vector<int> blocks;
  int total() const;
};

// Newton slopes of (L^n, b sigma) for b with entries in F_{q^{m0}}((t)):
// 1/m0 times the Newton-polygon slopes of the characteristic polynomial of
// N = b sigma(b) ... sigma^{m0-1}(b); kappa = ord det b.
SlopeClass newton_slopes(const Mat& b, long m0);

// Block-diagonal standard representative: per slope a/b, multiplicity k*b,
// k copies of the b x b cyclic block with superdiagonal ones and corner t^a.
Mat standard_rep(const SlopeClass& c, FieldPtr f);

// Does the class meet the standard parabolic with the given Levi shape, i.e.
// can the slope multiset be partitioned into valid sub-classes of the block
// sizes?
bool meets_levi(const SlopeClass& c, const LeviShape& shape);

}  // namespace xwb

#endif
