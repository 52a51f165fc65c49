#ifndef XWB_DLSPACE_HPP
#define XWB_DLSPACE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xwb/isocrystal.hpp"
#include "xwb/matrix.hpp"
#include "xwb/weyl.hpp"

namespace xwb {

// Coefficient support bound for desk-scale enumeration: exponents in [-N, r),
// coefficients in F_{q^m}.
struct Window {
  long N = 0;
  long r = 1;
  int m = 1;
};

enum class QuotLevel { BorelQuot, UnipQuot };

// A point of (G/B)(L) or (G/U)(L), held as a full invertible matrix with
// exact Laurent-polynomial entries; `cell` records the enumeration pivot
// pattern when the point came from enumerate_flag_points.
struct FlagPoint {
  Mat g;
  QuotLevel level = QuotLevel::BorelQuot;
  Perm cell;
  std::string component;
};

// Canonical representatives of the full flag variety over F_{q^m}[[t]]/t^r,
// extended down to t^{-N} on the below-pivot coordinates; collision-free
// (duplicates introduced by negative exponents are removed).
std::vector<FlagPoint> enumerate_flag_points(int n, const Window& win, FieldPtr f, long budget);
// Memoized variant; enumeration is deterministic so the cache is transparent.
std::shared_ptr<const std::vector<FlagPoint>> enumerate_flag_points_cached(int n, const Window& win,
                                                                           FieldPtr f, long budget);
// Number of raw representatives the window would enumerate (pre-dedup).
long enumeration_size(int n, const Window& win, FieldPtr f);

bool flags_equal(const Mat& g1, const Mat& g2);

// Membership of pt in X_w(b): relative position of (g, b sigma(g)) equals w.
TriState xwb_member(const FlagPoint& pt, const Perm& w, const Mat& b);

// Membership of pt (UnipQuot level) in the cover indexed by the monomial lift
// wdot: the monomial part of g^{-1} b sigma(g) equals wdot on the nose.
TriState xwb_dot_member(const FlagPoint& pt, const Mat& wdot, const Mat& b);

// Discrete invariant of a member: valuation vector of the monomial part of
// g^{-1} b sigma(g), summed over the cycles of w∘sigma_idx (cycles ordered by
// their smallest index).
std::vector<long> alpha_invariant(const FlagPoint& pt, const Perm& w, const Mat& b,
                                  const Perm& sigma_idx = {});
std::string alpha_key(const std::vector<long>& alpha);

// Completion of a projective pair [x:y] to an invertible 2x2 representative;
// the second column is the standard basis vector making the determinant the
// lower-valuation choice of {x, -y}.
Mat complete_flag_gl2(const Laurent& x, const Laurent& y);

struct CountReport {
  int n = 0;
  std::string w;
  std::string b_matrix;
  std::string b_slopes;
  long b_kappa = 0;
  Window window;
  long points = 0;
  long yes = 0, no = 0, unknown = 0;
  std::map<std::string, long> by_alpha;
  std::map<std::string, long> by_component;
  long budget = 0;
  std::string json() const;
  std::string csv() const;
};

struct CountOptions {
  long budget = 10000000;  // predicate-evaluation cap
  int workers = 1;
};

CountReport count_points(const Perm& w, const Mat& b, const Window& win, FieldPtr f,
                         const CountOptions& opts = {});

// Standard-Levi block sizes spanned by the sigma-stable closure of supp(w).
LeviShape shape_of_suppbar(const CoxeterSys& W, int w);

// Predicted emptiness of X_w(b) from the support criterion: true when the
// class of b cannot meet the standard parabolic of suppbar(w).
bool emptiness_predict(const CoxeterSys& W, int w, const SlopeClass& cls);

// GL3 Lang-image membership for wdot*u(a,b,c): trivial class test via Newton
// slopes.
bool lang_image_test(const Laurent& a, const Laurent& b, const Laurent& c);

// det g_n(x) is a unit of the integral model and sigma(det) = (-1)^{n-1} det,
// where column i of g_n(x) is sigma^{i-1}(x).
bool coxeter_xO_member(const std::vector<Laurent>& x);

// Cover equation for GL2, b = diag(t^c, t^d) with c > d, lift
// wdot = [[0, -t^alpha], [t^beta, 0]], alpha + beta = c + d:
//   tau^{-1} sigma^2(tau) = A^{-1} sigma(A),  A = t^{d-beta} sigma(a) - t^{c-beta} a,
// evaluated cross-multiplied.
bool gl2_dot_cover_check(const Laurent& a, const Laurent& tau, long c, long d, long alpha,
                         long beta);

// [[0, t^c], [t^{c+1}, 0]]
Mat gl2_superbasic(FieldPtr f, long c);

}  // namespace xwb

#endif
