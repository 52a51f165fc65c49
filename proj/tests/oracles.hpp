// Test-only oracles, deliberately independent of the library code paths they
// check: plain algorithms written from the definitions.
#ifndef XWB_TESTS_ORACLES_HPP
#define XWB_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "xwb/dlspace.hpp"
#include "xwb/field.hpp"
#include "xwb/laurent.hpp"
#include "xwb/matrix.hpp"

namespace oracle {

using xwb::Fq;
using xwb::FieldPtr;
using xwb::Laurent;
using xwb::Mat;

// --- series long division, straight from the recurrence -------------------
// coefficients of a/b on exponents [lo, lo+k), requires exact inputs and
// ord(b) finite
inline std::vector<Fq> series_div(const Laurent& a, const Laurent& b, long lo, long k) {
  const auto& F = *a.field();
  long ob = b.ord().v;
  Fq lead = b.coeff(ob);
  std::vector<Fq> q(k, 0);
  // a = q*b  =>  a_{lo+i+ob} = sum_j q_{lo+j} b_{lo+i+ob-(lo+j)}
  for (long i = 0; i < k; ++i) {
    Fq s = a.coeff(lo + i + ob);
    for (long j = 0; j < i; ++j) s = F.sub(s, F.mul(q[j], b.coeff(i - j + ob)));
    q[i] = F.div(s, lead);
  }
  return q;
}

// --- determinant by permutation sum ---------------------------------------
inline Laurent perm_det(const Mat& m) {
  const int n = m.n();
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  Laurent acc = Laurent::zero(m.field(), 0);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (idx[i] > idx[j]) ++inv;
    Laurent term = Laurent::one(m.field());
    for (int i = 0; i < n; ++i) term = term.mul(m.at(idx[i], i));
    if (inv % 2) term = term.neg();
    acc = acc.add(term);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return acc;
}

// --- Newton polygon, brute lower hull --------------------------------------
// points (k, y_k), y may contain +inf sentinels; returns ascending slope list
// with multiplicities summing to n
inline std::vector<std::pair<long, long>> brute_hull_slopes(const std::vector<long>& y) {
  const long INF = xwb::kOrdInf;
  int n = static_cast<int>(y.size()) - 1;
  std::vector<std::pair<long, long>> out;  // (rise, run) per unit segment block
  int cur = 0;
  while (cur < n) {
    // next hull vertex: the point minimizing the slope from cur, farthest on ties
    int best = -1;
    long bn = 0, bd = 1;
    for (int k = cur + 1; k <= n; ++k) {
      if (y[k] >= INF) continue;
      long rise = y[k] - y[cur], run = k - cur;
      if (best < 0 || rise * bd < bn * run || (rise * bd == bn * run && k > best)) {
        best = k;
        bn = rise;
        bd = run;
      }
    }
    out.push_back({bn, bd});
    cur = best;
  }
  return out;
}

// --- permutation-group model of type A Weyl groups -------------------------
struct PermGroup {
  int n;  // letters
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;

  explicit PermGroup(int letters) : n(letters) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
      index[p] = static_cast<int>(elems.size());
      elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  int inv_count(int a) const {
    const auto& p = elems[a];
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++c;
    return c;
  }
  int mul(int a, int b) const {
    const auto &pa = elems[a], &pb = elems[b];
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = pa[pb[i]];
    return index.at(r);
  }
  int inverse(int a) const {
    const auto& pa = elems[a];
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[pa[i]] = i;
    return index.at(r);
  }
};

// sigma-conjugacy classes by full closure over all conjugators
inline std::vector<std::set<int>> sigma_classes_brute(const PermGroup& G,
                                                      const std::vector<int>& sigma_images) {
  // sigma acts on elements: given as a map elt -> elt
  std::vector<std::set<int>> classes;
  std::vector<int> cls(G.elems.size(), -1);
  for (size_t w = 0; w < G.elems.size(); ++w) {
    if (cls[w] >= 0) continue;
    std::set<int> C;
    for (size_t x = 0; x < G.elems.size(); ++x) {
      int u = G.mul(G.mul(G.inverse(static_cast<int>(x)), static_cast<int>(w)),
                    sigma_images[x]);
      C.insert(u);
    }
    for (int u : C) cls[u] = static_cast<int>(classes.size());
    classes.push_back(C);
  }
  return classes;
}

// --- positive braid words up to braid moves --------------------------------
// rewriting closure of a positive word in generators 0..rank-1 for a Coxeter
// matrix with entries 2 or 3
struct WordClosure {
  std::set<std::vector<int>> words;
  explicit WordClosure(const std::vector<int>& start, const std::vector<std::vector<int>>& cox) {
    std::vector<std::vector<int>> queue{start};
    words.insert(start);
    while (!queue.empty()) {
      auto w = queue.back();
      queue.pop_back();
      for (size_t i = 0; i < w.size(); ++i) {
        if (i + 1 < w.size()) {
          int s = w[i], t = w[i + 1];
          if (s != t && cox[s][t] == 2) {
            auto v = w;
            std::swap(v[i], v[i + 1]);
            if (words.insert(v).second) queue.push_back(v);
          }
        }
        if (i + 2 < w.size()) {
          int s = w[i], t = w[i + 1], u = w[i + 2];
          if (s == u && s != t && cox[s][t] == 3) {
            auto v = w;
            v[i] = t;
            v[i + 1] = s;
            v[i + 2] = t;
            if (words.insert(v).second) queue.push_back(v);
          }
        }
      }
    }
  }
  bool contains(const std::vector<int>& w) const { return words.count(w) > 0; }
};

// d left-divides x (as positive braids) iff some word of x starts with a word
// of d
inline bool left_divides_brute(const std::vector<int>& d, const std::vector<int>& x,
                               const std::vector<std::vector<int>>& cox) {
  if (d.size() > x.size()) return false;
  WordClosure cd(d, cox), cx(x, cox);
  for (const auto& wx : cx.words) {
    std::vector<int> pre(wx.begin(), wx.begin() + d.size());
    if (cd.contains(pre)) return true;
  }
  return false;
}

// --- GL2 closed-form membership criteria ------------------------------------
// b = diag(t^c, t^d): [x:y] in X_{w0}(b) iff t^c phi(x) y - t^d x phi(y) != 0
inline bool gl2_w0_member_diag(const Laurent& x, const Laurent& y, long c, long d) {
  Laurent lhs = x.frobenius().shift(c).mul(y).sub(x.mul(y.frobenius().shift(d)));
  return lhs.ord().is_finite();
}
// b = [[0, t^c], [t^{c+1}, 0]]: iff t^{c+1} x phi(x) - t^c y phi(y) != 0
inline bool gl2_w0_member_superbasic(const Laurent& x, const Laurent& y, long c) {
  Laurent lhs = x.mul(x.frobenius()).shift(c + 1).sub(y.mul(y.frobenius()).shift(c));
  return lhs.ord().is_finite();
}
// w = 1: the flag is b*sigma-fixed
inline bool gl2_w1_member_diag(const Laurent& x, const Laurent& y, long c, long d) {
  Laurent cross = x.mul(y.frobenius().shift(d)).sub(y.mul(x.frobenius().shift(c)));
  return cross.ord().is_exact_zero();
}
inline bool gl2_w1_member_superbasic(const Laurent& x, const Laurent& y, long c) {
  Laurent cross = x.mul(x.frobenius().shift(c + 1)).sub(y.mul(y.frobenius().shift(c)));
  return cross.ord().is_exact_zero();
}

// --- exhaustive Levi-meet by per-slope distribution -------------------------
inline bool meets_levi_brute(const std::vector<xwb::Rat>& slopes_with_mult,
                             const std::vector<int>& blocks) {
  // slopes listed with repetition; assign each to a block, then check each
  // block's multiset is a valid class (denominator divisibility)
  std::vector<int> assign(slopes_with_mult.size(), 0);
  const int B = static_cast<int>(blocks.size());
  while (true) {
    std::vector<int> load(B, 0);
    for (int a : assign) ++load[a];
    bool sizes_ok = true;
    for (int b = 0; b < B; ++b) sizes_ok = sizes_ok && load[b] == blocks[b];
    if (sizes_ok) {
      bool valid = true;
      for (int b = 0; b < B && valid; ++b) {
        std::map<std::pair<long, long>, int> mult;
        for (size_t i = 0; i < assign.size(); ++i)
          if (assign[i] == b) ++mult[{slopes_with_mult[i].num, slopes_with_mult[i].den}];
        for (auto& [sl, k] : mult)
          if (k % sl.second != 0) valid = false;
      }
      if (valid) return true;
    }
    int pos = static_cast<int>(assign.size()) - 1;
    while (pos >= 0 && assign[pos] == B - 1) { assign[pos] = 0; --pos; }
    if (pos < 0) return false;
    ++assign[pos];
  }
}

}  // namespace oracle

#endif
