#include "xwb/dlspace.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"

namespace xwb {

namespace {

struct Slot {
  int row, col;
  long lo, hi;  // exponent window [lo, hi)
};

// Free coordinate slots of the echelon pattern pi (column -> pivot row):
// below-pivot entries carry exponents [-N, r), above-pivot entries [1, r),
// previously pivoted rows are zero.
std::vector<Slot> pattern_slots(const Perm& pi, const Window& win) {
  const int n = static_cast<int>(pi.size());
  std::vector<Slot> slots;
  std::vector<bool> used(n, false);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (used[i] || i == pi[j]) continue;
      if (i > pi[j]) slots.push_back({i, j, -win.N, win.r});
      else slots.push_back({i, j, 1, win.r});
    }
    used[pi[j]] = true;
  }
  return slots;
}

std::vector<Perm> all_perms(int n) {
  Perm p = perm_identity(n);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

long ipow(long b, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > (1L << 62) / b) return 1L << 62;
    r *= b;
  }
  return r;
}

}  // namespace

long enumeration_size(int n, const Window& win, FieldPtr f) {
  long total = 0;
  for (const Perm& pi : all_perms(n)) {
    long width = 0;
    for (const Slot& s : pattern_slots(pi, win)) width += std::max(0L, s.hi - s.lo);
    total += ipow(f->size(), width);
    if (total >= (1L << 62)) return total;
  }
  return total;
}

std::vector<FlagPoint> enumerate_flag_points(int n, const Window& win, FieldPtr f, long budget) {
  if (win.N < 0 || win.r < 1) throw XwbError(ErrCode::Invalid, "window needs N >= 0, r >= 1");
  long est = enumeration_size(n, win, f);
  if (est > budget)
    throw XwbError(ErrCode::Budget, "BudgetExceeded: enumeration needs " + std::to_string(est) +
                                        " representatives, budget " + std::to_string(budget));
  std::vector<FlagPoint> out;
  for (const Perm& pi : all_perms(n)) {
    auto slots = pattern_slots(pi, win);
    std::vector<long> widths;
    long total_width = 0;
    for (auto& s : slots) {
      widths.push_back(std::max(0L, s.hi - s.lo));
      total_width += widths.back();
    }
    std::vector<Fq> digits(total_width, 0);
    const int Q = f->size();
    bool done = false;
    while (!done) {
      Mat g(f, n);
      for (int j = 0; j < n; ++j) g.at(pi[j], j) = Laurent::one(f);
      long off = 0;
      for (size_t si = 0; si < slots.size(); ++si) {
        const Slot& s = slots[si];
        std::vector<Fq> c(digits.begin() + off, digits.begin() + off + widths[si]);
        off += widths[si];
        g.at(s.row, s.col) = Laurent::poly(f, s.lo, c);
      }
      FlagPoint pt;
      pt.g = std::move(g);
      pt.level = QuotLevel::BorelQuot;
      pt.cell = pi;
      if (n == 2) {
        // component split by the valuation comparison of the flag coordinates
        Valuation vx = pt.g.at(0, 0).ord(), vy = pt.g.at(1, 0).ord();
        long ox = vx.is_finite() ? vx.v : kOrdInf;
        long oy = vy.is_finite() ? vy.v : kOrdInf;
        pt.component = ox <= oy ? "ord(x)<=ord(y)" : "ord(y)<ord(x)";
      } else {
        std::ostringstream os;
        os << "cell:";
        for (int j = 0; j < n; ++j) os << pi[j] + 1;
        pt.component = os.str();
      }
      out.push_back(std::move(pt));
      // odometer, last digit fastest
      long pos = total_width - 1;
      while (pos >= 0) {
        if (digits[pos] + 1 < Q) { digits[pos] = static_cast<Fq>(digits[pos] + 1); break; }
        digits[pos] = 0;
        --pos;
      }
      if (pos < 0) done = true;
      if (total_width == 0) done = true;
    }
  }
  if (win.N > 0) {
    // negative exponents can re-express a representative from another
    // pattern; keep the first occurrence only. Candidate collisions are
    // bucketed by the (scaling-invariant) valuation pattern of the Pluecker
    // minors before the exact pairwise test.
    auto signature = [&](const Mat& g) {
      std::ostringstream os;
      const FieldPtr& f = g.field();
      for (int j = 1; j < n; ++j) {
        std::vector<long> ords;
        std::vector<int> rows(j);
        std::function<void(int, int)> rec = [&](int ri, int start) {
          if (ri == j) {
            Mat sub(f, j);
            for (int a = 0; a < j; ++a)
              for (int b = 0; b < j; ++b) sub.at(a, b) = g.at(rows[a], b);
            Valuation v = sub.det().ord();
            ords.push_back(v.is_finite() ? v.v : kOrdInf);
            return;
          }
          for (int r2 = start; r2 < n; ++r2) {
            rows[ri] = r2;
            rec(ri + 1, r2 + 1);
          }
        };
        rec(0, 0);
        long mn = *std::min_element(ords.begin(), ords.end());
        for (long o : ords) os << (o >= kOrdInf ? std::string("inf") : std::to_string(o - mn)) << ',';
        os << ';';
      }
      return os.str();
    };
    std::map<std::string, std::vector<size_t>> buckets;
    std::vector<bool> keep(out.size(), true);
    for (size_t i = 0; i < out.size(); ++i) {
      auto& bucket = buckets[signature(out[i].g)];
      for (size_t j : bucket) {
        if (keep[j] && flags_equal(out[j].g, out[i].g)) { keep[i] = false; break; }
      }
      if (keep[i]) bucket.push_back(i);
    }
    std::vector<FlagPoint> dedup;
    for (size_t i = 0; i < out.size(); ++i)
      if (keep[i]) dedup.push_back(std::move(out[i]));
    out = std::move(dedup);
  }
  return out;
}

namespace {
// enumeration is deterministic; cache the point lists per window and field
struct EnumKey {
  int n;
  long N, r;
  int p, e0, m_exp;
  bool operator<(const EnumKey& o) const {
    return std::tie(n, N, r, p, e0, m_exp) < std::tie(o.n, o.N, o.r, o.p, o.e0, o.m_exp);
  }
};
std::map<EnumKey, std::shared_ptr<const std::vector<FlagPoint>>> g_enum_cache;
std::mutex g_enum_mutex;
}  // namespace

std::shared_ptr<const std::vector<FlagPoint>> enumerate_flag_points_cached(int n, const Window& win,
                                                                           FieldPtr f, long budget) {
  EnumKey key{n, win.N, win.r, f->p(), f->e0(), f->m_exp()};
  {
    std::lock_guard<std::mutex> lk(g_enum_mutex);
    auto it = g_enum_cache.find(key);
    if (it != g_enum_cache.end()) return it->second;
  }
  auto pts = std::make_shared<const std::vector<FlagPoint>>(
      enumerate_flag_points(n, win, f, budget));
  std::lock_guard<std::mutex> lk(g_enum_mutex);
  g_enum_cache[key] = pts;
  return pts;
}

bool flags_equal(const Mat& g1, const Mat& g2) {
  const int n = g1.n();
  const FieldPtr& f = g1.field();
  for (int j = 1; j < n; ++j) {
    // span of the first j columns must agree: every (j+1)x(j+1) minor of the
    // n x 2j juxtaposition vanishes identically
    std::vector<int> cols;
    for (int c = 0; c < j; ++c) cols.push_back(c);
    for (int c = 0; c < j; ++c) cols.push_back(n + c);
    std::vector<int> rowsel(j + 1), colsel(j + 1);
    std::function<bool(int, int)> rows_rec = [&](int ri, int rstart) -> bool {
      if (ri == j + 1) {
        std::function<bool(int, int)> cols_rec = [&](int ci, int cstart) -> bool {
          if (ci == j + 1) {
            Mat sub(f, j + 1);
            for (int a = 0; a <= j; ++a)
              for (int b = 0; b <= j; ++b) {
                int c = cols[colsel[b]];
                sub.at(a, b) = c < n ? g1.at(rowsel[a], c) : g2.at(rowsel[a], c - n);
              }
            return sub.det().ord().is_exact_zero();
          }
          for (int c = cstart; c < static_cast<int>(cols.size()); ++c) {
            colsel[ci] = c;
            if (!cols_rec(ci + 1, c + 1)) return false;
          }
          return true;
        };
        return cols_rec(0, 0);
      }
      for (int r = rstart; r < n; ++r) {
        rowsel[ri] = r;
        if (!rows_rec(ri + 1, r + 1)) return false;
      }
      return true;
    };
    if (!rows_rec(0, 0)) return false;
  }
  return true;
}

TriState xwb_member(const FlagPoint& pt, const Perm& w, const Mat& b) {
  try {
    Mat h = b.mul(pt.g.sigma());
    Perm rp = relative_position(pt.g, h);
    return rp == w ? TriState::yes : TriState::no;
  } catch (const XwbError& e) {
    if (e.code == ErrCode::Precision) return TriState::unknown;
    throw;
  }
}

TriState xwb_dot_member(const FlagPoint& pt, const Mat& wdot, const Mat& b) {
  try {
    Mat X = pt.g.adjugate().mul(b.mul(pt.g.sigma()));
    Laurent delta = pt.g.det();
    if (!delta.ord().is_finite())
      throw XwbError(ErrCode::Precision, "point representative not certified invertible", 1);
    return in_UWU(X, wdot.scale(delta));
  } catch (const XwbError& e) {
    if (e.code == ErrCode::Precision) return TriState::unknown;
    throw;
  }
}

std::vector<long> alpha_invariant(const FlagPoint& pt, const Perm& w, const Mat& b,
                                  const Perm& sigma_idx) {
  const int n = pt.g.n();
  Mat X = pt.g.adjugate().mul(b.mul(pt.g.sigma()));
  CellData cd = cell_of(X);
  if (cd.w != w)
    throw XwbError(ErrCode::Invalid, "alpha_invariant: point is not a member for this w");
  Valuation dv = det_val(pt.g);
  std::vector<long> vrow(n, 0);
  for (int j = 0; j < n; ++j) vrow[w[j]] = cd.mono_ord[j] - dv.v;
  Perm sig = sigma_idx.empty() ? perm_identity(n) : sigma_idx;
  Perm pc = perm_mul(w, sig);  // w∘sigma
  std::vector<bool> seen(n, false);
  std::vector<long> alpha;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long sum = 0;
    int cur = i;
    while (!seen[cur]) {
      seen[cur] = true;
      sum += vrow[cur];
      cur = pc[cur];
    }
    alpha.push_back(sum);
  }
  return alpha;
}

std::string alpha_key(const std::vector<long>& alpha) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i) os << ',';
    os << alpha[i];
  }
  os << ')';
  return os.str();
}

Mat complete_flag_gl2(const Laurent& x, const Laurent& y) {
  const FieldPtr& f = x.field();
  Valuation vx = x.ord(), vy = y.ord();
  long ox = vx.is_finite() ? vx.v : kOrdInf;
  long oy = vy.is_finite() ? vy.v : kOrdInf;
  if (ox >= kOrdInf && oy >= kOrdInf)
    throw XwbError(ErrCode::Invalid, "projective pair [0:0]");
  Mat g(f, 2);
  g.at(0, 0) = x;
  g.at(1, 0) = y;
  if (ox <= oy) {
    g.at(0, 1) = Laurent::zero(f, 0);
    g.at(1, 1) = Laurent::one(f);  // det = x
  } else {
    g.at(0, 1) = Laurent::one(f);
    g.at(1, 1) = Laurent::zero(f, 0);  // det = -y
  }
  return g;
}

std::string CountReport::json() const {
  nlohmann::json j;
  j["n"] = n;
  j["w"] = w;
  j["b"] = {{"matrix", b_matrix}, {"slopes", b_slopes}, {"kappa", b_kappa}};
  j["window"] = {{"N", window.N}, {"r", window.r}, {"m", window.m}};
  j["points"] = points;
  j["yes"] = yes;
  j["no"] = no;
  j["unknown"] = unknown;
  j["by_alpha"] = by_alpha;
  j["by_component"] = by_component;
  j["budget"] = budget;
  return j.dump();
}

std::string CountReport::csv() const {
  std::ostringstream os;
  os << "n,w,b,window_N,window_r,window_m,points,yes,no,unknown\n";
  os << n << ",\"" << w << "\",\"" << b_matrix << "\"," << window.N << ',' << window.r << ','
     << window.m << ',' << points << ',' << yes << ',' << no << ',' << unknown << '\n';
  return os.str();
}

CountReport count_points(const Perm& w, const Mat& b, const Window& win, FieldPtr f,
                         const CountOptions& opts) {
  const int n = static_cast<int>(w.size());
  if (b.n() != n) throw XwbError(ErrCode::Invalid, "b has wrong size");
  if (n > 3) throw XwbError(ErrCode::Invalid, "count_points caps at n <= 3");
  if (f->size() > 9) throw XwbError(ErrCode::Invalid, "count_points caps at q^m <= 9");
  auto pts_ptr = enumerate_flag_points_cached(n, win, f, opts.budget);
  const std::vector<FlagPoint>& pts = *pts_ptr;

  struct Tally {
    long yes = 0, no = 0, unknown = 0;
    std::map<std::string, long> by_alpha, by_component;
  };
  auto run_chunk = [&](size_t lo, size_t hi, Tally& t) {
    for (size_t i = lo; i < hi; ++i) {
      TriState st = xwb_member(pts[i], w, b);
      if (st == TriState::yes) {
        ++t.yes;
        ++t.by_component[pts[i].component];
        ++t.by_alpha[alpha_key(alpha_invariant(pts[i], w, b))];
      } else if (st == TriState::no) {
        ++t.no;
      } else {
        ++t.unknown;
      }
    }
  };

  int workers = std::max(1, opts.workers);
  std::vector<Tally> tallies(workers);
  if (workers == 1 || pts.size() < 64) {
    run_chunk(0, pts.size(), tallies[0]);
  } else {
    std::vector<std::thread> threads;
    size_t chunk = (pts.size() + workers - 1) / workers;
    for (int k = 0; k < workers; ++k) {
      size_t lo = std::min(pts.size(), k * chunk);
      size_t hi = std::min(pts.size(), (k + 1) * chunk);
      threads.emplace_back(run_chunk, lo, hi, std::ref(tallies[k]));
    }
    for (auto& th : threads) th.join();
  }

  CountReport rep;
  rep.n = n;
  {
    std::ostringstream os;
    for (int j = 0; j < n; ++j) os << w[j] + 1;
    rep.w = os.str();
  }
  rep.b_matrix = b.str();
  try {
    long m0 = 1;
    while (m0 < f->m()) {
      bool fixed = true;
      for (int i = 0; i < n && fixed; ++i)
        for (int j = 0; j < n && fixed; ++j)
          fixed = b.at(i, j).frobenius(m0).agree(b.at(i, j)) == TriState::yes;
      if (fixed) break;
      ++m0;
    }
    SlopeClass c = newton_slopes(b, m0);
    rep.b_slopes = c.str();
    rep.b_kappa = c.kappa;
  } catch (const XwbError&) {
    rep.b_slopes = "(unavailable)";
  }
  rep.window = win;
  rep.points = static_cast<long>(pts.size());
  rep.budget = opts.budget;
  for (auto& t : tallies) {
    rep.yes += t.yes;
    rep.no += t.no;
    rep.unknown += t.unknown;
    for (auto& [k, v] : t.by_alpha) rep.by_alpha[k] += v;
    for (auto& [k, v] : t.by_component) rep.by_component[k] += v;
  }
  return rep;
}

LeviShape shape_of_suppbar(const CoxeterSys& W, int w) {
  const int n = W.rank() + 1;
  auto I = W.suppbar(w);
  LeviShape shape;
  int run = 1;
  for (int i = 0; i < n - 1; ++i) {
    if (I.count(i)) {
      ++run;
    } else {
      shape.blocks.push_back(run);
      run = 1;
    }
  }
  shape.blocks.push_back(run);
  return shape;
}

bool emptiness_predict(const CoxeterSys& W, int w, const SlopeClass& cls) {
  if (!W.is_type_A()) throw XwbError(ErrCode::Invalid, "emptiness_predict needs type A");
  if (W.rank() + 1 != cls.n) throw XwbError(ErrCode::Invalid, "rank mismatch");
  return !meets_levi(cls, shape_of_suppbar(W, w));
}

bool lang_image_test(const Laurent& a, const Laurent& b, const Laurent& c) {
  const FieldPtr& f = a.field();
  check_same_field(a, b);
  check_same_field(a, c);
  Mat M(f, 3);
  M.at(0, 2) = Laurent::one(f);
  M.at(1, 1) = Laurent::one(f);
  M.at(1, 2) = b;
  M.at(2, 0) = Laurent::one(f);
  M.at(2, 1) = a;
  M.at(2, 2) = c;
  long m0 = 1;
  while (m0 < f->m()) {
    if (a.frobenius(m0).agree(a) == TriState::yes && b.frobenius(m0).agree(b) == TriState::yes &&
        c.frobenius(m0).agree(c) == TriState::yes)
      break;
    ++m0;
  }
  SlopeClass cls = newton_slopes(M, m0);
  if (cls.kappa != 0) return false;
  return cls.slopes.size() == 1 && cls.slopes[0].first == Rat(0, 1);
}

bool coxeter_xO_member(const std::vector<Laurent>& x) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw XwbError(ErrCode::Invalid, "empty point");
  const FieldPtr& f = x[0].field();
  for (auto& xi : x) {
    check_same_field(x[0], xi);
    if (!xi.exact() || (xi.ord().is_finite() && xi.ord().v < 0))
      throw XwbError(ErrCode::Invalid, "coordinates must be integral and exact");
  }
  Mat g(f, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g.at(i, j) = x[i].frobenius(j);
  Laurent d = g.det();
  Valuation v = d.ord();
  if (!(v.is_finite() && v.v == 0)) return false;
  Laurent target = (n % 2 == 1) ? d : d.neg();
  return d.frobenius().agree(target) == TriState::yes;
}

bool gl2_dot_cover_check(const Laurent& a, const Laurent& tau, long c, long d, long alpha,
                         long beta) {
  if (alpha + beta != c + d) throw XwbError(ErrCode::Invalid, "need alpha + beta = c + d");
  if (a.is_unit() != TriState::yes || tau.is_unit() != TriState::yes)
    throw XwbError(ErrCode::Invalid, "a and tau must be units");
  Laurent A = a.frobenius().shift(d - beta).sub(a.shift(c - beta));
  Laurent lhs = tau.frobenius(2).mul(A);
  Laurent rhs = tau.mul(A.frobenius());
  TriState t = lhs.agree(rhs);
  if (t == TriState::unknown)
    throw XwbError(ErrCode::Precision, "cover equation not certified at this window", 1);
  return t == TriState::yes;
}

Mat gl2_superbasic(FieldPtr f, long c) {
  Mat b(f, 2);
  b.at(0, 1) = Laurent::t_power(f, c);
  b.at(1, 0) = Laurent::t_power(f, c + 1);
  return b;
}

}  // namespace xwb
