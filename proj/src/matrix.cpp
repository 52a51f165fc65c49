#include "xwb/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace xwb {

Perm perm_identity(int n) {
  Perm w(n);
  for (int i = 0; i < n; ++i) w[i] = i;
  return w;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t j = 0; j < b.size(); ++j) r[j] = a[b[j]];
  return r;
}

Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (size_t j = 0; j < a.size(); ++j) r[a[j]] = static_cast<int>(j);
  return r;
}

int perm_length(const Perm& a) {
  int c = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++c;
  return c;
}

Mat::Mat(FieldPtr f, int n) : f_(std::move(f)), n_(n) {
  e_.assign(static_cast<size_t>(n_) * n_, Laurent::zero(f_, 0));
}

Mat Mat::identity(FieldPtr f, int n) {
  Mat m(f, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Laurent::one(f);
  return m;
}

Mat Mat::diag_tpowers(FieldPtr f, const std::vector<long>& ks) {
  Mat m(f, static_cast<int>(ks.size()));
  for (size_t i = 0; i < ks.size(); ++i)
    m.at(static_cast<int>(i), static_cast<int>(i)) = Laurent::t_power(f, ks[i]);
  return m;
}

Mat Mat::permutation(FieldPtr f, const Perm& w) {
  Mat m(f, static_cast<int>(w.size()));
  for (size_t j = 0; j < w.size(); ++j)
    m.at(w[j], static_cast<int>(j)) = Laurent::one(f);
  return m;
}

Mat Mat::mul(const Mat& o) const {
  Mat r(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Laurent s = Laurent::zero(f_, 0);
      for (int k = 0; k < n_; ++k) s = s.add(at(i, k).mul(o.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

Mat Mat::add(const Mat& o) const {
  Mat r(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).add(o.at(i, j));
  return r;
}

Mat Mat::scale(const Laurent& c) const {
  Mat r(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).mul(c);
  return r;
}

Mat Mat::sigma(long k) const {
  Mat r(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).frobenius(k);
  return r;
}

Mat Mat::transpose() const {
  Mat r(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
  return r;
}

namespace {

// Laplace expansion over the first remaining column, memoized on row masks.
Laurent det_rows(const Mat& m, unsigned rows, int col, std::map<unsigned, Laurent>& memo) {
  auto it = memo.find(rows);
  if (it != memo.end()) return it->second;
  const FieldPtr& f = m.field();
  if (rows == 0) return Laurent::one(f);
  Laurent acc = Laurent::zero(f, 0);
  int sign = 0;
  for (int i = 0; i < m.n(); ++i) {
    if (!(rows & (1u << i))) continue;
    Laurent entry = m.at(i, col);
    Laurent sub = det_rows(m, rows & ~(1u << i), col + 1, memo);
    Laurent term = entry.mul(sub);
    if (sign % 2 == 1) term = term.neg();
    acc = acc.add(term);
    ++sign;
  }
  memo[rows] = acc;
  return acc;
}

}  // namespace

Laurent Mat::det() const {
  std::map<unsigned, Laurent> memo;
  return det_rows(*this, (1u << n_) - 1, 0, memo);
}

Mat Mat::adjugate() const {
  Mat r(f_, n_);
  if (n_ == 1) {
    r.at(0, 0) = Laurent::one(f_);
    return r;
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      // cofactor C_ij placed at (j, i)
      Mat sub(f_, n_ - 1);
      for (int a = 0, ai = 0; a < n_; ++a) {
        if (a == i) continue;
        for (int b = 0, bj = 0; b < n_; ++b) {
          if (b == j) continue;
          sub.at(ai, bj) = at(a, b);
          ++bj;
        }
        ++ai;
      }
      Laurent c = sub.det();
      if ((i + j) % 2 == 1) c = c.neg();
      r.at(j, i) = c;
    }
  return r;
}

Mat Mat::widened(long prec) const {
  Mat r = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (r.at(i, j).exact()) r.at(i, j) = r.at(i, j).widen(prec);
  return r;
}

bool Mat::all_exact() const {
  for (const auto& x : e_)
    if (!x.exact()) return false;
  return true;
}

TriState Mat::agree(const Mat& o) const {
  bool unknown = false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      TriState t = at(i, j).agree(o.at(i, j));
      if (t == TriState::no) return TriState::no;
      if (t == TriState::unknown) unknown = true;
    }
  return unknown ? TriState::unknown : TriState::yes;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < n_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
  }
  return os.str();
}

std::string Mat::json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n_; ++j) row.push_back(nlohmann::json::parse(at(i, j).json()));
    rows.push_back(row);
  }
  return rows.dump();
}

Mat Mat::parse(FieldPtr f, const std::string& s) {
  std::vector<std::vector<Laurent>> rows;
  std::stringstream ss(s);
  std::string rowstr;
  while (std::getline(ss, rowstr, ';')) {
    std::vector<Laurent> row;
    // split on commas at paren depth 0
    std::string cur;
    int depth = 0;
    auto flush = [&]() {
      if (!cur.empty()) row.push_back(Laurent::parse(f, cur));
      cur.clear();
    };
    for (char c : rowstr) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) { flush(); continue; }
      cur += c;
    }
    flush();
    if (!row.empty()) rows.push_back(std::move(row));
  }
  int n = static_cast<int>(rows.size());
  Mat m(f, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw XwbError(ErrCode::Invalid, "matrix literal is not square");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Valuation det_val(const Mat& g) {
  Laurent d = g.det();
  Valuation v = d.ord();
  if (v.is_finite() || v.is_exact_zero()) return v;
  throw XwbError(ErrCode::Precision, "det_val: window cannot certify Finite vs AtLeast", 1);
}

namespace {

// Zero-certification of an entry during elimination.
// Returns yes (certified nonzero: Finite), no (exact zero), unknown.
TriState nonzero_state(const Laurent& x) {
  Valuation v = x.ord();
  if (v.is_finite()) return TriState::yes;
  if (v.is_exact_zero()) return TriState::no;
  return TriState::unknown;
}

struct Elim {
  Perm w;
  std::vector<long> mono_ord;       // ord of true mono entry per column
  std::vector<Laurent> row_scale;   // accumulated pivot products per row
  Mat work;                          // scaled row-eliminated matrix
};

// Fraction-free "from the bottom" elimination. Row i carries the exact
// scaling row_scale[i] (a product of pivots), so
//   work[i][k] = row_scale[i] * (true eliminated entry).
Elim eliminate(const Mat& g) {
  const int n = g.n();
  const FieldPtr& f = g.field();
  Elim E;
  E.w.assign(n, -1);
  E.mono_ord.assign(n, 0);
  E.row_scale.assign(n, Laurent::one(f));
  E.work = g;
  std::vector<bool> used(n, false);
  for (int j = 0; j < n; ++j) {
    int pivot = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (used[i]) continue;
      TriState st = nonzero_state(E.work.at(i, j));
      if (st == TriState::unknown)
        throw XwbError(ErrCode::Precision, "bruhat: pivot certification failed", 1);
      if (st == TriState::yes) { pivot = i; break; }
    }
    if (pivot < 0)
      throw XwbError(ErrCode::Invalid, "matrix is singular to the visible window");
    E.w[j] = pivot;
    used[pivot] = true;
    const Laurent p = E.work.at(pivot, j);
    for (int i = 0; i < pivot; ++i) {
      if (used[i]) continue;
      TriState st = nonzero_state(E.work.at(i, j));
      if (st == TriState::unknown)
        throw XwbError(ErrCode::Precision, "bruhat: clearing certification failed", 1);
      if (st == TriState::no) continue;
      const Laurent e = E.work.at(i, j);
      for (int k = 0; k < n; ++k)
        E.work.at(i, k) = p.mul(E.work.at(i, k)).sub(e.mul(E.work.at(pivot, k)));
      E.row_scale[i] = E.row_scale[i].mul(p);
    }
    Valuation vp = E.work.at(pivot, j).ord();
    Valuation vs = E.row_scale[pivot].ord();
    E.mono_ord[j] = vp.v - vs.v;
  }
  return E;
}

}  // namespace

CellData cell_of(const Mat& g) {
  Elim E = eliminate(g);
  return {E.w, E.mono_ord};
}

Perm relative_position(const Mat& g1, const Mat& g2) {
  // adj(g1)*g2 = det(g1) * g1^{-1} g2 lies in the same double coset
  Mat X = g1.adjugate().mul(g2);
  return cell_of(X).w;
}

BruhatData bruhat_decompose(const Mat& g) {
  const int n = g.n();
  const FieldPtr& f = g.field();
  // widen exact entries so end-stage divisions have room
  long hi = 1, lo = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Laurent& x = g.at(i, j);
      hi = std::max(hi, x.prec());
      lo = std::min(lo, x.v_lo());
    }
  long wp = hi + (hi - lo) * (n + 1) + 8;
  Mat M = g.widened(wp);
  Mat u1 = Mat::identity(f, n);
  Mat u2 = Mat::identity(f, n);
  Perm w(n, -1);
  std::vector<bool> used(n, false);
  for (int j = 0; j < n; ++j) {
    int pivot = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (used[i]) continue;
      TriState st = nonzero_state(M.at(i, j));
      if (st == TriState::unknown)
        throw XwbError(ErrCode::Precision, "bruhat: pivot certification failed", 1);
      if (st == TriState::yes) { pivot = i; break; }
    }
    if (pivot < 0) throw XwbError(ErrCode::Invalid, "matrix is singular to the visible window");
    w[j] = pivot;
    used[pivot] = true;
    const Laurent p = M.at(pivot, j);
    for (int i = 0; i < pivot; ++i) {
      if (used[i]) continue;
      if (nonzero_state(M.at(i, j)) == TriState::no) continue;
      Laurent factor = M.at(i, j).div(p);
      for (int k = 0; k < n; ++k)
        M.at(i, k) = M.at(i, k).sub(factor.mul(M.at(pivot, k)));
      M.at(i, j) = Laurent::zero(f, 0);  // eliminated exactly by construction
      // g = u1 M u2 is preserved: u1 <- u1 * (I + factor E_{i,pivot})
      for (int r = 0; r < n; ++r)
        u1.at(r, pivot) = u1.at(r, pivot).add(u1.at(r, i).mul(factor));
    }
    for (int k = j + 1; k < n; ++k) {
      if (nonzero_state(M.at(pivot, k)) == TriState::no) continue;
      Laurent factor = M.at(pivot, k).div(p);
      for (int r = 0; r < n; ++r)
        M.at(r, k) = M.at(r, k).sub(factor.mul(M.at(r, j)));
      M.at(pivot, k) = Laurent::zero(f, 0);
      // u2 <- (I + factor E_{j,k}) * u2
      for (int c = 0; c < n; ++c)
        u2.at(j, c) = u2.at(j, c).add(factor.mul(u2.at(k, c)));
    }
  }
  // off-pattern entries of the monomial part vanish identically
  Mat mono(f, n);
  for (int j = 0; j < n; ++j) mono.at(w[j], j) = M.at(w[j], j);
  return {w, u1, mono, u2};
}

Mat fw_project(const Mat& g) { return bruhat_decompose(g).mono; }

TriState in_UWU(const Mat& X, const Mat& W) {
  const int n = X.n();
  // W must be monomial; read its pattern and entries
  Perm pw(n, -1);
  for (int j = 0; j < n; ++j) {
    int row = -1;
    for (int i = 0; i < n; ++i) {
      if (nonzero_state(W.at(i, j)) == TriState::yes) {
        if (row >= 0) throw XwbError(ErrCode::Invalid, "in_UWU: W not monomial");
        row = i;
      }
    }
    if (row < 0) throw XwbError(ErrCode::Invalid, "in_UWU: W not invertible monomial");
    pw[j] = row;
  }
  bool unknown = false;
  try {
    Elim E = eliminate(X);
    if (E.w != pw) return TriState::no;
    for (int j = 0; j < n; ++j) {
      // work[pivot][j] must equal row_scale[pivot] * W[pivot][j]
      Laurent lhs = E.work.at(pw[j], j);
      Laurent rhs = E.row_scale[pw[j]].mul(W.at(pw[j], j));
      TriState t = lhs.agree(rhs);
      if (t == TriState::no) return TriState::no;
      if (t == TriState::unknown) unknown = true;
    }
  } catch (const XwbError& err) {
    if (err.code == ErrCode::Precision) return TriState::unknown;
    throw;
  }
  return unknown ? TriState::unknown : TriState::yes;
}

bool is_upper_unipotent_to_precision(const Mat& u) {
  for (int i = 0; i < u.n(); ++i)
    for (int j = 0; j < u.n(); ++j) {
      const Laurent& x = u.at(i, j);
      if (i == j) {
        if (x.sub(Laurent::one(u.field())).ord().is_finite()) return false;
      } else if (i > j) {
        if (x.ord().is_finite()) return false;
      }
    }
  return true;
}

}  // namespace xwb
