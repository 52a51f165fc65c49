#include "xwb/isocrystal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace xwb {

Rat::Rat(long n, long d) {
  if (d == 0) throw XwbError(ErrCode::Invalid, "rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

std::string Rat::str() const { return std::to_string(num) + "/" + std::to_string(den); }

void SlopeClass::validate() const {
  long total = 0;
  long ksum_num = 0;
  for (size_t i = 0; i < slopes.size(); ++i) {
    const auto& [s, mult] = slopes[i];
    if (mult <= 0) throw XwbError(ErrCode::Invalid, "InvalidClass: nonpositive multiplicity");
    if (i + 1 < slopes.size() && !(slopes[i + 1].first < s))
      throw XwbError(ErrCode::Invalid, "InvalidClass: slopes not strictly descending");
    if (mult % s.den != 0)
      throw XwbError(ErrCode::Invalid, "InvalidClass: multiplicity of " + s.str() +
                                           " not divisible by its denominator");
    total += mult;
    ksum_num += s.num * (mult / s.den);
  }
  if (total != n) throw XwbError(ErrCode::Invalid, "InvalidClass: multiplicities do not sum to n");
  if (ksum_num != kappa)
    throw XwbError(ErrCode::Invalid, "InvalidClass: kappa does not equal the slope sum");
}

std::string SlopeClass::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < slopes.size(); ++i) {
    if (i) os << ", ";
    os << slopes[i].first.str();
    if (slopes[i].second > 1) os << '^' << slopes[i].second;
  }
  os << "; kappa=" << kappa << ']';
  return os.str();
}

std::string SlopeClass::json() const {
  nlohmann::json j;
  j["n"] = n;
  nlohmann::json sl = nlohmann::json::array();
  for (auto& [s, mult] : slopes) sl.push_back({s.num, s.den, mult});
  j["slopes"] = sl;
  j["kappa"] = kappa;
  return j.dump();
}

int LeviShape::total() const {
  int t = 0;
  for (int b : blocks) t += b;
  return t;
}

namespace {

// ord of a determinant-like exact quantity, +inf for exact zero
long ord_or_inf(const Laurent& x) {
  Valuation v = x.ord();
  if (v.is_finite()) return v.v;
  if (v.is_exact_zero()) return kOrdInf;
  throw XwbError(ErrCode::Precision, "newton polygon: coefficient ord uncertified", 1);
}

// sum of principal k x k minors of N
Laurent principal_minor_sum(const Mat& N, int k) {
  const int n = N.n();
  Laurent acc = Laurent::zero(N.field(), 0);
  std::vector<int> idx(k);
  // iterate over k-subsets of {0..n-1}
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mat sub(N.field(), k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sub.at(a, b) = N.at(idx[a], idx[b]);
    acc = acc.add(sub.det());
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return acc;
}

}  // namespace

SlopeClass newton_slopes(const Mat& b, long m0) {
  const int n = b.n();
  if (m0 < 1) throw XwbError(ErrCode::Invalid, "m0 must be >= 1");
  // declared rationality: entries must be fixed by sigma^{m0}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b.at(i, j).frobenius(m0).agree(b.at(i, j)) != TriState::yes)
        throw XwbError(ErrCode::Invalid, "entries not fixed by sigma^{m0}");
  Valuation kv = det_val(b);
  if (!kv.is_finite()) throw XwbError(ErrCode::Invalid, "b is not invertible");

  Mat N = b;
  for (long i = 1; i < m0; ++i) N = N.mul(b.sigma(i));

  // Newton polygon of the characteristic polynomial: lower hull of the points
  // (k, ord E_k), E_k = sum of principal k-minors, E_0 = 1.
  std::vector<long> y(n + 1, 0);
  y[0] = 0;
  for (int k = 1; k <= n; ++k) y[k] = ord_or_inf(principal_minor_sum(N, k));
  if (y[n] >= kOrdInf) throw XwbError(ErrCode::Invalid, "b is not invertible");
  // lower hull over the finite points (infinite ords never support the hull)
  std::vector<int> vs;
  for (int k = 0; k <= n; ++k)
    if (y[k] < kOrdInf) vs.push_back(k);
  std::vector<int> H;
  for (int k : vs) {
    while (H.size() >= 2) {
      int a = H[H.size() - 2], m = H[H.size() - 1];
      if (static_cast<long long>(y[m] - y[a]) * (k - m) <=
          static_cast<long long>(y[k] - y[m]) * (m - a)) {
        break;
      }
      H.pop_back();
    }
    H.push_back(k);
  }
  if (H.front() != 0 || H.back() != n)
    throw XwbError(ErrCode::Invalid, "newton polygon endpoints missing");

  std::vector<std::pair<Rat, int>> asc;
  for (size_t i = 0; i + 1 < H.size(); ++i) {
    int run = H[i + 1] - H[i];
    Rat s(y[H[i + 1]] - y[H[i]], static_cast<long>(run) * m0);
    asc.push_back({s, run});
  }
  std::reverse(asc.begin(), asc.end());
  // merge equal adjacent slopes (possible after division by m0)
  std::vector<std::pair<Rat, int>> desc;
  for (auto& p : asc) {
    if (!desc.empty() && desc.back().first == p.first) desc.back().second += p.second;
    else desc.push_back(p);
  }
  SlopeClass c;
  c.n = n;
  c.slopes = std::move(desc);
  c.kappa = kv.v;
  c.validate();
  return c;
}

Mat standard_rep(const SlopeClass& c, FieldPtr f) {
  c.validate();
  Mat m(f, c.n);
  int off = 0;
  for (auto& [s, mult] : c.slopes) {
    int bsize = static_cast<int>(s.den);
    int copies = mult / bsize;
    for (int cpy = 0; cpy < copies; ++cpy) {
      for (int i = 0; i + 1 < bsize; ++i)
        m.at(off + i, off + i + 1) = Laurent::one(f);
      m.at(off + bsize - 1, off) = Laurent::t_power(f, s.num);
      off += bsize;
    }
  }
  return m;
}

namespace {

bool assign_groups(const std::vector<std::pair<Rat, int>>& groups, size_t gi,
                   std::vector<int>& capacity) {
  if (gi == groups.size()) {
    for (int c : capacity)
      if (c != 0) return false;
    return true;
  }
  const auto& [slope, mult] = groups[gi];
  const int den = static_cast<int>(slope.den);
  // distribute mult over the blocks in multiples of den
  std::vector<int> take(capacity.size(), 0);
  // iterative composition search
  std::function<bool(size_t, int)> rec = [&](size_t bi, int remaining) -> bool {
    if (bi == capacity.size()) {
      if (remaining != 0) return false;
      for (size_t i = 0; i < capacity.size(); ++i) capacity[i] -= take[i];
      bool ok = assign_groups(groups, gi + 1, capacity);
      for (size_t i = 0; i < capacity.size(); ++i) capacity[i] += take[i];
      return ok;
    }
    int maxk = std::min(capacity[bi], remaining) / den;
    for (int k = 0; k <= maxk; ++k) {
      take[bi] = k * den;
      if (rec(bi + 1, remaining - k * den)) return true;
    }
    take[bi] = 0;
    return false;
  };
  return rec(0, mult);
}

}  // namespace

bool meets_levi(const SlopeClass& c, const LeviShape& shape) {
  c.validate();
  if (shape.total() != c.n)
    throw XwbError(ErrCode::Invalid, "levi shape does not sum to n");
  std::vector<int> capacity = shape.blocks;
  return assign_groups(c.slopes, 0, capacity);
}

}  // namespace xwb
