#include "xwb/weyl.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <sstream>

namespace xwb {

namespace {
constexpr int kMaxRank = 6;
constexpr int kMaxOrder = 5040;

// integer Cartan pairs realizing bond label m: c_up * c_dn = 4cos^2(pi/m)
std::pair<int, int> cartan_pair(int m) {
  switch (m) {
    case 2: return {0, 0};
    case 3: return {-1, -1};
    case 4: return {-1, -2};
    case 6: return {-1, -3};
    default:
      throw XwbError(ErrCode::Invalid,
                     "unsupported bond label " + std::to_string(m) + " (need 2,3,4,6)");
  }
}
}  // namespace

CoxeterSys::CoxeterSys(const std::vector<std::vector<int>>& m) : cox_(m) {
  rank_ = static_cast<int>(m.size());
  if (rank_ < 1 || rank_ > kMaxRank)
    throw XwbError(ErrCode::Invalid, "rank must be between 1 and 6");
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(m[i].size()) != rank_)
      throw XwbError(ErrCode::Invalid, "coxeter matrix is not square");
    if (m[i][i] != 1) throw XwbError(ErrCode::Invalid, "coxeter matrix diagonal must be 1");
    for (int j = 0; j < rank_; ++j) {
      if (m[i][j] != m[j][i]) throw XwbError(ErrCode::Invalid, "coxeter matrix not symmetric");
      if (i != j && m[i][j] < 2) throw XwbError(ErrCode::Invalid, "off-diagonal entries must be >= 2");
    }
  }
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i) cartan_[i][i] = 2;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j) {
      auto [up, dn] = cartan_pair(m[i][j]);
      cartan_[i][j] = up;
      cartan_[j][i] = dn;
    }
  sigma_.resize(rank_);
  for (int i = 0; i < rank_; ++i) sigma_[i] = i;
  type_A_ = true;
  for (int i = 0; i < rank_ && type_A_; ++i)
    for (int j = i + 1; j < rank_; ++j) {
      int expect = (j == i + 1) ? 3 : 2;
      if (m[i][j] != expect) { type_A_ = false; break; }
    }
  build();
}

void CoxeterSys::build() {
  const int n = rank_;
  // reflection matrices acting on simple-root coordinates:
  // s_i : alpha_j -> alpha_j - cartan_[i][j] * alpha_i
  using IMat = std::vector<int>;  // n x n row-major
  std::vector<IMat> gen(n, IMat(n * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) gen[i][k * n + k] = 1;
    for (int j = 0; j < n; ++j) gen[i][i * n + j] -= cartan_[i][j];
  }
  auto matmul = [&](const IMat& a, const IMat& b) {
    IMat r(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        int aik = a[i * n + k];
        if (!aik) continue;
        for (int j = 0; j < n; ++j) r[i * n + j] += aik * b[k * n + j];
      }
    return r;
  };
  IMat id(n * n, 0);
  for (int k = 0; k < n; ++k) id[k * n + k] = 1;

  std::map<IMat, int> seen;
  std::vector<IMat> mats;
  seen[id] = 0;
  mats.push_back(id);
  length_.push_back(0);
  word_.push_back({});
  std::deque<int> queue{0};
  std::vector<std::array<int, kMaxRank>> redges;
  redges.push_back({});
  for (int s = 0; s < n; ++s) redges[0][s] = -1;
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int s = 0; s < n; ++s) {
      IMat nm = matmul(mats[w], gen[s]);
      auto it = seen.find(nm);
      int target;
      if (it == seen.end()) {
        target = static_cast<int>(mats.size());
        if (target >= kMaxOrder)
          throw XwbError(ErrCode::Invalid, "group order exceeds cap 5040 (infinite or too large)");
        seen[nm] = target;
        mats.push_back(nm);
        length_.push_back(length_[w] + 1);
        std::vector<int> nw = word_[w];
        nw.push_back(s);
        word_.push_back(std::move(nw));
        redges.push_back({});
        for (int t = 0; t < n; ++t) redges.back()[t] = -1;
        queue.push_back(target);
      } else {
        target = it->second;
      }
      redges[w][s] = target;
    }
  }
  const int N = static_cast<int>(mats.size());
  rmult_.assign(static_cast<size_t>(N) * n, 0);
  for (int w = 0; w < N; ++w)
    for (int s = 0; s < n; ++s) rmult_[static_cast<size_t>(w) * n + s] = redges[w][s];
  // left multiplication via matrices
  lmult_.assign(static_cast<size_t>(N) * n, 0);
  for (int w = 0; w < N; ++w)
    for (int s = 0; s < n; ++s) {
      IMat nm = matmul(gen[s], mats[w]);
      lmult_[static_cast<size_t>(w) * n + s] = seen.at(nm);
    }
  inv_.assign(N, 0);
  for (int w = 0; w < N; ++w) {
    int v = 0;
    const auto& ws = word_[w];
    for (auto it = ws.rbegin(); it != ws.rend(); ++it) v = right_mult(v, *it);
    inv_[w] = v;
  }
}

std::shared_ptr<CoxeterSys> CoxeterSys::type_A(int rank) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) {
    m[i][i] = 1;
    if (i + 1 < rank) m[i][i + 1] = m[i + 1][i] = 3;
  }
  return std::shared_ptr<CoxeterSys>(new CoxeterSys(m));
}

std::shared_ptr<CoxeterSys> CoxeterSys::from_matrix(const std::vector<std::vector<int>>& m) {
  return std::shared_ptr<CoxeterSys>(new CoxeterSys(m));
}

void CoxeterSys::set_sigma(const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != rank_)
    throw XwbError(ErrCode::Invalid, "sigma permutation has wrong size");
  std::vector<bool> hit(rank_, false);
  for (int v : perm) {
    if (v < 0 || v >= rank_ || hit[v]) throw XwbError(ErrCode::Invalid, "sigma is not a permutation");
    hit[v] = true;
  }
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (cox_[perm[i]][perm[j]] != cox_[i][j])
        throw XwbError(ErrCode::Invalid, "sigma does not preserve the Coxeter matrix");
  sigma_ = perm;
}

long CoxeterSys::sigma_order() const {
  std::vector<int> p = sigma_;
  long k = 1;
  auto is_id = [&](const std::vector<int>& q) {
    for (int i = 0; i < rank_; ++i)
      if (q[i] != i) return false;
    return true;
  };
  while (!is_id(p)) {
    std::vector<int> np(rank_);
    for (int i = 0; i < rank_; ++i) np[i] = sigma_[p[i]];
    p = np;
    ++k;
  }
  return k;
}

int CoxeterSys::mult(int a, int b) const {
  int r = a;
  for (int s : word_[b]) r = right_mult(r, s);
  return r;
}

int CoxeterSys::sigma_elt(int w) const {
  int r = 0;
  for (int s : word_[w]) r = right_mult(r, sigma_[s]);
  return r;
}

int CoxeterSys::from_word(const std::vector<int>& ws) const {
  int r = 0;
  for (int s : ws) {
    if (s < 0 || s >= rank_) throw XwbError(ErrCode::Invalid, "generator index out of range");
    r = right_mult(r, s);
  }
  return r;
}

int CoxeterSys::parse_word(const std::string& s) const {
  std::vector<int> ws;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    if (tok[0] == 's') tok = tok.substr(1);
    int v = std::stoi(tok);
    if (v < 1 || v > rank_) throw XwbError(ErrCode::Invalid, "bad generator token: " + tok);
    ws.push_back(v - 1);
  }
  return from_word(ws);
}

std::string CoxeterSys::word_str(int w) const {
  if (word_[w].empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < word_[w].size(); ++i) {
    if (i) os << ' ';
    os << 's' << (word_[w][i] + 1);
  }
  return os.str();
}

std::set<int> CoxeterSys::supp(int w) const {
  return std::set<int>(word_[w].begin(), word_[w].end());
}

std::set<int> CoxeterSys::suppbar(int w) const {
  std::set<int> r = supp(w);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : std::set<int>(r)) {
      if (!r.count(sigma_[s])) { r.insert(sigma_[s]); grew = true; }
    }
  }
  return r;
}

bool CoxeterSys::subset_sigma_stable(const std::set<int>& I) const {
  for (int s : I)
    if (!I.count(sigma_[s])) return false;
  return true;
}

int CoxeterSys::longest(const std::set<int>& I) const {
  int w = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : I) {
      int c = right_mult(w, s);
      if (length(c) > length(w)) { w = c; grew = true; break; }
    }
  }
  return w;
}

Perm CoxeterSys::perm_of(int w) const {
  if (!type_A_) throw XwbError(ErrCode::Invalid, "perm_of needs type A");
  int n = rank_ + 1;
  Perm p = perm_identity(n);
  for (int s : word_[w]) {
    // right multiplication by the transposition (s, s+1)
    std::swap(p[s], p[s + 1]);
  }
  return p;
}

int CoxeterSys::from_perm(const Perm& p) const {
  if (!type_A_) throw XwbError(ErrCode::Invalid, "from_perm needs type A");
  if (static_cast<int>(p.size()) != rank_ + 1)
    throw XwbError(ErrCode::Invalid, "permutation size mismatch");
  Perm cur = p;
  std::vector<int> ws;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 <= rank_; ++i) {
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        ws.push_back(i);
        moved = true;
      }
    }
  }
  std::reverse(ws.begin(), ws.end());
  return from_word(ws);
}

std::vector<CoxeterSys::SigmaClass> CoxeterSys::sigma_classes() const {
  const int N = size();
  std::vector<int> cls(N, -1);
  std::vector<SigmaClass> out;
  for (int w = 0; w < N; ++w) {
    if (cls[w] >= 0) continue;
    int cid = static_cast<int>(out.size());
    std::deque<int> q{w};
    cls[w] = cid;
    std::vector<int> members{w};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int s = 0; s < rank_; ++s) {
        int u = left_mult(s, right_mult(v, sigma_[s]));
        if (cls[u] < 0) {
          cls[u] = cid;
          members.push_back(u);
          q.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    SigmaClass C;
    C.members = std::move(members);
    C.min_len = length(C.members[0]);
    for (int v : C.members) C.min_len = std::min(C.min_len, length(v));
    for (int v : C.members)
      if (length(v) == C.min_len) C.cmin.push_back(v);
    C.cuspidal = true;
    std::set<int> full;
    for (int s = 0; s < rank_; ++s) full.insert(s);
    for (int v : C.members)
      if (suppbar(v) != full) { C.cuspidal = false; break; }
    out.push_back(std::move(C));
  }
  return out;
}

int CoxeterSys::class_min_length(int w) const {
  // closure of {w} under elementary conjugations
  std::vector<char> seen(size(), 0);
  std::deque<int> q{w};
  seen[w] = 1;
  int best = length(w);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    best = std::min(best, length(v));
    for (int s = 0; s < rank_; ++s) {
      int u = left_mult(s, right_mult(v, sigma_[s]));
      if (!seen[u]) { seen[u] = 1; q.push_back(u); }
    }
  }
  return best;
}

std::optional<std::vector<CoxeterSys::ShiftStep>> CoxeterSys::cyclic_shift_path(int w, int w2) const {
  if (length(w) != length(w2))
    throw XwbError(ErrCode::Invalid, "LengthMismatch: cyclic shifts preserve length");
  std::vector<int> parent(size(), -1), px(size(), -1), py(size(), -1);
  std::vector<char> seen(size(), 0);
  std::deque<int> q{w};
  seen[w] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == w2) break;
    // expand x through element ids, which are in ShortLex order
    for (int x = 0; x < size(); ++x) {
      int y = mult(inverse(x), v);
      if (length(x) + length(y) != length(v)) continue;
      int nxt = mult(y, sigma_elt(x));
      if (length(nxt) != length(v)) continue;
      if (!seen[nxt]) {
        seen[nxt] = 1;
        parent[nxt] = v;
        px[nxt] = x;
        py[nxt] = y;
        q.push_back(nxt);
      }
    }
  }
  if (!seen[w2]) return std::nullopt;
  std::vector<ShiftStep> path;
  int cur = w2;
  while (cur != w) {
    path.push_back({parent[cur], px[cur], py[cur], cur});
    cur = parent[cur];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<CoxeterSys::DescentStep> CoxeterSys::descent_to_min(int w) const {
  std::vector<DescentStep> chain;
  int target = class_min_length(w);
  int cur = w;
  while (length(cur) > target) {
    bool stepped = false;
    for (int s = 0; s < rank_ && !stepped; ++s) {
      int nxt = left_mult(s, right_mult(cur, sigma_[s]));
      if (length(nxt) < length(cur)) {
        chain.push_back({cur, s, nxt});
        cur = nxt;
        stepped = true;
      }
    }
    if (stepped) continue;
    // no strict descent available: BFS through the equal-length layer for a
    // node with one, splicing the equal-length conjugation steps in
    std::vector<int> parent(size(), -1), ps(size(), -1);
    std::vector<char> seen(size(), 0);
    std::deque<int> q{cur};
    seen[cur] = 1;
    int found = -1, fs = -1;
    while (!q.empty() && found < 0) {
      int v = q.front();
      q.pop_front();
      for (int s = 0; s < rank_; ++s) {
        int nxt = left_mult(s, right_mult(v, sigma_[s]));
        if (length(nxt) < length(v)) { found = v; fs = s; break; }
        if (length(nxt) == length(v) && !seen[nxt]) {
          seen[nxt] = 1;
          parent[nxt] = v;
          ps[nxt] = s;
          q.push_back(nxt);
        }
      }
    }
    if (found < 0)
      throw XwbError(ErrCode::Invalid, "internal: no descending chain exists");
    std::vector<DescentStep> splice;
    int v = found;
    while (v != cur) {
      splice.push_back({parent[v], ps[v], v});
      v = parent[v];
    }
    std::reverse(splice.begin(), splice.end());
    for (auto& st : splice) chain.push_back(st);
    int nxt = left_mult(fs, right_mult(found, sigma_[fs]));
    chain.push_back({found, fs, nxt});
    cur = nxt;
  }
  return chain;
}

long CoxeterSys::twisted_order(int w) const {
  long so = sigma_order();
  int prod = 0;
  for (long k = 1; k <= so * static_cast<long>(size()) * 2 + 2; ++k) {
    // prod_{i<k} sigma^i(w): multiply the sigma^{k-1} twist on the right
    int tw = w;
    for (long i = 0; i < (k - 1) % so; ++i) tw = sigma_elt(tw);
    prod = mult(prod, tw);
    if (prod == 0 && k % so == 0) return k;
  }
  throw XwbError(ErrCode::Invalid, "twisted order not found (internal)");
}

}  // namespace xwb
