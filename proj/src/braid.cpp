#include "xwb/braid.hpp"

#include <algorithm>
#include <sstream>

namespace xwb {

BraidNF BraidNF::from_weyl(CoxPtr w, int elt) {
  BraidNF b(std::move(w));
  if (elt != 0) b.factors_.push_back(elt);
  return b;
}

BraidNF BraidNF::from_factors(CoxPtr w, std::vector<int> factors) {
  BraidNF b(std::move(w));
  b.factors_ = std::move(factors);
  b.normalize();
  return b;
}

long BraidNF::word_length() const {
  long L = 0;
  for (int f : factors_) L += sys_->length(f);
  return L;
}

void BraidNF::normalize() {
  const CoxeterSys& W = *sys_;
  factors_.erase(std::remove(factors_.begin(), factors_.end(), 0), factors_.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < factors_.size(); ++i) {
      int a = factors_[i], b = factors_[i + 1];
      // slide left descents of b that are not right descents of a
      bool moved = false;
      bool again = true;
      while (again) {
        again = false;
        for (int s = 0; s < W.rank(); ++s) {
          if (b != 0 && W.left_descent(b, s) && !W.right_descent(a, s)) {
            a = W.right_mult(a, s);
            b = W.left_mult(s, b);
            moved = true;
            again = true;
          }
        }
      }
      if (moved) {
        factors_[i] = a;
        factors_[i + 1] = b;
        changed = true;
      }
    }
    size_t before = factors_.size();
    factors_.erase(std::remove(factors_.begin(), factors_.end(), 0), factors_.end());
    if (factors_.size() != before) changed = true;
  }
}

BraidNF BraidNF::mul(const BraidNF& o) const {
  BraidNF r(sys_ ? sys_ : o.sys_);
  r.factors_ = factors_;
  r.factors_.insert(r.factors_.end(), o.factors_.begin(), o.factors_.end());
  r.normalize();
  return r;
}

BraidNF BraidNF::pow(long k) const {
  BraidNF r(sys_);
  for (long i = 0; i < k; ++i) r = r.mul(*this);
  return r;
}

BraidNF BraidNF::sigma() const {
  BraidNF r(sys_);
  for (int f : factors_) r.factors_.push_back(sys_->sigma_elt(f));
  // a diagram automorphism preserves left-weightedness
  return r;
}

std::string BraidNF::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " | ";
    os << sys_->word_str(factors_[i]);
  }
  os << ']';
  return os.str();
}

BraidNF braid_pow_twisted(CoxPtr W, int w, long d) {
  std::vector<int> fs;
  int cur = w;
  for (long i = 0; i < d; ++i) {
    fs.push_back(cur);
    cur = W->sigma_elt(cur);
  }
  return BraidNF::from_factors(W, fs);
}

namespace {

// a simple element d (in W) left-divides x iff it is a weak-order prefix of
// the first normal-form factor
std::optional<BraidNF> divide_by_simple(int d, const BraidNF& x) {
  const CoxeterSys& W = *x.sys();
  if (d == 0) return x;
  if (x.is_identity()) return std::nullopt;
  int head = x.factors()[0];
  int rest = W.mult(W.inverse(d), head);
  if (W.length(rest) != W.length(head) - W.length(d)) return std::nullopt;
  std::vector<int> fs = x.factors();
  fs[0] = rest;
  return BraidNF::from_factors(x.sys(), fs);
}

}  // namespace

std::optional<BraidNF> left_divide(const BraidNF& d, const BraidNF& x) {
  BraidNF cur = x;
  for (int f : d.factors()) {
    auto q = divide_by_simple(f, cur);
    if (!q) return std::nullopt;
    cur = *q;
  }
  return cur;
}

bool left_divides(const BraidNF& d, const BraidNF& x) { return left_divide(d, x).has_value(); }

std::optional<long> thm91_hypothesis(CoxPtr W, int w, const std::set<int>& I, long d_max) {
  if (!W->subset_sigma_stable(I))
    throw XwbError(ErrCode::Invalid, "thm91: I must be sigma-stable");
  for (int s : W->supp(w))
    if (!I.count(s)) throw XwbError(ErrCode::Invalid, "NotInParabolic: supp(w) not inside I");
  BraidNF wI = BraidNF::from_weyl(W, W->longest(I));
  for (long d = 1; d <= d_max; ++d) {
    if (left_divides(wI, braid_pow_twisted(W, w, d))) return d;
  }
  return std::nullopt;
}

namespace {

bool chain_search(const CoxPtr& W, const BraidNF& target, const std::set<int>& inside,
                  std::vector<std::set<int>>& chain) {
  if (target.is_identity()) return true;
  // candidate subsets of `inside`, by decreasing size then lexicographic
  std::vector<int> gens(inside.begin(), inside.end());
  int k = static_cast<int>(gens.size());
  std::vector<std::set<int>> cands;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::set<int> I;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) I.insert(gens[i]);
    cands.push_back(std::move(I));
  }
  std::sort(cands.begin(), cands.end(), [](const std::set<int>& a, const std::set<int>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  for (auto& I : cands) {
    BraidNF wI = BraidNF::from_weyl(W, W->longest(I));
    long need = 2 * W->length(W->longest(I));
    if (need > target.word_length()) continue;
    auto q1 = left_divide(wI, target);
    if (!q1) continue;
    auto q2 = left_divide(wI, *q1);
    if (!q2) continue;
    chain.push_back(I);
    if (chain_search(W, *q2, I, chain)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::set<int>>> good_certificate(CoxPtr W, int w, long d) {
  BraidNF target = braid_pow_twisted(W, w, d);
  std::set<int> S;
  for (int s = 0; s < W->rank(); ++s) S.insert(s);
  std::vector<std::set<int>> chain;
  if (chain_search(W, target, S, chain)) return chain;
  return std::nullopt;
}

}  // namespace xwb
