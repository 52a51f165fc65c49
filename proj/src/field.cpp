#include "xwb/field.hpp"

#include <algorithm>
#include <sstream>

namespace xwb {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense coefficient vectors over F_p, lowest degree first.
using Poly = std::vector<int>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmod(Poly a, const Poly& b, int p) {
  ptrim(a);
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    // b is monic up to a unit: scale by lead(a)/lead(b)
    long lb = b[db] % p;
    long la = a[da] % p;
    long inv = 1;
    for (long x = 1; x < p; ++x)
      if ((x * lb) % p == 1) { inv = x; break; }
    long f = (la * inv) % p;
    for (int i = 0; i <= db; ++i) {
      long v = a[da - db + i] - f * b[i];
      v %= p;
      if (v < 0) v += p;
      a[da - db + i] = static_cast<int>(v);
    }
    ptrim(a);
  }
  return a;
}

bool divides(const Poly& d, const Poly& a, int p) {
  Poly r = pmod(a, d, p);
  return r.empty();
}

bool is_irreducible(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (int dd = 1; dd <= deg / 2; ++dd) {
    long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly d(dd + 1, 0);
      long c = code;
      for (int i = 0; i < dd; ++i) { d[i] = static_cast<int>(c % p); c /= p; }
      d[dd] = 1;
      if (divides(d, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

FieldTab::FieldTab(int p, int e0, int m_exp, std::vector<int> modulus)
    : p_(p), e0_(e0), m_exp_(m_exp), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw XwbError(ErrCode::Invalid, "p must be prime");
  if (e0_ < 1 || m_exp_ < 1 || m_exp_ % e0_ != 0)
    throw XwbError(ErrCode::Invalid, "need e0 >= 1 dividing m_exp");
  long sz = 1;
  for (int i = 0; i < m_exp_; ++i) {
    sz *= p_;
    if (sz > 4096) throw XwbError(ErrCode::Invalid, "field too large (cap p^m_exp <= 4096)");
  }
  size_ = static_cast<int>(sz);
  q_ = 1;
  for (int i = 0; i < e0_; ++i) q_ *= p_;
  if (static_cast<int>(modulus_.size()) != m_exp_ + 1 || modulus_[m_exp_] != 1)
    throw XwbError(ErrCode::Invalid, "modulus must be monic of degree m_exp");
  for (int c : modulus_)
    if (c < 0 || c >= p_) throw XwbError(ErrCode::Invalid, "modulus coefficients out of range");
  if (!is_irreducible(modulus_, p_))
    throw XwbError(ErrCode::Invalid, "modulus is reducible");
  build_tables();
}

void FieldTab::build_tables() {
  const int n = size_;
  add_.assign(static_cast<size_t>(n) * n, 0);
  mul_.assign(static_cast<size_t>(n) * n, 0);
  neg_.assign(n, 0);
  inv_.assign(n, 0);
  frob_.assign(n, 0);

  auto decode = [&](int idx) {
    Poly c(m_exp_, 0);
    for (int i = 0; i < m_exp_; ++i) { c[i] = idx % p_; idx /= p_; }
    return c;
  };
  auto encode = [&](const Poly& c) {
    long idx = 0, w = 1;
    for (int i = 0; i < m_exp_; ++i) {
      idx += (i < static_cast<int>(c.size()) ? c[i] : 0) * w;
      w *= p_;
    }
    return static_cast<Fq>(idx);
  };

  for (int a = 0; a < n; ++a) {
    Poly ca = decode(a);
    Poly nc(m_exp_, 0);
    for (int i = 0; i < m_exp_; ++i) nc[i] = (p_ - ca[i]) % p_;
    neg_[a] = encode(nc);
    for (int b = 0; b < n; ++b) {
      Poly cb = decode(b);
      Poly s(m_exp_, 0);
      for (int i = 0; i < m_exp_; ++i) s[i] = (ca[i] + cb[i]) % p_;
      add_[static_cast<size_t>(a) * n + b] = encode(s);
      Poly prod(2 * m_exp_ - 1, 0);
      for (int i = 0; i < m_exp_; ++i)
        for (int j = 0; j < m_exp_; ++j)
          prod[i + j] = static_cast<int>((prod[i + j] + 1L * ca[i] * cb[j]) % p_);
      Poly r = pmod(prod, modulus_, p_);
      r.resize(m_exp_, 0);
      mul_[static_cast<size_t>(a) * n + b] = encode(r);
    }
  }
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b)
      if (mul_[static_cast<size_t>(a) * n + b] == 1) { inv_[a] = static_cast<Fq>(b); break; }
    if (inv_[a] == 0) throw XwbError(ErrCode::Invalid, "non-invertible nonzero element");
  }
  for (int a = 0; a < n; ++a) {
    Fq x = static_cast<Fq>(a);
    frob_[a] = pow(x, q_);
  }
  // Frobenius must have exact order m on F_{q^m}.
  const int m = m_exp_ / e0_;
  for (int a = 0; a < n; ++a)
    if (frob_q_pow(static_cast<Fq>(a), m) != a)
      throw XwbError(ErrCode::Invalid, "frobenius order check failed");
  if (m > 1) {
    for (int j = 1; j < m; ++j) {
      bool all_fixed = true;
      for (int a = 0; a < n && all_fixed; ++a)
        all_fixed = (frob_q_pow(static_cast<Fq>(a), j) == a);
      if (all_fixed) throw XwbError(ErrCode::Invalid, "frobenius order too small");
    }
  }
}

Fq FieldTab::inv(Fq a) const {
  if (a == 0) throw XwbError(ErrCode::Invalid, "division by zero in field");
  return inv_[a];
}

Fq FieldTab::pow(Fq a, long e) const {
  if (e < 0) { a = inv(a); e = -e; }
  Fq r = one(), base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fq FieldTab::frob_q_pow(Fq a, long k) const {
  const int m = m_exp_ / e0_;
  if (m > 0) k %= m;
  if (k < 0) k += m;
  Fq r = a;
  for (long i = 0; i < k; ++i) r = frob_[r];
  return r;
}

Fq FieldTab::from_int(long c) const {
  long v = c % p_;
  if (v < 0) v += p_;
  return static_cast<Fq>(v);
}

Fq FieldTab::from_coeffs(const std::vector<int>& c) const {
  long idx = 0, w = 1;
  for (int i = 0; i < m_exp_; ++i) {
    int ci = i < static_cast<int>(c.size()) ? c[i] : 0;
    ci %= p_;
    if (ci < 0) ci += p_;
    idx += ci * w;
    w *= p_;
  }
  return static_cast<Fq>(idx);
}

std::vector<int> FieldTab::to_coeffs(Fq a) const {
  std::vector<int> c(m_exp_, 0);
  int idx = a;
  for (int i = 0; i < m_exp_; ++i) { c[i] = idx % p_; idx /= p_; }
  return c;
}

std::string FieldTab::to_string(Fq a) const {
  auto c = to_coeffs(a);
  bool ext = false;
  for (int i = 1; i < m_exp_; ++i)
    if (c[i] != 0) ext = true;
  if (!ext) return std::to_string(c.empty() ? 0 : c[0]);
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int i = 0; i < m_exp_; ++i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) os << c[0];
    else {
      if (c[i] != 1) os << c[i] << '*';
      os << 'z';
      if (i > 1) os << '^' << i;
    }
  }
  os << ')';
  return os.str();
}

Fq FieldTab::parse(const std::string& s) const {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  if (t.empty()) throw XwbError(ErrCode::Invalid, "empty field element");
  std::vector<int> c(m_exp_, 0);
  size_t i = 0;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+') ++i;
    else if (t[i] == '-') { sign = -1; ++i; }
    long coef = 1;
    bool saw_num = false;
    if (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) {
      coef = 0;
      while (i < t.size() && isdigit(static_cast<unsigned char>(t[i])))
        coef = coef * 10 + (t[i++] - '0');
      saw_num = true;
    }
    int deg = 0;
    if (i < t.size() && (t[i] == '*' || t[i] == 'z')) {
      if (t[i] == '*') ++i;
      if (i >= t.size() || t[i] != 'z') throw XwbError(ErrCode::Invalid, "bad field element: " + s);
      ++i;
      deg = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        deg = 0;
        while (i < t.size() && isdigit(static_cast<unsigned char>(t[i])))
          deg = deg * 10 + (t[i++] - '0');
      }
    } else if (!saw_num) {
      throw XwbError(ErrCode::Invalid, "bad field element: " + s);
    }
    if (deg >= m_exp_) throw XwbError(ErrCode::Invalid, "generator degree out of range: " + s);
    long v = (c[deg] + sign * coef) % p_;
    if (v < 0) v += p_;
    c[deg] = static_cast<int>(v);
  }
  return from_coeffs(c);
}

std::shared_ptr<const FieldTab> FieldTab::make(int p, int e0, int m) {
  int m_exp = e0 * m;
  if (m_exp == 1) {
    // degree-1 modulus: X, the smallest by integer encoding
    return std::shared_ptr<const FieldTab>(new FieldTab(p, e0, 1, {0, 1}));
  }
  long count = 1;
  for (int i = 0; i < m_exp; ++i) count *= p;
  for (long code = 0; code < count; ++code) {
    std::vector<int> f(m_exp + 1, 0);
    long c = code;
    for (int i = 0; i < m_exp; ++i) { f[i] = static_cast<int>(c % p); c /= p; }
    f[m_exp] = 1;
    if (is_irreducible(f, p))
      return std::shared_ptr<const FieldTab>(new FieldTab(p, e0, m_exp, f));
  }
  throw XwbError(ErrCode::Invalid, "no irreducible modulus found");
}

std::shared_ptr<const FieldTab> FieldTab::make_explicit(int p, int e0, int m_exp,
                                                        std::vector<int> modulus) {
  return std::shared_ptr<const FieldTab>(new FieldTab(p, e0, m_exp, std::move(modulus)));
}

}  // namespace xwb
