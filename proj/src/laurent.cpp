#include "xwb/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace xwb {

namespace {
// Saturating sum on the ord scale; kOrdInf absorbs.
long osum(long a, long b) {
  if (a >= kOrdInf || b >= kOrdInf) return kOrdInf;
  return a + b;
}
}  // namespace

std::string Valuation::str() const {
  if (is_exact_zero()) return "AtLeast(inf)";
  std::string k = kind == Kind::Finite ? "Finite" : "AtLeast";
  return k + "(" + std::to_string(v) + ")";
}

void check_same_field(const Laurent& a, const Laurent& b) {
  if (!a.field() || !b.field() || !a.field()->same(*b.field()))
    throw XwbError(ErrCode::Invalid, "FieldMismatch");
}

Laurent::Laurent(FieldPtr f, long v_lo, std::vector<Fq> coeffs, long prec, bool exact)
    : field_(std::move(f)), v_lo_(v_lo), prec_(prec), coeffs_(std::move(coeffs)), exact_(exact) {
  if (v_lo_ > prec_) throw XwbError(ErrCode::Invalid, "window with v_lo > prec");
  if (static_cast<long>(coeffs_.size()) > prec_ - v_lo_)
    throw XwbError(ErrCode::Invalid, "coeffs overrun the declared window");
  if (static_cast<long>(coeffs_.size()) < prec_ - v_lo_) {
    // exact elements may store a compressed support; unknown tails may not
    if (!exact_) throw XwbError(ErrCode::Invalid, "coeffs length must equal prec - v_lo");
    coeffs_.resize(prec_ - v_lo_, 0);
  }
  normalize();
}

void Laurent::normalize() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
    v_lo_ += static_cast<long>(lead);
  }
  if (exact_) {
    // tail is known zero; the stored window may end past the support
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) v_lo_ = prec_;
    else prec_ = std::max(prec_, v_lo_ + static_cast<long>(coeffs_.size()));
  }
}

Laurent Laurent::zero(FieldPtr f, long prec, bool exact) {
  return Laurent(std::move(f), prec, {}, prec, exact);
}

Laurent Laurent::t_power(FieldPtr f, long k, Fq c) {
  if (c == 0) return zero(f, k + 1);
  return Laurent(std::move(f), k, {c}, k + 1, true);
}

Laurent Laurent::poly(FieldPtr f, long v_lo, const std::vector<Fq>& c) {
  return Laurent(std::move(f), v_lo, c, v_lo + static_cast<long>(c.size()), true);
}

Fq Laurent::coeff(long e) const {
  if (e < v_lo_ || e >= v_lo_ + static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[e - v_lo_];
}

bool Laurent::is_zero_exact() const { return exact_ && coeffs_.empty(); }

Valuation Laurent::ord() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return Valuation::finite(v_lo_ + static_cast<long>(i));
  if (exact_) return Valuation::at_least(kOrdInf);
  return Valuation::at_least(prec_);
}

TriState Laurent::is_unit() const {
  Valuation v = ord();
  if (v.is_finite()) return TriState::yes;
  if (v.is_exact_zero()) return TriState::no;
  return TriState::unknown;
}

Laurent Laurent::add(const Laurent& o) const {
  check_same_field(*this, o);
  const FieldTab& F = *field_;
  bool ex = exact_ && o.exact_;
  long lo = std::min(v_lo_, o.v_lo_);
  long supp_end = std::max(v_lo_ + static_cast<long>(coeffs_.size()),
                           o.v_lo_ + static_cast<long>(o.coeffs_.size()));
  long out_prec;
  if (ex) {
    out_prec = std::max({supp_end, prec_, o.prec_});
  } else {
    out_prec = std::min(effective_prec(), o.effective_prec());
  }
  if (out_prec < lo) lo = out_prec;
  std::vector<Fq> c(out_prec - lo, 0);
  for (long e = lo; e < out_prec; ++e) c[e - lo] = F.add(coeff(e), o.coeff(e));
  return Laurent(field_, lo, std::move(c), out_prec, ex);
}

Laurent Laurent::neg() const {
  std::vector<Fq> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = field_->neg(coeffs_[i]);
  Laurent r = *this;
  r.coeffs_ = std::move(c);
  return r;
}

Laurent Laurent::sub(const Laurent& o) const { return add(o.neg()); }

Laurent Laurent::mul(const Laurent& o) const {
  check_same_field(*this, o);
  const FieldTab& F = *field_;
  if (is_zero_exact() || o.is_zero_exact()) return zero(field_, 0, true);
  bool ex = exact_ && o.exact_;
  long oa = ord().v;  // Finite value or AtLeast lower bound
  long ob = o.ord().v;
  long lo = osum(v_lo_, o.v_lo_);
  long out_prec;
  if (ex) {
    out_prec = v_lo_ + static_cast<long>(coeffs_.size()) + o.v_lo_ +
               static_cast<long>(o.coeffs_.size()) - 1;
    out_prec = std::max(out_prec, lo);
  } else {
    // information window: min(prec_a + ord b, prec_b + ord a)
    out_prec = std::min(osum(effective_prec(), ob), osum(o.effective_prec(), oa));
    if (out_prec >= kOrdInf)
      throw XwbError(ErrCode::Invalid, "internal: inexact product with infinite window");
  }
  if (out_prec < lo) lo = out_prec;
  std::vector<Fq> c(out_prec - lo, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      long e = v_lo_ + static_cast<long>(i) + o.v_lo_ + static_cast<long>(j);
      if (e >= lo && e < out_prec) c[e - lo] = F.add(c[e - lo], F.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Laurent(field_, lo, std::move(c), out_prec, ex);
}

Laurent Laurent::div(const Laurent& o) const {
  check_same_field(*this, o);
  const FieldTab& F = *field_;
  Valuation vb = o.ord();
  if (!vb.is_finite()) {
    if (vb.is_exact_zero()) throw XwbError(ErrCode::Invalid, "division by exact zero");
    throw XwbError(ErrCode::Precision, "DivByUnknown: divisor ord not certified", 1);
  }
  Valuation va = ord();
  if (va.is_exact_zero()) return zero(field_, 0, true);
  const long db = vb.v;
  const Fq lead = o.coeff(db);
  const long oa = va.v;
  const long qlo = oa - db;

  // quotient information window (exclusive end, on the quotient's scale)
  long info = std::min(effective_prec(), osum(o.effective_prec(), oa - db));
  long qprec = (info >= kOrdInf) ? kOrdInf : info - db;
  // where to stop materializing when both operands are exact and the division
  // does not terminate: fall back to the declared windows
  long fallback = std::max(prec_, o.prec_) - db;
  long stop = (qprec >= kOrdInf) ? std::max(fallback, qlo) : qprec;

  std::vector<Fq> q;
  Laurent rem = *this;
  bool exact_done = false;
  long e = qlo;
  for (; e < stop; ++e) {
    if (rem.is_zero_exact()) { exact_done = true; break; }
    long target = e + db;
    if (!rem.exact_ && target >= rem.prec_) break;  // unknown coefficient
    Fq num = rem.coeff(target);
    Fq ce = (num == 0) ? 0 : F.div(num, lead);
    q.push_back(ce);
    if (ce != 0) rem = rem.sub(o.mul(t_power(field_, e, ce)));
  }
  if (rem.is_zero_exact()) exact_done = true;
  bool ex = exact_ && o.exact_ && exact_done;
  long out_prec = ex ? qlo + static_cast<long>(q.size()) : std::min(static_cast<long>(qlo + q.size()), stop);
  if (!ex) out_prec = qlo + static_cast<long>(q.size());
  return Laurent(field_, qlo, std::move(q), out_prec, ex);
}

Laurent Laurent::frobenius(long k) const {
  std::vector<Fq> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = field_->frob_q_pow(coeffs_[i], k);
  Laurent r = *this;
  r.coeffs_ = std::move(c);
  return r;
}

Laurent Laurent::shift(long k) const {
  return Laurent(field_, v_lo_ + k, coeffs_, prec_ + k, exact_);
}

Laurent Laurent::widen(long new_prec) const {
  if (!exact_) {
    if (new_prec > prec_)
      throw XwbError(ErrCode::Precision, "cannot widen inexact element", new_prec - prec_);
    return *this;
  }
  Laurent r = *this;
  r.prec_ = std::max(prec_, new_prec);
  if (r.coeffs_.empty()) r.v_lo_ = r.prec_;
  return r;
}

Laurent Laurent::truncate(long new_prec) const {
  if (new_prec >= effective_prec()) return *this;
  long lo = std::min(v_lo_, new_prec);
  std::vector<Fq> c;
  for (long e = lo; e < new_prec; ++e) c.push_back(coeff(e));
  return Laurent(field_, lo, std::move(c), new_prec, false);
}

bool Laurent::identical(const Laurent& o) const {
  return field_->same(*o.field()) && v_lo_ == o.v_lo_ && prec_ == o.prec_ && exact_ == o.exact_ &&
         coeffs_ == o.coeffs_;
}

TriState Laurent::agree(const Laurent& o) const {
  Laurent d = sub(o);
  Valuation v = d.ord();
  if (v.is_finite()) return TriState::no;
  if (v.is_exact_zero()) return TriState::yes;
  return TriState::unknown;
}

std::string Laurent::str() const {
  std::ostringstream os;
  bool wrote = false;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (wrote) os << " + ";
    os << field_->to_string(coeffs_[i]) << "*t^" << (v_lo_ + static_cast<long>(i));
    wrote = true;
  }
  if (!wrote) os << "0";
  if (!exact_) os << " + O(t^" << prec_ << ")";
  return os.str();
}

std::string Laurent::json() const {
  nlohmann::json j;
  j["field"] = {{"p", field_->p()}, {"e0", field_->e0()}, {"m_exp", field_->m_exp()}};
  j["v_lo"] = v_lo_;
  j["prec"] = prec_;
  std::vector<int> c;
  for (long e = v_lo_; e < prec_; ++e) c.push_back(coeff(e));
  j["coeffs"] = c;
  j["exact"] = exact_;
  return j.dump();
}

Laurent Laurent::from_json(const std::string& s) {
  nlohmann::json j = nlohmann::json::parse(s);
  int e0 = j["field"]["e0"].get<int>();
  auto f = FieldTab::make(j["field"]["p"].get<int>(), e0, j["field"]["m_exp"].get<int>() / e0);
  std::vector<Fq> c;
  for (auto& x : j["coeffs"]) c.push_back(static_cast<Fq>(x.get<int>()));
  return Laurent(f, j["v_lo"].get<long>(), std::move(c), j["prec"].get<long>(), j["exact"].get<bool>());
}

Laurent Laurent::parse(FieldPtr f, const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  bool exact = true;
  long prec = 0;
  bool have_prec = false;
  auto opos = t.find("+O(t^");
  if (opos == std::string::npos && t.rfind("O(t^", 0) == 0) opos = 0;
  if (opos != std::string::npos) {
    std::string tail = t.substr(opos);
    if (!tail.empty() && tail[0] == '+') tail = tail.substr(1);
    if (tail.rfind("O(t^", 0) != 0 || tail.back() != ')')
      throw XwbError(ErrCode::Invalid, "bad O-term: " + s);
    prec = std::stol(tail.substr(4, tail.size() - 5));
    have_prec = true;
    exact = false;
    t = t.substr(0, opos);
  }
  std::vector<std::pair<long, Fq>> terms;
  size_t i = 0;
  while (i < t.size()) {
    int depth = 0;
    size_t j = i;
    for (; j < t.size(); ++j) {
      if (t[j] == '(') ++depth;
      else if (t[j] == ')') --depth;
      else if (t[j] == '+' && depth == 0 && j > i) break;
    }
    std::string term = t.substr(i, j - i);
    i = j + ((j < t.size() && t[j] == '+') ? 1 : 0);
    if (term.empty() || term == "0" || term == "+0") continue;
    if (term[0] == '+') term = term.substr(1);
    auto star = term.rfind("*t^");
    std::string coef_s, exp_s;
    if (star == std::string::npos) {
      if (term.rfind("t^", 0) == 0) { coef_s = "1"; exp_s = term.substr(2); }
      else { coef_s = term; exp_s = "0"; }
    } else {
      coef_s = term.substr(0, star);
      exp_s = term.substr(star + 3);
    }
    long e = std::stol(exp_s);
    Fq c = f->parse(coef_s);
    terms.emplace_back(e, c);
  }
  long lo = have_prec ? prec : 0;
  long hi = lo;
  if (!terms.empty()) {
    lo = terms[0].first;
    hi = terms[0].first + 1;
    for (auto& [e, cf] : terms) { lo = std::min(lo, e); hi = std::max(hi, e + 1); }
  }
  if (!have_prec) prec = hi;
  if (lo > prec) lo = prec;
  std::vector<Fq> c(std::max(prec, lo) - lo, 0);
  for (auto& [e, cf] : terms) {
    if (e >= prec) throw XwbError(ErrCode::Invalid, "term at or beyond window end: " + s);
    c[e - lo] = f->add(c[e - lo], cf);
  }
  return Laurent(f, lo, std::move(c), std::max(prec, lo), exact);
}

}  // namespace xwb
