#include "adk/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace adk {

UPoly::UPoly(FieldPtr f, std::vector<FieldElem> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::var(const FieldPtr& f) { return UPoly(f, {f->zero(), f->one()}); }

UPoly UPoly::constant(const FieldElem& c) {
  if (c.is_zero()) return UPoly(c.field());
  return UPoly(c.field(), {c});
}

UPoly UPoly::monomial(const FieldPtr& f, const FieldElem& c, size_t k) {
  if (c.is_zero()) return UPoly(f);
  std::vector<FieldElem> v(k, f->zero());
  v.push_back(c);
  return UPoly(f, std::move(v));
}

FieldElem UPoly::coeff(size_t k) const {
  if (k < c_.size()) return c_[k];
  return f_->zero();
}

FieldElem UPoly::lc() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "leading coefficient of zero");
  return c_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<FieldElem> v(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) v[k] = v[k] + o.c_[k];
  return UPoly(f_, std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  std::vector<FieldElem> v = c_;
  for (auto& x : v) x = -x;
  return UPoly(f_, std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(f_);
  std::vector<FieldElem> v(c_.size() + o.c_.size() - 1, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) v[i + j] = v[i + j] + c_[i] * o.c_[j];
  }
  return UPoly(f_, std::move(v));
}

UPoly UPoly::scaled(const FieldElem& c) const {
  std::vector<FieldElem> v = c_;
  for (auto& x : v) x = x * c;
  return UPoly(f_, std::move(v));
}

UPoly UPoly::shifted(size_t k) const {
  if (is_zero()) return *this;
  std::vector<FieldElem> v(k, f_->zero());
  v.insert(v.end(), c_.begin(), c_.end());
  return UPoly(f_, std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& d) const {
  if (d.is_zero()) fail(Errc::ZeroPolynomial, "division by the zero polynomial");
  UPoly r = *this;
  UPoly q(f_);
  FieldElem inv_lc = d.lc().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    size_t shift = static_cast<size_t>(r.degree() - d.degree());
    FieldElem c = r.c_.back() * inv_lc;
    q = q + UPoly::monomial(f_, c, shift);
    r = r - d.shifted(shift).scaled(c);
  }
  return {q, r};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inverse());
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(f_);
  std::vector<FieldElem> v;
  v.reserve(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k)
    v.push_back(c_[k] * f_->from_int(static_cast<long>(k)));
  return UPoly(f_, std::move(v));
}

FieldElem UPoly::eval(const FieldElem& x) const {
  FieldElem acc = f_->zero();
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

UPoly UPoly::pow_mod(const mpz_class& e, const UPoly& mod) const {
  UPoly r = UPoly::constant(f_->one()) % mod;
  UPoly b = *this % mod;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = (r * b) % mod;
    k >>= 1;
    if (k > 0) b = (b * b) % mod;
  }
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r = UPoly::constant(f_->one());
  UPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<UPoly, UPoly, UPoly> UPoly::xgcd(const UPoly& a, const UPoly& b) {
  const FieldPtr& f = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(f->one()), s1 = UPoly(f);
  UPoly t0 = UPoly(f), t1 = UPoly::constant(f->one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {r0, s0, t0};
}

UPoly UPoly::embedded(const FieldPtr& bigger) const {
  if (same_field(f_, bigger)) return *this;
  std::vector<FieldElem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(bigger->embed(c));
  return UPoly(bigger, std::move(v));
}

bool UPoly::operator==(const UPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != o.c_[k]) return false;
  return true;
}

int UPoly::cmp(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (size_t k = a.c_.size(); k-- > 0;) {
    int c = FieldElem::cmp(a.c_[k], b.c_[k]);
    if (c != 0) return c;
  }
  return 0;
}

namespace {

// One rendered term: coefficient times var^k, suppressing unit coefficients
// and parenthesizing extension-field coefficients.
void render_term(std::ostream& os, const FieldElem& c, size_t k, const std::string& var,
                 bool first, bool compact) {
  std::string cs = c.str();
  bool neg = false;
  if (!cs.empty() && cs[0] == '-' && c.field()->kind() != Field::Kind::Extension) {
    neg = true;
    cs = cs.substr(1);
  }
  if (first) {
    if (neg) os << "-";
  } else {
    if (compact)
      os << (neg ? "-" : "+");
    else
      os << (neg ? " - " : " + ");
  }
  // Extension coefficients with a generator part are parenthesized so the
  // generator t cannot be read as the polynomial variable.
  bool needs_parens = c.field()->kind() == Field::Kind::Extension && c.ext_coeffs().size() > 1;
  bool unit_coeff = cs == "1";
  if (k == 0) {
    if (needs_parens)
      os << "(" << cs << ")";
    else
      os << cs;
    return;
  }
  if (!unit_coeff) {
    if (needs_parens)
      os << "(" << cs << ")*";
    else
      os << cs << "*";
  }
  os << var;
  if (k > 1) os << "^" << k;
}

std::string render_upoly(const UPoly& p, const std::string& var, bool compact) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = p.coeffs().size(); k-- > 0;) {
    const FieldElem& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    render_term(os, c, k, var, first, compact);
    first = false;
  }
  return os.str();
}

} // namespace

std::string UPoly::str(const std::string& var) const { return render_upoly(*this, var, false); }

std::string UPoly::str_compact(const std::string& var) const {
  return render_upoly(*this, var, true);
}

} // namespace adk
