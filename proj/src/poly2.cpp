#include "adk/poly2.hpp"

#include <algorithm>
#include <sstream>

namespace adk {

// ---------------------------------------------------------------- Center

Center Center::finite(FieldElem a) {
  Center c;
  c.inf_ = false;
  c.field_ = a.field();
  c.a_ = std::move(a);
  return c;
}

Center Center::infinity(FieldPtr field) {
  Center c;
  c.inf_ = true;
  c.field_ = std::move(field);
  return c;
}

const FieldElem& Center::value() const {
  if (inf_) fail(Errc::InvalidArgument, "the point at infinity has no finite value");
  return a_;
}

bool Center::operator==(const Center& o) const {
  if (inf_ != o.inf_) return false;
  if (!same_field(field_, o.field_)) return false;
  return inf_ || a_ == o.a_;
}

int Center::cmp(const Center& a, const Center& b) {
  if (a.inf_ != b.inf_) return a.inf_ ? 1 : -1;
  if (a.inf_) return 0;
  if (same_field(a.field_, b.field_)) return FieldElem::cmp(a.a_, b.a_);
  return a.str().compare(b.str());
}

std::string Center::str() const { return inf_ ? "inf" : a_.str(); }

// ----------------------------------------------------------------- Poly2

void Poly2::add_term(const Exp2& e, const FieldElem& c) {
  auto it = t_.find(e);
  if (it == t_.end()) {
    if (!c.is_zero()) t_.emplace(e, c);
    return;
  }
  FieldElem s = it->second + c;
  if (s.is_zero())
    t_.erase(it);
  else
    it->second = std::move(s);
}

Poly2 Poly2::constant(const FieldElem& c) {
  Poly2 p(c.field());
  p.add_term({0, 0}, c);
  return p;
}

Poly2 Poly2::monomial(const FieldElem& c, uint32_t i, uint32_t j) {
  Poly2 p(c.field());
  p.add_term({i, j}, c);
  return p;
}

Poly2 Poly2::x(const FieldPtr& f) { return monomial(f->one(), 1, 0); }
Poly2 Poly2::y(const FieldPtr& f) { return monomial(f->one(), 0, 1); }

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

Poly2 Poly2::operator-() const {
  Poly2 r(f_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r(f_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r.add_term({e1.i + e2.i, e1.j + e2.j}, c1 * c2);
  return r;
}

Poly2 Poly2::scaled(const FieldElem& c) const {
  Poly2 r(f_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : t_) r.t_.emplace(e, v * c);
  return r;
}

Poly2 Poly2::pow(uint32_t e) const {
  Poly2 r = Poly2::constant(f_->one());
  Poly2 b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool Poly2::operator==(const Poly2& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto it = o.t_.begin();
  for (const auto& [e, c] : t_) {
    if (!(e == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

uint32_t Poly2::ord() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "ord of the zero polynomial");
  uint32_t m = UINT32_MAX;
  for (const auto& [e, c] : t_) m = std::min(m, e.total());
  return m;
}

Poly2 Poly2::leading_form() const {
  uint32_t m = ord();
  Poly2 r(f_);
  for (const auto& [e, c] : t_)
    if (e.total() == m) r.t_.emplace(e, c);
  return r;
}

uint32_t Poly2::total_degree() const {
  uint32_t d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e.total());
  return d;
}

uint32_t Poly2::deg_x() const {
  uint32_t d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e.i);
  return d;
}

uint32_t Poly2::deg_y() const {
  uint32_t d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e.j);
  return d;
}

FieldElem Poly2::eval_origin() const {
  auto it = t_.find({0, 0});
  return it == t_.end() ? f_->zero() : it->second;
}

FieldElem Poly2::leading_coeff() const {
  if (is_zero()) fail(Errc::ZeroPolynomial, "leading coefficient of zero");
  return t_.rbegin()->second;
}

Exp2 Poly2::monomial_content() const {
  Exp2 m{UINT32_MAX, UINT32_MAX};
  for (const auto& [e, c] : t_) {
    m.i = std::min(m.i, e.i);
    m.j = std::min(m.j, e.j);
  }
  if (t_.empty()) m = {0, 0};
  return m;
}

Poly2 Poly2::divided_by_monomial(uint32_t i, uint32_t j) const {
  Poly2 r(f_);
  for (const auto& [e, c] : t_) {
    if (e.i < i || e.j < j) fail(Errc::InvalidArgument, "monomial does not divide");
    r.t_.emplace(Exp2{e.i - i, e.j - j}, c);
  }
  return r;
}

Poly2 Poly2::subst_finite(const FieldElem& a) const {
  // x -> x, y -> x*(y + a); precompute powers of (y + a)
  Poly2 r(f_);
  uint32_t jmax = deg_y();
  std::vector<Poly2> pows;
  pows.push_back(Poly2::constant(f_->one()));
  Poly2 lin = Poly2::y(f_) + Poly2::constant(a);
  for (uint32_t j = 1; j <= jmax; ++j) pows.push_back(pows.back() * lin);
  for (const auto& [e, c] : t_)
    r = r + pows[e.j].scaled(c) * Poly2::monomial(f_->one(), e.i + e.j, 0);
  return r;
}

Poly2 Poly2::subst_infinity() const {
  Poly2 r(f_);
  for (const auto& [e, c] : t_) r.t_.emplace(Exp2{e.i, e.i + e.j}, c);
  return r;
}

Poly2 Poly2::embedded(const FieldPtr& bigger) const {
  if (same_field(f_, bigger)) return *this;
  Poly2 r(bigger);
  for (const auto& [e, c] : t_) r.t_.emplace(e, bigger->embed(c));
  return r;
}

std::optional<Poly2> Poly2::divided_exact(const Poly2& d) const {
  if (d.is_zero()) fail(Errc::ZeroPolynomial, "division by zero polynomial");
  Poly2 q(f_);
  Poly2 r = *this;
  const auto& [de, dc] = *d.terms().rbegin();
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    if (re.i < de.i || re.j < de.j) return std::nullopt;
    Poly2 t = Poly2::monomial(rc / dc, re.i - de.i, re.j - de.j);
    q = q + t;
    r = r - t * d;
  }
  return q;
}

std::vector<UPoly> Poly2::y_coeffs() const {
  std::vector<UPoly> ys(deg_y() + 1, UPoly(f_));
  std::vector<std::vector<FieldElem>> cs(deg_y() + 1);
  for (const auto& [e, c] : t_) {
    auto& v = cs[e.j];
    if (v.size() <= e.i) v.resize(e.i + 1, f_->zero());
    v[e.i] = c;
  }
  for (size_t j = 0; j < cs.size(); ++j) ys[j] = UPoly(f_, std::move(cs[j]));
  return ys;
}

Poly2 Poly2::from_y_coeffs(const FieldPtr& f, const std::vector<UPoly>& ys) {
  Poly2 r(f);
  for (size_t j = 0; j < ys.size(); ++j)
    for (size_t i = 0; i < ys[j].coeffs().size(); ++i)
      r.add_term({static_cast<uint32_t>(i), static_cast<uint32_t>(j)}, ys[j].coeffs()[i]);
  return r;
}

UPoly Poly2::dehomogenized() const {
  uint32_t d = ord();
  std::vector<FieldElem> c(d + 1, f_->zero());
  for (const auto& [e, v] : t_)
    if (e.total() == d) c[e.j] = v;
  return UPoly(f_, std::move(c));
}

std::string Poly2::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.str();
    bool neg = false;
    if (!cs.empty() && cs[0] == '-' && c.field()->kind() != Field::Kind::Extension) {
      neg = true;
      cs = cs.substr(1);
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool parens = c.field()->kind() == Field::Kind::Extension && c.ext_coeffs().size() > 1;
    bool unit = cs == "1" && !parens;
    if (e.i == 0 && e.j == 0) {
      os << (parens ? "(" + cs + ")" : cs);
      continue;
    }
    if (!unit) os << (parens ? "(" + cs + ")" : cs) << "*";
    if (e.i > 0) {
      os << "x";
      if (e.i > 1) os << "^" << e.i;
      if (e.j > 0) os << "*";
    }
    if (e.j > 0) {
      os << "y";
      if (e.j > 1) os << "^" << e.j;
    }
  }
  return os.str();
}

// --------------------------------------------------- transform_at_center

Transformed transform_at_center(const Poly2& f, const Center& c) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "transform of the zero polynomial");
  Poly2 g = f.embedded(c.field());
  Poly2 s = c.at_infinity() ? g.subst_infinity() : g.subst_finite(c.value());
  Exp2 mc = s.monomial_content();
  Transformed out;
  if (c.at_infinity()) {
    out.m = mc.j;
    out.strict = s.divided_by_monomial(0, mc.j);
  } else {
    out.m = mc.i;
    out.strict = s.divided_by_monomial(mc.i, 0);
  }
  return out;
}

// ------------------------------------------------------------------ gcd2

namespace {

// content of f viewed in k[x][y]: monic gcd of the y-coefficients
UPoly content_y(const std::vector<UPoly>& ys) {
  UPoly c(ys.empty() ? FieldPtr() : ys[0].field());
  for (const auto& g : ys) c = UPoly::gcd(c, g);
  return c;
}

std::vector<UPoly> divide_coeffs(const std::vector<UPoly>& ys, const UPoly& d) {
  std::vector<UPoly> out;
  out.reserve(ys.size());
  for (const auto& g : ys) {
    auto [q, r] = g.divrem(d);
    if (!r.is_zero()) fail(Errc::InvalidArgument, "content division not exact");
    out.push_back(q);
  }
  return out;
}

long ydeg(const std::vector<UPoly>& v) { return static_cast<long>(v.size()) - 1; }

void ytrim(std::vector<UPoly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// r := lc(b)*r - lc(r)*y^(dr-db)*b : one pseudo-reduction step in k[x][y]
void pseudo_step(std::vector<UPoly>& r, const std::vector<UPoly>& b) {
  long dr = ydeg(r), db = ydeg(b);
  UPoly lr = r.back(), lb = b.back();
  for (auto& c : r) c = c * lb;
  for (long j = 0; j <= db; ++j) r[j + (dr - db)] = r[j + (dr - db)] - b[j] * lr;
  ytrim(r);
}

std::vector<UPoly> primitive_part_y(std::vector<UPoly> v) {
  ytrim(v);
  if (v.empty()) return v;
  return divide_coeffs(v, content_y(v));
}

} // namespace

Poly2 gcd2(const Poly2& f, const Poly2& g) {
  if (f.is_zero() && g.is_zero())
    fail(Errc::ZeroPolynomial, "gcd2 of two zero polynomials");
  const FieldPtr& k = f.field();
  auto normalize = [&](const Poly2& p) { return p.scaled(p.leading_coeff().inverse()); };
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);

  std::vector<UPoly> a = f.y_coeffs(), b = g.y_coeffs();
  UPoly ca = content_y(a), cb = content_y(b);
  a = divide_coeffs(a, ca);
  b = divide_coeffs(b, cb);
  UPoly cg = UPoly::gcd(ca, cb);

  // primitive pseudo-remainder sequence in y
  if (ydeg(a) < ydeg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (ydeg(b) == 0) {
      // primitive and constant in y: the primitive gcd is 1
      b.clear();
      a = {UPoly::constant(k->one())};
      break;
    }
    std::vector<UPoly> r = a;
    while (ydeg(r) >= ydeg(b)) pseudo_step(r, b);
    r = primitive_part_y(std::move(r));
    a = std::move(b);
    b = std::move(r);
  }
  Poly2 prim = Poly2::from_y_coeffs(k, a);
  Poly2 res = prim * Poly2::from_y_coeffs(k, {cg});
  return normalize(res);
}

} // namespace adk
