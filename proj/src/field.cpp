#include "adk/field.hpp"

#include <algorithm>
#include <cassert>

#include "adk/upoly.hpp"

namespace adk {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::UnitElement: return "UnitElement";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NonIntegerExponent: return "NonIntegerExponent";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::ExtensionFactorizationUnsupported:
      return "ExtensionFactorizationUnsupported";
    case Errc::MismatchedDivisorSets: return "MismatchedDivisorSets";
    case Errc::AllGeneratorsZero: return "AllGeneratorsZero";
    case Errc::LevelExceedsBound: return "LevelExceedsBound";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (!a.valid() || !b.valid() || !same_field(a.field(), b.field()))
    fail(Errc::InvalidArgument, "elements of different fields");
}

namespace {

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t mod_inv(uint64_t a, uint64_t p) {
  // extended Euclid on (a, p), a != 0
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
  while (newr != 0) {
    int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

// Extension elements as univariate polynomials over the base.
UPoly as_upoly(const FieldElem& x) {
  return UPoly(x.field()->base(), x.ext_coeffs());
}

} // namespace

// ---------------------------------------------------------------- Field

FieldPtr Field::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Rational;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::prime(uint64_t p) {
  if (!is_prime_u64(p) || p > (uint64_t(1) << 31))
    fail(Errc::InvalidArgument, "characteristic must be a prime < 2^31: " + std::to_string(p));
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Prime;
  f->p_ = p;
  f->char_ = p;
  return f;
}

FieldPtr Field::extension(const FieldPtr& base, const UPoly& g) {
  if (!base || !same_field(g.field(), base))
    fail(Errc::InvalidArgument, "modulus must live over the base field");
  if (g.degree() < 2) fail(Errc::InvalidArgument, "extension modulus must have degree >= 2");
  if (!g.lc().is_one()) fail(Errc::InvalidArgument, "extension modulus must be monic");
  bool verified = false;
  if (base->supports_factorization()) {
    if (!is_irreducible(g))
      fail(Errc::ReducibleModulus, "modulus " + g.str() + " is reducible over " + base->describe());
    verified = true;
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Extension;
  f->char_ = base->characteristic();
  f->p_ = base->p_;
  f->base_ = base;
  f->modulus_ = std::make_shared<UPoly>(g);
  f->deg_ = static_cast<unsigned>(g.degree());
  f->abs_deg_ = f->deg_ * base->absolute_degree();
  f->verified_ = verified;
  return f;
}

mpz_class Field::size() const {
  if (!is_finite()) fail(Errc::InvalidArgument, "infinite field has no size");
  mpz_class s;
  mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(char_), abs_deg_);
  return s;
}

const UPoly& Field::modulus() const {
  if (kind_ != Kind::Extension) fail(Errc::InvalidArgument, "not an extension field");
  return *modulus_;
}

bool Field::supports_factorization() const {
  return char_ != 0 || kind_ == Kind::Rational;
}

bool Field::same(const Field& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Rational: return true;
    case Kind::Prime: return p_ == o.p_;
    case Kind::Extension:
      return base_->same(*o.base_) && *modulus_ == *o.modulus_;
  }
  return false;
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long n) const {
  FieldElem e;
  e.field_ = shared_from_this();
  switch (kind_) {
    case Kind::Rational:
      e.rat_ = mpq_class(n);
      break;
    case Kind::Prime: {
      long r = n % static_cast<long>(p_);
      if (r < 0) r += static_cast<long>(p_);
      e.res_ = static_cast<uint64_t>(r);
      break;
    }
    case Kind::Extension: {
      FieldElem c = base_->from_int(n);
      if (!c.is_zero()) e.ext_.push_back(std::move(c));
      break;
    }
  }
  return e;
}

FieldElem Field::from_mpz(const mpz_class& n) const {
  switch (kind_) {
    case Kind::Rational: {
      FieldElem e;
      e.field_ = shared_from_this();
      e.rat_ = mpq_class(n);
      return e;
    }
    case Kind::Prime: {
      FieldElem e;
      e.field_ = shared_from_this();
      mpz_class r = n % static_cast<long>(p_);
      if (r < 0) r += static_cast<long>(p_);
      e.res_ = r.get_ui();
      return e;
    }
    case Kind::Extension: {
      FieldElem c = base_->from_mpz(n);
      FieldElem e;
      e.field_ = shared_from_this();
      if (!c.is_zero()) e.ext_.push_back(std::move(c));
      return e;
    }
  }
  fail(Errc::InvalidArgument, "bad field kind");
}

FieldElem Field::from_mpq(const mpq_class& q) const {
  if (kind_ == Kind::Rational) {
    FieldElem e;
    e.field_ = shared_from_this();
    e.rat_ = q;
    e.rat_.canonicalize();
    return e;
  }
  FieldElem num = from_mpz(q.get_num());
  FieldElem den = from_mpz(q.get_den());
  if (den.is_zero()) fail(Errc::InvalidArgument, "denominator vanishes in characteristic " + std::to_string(char_));
  return num / den;
}

FieldElem Field::generator() const {
  if (kind_ != Kind::Extension) fail(Errc::InvalidArgument, "generator of a non-extension field");
  FieldElem e;
  e.field_ = shared_from_this();
  e.ext_ = {base_->zero(), base_->one()};
  return e;
}

FieldElem Field::from_coeffs(std::vector<FieldElem> coeffs) const {
  if (kind_ != Kind::Extension) fail(Errc::InvalidArgument, "coefficient vector needs an extension field");
  UPoly v(base_, std::move(coeffs));
  if (v.degree() >= static_cast<long>(deg_)) v = v % *modulus_;
  FieldElem e;
  e.field_ = shared_from_this();
  e.ext_ = v.coeffs();
  return e;
}

FieldElem Field::from_residue(uint64_t r) const {
  if (kind_ != Kind::Prime) fail(Errc::InvalidArgument, "residue needs a prime field");
  FieldElem e;
  e.field_ = shared_from_this();
  e.res_ = r % p_;
  return e;
}

bool Field::has_subfield(const Field& sub) const {
  if (same(sub)) return true;
  if (kind_ == Kind::Extension) return base_->has_subfield(sub);
  return false;
}

FieldElem Field::embed(const FieldElem& x) const {
  if (!x.valid()) fail(Errc::InvalidArgument, "embedding a detached element");
  if (same(*x.field())) {
    FieldElem e = x;
    e.field_ = shared_from_this();
    return e;
  }
  if (kind_ != Kind::Extension || !base_->has_subfield(*x.field()))
    fail(Errc::InvalidArgument,
         "no embedding of " + x.field()->describe() + " into " + describe());
  FieldElem c = base_->embed(x);
  FieldElem e;
  e.field_ = shared_from_this();
  if (!c.is_zero()) e.ext_.push_back(std::move(c));
  return e;
}

std::vector<FieldElem> Field::all_elements() const {
  if (!is_finite()) fail(Errc::InvalidArgument, "cannot enumerate an infinite field");
  std::vector<FieldElem> out;
  switch (kind_) {
    case Kind::Prime:
      for (uint64_t r = 0; r < p_; ++r) out.push_back(from_residue(r));
      break;
    case Kind::Extension: {
      std::vector<FieldElem> base_elems = base_->all_elements();
      std::vector<size_t> idx(deg_, 0);
      for (;;) {
        std::vector<FieldElem> coeffs;
        for (unsigned k = 0; k < deg_; ++k) coeffs.push_back(base_elems[idx[k]]);
        out.push_back(from_coeffs(std::move(coeffs)));
        unsigned k = 0;
        for (; k < deg_; ++k) {
          if (++idx[k] < base_elems.size()) break;
          idx[k] = 0;
        }
        if (k == deg_) break;
      }
      break;
    }
    default:
      break;
  }
  std::sort(out.begin(), out.end(),
            [](const FieldElem& a, const FieldElem& b) { return FieldElem::cmp(a, b) < 0; });
  return out;
}

std::string Field::describe() const {
  switch (kind_) {
    case Kind::Rational: return "q";
    case Kind::Prime: return "fp:" + std::to_string(p_);
    case Kind::Extension: return "ext:" + base_->describe() + ":" + modulus_->str_compact();
  }
  return "?";
}

// ------------------------------------------------------------ FieldElem

bool FieldElem::is_zero() const {
  switch (field_->kind()) {
    case Field::Kind::Rational: return sgn(rat_) == 0;
    case Field::Kind::Prime: return res_ == 0;
    case Field::Kind::Extension: return ext_.empty();
  }
  return false;
}

bool FieldElem::is_one() const {
  switch (field_->kind()) {
    case Field::Kind::Rational: return rat_ == 1;
    case Field::Kind::Prime: return res_ == 1;
    case Field::Kind::Extension: return ext_.size() == 1 && ext_[0].is_one();
  }
  return false;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same_field(*this, o);
  FieldElem r;
  r.field_ = field_;
  switch (field_->kind()) {
    case Field::Kind::Rational:
      r.rat_ = rat_ + o.rat_;
      break;
    case Field::Kind::Prime: {
      uint64_t s = res_ + o.res_;
      r.res_ = s >= field_->p() ? s - field_->p() : s;
      break;
    }
    case Field::Kind::Extension:
      r.ext_ = (as_upoly(*this) + as_upoly(o)).coeffs();
      break;
  }
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator-() const {
  FieldElem r;
  r.field_ = field_;
  switch (field_->kind()) {
    case Field::Kind::Rational:
      r.rat_ = -rat_;
      break;
    case Field::Kind::Prime:
      r.res_ = res_ == 0 ? 0 : field_->p() - res_;
      break;
    case Field::Kind::Extension:
      r.ext_ = (-as_upoly(*this)).coeffs();
      break;
  }
  return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same_field(*this, o);
  FieldElem r;
  r.field_ = field_;
  switch (field_->kind()) {
    case Field::Kind::Rational:
      r.rat_ = rat_ * o.rat_;
      break;
    case Field::Kind::Prime:
      r.res_ = mod_mul(res_, o.res_, field_->p());
      break;
    case Field::Kind::Extension:
      r.ext_ = ((as_upoly(*this) * as_upoly(o)) % field_->modulus()).coeffs();
      break;
  }
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) fail(Errc::InvalidArgument, "inverse of zero");
  FieldElem r;
  r.field_ = field_;
  switch (field_->kind()) {
    case Field::Kind::Rational:
      r.rat_ = 1 / rat_;
      break;
    case Field::Kind::Prime:
      r.res_ = mod_inv(res_, field_->p());
      break;
    case Field::Kind::Extension: {
      auto [g, s, t] = UPoly::xgcd(as_upoly(*this), field_->modulus());
      (void)t;
      if (g.degree() != 0)
        fail(Errc::InvalidArgument, "element not invertible: modulus not irreducible?");
      r.ext_ = s.scaled(g.coeff(0).inverse()).coeffs();
      break;
    }
  }
  return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem r = field_->one();
  FieldElem b = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (!valid() || !o.valid()) return valid() == o.valid();
  if (!same_field(field_, o.field_)) return false;
  return cmp(*this, o) == 0;
}

int FieldElem::cmp(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  switch (a.field_->kind()) {
    case Field::Kind::Rational:
      return ::cmp(a.rat_, b.rat_);
    case Field::Kind::Prime:
      return a.res_ < b.res_ ? -1 : a.res_ > b.res_ ? 1 : 0;
    case Field::Kind::Extension: {
      if (a.ext_.size() != b.ext_.size()) return a.ext_.size() < b.ext_.size() ? -1 : 1;
      for (size_t k = a.ext_.size(); k-- > 0;) {
        int c = cmp(a.ext_[k], b.ext_[k]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

std::string FieldElem::str() const {
  switch (field_->kind()) {
    case Field::Kind::Rational:
      return rat_.get_str();
    case Field::Kind::Prime:
      return std::to_string(res_);
    case Field::Kind::Extension:
      return as_upoly(*this).str("t");
  }
  return "?";
}

} // namespace adk
