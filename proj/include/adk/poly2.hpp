#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adk/upoly.hpp"

namespace adk {

struct Exp2 {
  uint32_t i = 0; // x exponent
  uint32_t j = 0; // y exponent
  uint32_t total() const { return i + j; }
  bool operator==(const Exp2& o) const { return i == o.i && j == o.j; }
};

// Graded lexicographic with x > y: the normalization term order.
struct GrlexLess {
  bool operator()(const Exp2& a, const Exp2& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.i < b.i;
  }
};

// A point on the exceptional fiber of a quadratic transform: Finite(a) is
// the direction y/x = a, Infinity the direction x/y = 0.
class Center {
public:
  static Center finite(FieldElem a);
  static Center infinity(FieldPtr field);

  bool at_infinity() const { return inf_; }
  const FieldElem& value() const; // Finite only
  const FieldPtr& field() const { return field_; }

  bool operator==(const Center& o) const;
  // Finite before Infinity; finite centers in canonical element order.
  static int cmp(const Center& a, const Center& b);
  std::string str() const;

private:
  Center() = default;
  bool inf_ = false;
  FieldElem a_;
  FieldPtr field_;
};

// Sparse exact bivariate polynomial in x, y over an effective field.
// No stored coefficient is zero; zero is the empty term map.
class Poly2 {
public:
  Poly2() = default;
  explicit Poly2(FieldPtr f) : f_(std::move(f)) {}

  static Poly2 constant(const FieldElem& c);
  static Poly2 monomial(const FieldElem& c, uint32_t i, uint32_t j);
  static Poly2 x(const FieldPtr& f);
  static Poly2 y(const FieldPtr& f);

  const FieldPtr& field() const { return f_; }
  const std::map<Exp2, FieldElem, GrlexLess>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator-() const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 scaled(const FieldElem& c) const;
  Poly2 pow(uint32_t e) const;
  bool operator==(const Poly2& o) const;
  bool operator!=(const Poly2& o) const { return !(*this == o); }

  // Minimum total degree of a term; the multiplicity at the origin.
  uint32_t ord() const; // ZeroPolynomial on 0
  // Homogeneous part of degree ord().
  Poly2 leading_form() const; // ZeroPolynomial on 0
  uint32_t total_degree() const;
  uint32_t deg_x() const;
  uint32_t deg_y() const;
  FieldElem eval_origin() const;
  FieldElem leading_coeff() const; // wrt grlex(x > y)

  // x^i y^j dividing every term (exponent-wise minimum).
  Exp2 monomial_content() const;
  Poly2 divided_by_monomial(uint32_t i, uint32_t j) const;

  // Raw chart substitutions (no exceptional division):
  Poly2 subst_finite(const FieldElem& a) const; // x -> x, y -> x*(y + a)
  Poly2 subst_infinity() const;                 // x -> x*y, y -> y

  Poly2 embedded(const FieldPtr& bigger) const;
  std::optional<Poly2> divided_exact(const Poly2& d) const;

  // y-degree view: index j holds the coefficient of y^j as an element of k[x].
  std::vector<UPoly> y_coeffs() const;
  static Poly2 from_y_coeffs(const FieldPtr& f, const std::vector<UPoly>& ys);
  // L(1, t) for homogeneous L: coefficient of t^j = coefficient of x^(d-j) y^j.
  UPoly dehomogenized() const;

  std::string str() const;

private:
  void add_term(const Exp2& e, const FieldElem& c);
  FieldPtr f_;
  std::map<Exp2, FieldElem, GrlexLess> t_;
};

struct Transformed {
  uint32_t m = 0; // exceptional multiplicity
  Poly2 strict;
};

// Quadratic-transform substitution at a center, with the exceptional factor
// divided out. Finite(a): f(u, u(v+a)) = u^m * strict; Infinity:
// f(uv, v) = v^m * strict. The result lives over the center's field.
Transformed transform_at_center(const Poly2& f, const Center& c);

// Greatest common divisor in k[x,y], normalized monic with respect to
// grlex(x > y). Computed by content/primitive part over k[x] with a
// primitive pseudo-remainder sequence.
Poly2 gcd2(const Poly2& f, const Poly2& g);

// ------------------------------------------------------------- parsing

// Grammar: expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := base ('^' nonneg-int)?; base := variable | integer | rational
// 'a/b' | '(' expr ')'. Whitespace insignificant; coefficients reduced into
// the field.
Poly2 parse_poly2(const std::string& input, const FieldPtr& field);
// Same grammar with single variable t.
UPoly parse_upoly(const std::string& input, const FieldPtr& field);
// Univariate expression evaluated at the extension generator (t allowed only
// over extension fields).
FieldElem parse_elem(const std::string& input, const FieldPtr& field);

} // namespace adk
