#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "adk/field.hpp"

namespace adk {

// Dense univariate polynomial over an effective field. The coefficient
// vector is low degree first with a nonzero top coefficient; zero is the
// empty vector.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(FieldPtr f) : f_(std::move(f)) {}
  UPoly(FieldPtr f, std::vector<FieldElem> coeffs);

  static UPoly var(const FieldPtr& f);                    // t
  static UPoly constant(const FieldElem& c);
  static UPoly monomial(const FieldPtr& f, const FieldElem& c, size_t k);

  const FieldPtr& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  FieldElem coeff(size_t k) const;
  const std::vector<FieldElem>& coeffs() const { return c_; }
  FieldElem lc() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const FieldElem& c) const;
  UPoly shifted(size_t k) const; // * t^k

  // Euclidean division; divisor nonzero.
  std::pair<UPoly, UPoly> divrem(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divrem(d).second; }
  UPoly operator/(const UPoly& d) const { return divrem(d).first; }

  UPoly monic() const;
  UPoly derivative() const;
  FieldElem eval(const FieldElem& x) const;
  UPoly pow_mod(const mpz_class& e, const UPoly& mod) const;
  UPoly pow(unsigned e) const;

  // Monic gcd (zero if both zero).
  static UPoly gcd(UPoly a, UPoly b);
  // g = gcd (monic), plus s, t with s*a + t*b = g.
  static std::tuple<UPoly, UPoly, UPoly> xgcd(const UPoly& a, const UPoly& b);

  // Coefficients embedded into an extension (or identical) field.
  UPoly embedded(const FieldPtr& bigger) const;

  bool operator==(const UPoly& o) const;
  bool operator!=(const UPoly& o) const { return !(*this == o); }
  // Deterministic order: by degree, then coefficients from the top.
  static int cmp(const UPoly& a, const UPoly& b);

  std::string str(const std::string& var = "t") const;
  // No spaces; used in field spec strings and JSON.
  std::string str_compact(const std::string& var = "t") const;

private:
  void trim();
  FieldPtr f_;
  std::vector<FieldElem> c_;
};

struct UFactor {
  UPoly factor; // monic irreducible
  unsigned multiplicity = 1;
};

struct UFactorization {
  FieldElem unit;               // leading unit; product of factors^mult * unit == input
  std::vector<UFactor> factors; // canonically sorted, pairwise distinct
};

// Factor a nonzero univariate polynomial into monic irreducibles.
// Support matrix: Q (rational roots, degree <= 3 certification, Eisenstein,
// Zassenhaus fallback), F_p and towers over F_p (Cantor-Zassenhaus).
// Extensions of Q raise ExtensionFactorizationUnsupported.
UFactorization factor_univariate(const UPoly& f);

// Roots of f lying in its coefficient field, each with multiplicity,
// sorted canonically. Requires factorization support.
std::vector<std::pair<FieldElem, unsigned>> roots_in_field(const UPoly& f);

bool is_irreducible(const UPoly& f);

} // namespace adk
