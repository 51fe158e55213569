#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "adk/error.hpp"

namespace adk {

class Field;
class UPoly;
using FieldPtr = std::shared_ptr<const Field>;

// An element of an effective field, always held in canonical form:
// rationals in lowest terms with positive denominator, prime-field residues
// in [0, p), extension elements as reduced coefficient vectors over the base
// (dense, low degree first, trailing zeros trimmed).
class FieldElem {
public:
  FieldElem() = default; // detached; only assignment is valid

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(long e) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // Total order on canonical forms of elements of one field; used wherever a
  // deterministic ordering is required (tangent directions, root indices).
  static int cmp(const FieldElem& a, const FieldElem& b);

  std::string str() const;

  // Representation accessors (valid only for the matching field kind).
  const mpq_class& rat() const { return rat_; }
  uint64_t residue() const { return res_; }
  const std::vector<FieldElem>& ext_coeffs() const { return ext_; }

private:
  friend class Field;
  FieldPtr field_;
  mpq_class rat_;
  uint64_t res_ = 0;
  std::vector<FieldElem> ext_; // coefficients over base(), trimmed
};

// An effective coefficient field: Q, F_p, or a simple extension base[t]/(g).
// Immutable; equality is structural (same_field).
class Field : public std::enable_shared_from_this<Field> {
public:
  enum class Kind { Rational, Prime, Extension };

  static FieldPtr rationals();
  static FieldPtr prime(uint64_t p);
  // base[t]/(modulus), modulus monic of degree >= 2 over base. Irreducibility
  // is verified when the base supports factorization; over extensions of Q it
  // is taken as asserted by the caller and the field is flagged unverified.
  static FieldPtr extension(const FieldPtr& base, const UPoly& modulus);

  Kind kind() const { return kind_; }
  uint64_t characteristic() const { return char_; }
  bool is_finite() const { return char_ != 0; }
  // Number of elements; finite fields only.
  mpz_class size() const;
  // Degree over the base field (1 unless Extension).
  unsigned degree() const { return deg_; }
  // Degree over the prime subfield (finite) resp. over Q (char 0).
  unsigned absolute_degree() const { return abs_deg_; }
  const FieldPtr& base() const { return base_; }
  const UPoly& modulus() const;
  bool modulus_verified() const { return verified_; }

  // Full univariate factorization support: Q, F_p, and towers over F_p.
  bool supports_factorization() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long n) const;
  FieldElem from_mpz(const mpz_class& n) const;
  FieldElem from_mpq(const mpq_class& q) const; // char p: denominator inverted
  // The class of t in an extension.
  FieldElem generator() const;
  // Extension element from coefficients over base (low degree first).
  FieldElem from_coeffs(std::vector<FieldElem> coeffs) const;
  uint64_t p() const { return p_; }
  FieldElem from_residue(uint64_t r) const;

  // Map an element of this field or of any field on the base chain up into
  // this field. Fails for unrelated fields.
  FieldElem embed(const FieldElem& x) const;
  bool has_subfield(const Field& sub) const;

  // All elements of a finite field, in canonical order.
  std::vector<FieldElem> all_elements() const;

  // Field selection string: "q", "fp:<p>", "ext:<base>:<modulus>".
  std::string describe() const;
  static FieldPtr parse_spec(const std::string& spec); // in parse.cpp

  bool same(const Field& o) const;

private:
  Field() = default;
  Kind kind_ = Kind::Rational;
  uint64_t p_ = 0;    // Prime kind
  uint64_t char_ = 0; // characteristic
  unsigned deg_ = 1;
  unsigned abs_deg_ = 1;
  FieldPtr base_;
  std::shared_ptr<const UPoly> modulus_;
  bool verified_ = true;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && a->same(*b));
}

// Throws InvalidArgument unless both elements live in the same field.
void require_same_field(const FieldElem& a, const FieldElem& b);

} // namespace adk
