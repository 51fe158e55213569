#pragma once

#include <memory>
#include <optional>

#include "adk/valuation.hpp"

namespace adk {

// A nonempty finite set of pairwise distinct prime divisors; A(X) is then a
// semilocal PID and ideals are value vectors. Divisors are kept in canonical
// path order.
class FiniteDivisorSet {
public:
  explicit FiniteDivisorSet(std::vector<PrimeDivisor> divisors);
  const std::vector<PrimeDivisor>& divisors() const { return divisors_; }
  size_t size() const { return divisors_.size(); }
  std::optional<size_t> index_of(const PrimeDivisor& v) const;
  bool operator==(const FiniteDivisorSet& o) const;

private:
  std::vector<PrimeDivisor> divisors_;
};

using DivisorSetPtr = std::shared_ptr<const FiniteDivisorSet>;

// A nonzero ideal of A(X): the set of elements with val(-, V) >= entry(V)
// for every V in X. The all-zeros vector is the unit ideal.
class ValueVector {
public:
  ValueVector(DivisorSetPtr set, std::vector<uint64_t> entries);
  const FiniteDivisorSet& divisor_set() const { return *set_; }
  const DivisorSetPtr& set() const { return set_; }
  const std::vector<uint64_t>& entries() const { return entries_; }
  bool operator==(const ValueVector& o) const;

private:
  DivisorSetPtr set_;
  std::vector<uint64_t> entries_;
};

// Ideal generated by the nonzero generators: componentwise minimum of the
// generator values.
ValueVector ideal_values(const std::vector<Poly2>& generators, const DivisorSetPtr& X);

ValueVector ideal_intersect(const ValueVector& a, const ValueVector& b); // max
ValueVector ideal_product(const ValueVector& a, const ValueVector& b);   // sum
ValueVector ideal_sum(const ValueVector& a, const ValueVector& b);       // min
bool ideal_contains(const ValueVector& a, const Poly2& f);

// The unique irredundant representation as an intersection of powers of
// maximal ideals: the positive entries. Empty for the unit ideal.
std::vector<std::pair<PrimeDivisor, uint64_t>> decompose(const ValueVector& a);

// ---------------------------------------------------- bounded-level search

struct MemberVerdict {
  bool member = true;
  std::optional<PointPath> witness; // first failing divisor path, lex order
  int64_t witness_delta = 0;
};

// Does f/g lie in A(Div_d), i.e. val(f, V) >= val(g, V) for every prime
// divisor V of level <= d? Throws ExtensionFactorizationUnsupported when the
// verdict would depend on directions that cannot be entered.
MemberVerdict member_bounded(const Poly2& f, const Poly2& g, unsigned d);

struct ProfileEntry {
  PointPath path;
  int64_t delta; // val(f) - val(g) at the path's divisor
};
struct GenericBucket {
  PointPath path;
  int sign; // delta at every divisor below an unvisited child is sign * nu, nu >= 1
};
struct UnresolvedDir {
  PointPath path;
  UPoly factor; // the polynomial whose roots are the unreachable directions
};

// Finite description of val(f) - val(g) over all of Div_d: explicit deltas
// at the visited nodes, a generic bucket per interior visited node covering
// all unvisited children, and markers for unreachable directions.
struct ValueProfile {
  unsigned level = 1;
  std::vector<ProfileEntry> visited;
  std::vector<GenericBucket> generic;
  std::vector<UnresolvedDir> unresolved;

  std::string to_json() const;
  static ValueProfile from_json(const std::string& text, const FieldPtr& base);
};

ValueProfile value_profile(const Poly2& f, const Poly2& g, unsigned d);

enum class MaxIdealClass { FinitelyGenerated, NotFinitelyGenerated };

// The maximal ideal of A(Div_d) at V is finitely generated iff V is patch
// isolated in Div_d, i.e. iff level(V) = d.
MaxIdealClass classify_max_ideal(const PrimeDivisor& V, unsigned d);

// Certifies val(f, V) >= 1 for every divisor of level <= d (f in the maximal
// ideal), witnessing that the Jacobson radical of A(Div_d) is nonzero.
bool jacobson_witness(const Poly2& f, unsigned d);

} // namespace adk
