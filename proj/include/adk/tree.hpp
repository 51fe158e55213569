#pragma once

#include "adk/poly2.hpp"

namespace adk {

// One blowup step: the chosen center together with the residue field in
// effect at it. The field changes exactly at steps that enter a nonrational
// direction (an extension of the previous field).
struct PathStep {
  Center center;
  FieldPtr field;
};

// A point of the quadratic tree as its unique chain of blowup centers; the
// root (empty path) is the closed point of the base ring. Distinct paths
// denote distinct points.
class PointPath {
public:
  PointPath() = default;
  explicit PointPath(FieldPtr base) : base_(std::move(base)) {}

  const FieldPtr& base_field() const { return base_; }
  const std::vector<PathStep>& steps() const { return steps_; }
  size_t depth() const { return steps_.size(); }
  const FieldPtr& field_at_end() const { return steps_.empty() ? base_ : steps_.back().field; }

  // Path extended by one center; the center's field must be the current
  // field or an extension of it by one step.
  PointPath child(const Center& c) const;
  PointPath parent() const;
  bool is_prefix_of(const PointPath& o) const;

  bool operator==(const PointPath& o) const;
  bool operator!=(const PointPath& o) const { return !(*this == o); }
  // Deterministic order: lexicographic, Finite(a) before Infinity, finite
  // centers in canonical element order; a prefix precedes its extensions.
  static int cmp(const PointPath& a, const PointPath& b);

  // "[0, inf, 1/2]"; extension-entering steps render as "root(<modulus>)#k".
  std::string str() const;
  // The rendered step labels, one per step; the symbolic-set calculus keys
  // tree nodes by these.
  std::vector<std::string> step_labels() const;
  static PointPath parse(const std::string& text, const FieldPtr& base);

private:
  FieldPtr base_;
  std::vector<PathStep> steps_;
};

// The prime divisor attached to a point: the order valuation of that point's
// local ring. Level d corresponds to a point of depth d - 1; the level-1
// divisor is ord at the root.
struct PrimeDivisor {
  PointPath point;

  PrimeDivisor() = default;
  explicit PrimeDivisor(PointPath p) : point(std::move(p)) {}
  unsigned level() const { return static_cast<unsigned>(point.depth()) + 1; }
  bool operator==(const PrimeDivisor& o) const { return point == o.point; }
  std::string str() const { return point.str(); }
};

// Tangent directions of the vanishing locus of f at the origin: Finite(a)
// for each root a of L(1,t) with L the leading form, Infinity when the
// y^ord(f) coefficient of L vanishes, and the irreducible factors of degree
// >= 2 of L(1,t) as directions requiring a field extension.
struct Directions {
  std::vector<Center> rational;   // sorted, Infinity last when present
  std::vector<UPoly> nonrational; // monic irreducible, degree >= 2, sorted
};

Directions tangent_directions(const Poly2& f);

// The unique divisor with val(x) = a, val(y) = b for coprime a, b, built by
// Euclidean descent: b > a appends Finite(0), a > b appends Infinity.
PointPath monomial_path(unsigned a, unsigned b, const FieldPtr& field);

struct StrictChildren {
  Directions dirs;
  uint32_t generic_m = 0; // ord of the strict transform at the parent point
};

// Children of the path's point through which the strict transform of f
// passes; empty with generic_m = 0 when the strict transform is a unit.
StrictChildren children_on_strict(const Poly2& f, const PointPath& path);

// Strict transform of f along the whole path (exceptional factors removed
// at each step).
Poly2 strict_transform_along(const Poly2& f, const PointPath& path);

// Total pullback: composition of the chart substitutions along the path
// with no exceptional division. ord(pullback_total(f, path)) equals the
// valuation of f at the path's divisor; this is the oracle identity.
Poly2 pullback_total(const Poly2& f, const PointPath& path);

} // namespace adk
