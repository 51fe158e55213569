#pragma once

#include "adk/tree.hpp"

namespace adk {

// Position of a rational function f/g at a point of the quadratic tree.
enum class Position { Zero, Pole, Unit, Undetermined };

const char* position_name(Position p);

// The divisorial valuation of f at V: the order of the image of f in the
// DVR at the end of V's normal sequence (value group Z, so the result is a
// nonnegative integer for polynomial f). Computed by the chart recursion
//   val(f, []) = ord(f)
//   val(f, c::rest) = ord(f) * val(exceptional coordinate, rest)
//                   + val(strict transform, rest);
// it agrees with ord(pullback_total(f, V.point)).
uint64_t val(const Poly2& f, const PrimeDivisor& V);

// Value of a quotient: val(f, V) - val(g, V); f == 0 yields the
// distinguished +infinity.
struct FracVal {
  bool infinite = false;
  int64_t value = 0;
};

FracVal val_frac(const Poly2& f, const Poly2& g, const PrimeDivisor& V);

// Zero / Pole / Unit / Undetermined of f/g at a tree point: cancel the gcd
// of the total pullbacks and read off the origin values. position(0, g, -)
// is Zero by convention.
Position position(const Poly2& f, const Poly2& g, const PointPath& point);

} // namespace adk
