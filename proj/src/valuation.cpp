#include "adk/valuation.hpp"

#include <span>

namespace adk {

const char* position_name(Position p) {
  switch (p) {
    case Position::Zero: return "Zero";
    case Position::Pole: return "Pole";
    case Position::Unit: return "Unit";
    case Position::Undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

uint64_t val_steps(const Poly2& f, std::span<const PathStep> steps) {
  if (steps.empty()) return f.ord();
  const Center& c = steps.front().center;
  Transformed t = transform_at_center(f, c);
  auto rest = steps.subspan(1);
  Poly2 exc = c.at_infinity() ? Poly2::y(c.field()) : Poly2::x(c.field());
  return static_cast<uint64_t>(t.m) * val_steps(exc, rest) + val_steps(t.strict, rest);
}

} // namespace

uint64_t val(const Poly2& f, const PrimeDivisor& V) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "val of the zero polynomial");
  return val_steps(f, std::span<const PathStep>(V.point.steps()));
}

FracVal val_frac(const Poly2& f, const Poly2& g, const PrimeDivisor& V) {
  if (g.is_zero()) fail(Errc::ZeroPolynomial, "val_frac with zero denominator");
  if (f.is_zero()) return {true, 0};
  return {false, static_cast<int64_t>(val(f, V)) - static_cast<int64_t>(val(g, V))};
}

Position position(const Poly2& f, const Poly2& g, const PointPath& point) {
  if (g.is_zero()) fail(Errc::ZeroPolynomial, "position with zero denominator");
  if (f.is_zero()) return Position::Zero;
  Poly2 F = pullback_total(f, point);
  Poly2 G = pullback_total(g, point);
  Poly2 h = gcd2(F, G);
  if (h.total_degree() > 0) {
    F = *F.divided_exact(h);
    G = *G.divided_exact(h);
  }
  bool fz = F.eval_origin().is_zero();
  bool gz = G.eval_origin().is_zero();
  if (fz && gz) return Position::Undetermined;
  if (fz) return Position::Zero;
  if (gz) return Position::Pole;
  return Position::Unit;
}

} // namespace adk
