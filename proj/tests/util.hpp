#pragma once

// Shared test helpers: deterministic random generators and independent
// oracles. The oracles here deliberately avoid the production code paths
// they are used to check: values come from ord of total pullbacks, and the
// membership oracle enumerates the full fiber over a finite field.

#include <random>
#include <vector>

#include "adk/adomain.hpp"

namespace testutil {

using namespace adk;

inline FieldElem random_elem(const FieldPtr& f, std::mt19937_64& rng) {
  switch (f->kind()) {
    case Field::Kind::Prime:
      return f->from_residue(rng() % f->p());
    case Field::Kind::Rational: {
      long num = static_cast<long>(rng() % 21) - 10;
      long den = 1 + static_cast<long>(rng() % 6);
      mpq_class q(num, den);
      q.canonicalize();
      return f->from_mpq(q);
    }
    case Field::Kind::Extension: {
      std::vector<FieldElem> c;
      for (unsigned k = 0; k < f->degree(); ++k) c.push_back(random_elem(f->base(), rng));
      return f->from_coeffs(std::move(c));
    }
  }
  return f->zero();
}

inline Poly2 random_poly(const FieldPtr& f, std::mt19937_64& rng, unsigned maxdeg,
                         unsigned nterms) {
  Poly2 p(f);
  for (unsigned k = 0; k < nterms; ++k) {
    uint32_t i = rng() % (maxdeg + 1);
    uint32_t j = rng() % (maxdeg + 1 - i);
    p = p + Poly2::monomial(random_elem(f, rng), i, j);
  }
  return p;
}

inline Poly2 random_nonzero_poly(const FieldPtr& f, std::mt19937_64& rng, unsigned maxdeg,
                                 unsigned nterms) {
  for (;;) {
    Poly2 p = random_poly(f, rng, maxdeg, nterms);
    if (!p.is_zero()) return p;
  }
}

// Random path with small rational centers (and optional Infinity steps).
inline PointPath random_path(const FieldPtr& f, std::mt19937_64& rng, unsigned maxdepth) {
  PointPath p(f);
  unsigned depth = rng() % (maxdepth + 1);
  for (unsigned k = 0; k < depth; ++k) {
    if (rng() % 4 == 0)
      p = p.child(Center::infinity(f));
    else
      p = p.child(Center::finite(f->from_int(static_cast<long>(rng() % 3))));
  }
  return p;
}

// All paths with rational centers over a finite field, up to given depth.
inline std::vector<PointPath> enumerate_rational_paths(const FieldPtr& f, unsigned maxdepth) {
  std::vector<PointPath> out{PointPath(f)};
  size_t frontier_begin = 0;
  for (unsigned depth = 0; depth < maxdepth; ++depth) {
    size_t frontier_end = out.size();
    for (size_t k = frontier_begin; k < frontier_end; ++k) {
      PointPath base = out[k];
      for (const FieldElem& a : f->all_elements()) out.push_back(base.child(Center::finite(a)));
      out.push_back(base.child(Center::infinity(f)));
    }
    frontier_begin = frontier_end;
  }
  return out;
}

// Independent valuation oracle: the order of the total pullback.
inline uint64_t val_oracle(const Poly2& f, const PointPath& path) {
  return pullback_total(f, path).ord();
}

// Brute-force membership oracle over a finite base field: enumerate every
// rational center of every residue field along the way plus all conjugate
// roots of the extension directions forced by the strict locus of f*g, and
// compare total-pullback orders. Any divisor not enumerated sits below an
// enumerated ancestor with the same delta sign.
inline bool member_oracle(const Poly2& f, const Poly2& g, unsigned d) {
  std::vector<PointPath> frontier{PointPath(f.field())};
  Poly2 prod = f * g;
  for (unsigned depth = 0;; ++depth) {
    std::vector<PointPath> next;
    for (const PointPath& p : frontier) {
      int64_t delta = static_cast<int64_t>(val_oracle(f, p)) -
                      static_cast<int64_t>(val_oracle(g, p));
      if (delta < 0) return false;
      if (depth + 1 >= d) continue;
      const FieldPtr& k = p.field_at_end();
      for (const FieldElem& a : k->all_elements()) next.push_back(p.child(Center::finite(a)));
      next.push_back(p.child(Center::infinity(k)));
      // extension directions forced by the strict locus
      Poly2 s = strict_transform_along(prod, p);
      if (s.ord() >= 1) {
        for (const UPoly& q : tangent_directions(s).nonrational) {
          FieldPtr ext = Field::extension(k, q);
          for (const auto& [root, mult] : roots_in_field(q.embedded(ext)))
            next.push_back(p.child(Center::finite(root)));
        }
      }
    }
    if (next.empty()) return true;
    frontier = std::move(next);
  }
}

// Reverse a blowup step: the polynomial at the parent whose transform at the
// step's center has the given strict part.
inline Poly2 unblow_step(const Poly2& g, const Center& c) {
  const FieldPtr& f = g.field();
  Poly2 out(f);
  if (c.at_infinity()) {
    // u = x/y, v = y: u^i v^j -> x^i y^(j + degu - i)
    uint32_t degu = g.deg_x();
    for (const auto& [e, coef] : g.terms())
      out = out + Poly2::monomial(coef, e.i, e.j + degu - e.i);
  } else {
    // u = x, v = y/x - a: u^i v^j -> x^(i + degv - j) (y - a x)^j
    uint32_t degv = g.deg_y();
    Poly2 line = Poly2::y(f) - Poly2::x(f).scaled(c.value());
    for (const auto& [e, coef] : g.terms())
      out = out + Poly2::monomial(coef, e.i + degv - e.j, 0) * line.pow(e.j);
  }
  return out;
}

// A curve with maximal contact along the path: a generic smooth germ at the
// path's point pulled back to the root chart. Rational-center paths only.
inline Poly2 curvette(const PointPath& path) {
  const FieldPtr& f = path.field_at_end();
  Poly2 g = Poly2::y(f) - Poly2::x(f); // smooth germ through the point
  for (size_t k = path.steps().size(); k-- > 0;) g = unblow_step(g, path.steps()[k].center);
  return g;
}

} // namespace testutil
