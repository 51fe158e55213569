#include "adk/adk.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "adk/adomain.hpp"
#include "adk/cb.hpp"

struct adk_field {
  adk::FieldPtr f;
};
struct adk_poly {
  adk::Poly2 p;
};
struct adk_path {
  adk::PointPath p;
};
struct adk_divisor_set {
  adk::DivisorSetPtr s;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_pos = -1;

adk_status status_of(adk::Errc c) {
  using adk::Errc;
  switch (c) {
    case Errc::ZeroPolynomial: return ADK_ERR_ZERO_POLYNOMIAL;
    case Errc::UnitElement: return ADK_ERR_UNIT_ELEMENT;
    case Errc::SyntaxError: return ADK_ERR_SYNTAX;
    case Errc::NonIntegerExponent: return ADK_ERR_NON_INTEGER_EXPONENT;
    case Errc::UnknownVariable: return ADK_ERR_UNKNOWN_VARIABLE;
    case Errc::NotCoprime: return ADK_ERR_NOT_COPRIME;
    case Errc::ReducibleModulus: return ADK_ERR_REDUCIBLE_MODULUS;
    case Errc::ExtensionFactorizationUnsupported:
      return ADK_ERR_EXTENSION_FACTORIZATION_UNSUPPORTED;
    case Errc::MismatchedDivisorSets: return ADK_ERR_MISMATCHED_DIVISOR_SETS;
    case Errc::AllGeneratorsZero: return ADK_ERR_ALL_GENERATORS_ZERO;
    case Errc::LevelExceedsBound: return ADK_ERR_LEVEL_EXCEEDS_BOUND;
    case Errc::InvalidArgument: return ADK_ERR_INVALID_ARGUMENT;
  }
  return ADK_ERR_OTHER;
}

template <typename Fn>
adk_status guarded(Fn&& fn) {
  try {
    fn();
    return ADK_OK;
  } catch (const adk::Error& e) {
    g_last_error = e.what();
    g_last_pos = e.position();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    g_last_pos = -1;
    return ADK_ERR_OTHER;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

adk_status require(bool ok, const char* msg) {
  if (ok) return ADK_OK;
  g_last_error = msg;
  g_last_pos = -1;
  return ADK_ERR_INVALID_ARGUMENT;
}

std::string render_directions(const adk::Directions& d) {
  std::ostringstream os;
  os << "rational: [";
  for (size_t k = 0; k < d.rational.size(); ++k) {
    if (k) os << ", ";
    os << d.rational[k].str();
  }
  os << "]; nonrational: [";
  for (size_t k = 0; k < d.nonrational.size(); ++k) {
    if (k) os << ", ";
    os << d.nonrational[k].str();
  }
  os << "]";
  return os.str();
}

} // namespace

extern "C" {

const char* adk_last_error(void) { return g_last_error.c_str(); }
long adk_last_error_position(void) { return g_last_pos; }

void adk_string_free(char* s) { std::free(s); }

/* ---------------------------------------------------------------- fields */

adk_status adk_field_create(const char* spec, adk_field** out) {
  if (adk_status st = require(spec && out, "null argument")) return st;
  return guarded([&] { *out = new adk_field{adk::Field::parse_spec(spec)}; });
}

adk_status adk_field_extend(const adk_field* base, const char* modulus, adk_field** out) {
  if (adk_status st = require(base && modulus && out, "null argument")) return st;
  return guarded([&] {
    adk::UPoly m = adk::parse_upoly(modulus, base->f);
    *out = new adk_field{adk::Field::extension(base->f, m)};
  });
}

void adk_field_destroy(adk_field* f) { delete f; }

adk_status adk_field_describe(const adk_field* f, char** out) {
  if (adk_status st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(f->f->describe()); });
}

adk_status adk_field_info(const adk_field* f, uint64_t* characteristic,
                          unsigned* absolute_degree, int* modulus_verified) {
  if (adk_status st = require(f != nullptr, "null argument")) return st;
  return guarded([&] {
    if (characteristic) *characteristic = f->f->characteristic();
    if (absolute_degree) *absolute_degree = f->f->absolute_degree();
    if (modulus_verified) *modulus_verified = f->f->modulus_verified() ? 1 : 0;
  });
}

adk_status adk_field_eval(const adk_field* f, const char* expr, char** out) {
  if (adk_status st = require(f && expr && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(adk::parse_elem(expr, f->f).str()); });
}

adk_status adk_factor_univariate(const adk_field* f, const char* poly, char** out) {
  if (adk_status st = require(f && poly && out, "null argument")) return st;
  return guarded([&] {
    adk::UPoly u = adk::parse_upoly(poly, f->f);
    adk::UFactorization fac = adk::factor_univariate(u);
    std::ostringstream os;
    bool first = true;
    if (!fac.unit.is_one() || fac.factors.empty()) {
      os << fac.unit.str();
      first = false;
    }
    for (const auto& uf : fac.factors) {
      if (!first) os << " * ";
      first = false;
      os << "(" << uf.factor.str() << ")";
      if (uf.multiplicity > 1) os << "^" << uf.multiplicity;
    }
    *out = dup_string(os.str());
  });
}

/* ----------------------------------------------------------- polynomials */

adk_status adk_poly_parse(const adk_field* f, const char* text, adk_poly** out) {
  if (adk_status st = require(f && text && out, "null argument")) return st;
  return guarded([&] { *out = new adk_poly{adk::parse_poly2(text, f->f)}; });
}

void adk_poly_destroy(adk_poly* p) { delete p; }

adk_status adk_poly_render(const adk_poly* p, char** out) {
  if (adk_status st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(p->p.str()); });
}

adk_status adk_poly_ord(const adk_poly* p, uint32_t* out) {
  if (adk_status st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = p->p.ord(); });
}

adk_status adk_poly_leading_form(const adk_poly* p, adk_poly** out) {
  if (adk_status st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = new adk_poly{p->p.leading_form()}; });
}

adk_status adk_poly_gcd(const adk_poly* a, const adk_poly* b, adk_poly** out) {
  if (adk_status st = require(a && b && out, "null argument")) return st;
  return guarded([&] { *out = new adk_poly{adk::gcd2(a->p, b->p)}; });
}

adk_status adk_poly_transform(const adk_poly* p, const char* center, uint32_t* m_out,
                              adk_poly** strict_out) {
  if (adk_status st = require(p && center && m_out && strict_out, "null argument")) return st;
  return guarded([&] {
    adk::Center c = std::string(center) == "inf"
                        ? adk::Center::infinity(p->p.field())
                        : adk::Center::finite(adk::parse_elem(center, p->p.field()));
    adk::Transformed t = adk::transform_at_center(p->p, c);
    *m_out = t.m;
    *strict_out = new adk_poly{std::move(t.strict)};
  });
}

adk_status adk_poly_pullback(const adk_poly* p, const adk_path* path, adk_poly** out) {
  if (adk_status st = require(p && path && out, "null argument")) return st;
  return guarded([&] { *out = new adk_poly{adk::pullback_total(p->p, path->p)}; });
}

adk_status adk_poly_strict_transform(const adk_poly* p, const adk_path* path, adk_poly** out) {
  if (adk_status st = require(p && path && out, "null argument")) return st;
  return guarded([&] { *out = new adk_poly{adk::strict_transform_along(p->p, path->p)}; });
}

/* ----------------------------------------------------------------- paths */

adk_status adk_path_parse(const adk_field* f, const char* text, adk_path** out) {
  if (adk_status st = require(f && text && out, "null argument")) return st;
  return guarded([&] { *out = new adk_path{adk::PointPath::parse(text, f->f)}; });
}

void adk_path_destroy(adk_path* p) { delete p; }

adk_status adk_path_render(const adk_path* p, char** out) {
  if (adk_status st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(p->p.str()); });
}

adk_status adk_path_depth(const adk_path* p, uint32_t* out) {
  if (adk_status st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = static_cast<uint32_t>(p->p.depth()); });
}

adk_status adk_monomial_path(const adk_field* f, unsigned a, unsigned b, adk_path** out) {
  if (adk_status st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = new adk_path{adk::monomial_path(a, b, f->f)}; });
}

adk_status adk_tangent_directions(const adk_poly* p, char** out) {
  if (adk_status st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(render_directions(adk::tangent_directions(p->p))); });
}

adk_status adk_children_on_strict(const adk_poly* p, const adk_path* path, char** out) {
  if (adk_status st = require(p && path && out, "null argument")) return st;
  return guarded([&] {
    adk::StrictChildren ch = adk::children_on_strict(p->p, path->p);
    *out = dup_string(render_directions(ch.dirs) +
                      "; generic_m: " + std::to_string(ch.generic_m));
  });
}

/* ------------------------------------------------------------- valuation */

adk_status adk_val(const adk_poly* f, const adk_path* divisor, uint64_t* out) {
  if (adk_status st = require(f && divisor && out, "null argument")) return st;
  return guarded([&] { *out = adk::val(f->p, adk::PrimeDivisor(divisor->p)); });
}

adk_status adk_val_frac(const adk_poly* f, const adk_poly* g, const adk_path* divisor,
                        int64_t* value, int* is_infinite) {
  if (adk_status st = require(f && g && divisor && value && is_infinite, "null argument"))
    return st;
  return guarded([&] {
    adk::FracVal v = adk::val_frac(f->p, g->p, adk::PrimeDivisor(divisor->p));
    *value = v.value;
    *is_infinite = v.infinite ? 1 : 0;
  });
}

adk_status adk_position(const adk_poly* f, const adk_poly* g, const adk_path* point,
                        char** out) {
  if (adk_status st = require(f && g && point && out, "null argument")) return st;
  return guarded(
      [&] { *out = dup_string(adk::position_name(adk::position(f->p, g->p, point->p))); });
}

/* ----------------------------------------------- bounded-level membership */

adk_status adk_member_bounded(const adk_poly* f, const adk_poly* g, unsigned level,
                              int* verdict, char** witness_path, int64_t* witness_delta) {
  if (adk_status st = require(f && g && verdict, "null argument")) return st;
  return guarded([&] {
    adk::MemberVerdict v = adk::member_bounded(f->p, g->p, level);
    *verdict = v.member ? 1 : 0;
    if (witness_path) *witness_path = v.witness ? dup_string(v.witness->str()) : nullptr;
    if (witness_delta) *witness_delta = v.witness_delta;
  });
}

adk_status adk_value_profile(const adk_poly* f, const adk_poly* g, unsigned level,
                             char** json_out) {
  if (adk_status st = require(f && g && json_out, "null argument")) return st;
  return guarded([&] { *json_out = dup_string(adk::value_profile(f->p, g->p, level).to_json()); });
}

adk_status adk_classify_max_ideal(const adk_path* divisor, unsigned level,
                                  int* finitely_generated) {
  if (adk_status st = require(divisor && finitely_generated, "null argument")) return st;
  return guarded([&] {
    *finitely_generated =
        adk::classify_max_ideal(adk::PrimeDivisor(divisor->p), level) ==
                adk::MaxIdealClass::FinitelyGenerated
            ? 1
            : 0;
  });
}

adk_status adk_jacobson_witness(const adk_poly* f, unsigned level, int* out) {
  if (adk_status st = require(f && out, "null argument")) return st;
  return guarded([&] { *out = adk::jacobson_witness(f->p, level) ? 1 : 0; });
}

/* -------------------------------------------- ideals over finite div sets */

adk_status adk_divisor_set_create(adk_path* const* paths, size_t n, adk_divisor_set** out) {
  if (adk_status st = require(paths && out, "null argument")) return st;
  return guarded([&] {
    std::vector<adk::PrimeDivisor> divs;
    divs.reserve(n);
    for (size_t k = 0; k < n; ++k) divs.emplace_back(paths[k]->p);
    *out = new adk_divisor_set{std::make_shared<adk::FiniteDivisorSet>(std::move(divs))};
  });
}

void adk_divisor_set_destroy(adk_divisor_set* s) { delete s; }

adk_status adk_divisor_set_size(const adk_divisor_set* s, size_t* out) {
  if (adk_status st = require(s && out, "null argument")) return st;
  *out = s->s->size();
  return ADK_OK;
}

adk_status adk_divisor_set_render(const adk_divisor_set* s, size_t index, char** out) {
  if (adk_status st = require(s && out, "null argument")) return st;
  if (adk_status st = require(index < s->s->size(), "divisor index out of range")) return st;
  return guarded([&] { *out = dup_string(s->s->divisors()[index].str()); });
}

adk_status adk_ideal_values(const adk_divisor_set* s, adk_poly* const* gens, size_t n,
                            uint64_t* entries_out) {
  if (adk_status st = require(s && gens && entries_out, "null argument")) return st;
  return guarded([&] {
    std::vector<adk::Poly2> ps;
    ps.reserve(n);
    for (size_t k = 0; k < n; ++k) ps.push_back(gens[k]->p);
    adk::ValueVector v = adk::ideal_values(ps, s->s);
    for (size_t k = 0; k < v.entries().size(); ++k) entries_out[k] = v.entries()[k];
  });
}

adk_status adk_ideal_op(const adk_divisor_set* s, int op, const uint64_t* a,
                        const uint64_t* b, uint64_t* out) {
  if (adk_status st = require(s && a && b && out, "null argument")) return st;
  return guarded([&] {
    size_t n = s->s->size();
    adk::ValueVector va(s->s, std::vector<uint64_t>(a, a + n));
    adk::ValueVector vb(s->s, std::vector<uint64_t>(b, b + n));
    adk::ValueVector r = op == 0   ? adk::ideal_intersect(va, vb)
                         : op == 1 ? adk::ideal_product(va, vb)
                         : op == 2 ? adk::ideal_sum(va, vb)
                                   : throw adk::Error(adk::Errc::InvalidArgument,
                                                      "ideal op must be 0, 1, or 2");
    for (size_t k = 0; k < n; ++k) out[k] = r.entries()[k];
  });
}

adk_status adk_ideal_contains(const adk_divisor_set* s, const uint64_t* entries,
                              const adk_poly* f, int* out) {
  if (adk_status st = require(s && entries && f && out, "null argument")) return st;
  return guarded([&] {
    adk::ValueVector v(s->s, std::vector<uint64_t>(entries, entries + s->s->size()));
    *out = adk::ideal_contains(v, f->p) ? 1 : 0;
  });
}

adk_status adk_ideal_decompose(const adk_divisor_set* s, const uint64_t* entries,
                               size_t* count_out, size_t* indices_out, uint64_t* exps_out) {
  if (adk_status st = require(s && entries && count_out && indices_out && exps_out,
                              "null argument"))
    return st;
  return guarded([&] {
    adk::ValueVector v(s->s, std::vector<uint64_t>(entries, entries + s->s->size()));
    auto dec = adk::decompose(v);
    *count_out = dec.size();
    for (size_t k = 0; k < dec.size(); ++k) {
      indices_out[k] = *s->s->index_of(dec[k].first);
      exps_out[k] = dec[k].second;
    }
  });
}

/* -------------------------------------------------- Cantor-Bendixson sets */

adk_status adk_cb_derivative(const char* expr, char** out) {
  if (adk_status st = require(expr && out, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(adk::cb::derivative(adk::cb::TreeSetExpr::parse(expr)).str());
  });
}

adk_status adk_cb_rank(const char* expr, unsigned* rank_out, char** chain_out) {
  if (adk_status st = require(expr && rank_out, "null argument")) return st;
  return guarded([&] {
    adk::cb::CBReport r = adk::cb::cb_rank(adk::cb::TreeSetExpr::parse(expr));
    *rank_out = r.rank;
    if (chain_out) {
      std::ostringstream os;
      for (size_t k = 0; k < r.chain.size(); ++k) {
        if (k) os << "\n";
        os << "X^" << k << " = " << r.chain[k].str();
      }
      *chain_out = dup_string(os.str());
    }
  });
}

adk_status adk_cb_isolated(const char* expr, char** out) {
  if (adk_status st = require(expr && out, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(adk::cb::isolated_points(adk::cb::TreeSetExpr::parse(expr)).str());
  });
}

adk_status adk_cb_limits_are_divisors(const char* expr, int* out) {
  if (adk_status st = require(expr && out, "null argument")) return st;
  return guarded([&] {
    *out = adk::cb::limits_are_divisors(adk::cb::TreeSetExpr::parse(expr)) ? 1 : 0;
  });
}

adk_status adk_cb_is_limit_of_branch(const char* prefix, const char* period, const char* expr,
                                     int* out) {
  if (adk_status st = require(prefix && period && expr && out, "null argument")) return st;
  return guarded([&] {
    *out = adk::cb::is_limit_of_branch(adk::cb::parse_node(prefix), adk::cb::parse_node(period),
                                       adk::cb::TreeSetExpr::parse(expr))
               ? 1
               : 0;
  });
}

} // extern "C"
