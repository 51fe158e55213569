// adk: command-line front end for the divisorial-valuation library.
// Links only the C API. Output is byte-deterministic given the inputs.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adk/adk.h"

namespace {

// Domain errors exit 1, malformed inputs exit 2.
int exit_code_for(adk_status st) {
  switch (st) {
    case ADK_OK: return 0;
    case ADK_ERR_SYNTAX:
    case ADK_ERR_NON_INTEGER_EXPONENT:
    case ADK_ERR_UNKNOWN_VARIABLE:
    case ADK_ERR_INVALID_ARGUMENT: return 2;
    default: return 1;
  }
}

[[noreturn]] void die(adk_status st) {
  std::cerr << "error: " << adk_last_error();
  if (adk_last_error_position() >= 0)
    std::cerr << " (at position " << adk_last_error_position() << ")";
  std::cerr << "\n";
  std::exit(exit_code_for(st));
}

void check(adk_status st) {
  if (st != ADK_OK) die(st);
}

struct StringOut {
  char* s = nullptr;
  StringOut() = default;
  StringOut(StringOut&& o) noexcept : s(o.s) { o.s = nullptr; }
  StringOut& operator=(StringOut&& o) noexcept {
    std::swap(s, o.s);
    return *this;
  }
  StringOut(const StringOut&) = delete;
  ~StringOut() { adk_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Field {
  adk_field* f = nullptr;
  Field() = default;
  Field(Field&& o) noexcept : f(o.f) { o.f = nullptr; }
  Field& operator=(Field&& o) noexcept {
    std::swap(f, o.f);
    return *this;
  }
  Field(const Field&) = delete;
  ~Field() { adk_field_destroy(f); }
};

struct Poly {
  adk_poly* p = nullptr;
  Poly() = default;
  Poly(Poly&& o) noexcept : p(o.p) { o.p = nullptr; }
  Poly& operator=(Poly&& o) noexcept {
    std::swap(p, o.p);
    return *this;
  }
  Poly(const Poly&) = delete;
  ~Poly() { adk_poly_destroy(p); }
};

struct Path {
  adk_path* p = nullptr;
  Path() = default;
  Path(Path&& o) noexcept : p(o.p) { o.p = nullptr; }
  Path& operator=(Path&& o) noexcept {
    std::swap(p, o.p);
    return *this;
  }
  Path(const Path&) = delete;
  ~Path() { adk_path_destroy(p); }
};

struct Options {
  std::string field_spec = "q";
  bool json = false;
};

Field make_field(const Options& o) {
  Field f;
  check(adk_field_create(o.field_spec.c_str(), &f.f));
  return f;
}

Poly make_poly(const Field& f, const std::string& text) {
  Poly p;
  check(adk_poly_parse(f.f, text.c_str(), &p.p));
  return p;
}

Path make_path(const Field& f, const std::string& text) {
  Path p;
  check(adk_path_parse(f.f, text.c_str(), &p.p));
  return p;
}

void emit(const Options& o, const std::string& text, const nlohmann::json& j) {
  if (o.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

// divisor set shared by the ideal subcommands
struct DivSet {
  std::vector<std::unique_ptr<Path>> paths;
  adk_divisor_set* set = nullptr;
  ~DivSet() { adk_divisor_set_destroy(set); }

  void build(const Field& f, const std::vector<std::string>& divisor_texts) {
    std::vector<adk_path*> raw;
    for (const auto& t : divisor_texts) {
      auto p = std::make_unique<Path>();
      check(adk_path_parse(f.f, t.c_str(), &p->p));
      raw.push_back(p->p);
      paths.push_back(std::move(p));
    }
    check(adk_divisor_set_create(raw.data(), raw.size(), &set));
  }

  size_t size() const {
    size_t n = 0;
    check(adk_divisor_set_size(set, &n));
    return n;
  }

  std::string name(size_t k) const {
    StringOut s;
    check(adk_divisor_set_render(set, k, &s.s));
    return s.str();
  }
};

std::vector<uint64_t> parse_vec(const std::string& text, size_t n) {
  std::vector<uint64_t> v;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.find_first_not_of("0123456789 ") != std::string::npos || cur.empty()) {
        std::cerr << "error: value vectors are comma-separated nonnegative integers\n";
        std::exit(2);
      }
      v.push_back(std::stoull(cur));
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (v.size() != n) {
    std::cerr << "error: value vector needs " << n << " entries\n";
    std::exit(2);
  }
  return v;
}

std::string render_vec(const DivSet& ds, const std::vector<uint64_t>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += ds.name(k) + " -> " + std::to_string(v[k]);
  }
  return "(" + s + ")";
}

nlohmann::json json_vec(const DivSet& ds, const std::vector<uint64_t>& v) {
  nlohmann::json j;
  j["divisors"] = nlohmann::json::array();
  j["values"] = nlohmann::json::array();
  for (size_t k = 0; k < v.size(); ++k) {
    j["divisors"].push_back(ds.name(k));
    j["values"].push_back(v[k]);
  }
  return j;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact divisorial valuations on the quadratic tree over a "
               "two-dimensional regular local ring"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand name
  Options opt;
  const char* env_field = std::getenv("ADK_FIELD");
  if (env_field && *env_field) opt.field_spec = env_field;
  app.add_option("--field", opt.field_spec, "coefficient field: q, fp:<p>, ext:<base>:<modulus>")
      ->capture_default_str();
  app.add_flag("--json", opt.json, "JSON output");

  // ------------------------------------------------------------- field
  auto* cmd_field = app.add_subcommand("field", "field inspection");
  cmd_field->require_subcommand(1);
  cmd_field->add_subcommand("info", "describe the active field")->callback([&] {
    Field f = make_field(opt);
    StringOut desc;
    check(adk_field_describe(f.f, &desc.s));
    uint64_t ch = 0;
    unsigned deg = 0;
    int verified = 0;
    check(adk_field_info(f.f, &ch, &deg, &verified));
    nlohmann::json j{{"field", desc.str()},
                     {"characteristic", ch},
                     {"absolute_degree", deg},
                     {"modulus_verified", verified != 0}};
    emit(opt, desc.str() + " (characteristic " + std::to_string(ch) + ", degree " +
                  std::to_string(deg) + (verified ? "" : ", modulus asserted irreducible") + ")",
         j);
  });
  {
    auto* ev = cmd_field->add_subcommand("eval", "evaluate an expression in t");
    auto expr = std::make_shared<std::string>();
    ev->add_option("expr", *expr, "univariate expression")->required();
    ev->callback([&opt, expr] {
      Field f = make_field(opt);
      StringOut s;
      check(adk_field_eval(f.f, expr->c_str(), &s.s));
      emit(opt, s.str(), nlohmann::json{{"value", s.str()}});
    });
  }

  // ------------------------------------------------------------ factor
  {
    auto* fac = app.add_subcommand("factor", "factor a univariate polynomial in t");
    auto poly = std::make_shared<std::string>();
    fac->add_option("poly", *poly, "polynomial in t")->required();
    fac->callback([&opt, poly] {
      Field f = make_field(opt);
      StringOut s;
      check(adk_factor_univariate(f.f, poly->c_str(), &s.s));
      emit(opt, s.str(), nlohmann::json{{"factorization", s.str()}});
    });
  }

  // -------------------------------------------------------------- poly
  auto* cmd_poly = app.add_subcommand("poly", "bivariate polynomial operations");
  cmd_poly->require_subcommand(1);
  {
    auto* pc = cmd_poly->add_subcommand("parse", "parse and render canonically");
    auto poly = std::make_shared<std::string>();
    pc->add_option("poly", *poly)->required();
    pc->callback([&opt, poly] {
      Field f = make_field(opt);
      Poly p = make_poly(f, *poly);
      StringOut s;
      check(adk_poly_render(p.p, &s.s));
      emit(opt, s.str(), nlohmann::json{{"poly", s.str()}});
    });
  }
  {
    auto* oc = cmd_poly->add_subcommand("ord", "order at the origin");
    auto poly = std::make_shared<std::string>();
    oc->add_option("poly", *poly)->required();
    oc->callback([&opt, poly] {
      Field f = make_field(opt);
      Poly p = make_poly(f, *poly);
      uint32_t m = 0;
      check(adk_poly_ord(p.p, &m));
      emit(opt, std::to_string(m), nlohmann::json{{"ord", m}});
    });
  }
  {
    auto* lc = cmd_poly->add_subcommand("leading", "leading form (tangent cone)");
    auto poly = std::make_shared<std::string>();
    lc->add_option("poly", *poly)->required();
    lc->callback([&opt, poly] {
      Field f = make_field(opt);
      Poly p = make_poly(f, *poly);
      Poly lf;
      check(adk_poly_leading_form(p.p, &lf.p));
      StringOut s;
      check(adk_poly_render(lf.p, &s.s));
      emit(opt, s.str(), nlohmann::json{{"leading_form", s.str()}});
    });
  }
  {
    auto* gc = cmd_poly->add_subcommand("gcd", "gcd in k[x,y], monic in grlex(x>y)");
    auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
    gc->add_option("f", *a)->required();
    gc->add_option("g", *b)->required();
    gc->callback([&opt, a, b] {
      Field f = make_field(opt);
      Poly pa = make_poly(f, *a), pb = make_poly(f, *b);
      Poly g;
      check(adk_poly_gcd(pa.p, pb.p, &g.p));
      StringOut s;
      check(adk_poly_render(g.p, &s.s));
      emit(opt, s.str(), nlohmann::json{{"gcd", s.str()}});
    });
  }
  {
    auto* tc = cmd_poly->add_subcommand("transform", "quadratic transform at one center");
    auto poly = std::make_shared<std::string>(), center = std::make_shared<std::string>();
    tc->add_option("--center", *center, "center: field element or inf")->required();
    tc->add_option("poly", *poly)->required();
    tc->callback([&opt, poly, center] {
      Field f = make_field(opt);
      Poly p = make_poly(f, *poly);
      uint32_t m = 0;
      Poly strict;
      check(adk_poly_transform(p.p, center->c_str(), &m, &strict.p));
      StringOut s;
      check(adk_poly_render(strict.p, &s.s));
      emit(opt, "(" + std::to_string(m) + ", " + s.str() + ")",
           nlohmann::json{{"m", m}, {"strict", s.str()}});
    });
  }
  {
    auto* pc = cmd_poly->add_subcommand("pullback", "total pullback along a path");
    auto poly = std::make_shared<std::string>(), point = std::make_shared<std::string>();
    pc->add_option("--point", *point, "path, e.g. \"[0, inf]\"")->required();
    pc->add_option("poly", *poly)->required();
    pc->callback([&opt, poly, point] {
      Field f = make_field(opt);
      Poly p = make_poly(f, *poly);
      Path pt = make_path(f, *point);
      Poly out;
      check(adk_poly_pullback(p.p, pt.p, &out.p));
      StringOut s;
      check(adk_poly_render(out.p, &s.s));
      emit(opt, s.str(), nlohmann::json{{"pullback", s.str()}});
    });
  }
  {
    auto* sc = cmd_poly->add_subcommand("strict", "strict transform along a path");
    auto poly = std::make_shared<std::string>(), point = std::make_shared<std::string>();
    sc->add_option("--point", *point)->required();
    sc->add_option("poly", *poly)->required();
    sc->callback([&opt, poly, point] {
      Field f = make_field(opt);
      Poly p = make_poly(f, *poly);
      Path pt = make_path(f, *point);
      Poly out;
      check(adk_poly_strict_transform(p.p, pt.p, &out.p));
      StringOut s;
      check(adk_poly_render(out.p, &s.s));
      emit(opt, s.str(), nlohmann::json{{"strict", s.str()}});
    });
  }

  // ----------------------------------------------------- tree navigation
  {
    auto* tc = app.add_subcommand("tangent", "tangent directions of the strict locus");
    auto poly = std::make_shared<std::string>();
    tc->add_option("poly", *poly)->required();
    tc->callback([&opt, poly] {
      Field f = make_field(opt);
      Poly p = make_poly(f, *poly);
      StringOut s;
      check(adk_tangent_directions(p.p, &s.s));
      emit(opt, s.str(), nlohmann::json{{"directions", s.str()}});
    });
  }
  {
    auto* cc = app.add_subcommand("children", "children on the strict locus below a point");
    auto poly = std::make_shared<std::string>(), point = std::make_shared<std::string>();
    cc->add_option("--point", *point)->required();
    cc->add_option("poly", *poly)->required();
    cc->callback([&opt, poly, point] {
      Field f = make_field(opt);
      Poly p = make_poly(f, *poly);
      Path pt = make_path(f, *point);
      StringOut s;
      check(adk_children_on_strict(p.p, pt.p, &s.s));
      emit(opt, s.str(), nlohmann::json{{"children", s.str()}});
    });
  }
  {
    auto* mc = app.add_subcommand("monomial-path", "divisor with val(x) = a, val(y) = b");
    auto a = std::make_shared<unsigned>(), b = std::make_shared<unsigned>();
    mc->add_option("a", *a)->required();
    mc->add_option("b", *b)->required();
    mc->callback([&opt, a, b] {
      Field f = make_field(opt);
      Path p;
      check(adk_monomial_path(f.f, *a, *b, &p.p));
      StringOut s;
      check(adk_path_render(p.p, &s.s));
      emit(opt, s.str(), nlohmann::json{{"path", s.str()}});
    });
  }

  // ----------------------------------------------------------- valuation
  {
    auto* vc = app.add_subcommand("val", "valuation of a polynomial at a divisor");
    auto poly = std::make_shared<std::string>(), divisor = std::make_shared<std::string>();
    vc->add_option("--divisor", *divisor, "divisor path")->required();
    vc->add_option("poly", *poly)->required();
    vc->callback([&opt, poly, divisor] {
      Field f = make_field(opt);
      Poly p = make_poly(f, *poly);
      Path d = make_path(f, *divisor);
      uint64_t v = 0;
      check(adk_val(p.p, d.p, &v));
      emit(opt, std::to_string(v), nlohmann::json{{"val", v}});
    });
  }
  {
    auto* vc = app.add_subcommand("val-frac", "valuation of f/g at a divisor");
    auto fs = std::make_shared<std::string>(), gs = std::make_shared<std::string>(),
         divisor = std::make_shared<std::string>();
    vc->add_option("--divisor", *divisor)->required();
    vc->add_option("f", *fs)->required();
    vc->add_option("g", *gs)->required();
    vc->callback([&opt, fs, gs, divisor] {
      Field f = make_field(opt);
      Poly pf = make_poly(f, *fs), pg = make_poly(f, *gs);
      Path d = make_path(f, *divisor);
      int64_t v = 0;
      int inf = 0;
      check(adk_val_frac(pf.p, pg.p, d.p, &v, &inf));
      if (inf)
        emit(opt, "inf", nlohmann::json{{"val", "inf"}});
      else
        emit(opt, std::to_string(v), nlohmann::json{{"val", v}});
    });
  }
  {
    auto* pc = app.add_subcommand("position", "zero/pole/unit/undetermined at a point");
    auto fs = std::make_shared<std::string>(), gs = std::make_shared<std::string>(),
         point = std::make_shared<std::string>();
    pc->add_option("--point", *point)->required();
    pc->add_option("f", *fs)->required();
    pc->add_option("g", *gs)->required();
    pc->callback([&opt, fs, gs, point] {
      Field f = make_field(opt);
      Poly pf = make_poly(f, *fs), pg = make_poly(f, *gs);
      Path pt = make_path(f, *point);
      StringOut s;
      check(adk_position(pf.p, pg.p, pt.p, &s.s));
      emit(opt, s.str(), nlohmann::json{{"position", s.str()}});
    });
  }

  // ---------------------------------------------------------- membership
  {
    auto* mc = app.add_subcommand("member", "is f/g in A(Div_d)?");
    auto fs = std::make_shared<std::string>(), gs = std::make_shared<std::string>();
    auto level = std::make_shared<unsigned>(1);
    mc->add_option("--level", *level, "level bound d")->required();
    mc->add_option("f", *fs)->required();
    mc->add_option("g", *gs)->required();
    mc->callback([&opt, fs, gs, level] {
      Field f = make_field(opt);
      Poly pf = make_poly(f, *fs), pg = make_poly(f, *gs);
      int verdict = 0;
      StringOut witness;
      int64_t delta = 0;
      check(adk_member_bounded(pf.p, pg.p, *level, &verdict, &witness.s, &delta));
      if (verdict) {
        emit(opt, "true", nlohmann::json{{"member", true}});
      } else {
        emit(opt,
             "false (witness " + witness.str() + ", delta " + std::to_string(delta) + ")",
             nlohmann::json{{"member", false}, {"witness", witness.str()}, {"delta", delta}});
      }
    });
  }
  {
    auto* pc = app.add_subcommand("profile", "value profile of f/g over Div_d");
    auto fs = std::make_shared<std::string>(), gs = std::make_shared<std::string>();
    auto level = std::make_shared<unsigned>(1);
    pc->add_option("--level", *level)->required();
    pc->add_option("f", *fs)->required();
    pc->add_option("g", *gs)->required();
    pc->callback([&opt, fs, gs, level] {
      Field f = make_field(opt);
      Poly pf = make_poly(f, *fs), pg = make_poly(f, *gs);
      StringOut js;
      check(adk_value_profile(pf.p, pg.p, *level, &js.s));
      if (opt.json) {
        std::cout << js.str() << "\n";
        return;
      }
      nlohmann::json j = nlohmann::json::parse(js.str());
      std::cout << "level: " << j["level"].get<unsigned>() << "\n";
      std::cout << "visited:\n";
      for (const auto& e : j["visited"])
        std::cout << "  " << e["path"].get<std::string>() << ": "
                  << e["delta"].get<int64_t>() << "\n";
      if (!j["generic"].empty()) {
        std::cout << "generic:\n";
        for (const auto& e : j["generic"])
          std::cout << "  " << e["path"].get<std::string>() << ": sign "
                    << e["sign"].get<int>() << "\n";
      }
      if (!j["unresolved"].empty()) {
        std::cout << "unresolved:\n";
        for (const auto& e : j["unresolved"])
          std::cout << "  " << e["path"].get<std::string>() << ": "
                    << e["factor"].get<std::string>() << "\n";
      }
    });
  }
  {
    auto* cc = app.add_subcommand("classify", "is the maximal ideal at V finitely generated?");
    auto divisor = std::make_shared<std::string>();
    auto level = std::make_shared<unsigned>(1);
    cc->add_option("--divisor", *divisor)->required();
    cc->add_option("--level", *level)->required();
    cc->callback([&opt, divisor, level] {
      Field f = make_field(opt);
      Path d = make_path(f, *divisor);
      int fg = 0;
      check(adk_classify_max_ideal(d.p, *level, &fg));
      emit(opt, fg ? "finitely-generated" : "not-finitely-generated",
           nlohmann::json{{"finitely_generated", fg != 0}});
    });
  }
  {
    auto* jc = app.add_subcommand("jacobson", "certify val(f, V) >= 1 over Div_d");
    auto fs = std::make_shared<std::string>();
    auto level = std::make_shared<unsigned>(1);
    jc->add_option("--level", *level)->required();
    jc->add_option("f", *fs)->required();
    jc->callback([&opt, fs, level] {
      Field f = make_field(opt);
      Poly pf = make_poly(f, *fs);
      int ok = 0;
      check(adk_jacobson_witness(pf.p, *level, &ok));
      emit(opt, ok ? "true" : "false", nlohmann::json{{"jacobson_witness", ok != 0}});
    });
  }

  // --------------------------------------------------------------- ideal
  auto* cmd_ideal = app.add_subcommand("ideal", "ideal arithmetic over a finite divisor set");
  cmd_ideal->require_subcommand(1);
  auto divisors = std::make_shared<std::vector<std::string>>();
  {
    auto* vc = cmd_ideal->add_subcommand("values", "value vector of a finitely generated ideal");
    vc->add_option("--divisor", *divisors, "divisor path (repeatable)")->required()->type_size(1)->allow_extra_args(false);
    auto gens = std::make_shared<std::vector<std::string>>();
    vc->add_option("gens", *gens, "generators")->required();
    vc->callback([&opt, divisors, gens] {
      Field f = make_field(opt);
      DivSet ds;
      ds.build(f, *divisors);
      std::vector<Poly> polys;
      std::vector<adk_poly*> raw;
      for (const auto& g : *gens) {
        polys.push_back(make_poly(f, g));
        raw.push_back(polys.back().p);
      }
      std::vector<uint64_t> v(ds.size());
      check(adk_ideal_values(ds.set, raw.data(), raw.size(), v.data()));
      emit(opt, render_vec(ds, v), json_vec(ds, v));
    });
  }
  {
    auto* oc = cmd_ideal->add_subcommand("op", "intersect | product | sum of two value vectors");
    auto opname = std::make_shared<std::string>();
    auto vecs = std::make_shared<std::vector<std::string>>();
    oc->add_option("--divisor", *divisors)->required()->type_size(1)->allow_extra_args(false);
    oc->add_option("--op", *opname, "intersect, product, or sum")->required();
    oc->add_option("--vec", *vecs, "value vector, comma separated (exactly two)")->required()->type_size(1)->allow_extra_args(false);
    oc->callback([&opt, divisors, opname, vecs] {
      if (vecs->size() != 2) {
        std::cerr << "error: --vec must be given exactly twice\n";
        std::exit(2);
      }
      int op = *opname == "intersect" ? 0 : *opname == "product" ? 1 : *opname == "sum" ? 2 : -1;
      if (op < 0) {
        std::cerr << "error: --op must be intersect, product, or sum\n";
        std::exit(2);
      }
      Field f = make_field(opt);
      DivSet ds;
      ds.build(f, *divisors);
      std::vector<uint64_t> a = parse_vec((*vecs)[0], ds.size());
      std::vector<uint64_t> b = parse_vec((*vecs)[1], ds.size());
      std::vector<uint64_t> r(ds.size());
      check(adk_ideal_op(ds.set, op, a.data(), b.data(), r.data()));
      emit(opt, render_vec(ds, r), json_vec(ds, r));
    });
  }
  {
    auto* cc = cmd_ideal->add_subcommand("contains", "does the ideal contain f?");
    auto vecs = std::make_shared<std::vector<std::string>>();
    auto fs = std::make_shared<std::string>();
    cc->add_option("--divisor", *divisors)->required()->type_size(1)->allow_extra_args(false);
    cc->add_option("--vec", *vecs)->required()->type_size(1)->allow_extra_args(false);
    cc->add_option("f", *fs)->required();
    cc->callback([&opt, divisors, vecs, fs] {
      if (vecs->size() != 1) {
        std::cerr << "error: --vec must be given exactly once\n";
        std::exit(2);
      }
      Field f = make_field(opt);
      DivSet ds;
      ds.build(f, *divisors);
      std::vector<uint64_t> a = parse_vec((*vecs)[0], ds.size());
      Poly pf = make_poly(f, *fs);
      int in = 0;
      check(adk_ideal_contains(ds.set, a.data(), pf.p, &in));
      emit(opt, in ? "true" : "false", nlohmann::json{{"contains", in != 0}});
    });
  }
  {
    auto* dc = cmd_ideal->add_subcommand("decompose",
                                         "irredundant intersection of powers of maximal ideals");
    auto vecs = std::make_shared<std::vector<std::string>>();
    dc->add_option("--divisor", *divisors)->required()->type_size(1)->allow_extra_args(false);
    dc->add_option("--vec", *vecs)->required()->type_size(1)->allow_extra_args(false);
    dc->callback([&opt, divisors, vecs] {
      if (vecs->size() != 1) {
        std::cerr << "error: --vec must be given exactly once\n";
        std::exit(2);
      }
      Field f = make_field(opt);
      DivSet ds;
      ds.build(f, *divisors);
      std::vector<uint64_t> a = parse_vec((*vecs)[0], ds.size());
      std::vector<size_t> idx(ds.size());
      std::vector<uint64_t> exps(ds.size());
      size_t count = 0;
      check(adk_ideal_decompose(ds.set, a.data(), &count, idx.data(), exps.data()));
      nlohmann::json j;
      j["components"] = nlohmann::json::array();
      std::string text;
      for (size_t k = 0; k < count; ++k) {
        if (k) text += " * ";
        std::string name = ds.name(idx[k]);
        text += "M(" + name + ")^" + std::to_string(exps[k]);
        j["components"].push_back({{"divisor", name}, {"exponent", exps[k]}});
      }
      if (count == 0) text = "unit";
      emit(opt, text, j);
    });
  }

  // ------------------------------------------------------------------ cb
  auto* cmd_cb = app.add_subcommand("cb", "Cantor-Bendixson calculus on tree-set expressions");
  cmd_cb->require_subcommand(1);
  auto expr = std::make_shared<std::string>();
  {
    auto* dc = cmd_cb->add_subcommand("derive", "patch limit points of the denoted set");
    dc->add_option("--expr", *expr)->required();
    dc->callback([&opt, expr] {
      StringOut s;
      check(adk_cb_derivative(expr->c_str(), &s.s));
      emit(opt, s.str(), nlohmann::json{{"derivative", s.str()}});
    });
  }
  {
    auto* rc = cmd_cb->add_subcommand("rank", "Cantor-Bendixson rank with derivative chain");
    rc->add_option("--expr", *expr)->required();
    rc->callback([&opt, expr] {
      unsigned rank = 0;
      StringOut chain;
      check(adk_cb_rank(expr->c_str(), &rank, &chain.s));
      if (opt.json) {
        nlohmann::json j{{"rank", rank}, {"chain", nlohmann::json::array()}};
        std::string line;
        for (char c : chain.str() + "\n") {
          if (c == '\n') {
            if (!line.empty()) j["chain"].push_back(line.substr(line.find("= ") + 2));
            line.clear();
          } else {
            line.push_back(c);
          }
        }
        std::cout << j.dump() << "\n";
      } else {
        std::cout << rank << "\n";
      }
    });
  }
  {
    auto* ic = cmd_cb->add_subcommand("isolated", "isolated points of the denoted set");
    ic->add_option("--expr", *expr)->required();
    ic->callback([&opt, expr] {
      StringOut s;
      check(adk_cb_isolated(expr->c_str(), &s.s));
      emit(opt, s.str(), nlohmann::json{{"isolated", s.str()}});
    });
  }
  {
    auto* lc = cmd_cb->add_subcommand("limits", "are all patch limit points prime divisors?");
    lc->add_option("--expr", *expr)->required();
    lc->callback([&opt, expr] {
      int ok = 0;
      check(adk_cb_limits_are_divisors(expr->c_str(), &ok));
      emit(opt, ok ? "true" : "false", nlohmann::json{{"limits_are_divisors", ok != 0}});
    });
  }
  {
    auto* bc = cmd_cb->add_subcommand("is-limit", "limit criterion along a periodic branch");
    auto prefix = std::make_shared<std::string>(), period = std::make_shared<std::string>();
    bc->add_option("--prefix", *prefix)->required();
    bc->add_option("--period", *period)->required();
    bc->add_option("--expr", *expr)->required();
    bc->callback([&opt, prefix, period, expr] {
      int ok = 0;
      check(adk_cb_is_limit_of_branch(prefix->c_str(), period->c_str(), expr->c_str(), &ok));
      emit(opt, ok ? "true" : "false", nlohmann::json{{"is_limit", ok != 0}});
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}
