#include "adk/adomain.hpp"

#include <algorithm>

#include <json.hpp>

namespace adk {

// -------------------------------------------------------- FiniteDivisorSet

FiniteDivisorSet::FiniteDivisorSet(std::vector<PrimeDivisor> divisors)
    : divisors_(std::move(divisors)) {
  if (divisors_.empty()) fail(Errc::InvalidArgument, "divisor set must be nonempty");
  std::sort(divisors_.begin(), divisors_.end(), [](const PrimeDivisor& a, const PrimeDivisor& b) {
    return PointPath::cmp(a.point, b.point) < 0;
  });
  for (size_t k = 1; k < divisors_.size(); ++k)
    if (divisors_[k] == divisors_[k - 1])
      fail(Errc::InvalidArgument, "divisor set entries must be distinct: " + divisors_[k].str());
}

std::optional<size_t> FiniteDivisorSet::index_of(const PrimeDivisor& v) const {
  for (size_t k = 0; k < divisors_.size(); ++k)
    if (divisors_[k] == v) return k;
  return std::nullopt;
}

bool FiniteDivisorSet::operator==(const FiniteDivisorSet& o) const {
  if (divisors_.size() != o.divisors_.size()) return false;
  for (size_t k = 0; k < divisors_.size(); ++k)
    if (!(divisors_[k] == o.divisors_[k])) return false;
  return true;
}

// ------------------------------------------------------------ ValueVector

ValueVector::ValueVector(DivisorSetPtr set, std::vector<uint64_t> entries)
    : set_(std::move(set)), entries_(std::move(entries)) {
  if (!set_ || entries_.size() != set_->size())
    fail(Errc::InvalidArgument, "value vector length must match the divisor set");
}

bool ValueVector::operator==(const ValueVector& o) const {
  return *set_ == *o.set_ && entries_ == o.entries_;
}

namespace {

void require_same_set(const ValueVector& a, const ValueVector& b) {
  if (!(a.divisor_set() == b.divisor_set()))
    fail(Errc::MismatchedDivisorSets, "value vectors over different divisor sets");
}

} // namespace

ValueVector ideal_values(const std::vector<Poly2>& generators, const DivisorSetPtr& X) {
  bool any = false;
  for (const auto& g : generators)
    if (!g.is_zero()) any = true;
  if (!any) fail(Errc::AllGeneratorsZero, "ideal needs a nonzero generator");
  std::vector<uint64_t> e;
  e.reserve(X->size());
  for (const auto& v : X->divisors()) {
    uint64_t m = UINT64_MAX;
    for (const auto& g : generators)
      if (!g.is_zero()) m = std::min(m, val(g, v));
    e.push_back(m);
  }
  return ValueVector(X, std::move(e));
}

ValueVector ideal_intersect(const ValueVector& a, const ValueVector& b) {
  require_same_set(a, b);
  std::vector<uint64_t> e(a.entries().size());
  for (size_t k = 0; k < e.size(); ++k) e[k] = std::max(a.entries()[k], b.entries()[k]);
  return ValueVector(a.set(), std::move(e));
}

ValueVector ideal_product(const ValueVector& a, const ValueVector& b) {
  require_same_set(a, b);
  std::vector<uint64_t> e(a.entries().size());
  for (size_t k = 0; k < e.size(); ++k) e[k] = a.entries()[k] + b.entries()[k];
  return ValueVector(a.set(), std::move(e));
}

ValueVector ideal_sum(const ValueVector& a, const ValueVector& b) {
  require_same_set(a, b);
  std::vector<uint64_t> e(a.entries().size());
  for (size_t k = 0; k < e.size(); ++k) e[k] = std::min(a.entries()[k], b.entries()[k]);
  return ValueVector(a.set(), std::move(e));
}

bool ideal_contains(const ValueVector& a, const Poly2& f) {
  if (f.is_zero()) return true;
  const auto& divs = a.divisor_set().divisors();
  for (size_t k = 0; k < divs.size(); ++k)
    if (val(f, divs[k]) < a.entries()[k]) return false;
  return true;
}

std::vector<std::pair<PrimeDivisor, uint64_t>> decompose(const ValueVector& a) {
  std::vector<std::pair<PrimeDivisor, uint64_t>> out;
  const auto& divs = a.divisor_set().divisors();
  for (size_t k = 0; k < divs.size(); ++k)
    if (a.entries()[k] > 0) out.emplace_back(divs[k], a.entries()[k]);
  return out;
}

// ---------------------------------------------------- bounded-level search

namespace {

// Exceptional decomposition of a total pullback at one node: tot = x^i y^j H
// with H free of monomial factors, up to unit factors that are dropped along
// the way. The divisor value at the node is i + j + ord(H).
struct Decomp {
  uint64_t i = 0, j = 0;
  Poly2 H;
  uint64_t value() const { return i + j + H.ord(); }
};

Decomp decompose_poly(const Poly2& f) {
  Exp2 mc = f.monomial_content();
  return {mc.i, mc.j, f.divided_by_monomial(mc.i, mc.j)};
}

Decomp step_decomp(const Decomp& d, const Center& c) {
  Decomp out;
  Poly2 H = d.H.embedded(c.field());
  Transformed t = transform_at_center(H, c);
  if (c.at_infinity()) {
    // x^i -> x^i y^i, y^j -> y^j, H -> y^ord(H) * strict
    out.i = d.i;
    out.j = d.i + d.j + t.m;
    out.H = t.strict;
  } else {
    // x^i -> x^(i+j+ord H) and, at the 0-direction, y^j survives as y^j;
    // elsewhere it is the unit (y+a)^j and is dropped.
    out.i = d.i + d.j + t.m;
    Poly2 K = t.strict;
    Exp2 mc = K.monomial_content();
    out.j = mc.j + (c.value().is_zero() ? d.j : 0);
    out.H = K.divided_by_monomial(0, mc.j);
  }
  return out;
}

struct SearchResult {
  std::vector<ProfileEntry> visited;
  std::vector<GenericBucket> generic;
  std::vector<UnresolvedDir> unresolved;
  std::optional<PointPath> first_negative;
  int64_t first_negative_delta = 0;
};

// Children through which the strict locus of the product of both total
// transforms passes, in canonical order: finite rational, extension
// representatives, Infinity.
struct NodeChildren {
  std::vector<Center> centers;
  std::vector<UPoly> unreachable; // only over fields without factorization
};

NodeChildren node_children(const Decomp& F, const Decomp& G, const FieldPtr& field) {
  NodeChildren out;
  std::vector<Center> fin;
  bool inf = (F.i + G.i) > 0;
  bool zero_dir = (F.j + G.j) > 0;
  std::vector<UPoly> exts;
  for (const Decomp* D : {&F, &G}) {
    if (D->H.ord() == 0) continue;
    try {
      Directions dirs = tangent_directions(D->H);
      for (const Center& c : dirs.rational) {
        if (c.at_infinity())
          inf = true;
        else
          fin.push_back(c);
      }
      for (const UPoly& q : dirs.nonrational) exts.push_back(q);
    } catch (const Error& e) {
      if (e.code() != Errc::ExtensionFactorizationUnsupported) throw;
      out.unreachable.push_back(D->H.dehomogenized());
    }
  }
  if (zero_dir) fin.push_back(Center::finite(field->zero()));
  std::sort(fin.begin(), fin.end(), [](const Center& a, const Center& b) {
    return Center::cmp(a, b) < 0;
  });
  fin.erase(std::unique(fin.begin(), fin.end(), [](const Center& a, const Center& b) {
              return a == b;
            }),
            fin.end());
  std::sort(exts.begin(), exts.end(),
            [](const UPoly& a, const UPoly& b) { return UPoly::cmp(a, b) < 0; });
  exts.erase(std::unique(exts.begin(), exts.end()), exts.end());
  out.centers = std::move(fin);
  for (const UPoly& q : exts) {
    FieldPtr ext = Field::extension(field, q);
    out.centers.push_back(Center::finite(ext->generator()));
  }
  if (inf) out.centers.push_back(Center::infinity(field));
  return out;
}

void search_node(const PointPath& path, const Decomp& F, const Decomp& G, unsigned d,
                 SearchResult& res) {
  int64_t delta = static_cast<int64_t>(F.value()) - static_cast<int64_t>(G.value());
  res.visited.push_back({path, delta});
  if (delta < 0 && !res.first_negative) {
    res.first_negative = path;
    res.first_negative_delta = delta;
  }
  if (path.depth() + 2 <= d) {
    // interior node: a generic bucket covers every unvisited child
    res.generic.push_back({path, delta < 0 ? -1 : delta > 0 ? 1 : 0});
  }
  if (path.depth() + 1 >= d) return; // children would exceed the level bound
  NodeChildren ch = node_children(F, G, path.field_at_end());
  for (const UPoly& q : ch.unreachable) res.unresolved.push_back({path, q});
  for (const Center& c : ch.centers)
    search_node(path.child(c), step_decomp(F, c), step_decomp(G, c), d, res);
}

SearchResult run_search(const Poly2& f, const Poly2& g, unsigned d) {
  if (d == 0) fail(Errc::InvalidArgument, "level bound must be positive");
  Poly2 fr = f, gr = g;
  Poly2 h = gcd2(f, g);
  if (h.total_degree() > 0) {
    fr = *f.divided_exact(h);
    gr = *g.divided_exact(h);
  }
  SearchResult res;
  search_node(PointPath(f.field()), decompose_poly(fr), decompose_poly(gr), d, res);
  return res;
}

} // namespace

MemberVerdict member_bounded(const Poly2& f, const Poly2& g, unsigned d) {
  if (g.is_zero()) fail(Errc::ZeroPolynomial, "membership needs a nonzero denominator");
  if (f.is_zero()) return {};
  SearchResult res = run_search(f, g, d);
  if (res.first_negative)
    return {false, res.first_negative, res.first_negative_delta};
  if (!res.unresolved.empty())
    fail(Errc::ExtensionFactorizationUnsupported,
         "verdict withheld: cannot enter directions of " + res.unresolved.front().factor.str() +
             " below " + res.unresolved.front().path.str());
  return {};
}

ValueProfile value_profile(const Poly2& f, const Poly2& g, unsigned d) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "value profile needs nonzero arguments");
  if (g.is_zero()) fail(Errc::ZeroPolynomial, "value profile needs nonzero arguments");
  SearchResult res = run_search(f, g, d);
  ValueProfile p;
  p.level = d;
  p.visited = std::move(res.visited);
  p.generic = std::move(res.generic);
  p.unresolved = std::move(res.unresolved);
  return p;
}

MaxIdealClass classify_max_ideal(const PrimeDivisor& V, unsigned d) {
  if (V.level() > d)
    fail(Errc::LevelExceedsBound,
         "divisor level " + std::to_string(V.level()) + " exceeds bound " + std::to_string(d));
  return V.level() == d ? MaxIdealClass::FinitelyGenerated : MaxIdealClass::NotFinitelyGenerated;
}

bool jacobson_witness(const Poly2& f, unsigned d) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "jacobson witness of zero");
  if (f.ord() == 0) fail(Errc::UnitElement, "jacobson witness needs an element of the maximal ideal");
  // values only grow down the tree, so checking the visited nodes certifies
  // every divisor of level <= d
  ValueProfile p = value_profile(f, Poly2::constant(f.field()->one()), d);
  for (const auto& e : p.visited)
    if (e.delta < 1) return false;
  for (const auto& b : p.generic)
    if (b.sign < 1) return false;
  return true;
}

// ------------------------------------------------------------------- JSON

std::string ValueProfile::to_json() const {
  nlohmann::json j;
  j["level"] = level;
  j["visited"] = nlohmann::json::array();
  for (const auto& e : visited)
    j["visited"].push_back({{"path", e.path.str()}, {"delta", e.delta}});
  j["generic"] = nlohmann::json::array();
  for (const auto& b : generic)
    j["generic"].push_back({{"path", b.path.str()}, {"sign", b.sign}});
  j["unresolved"] = nlohmann::json::array();
  for (const auto& u : unresolved)
    j["unresolved"].push_back({{"path", u.path.str()}, {"factor", u.factor.str_compact()}});
  return j.dump();
}

ValueProfile ValueProfile::from_json(const std::string& text, const FieldPtr& base) {
  nlohmann::json j = nlohmann::json::parse(text);
  ValueProfile p;
  p.level = j.at("level").get<unsigned>();
  for (const auto& e : j.at("visited"))
    p.visited.push_back({PointPath::parse(e.at("path").get<std::string>(), base),
                         e.at("delta").get<int64_t>()});
  for (const auto& b : j.at("generic"))
    p.generic.push_back({PointPath::parse(b.at("path").get<std::string>(), base),
                         b.at("sign").get<int>()});
  for (const auto& u : j.at("unresolved")) {
    PointPath path = PointPath::parse(u.at("path").get<std::string>(), base);
    UPoly factor = parse_upoly(u.at("factor").get<std::string>(), path.field_at_end());
    p.unresolved.push_back({std::move(path), std::move(factor)});
  }
  return p;
}

} // namespace adk
