#include "adk/tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace adk {

// ------------------------------------------------------------- PointPath

PointPath PointPath::child(const Center& c) const {
  const FieldPtr& cur = field_at_end();
  bool plain = same_field(c.field(), cur);
  bool ext = c.field()->kind() == Field::Kind::Extension && same_field(c.field()->base(), cur);
  if (!plain && !ext)
    fail(Errc::InvalidArgument, "center field does not match the path");
  PointPath p = *this;
  p.steps_.push_back({c, c.field()});
  return p;
}

PointPath PointPath::parent() const {
  if (steps_.empty()) fail(Errc::InvalidArgument, "the root has no parent");
  PointPath p = *this;
  p.steps_.pop_back();
  return p;
}

bool PointPath::is_prefix_of(const PointPath& o) const {
  if (depth() > o.depth()) return false;
  for (size_t k = 0; k < depth(); ++k)
    if (!(steps_[k].center == o.steps_[k].center)) return false;
  return true;
}

bool PointPath::operator==(const PointPath& o) const {
  if (depth() != o.depth()) return false;
  return is_prefix_of(o);
}

int PointPath::cmp(const PointPath& a, const PointPath& b) {
  for (size_t k = 0; k < std::min(a.depth(), b.depth()); ++k) {
    int c = Center::cmp(a.steps_[k].center, b.steps_[k].center);
    if (c != 0) return c;
  }
  if (a.depth() != b.depth()) return a.depth() < b.depth() ? -1 : 1;
  return 0;
}

namespace {

// Index of a root-entering center among the canonically ordered roots of the
// modulus in the extension; 0 when roots cannot be enumerated.
unsigned root_index(const Center& c) {
  const FieldPtr& e = c.field();
  if (!e->supports_factorization()) return 0;
  UPoly m = e->modulus().embedded(e);
  auto roots = roots_in_field(m);
  for (unsigned k = 0; k < roots.size(); ++k)
    if (roots[k].first == c.value()) return k;
  fail(Errc::InvalidArgument, "extension center is not a root of its modulus");
}

} // namespace

std::vector<std::string> PointPath::step_labels() const {
  std::vector<std::string> out;
  out.reserve(steps_.size());
  FieldPtr cur = base_;
  for (const PathStep& s : steps_) {
    if (!same_field(s.field, cur))
      out.push_back("root(" + s.field->modulus().str_compact() + ")#" +
                    std::to_string(root_index(s.center)));
    else
      out.push_back(s.center.str());
    cur = s.field;
  }
  return out;
}

std::string PointPath::str() const {
  std::ostringstream os;
  os << "[";
  std::vector<std::string> labels = step_labels();
  for (size_t k = 0; k < labels.size(); ++k) {
    if (k) os << ", ";
    os << labels[k];
  }
  os << "]";
  return os.str();
}

PointPath PointPath::parse(const std::string& text, const FieldPtr& base) {
  std::string s = text;
  auto trim = [](std::string& v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.erase(v.begin());
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
  };
  trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail(Errc::SyntaxError, "path must be bracketed: " + text, 0);
  s = s.substr(1, s.size() - 2);
  PointPath p(base);
  size_t pos = 0;
  while (pos <= s.size()) {
    if (pos == s.size() && p.depth() == 0 && s.empty()) break;
    size_t depth = 0;
    size_t end = pos;
    while (end < s.size() && (depth > 0 || s[end] != ',')) {
      if (s[end] == '(') ++depth;
      if (s[end] == ')') --depth;
      ++end;
    }
    std::string item = s.substr(pos, end - pos);
    trim(item);
    if (item.empty()) fail(Errc::SyntaxError, "empty path entry in " + text, static_cast<long>(pos));
    const FieldPtr& cur = p.field_at_end();
    if (item == "inf") {
      p = p.child(Center::infinity(cur));
    } else if (item.rfind("root(", 0) == 0) {
      size_t close = item.rfind(")#");
      if (close == std::string::npos)
        fail(Errc::SyntaxError, "extension center must be root(<modulus>)#<k>: " + item, 0);
      std::string mod_text = item.substr(5, close - 5);
      std::string idx_text = item.substr(close + 2);
      if (idx_text.empty() || idx_text.find_first_not_of("0123456789") != std::string::npos)
        fail(Errc::SyntaxError, "bad root index in " + item, 0);
      unsigned long k = std::stoul(idx_text);
      UPoly modulus = parse_upoly(mod_text, cur);
      FieldPtr ext = Field::extension(cur, modulus);
      FieldElem root = ext->generator();
      if (ext->supports_factorization()) {
        auto roots = roots_in_field(modulus.embedded(ext));
        if (k >= roots.size())
          fail(Errc::InvalidArgument, "root index " + idx_text + " out of range for " + mod_text);
        root = roots[k].first;
      } else if (k != 0) {
        fail(Errc::ExtensionFactorizationUnsupported,
             "cannot enumerate roots of " + mod_text + " over " + cur->describe());
      }
      p = p.child(Center::finite(root));
    } else {
      p = p.child(Center::finite(parse_elem(item, cur)));
    }
    pos = end + 1;
    if (end == s.size()) break;
  }
  return p;
}

// ---------------------------------------------------- tangent directions

Directions tangent_directions(const Poly2& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "tangent directions of zero");
  uint32_t d = f.ord();
  if (d == 0) fail(Errc::UnitElement, "unit at the origin has no tangent directions");
  Poly2 lf = f.leading_form();
  UPoly u = lf.dehomogenized();
  Directions out;
  if (u.degree() < static_cast<long>(d)) out.rational.push_back(Center::infinity(f.field()));
  if (u.degree() >= 1) {
    std::vector<Center> fin;
    for (const auto& fac : factor_univariate(u).factors) {
      if (fac.factor.degree() == 1)
        fin.push_back(Center::finite(-fac.factor.coeff(0)));
      else
        out.nonrational.push_back(fac.factor);
    }
    std::sort(fin.begin(), fin.end(),
              [](const Center& a, const Center& b) { return Center::cmp(a, b) < 0; });
    out.rational.insert(out.rational.begin(), fin.begin(), fin.end());
    std::sort(out.nonrational.begin(), out.nonrational.end(),
              [](const UPoly& a, const UPoly& b) { return UPoly::cmp(a, b) < 0; });
  }
  return out;
}

PointPath monomial_path(unsigned a, unsigned b, const FieldPtr& field) {
  if (a == 0 || b == 0 || std::gcd(a, b) != 1)
    fail(Errc::NotCoprime, "monomial weights must be coprime positive integers");
  PointPath p(field);
  while (!(a == 1 && b == 1)) {
    if (b > a) {
      p = p.child(Center::finite(field->zero()));
      b -= a;
    } else {
      p = p.child(Center::infinity(field));
      a -= b;
    }
  }
  return p;
}

Poly2 strict_transform_along(const Poly2& f, const PointPath& path) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "transform of zero");
  Poly2 g = f;
  for (const PathStep& s : path.steps()) g = transform_at_center(g, s.center).strict;
  return g;
}

Poly2 pullback_total(const Poly2& f, const PointPath& path) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "pullback of zero");
  Poly2 g = f;
  for (const PathStep& s : path.steps()) {
    g = g.embedded(s.field);
    g = s.center.at_infinity() ? g.subst_infinity() : g.subst_finite(s.center.value());
  }
  return g;
}

StrictChildren children_on_strict(const Poly2& f, const PointPath& path) {
  Poly2 s = strict_transform_along(f, path);
  StrictChildren out;
  if (s.ord() == 0) return out;
  out.dirs = tangent_directions(s);
  out.generic_m = s.ord();
  return out;
}

} // namespace adk
