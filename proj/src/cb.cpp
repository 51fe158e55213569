#include "adk/cb.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "adk/error.hpp"

namespace adk::cb {

// ------------------------------------------------------------ node paths

std::string render_node(const NodePath& n) {
  std::string s = "[";
  for (size_t k = 0; k < n.size(); ++k) {
    if (k) s += ", ";
    s += n[k];
  }
  return s + "]";
}

namespace {

std::string trimmed(std::string v) {
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.erase(v.begin());
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
  return v;
}

// split on top-level commas (parentheses and brackets nest)
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  long depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trimmed(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trimmed(cur).empty() || !out.empty()) out.push_back(trimmed(cur));
  return out;
}

} // namespace

NodePath parse_node(const std::string& text) {
  std::string s = trimmed(text);
  if (!s.empty() && s.front() == '"' && s.back() == '"' && s.size() >= 2)
    s = trimmed(s.substr(1, s.size() - 2));
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail(Errc::SyntaxError, "node path must be bracketed: " + text, 0);
  s = s.substr(1, s.size() - 2);
  if (trimmed(s).empty()) return {};
  NodePath n;
  for (auto& item : split_args(s)) {
    if (item.empty()) fail(Errc::SyntaxError, "empty label in " + text, 0);
    n.push_back(item);
  }
  return n;
}

// ---------------------------------------------------------------- Branch

Branch::Branch(NodePath prefix, std::vector<Label> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) fail(Errc::InvalidArgument, "branch period must be nonempty");
  // minimal period
  for (size_t d = 1; d < period_.size(); ++d) {
    if (period_.size() % d != 0) continue;
    bool ok = true;
    for (size_t k = d; k < period_.size() && ok; ++k)
      if (period_[k] != period_[k % d]) ok = false;
    if (ok) {
      period_.resize(d);
      break;
    }
  }
  // shortest prefix: absorb trailing prefix labels into the cycle
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

Label Branch::at(size_t depth) const {
  if (depth < prefix_.size()) return prefix_[depth];
  return period_[(depth - prefix_.size()) % period_.size()];
}

NodePath Branch::truncation(size_t depth) const {
  NodePath n;
  n.reserve(depth);
  for (size_t k = 0; k < depth; ++k) n.push_back(at(k));
  return n;
}

bool Branch::passes_through(const NodePath& node) const {
  for (size_t k = 0; k < node.size(); ++k)
    if (node[k] != at(k)) return false;
  return true;
}

bool Branch::operator==(const Branch& o) const {
  return prefix_ == o.prefix_ && period_ == o.period_;
}

// ------------------------------------------------------------ term order

namespace {

int cmp_paths(const NodePath& a, const NodePath& b) {
  for (size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
    int c = a[k].compare(b[k]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int cmp_branches(const Branch& a, const Branch& b) {
  int c = cmp_paths(a.prefix(), b.prefix());
  if (c != 0) return c;
  return cmp_paths(a.period(), b.period());
}

int term_kind(const Term& t) { return static_cast<int>(t.index()); }

int cmp_terms(const Term& a, const Term& b) {
  if (term_kind(a) != term_kind(b)) return term_kind(a) < term_kind(b) ? -1 : 1;
  if (const auto* s = std::get_if<Single>(&a)) return cmp_paths(s->node, std::get<Single>(b).node);
  if (const auto* l = std::get_if<Limit>(&a)) return cmp_branches(l->branch, std::get<Limit>(b).branch);
  if (const auto* c = std::get_if<Children>(&a)) {
    const auto& o = std::get<Children>(b);
    int r = cmp_paths(c->node, o.node);
    if (r != 0) return r;
    return cmp_paths(c->excluded, o.excluded);
  }
  if (const auto* s = std::get_if<Slice>(&a)) {
    const auto& o = std::get<Slice>(b);
    int r = cmp_paths(s->node, o.node);
    if (r != 0) return r;
    return s->k < o.k ? -1 : s->k > o.k ? 1 : 0;
  }
  return cmp_branches(std::get<Tail>(a).branch, std::get<Tail>(b).branch);
}

bool node_in_term(const Term& t, const NodePath& n) {
  if (const auto* s = std::get_if<Single>(&t)) return s->node == n;
  if (std::holds_alternative<Limit>(t)) return false;
  if (const auto* c = std::get_if<Children>(&t)) {
    if (n.size() != c->node.size() + 1) return false;
    for (size_t k = 0; k < c->node.size(); ++k)
      if (n[k] != c->node[k]) return false;
    return !std::binary_search(c->excluded.begin(), c->excluded.end(), n.back());
  }
  if (const auto* s = std::get_if<Slice>(&t)) {
    if (n.size() < s->node.size() || n.size() > s->node.size() + s->k) return false;
    for (size_t k = 0; k < s->node.size(); ++k)
      if (n[k] != s->node[k]) return false;
    return true;
  }
  return std::get<Tail>(t).branch.passes_through(n);
}

bool limit_in_term(const Term& t, const Branch& b) {
  if (const auto* l = std::get_if<Limit>(&t)) return l->branch == b;
  return false;
}

} // namespace

// ------------------------------------------------------------ TreeSetExpr

TreeSetExpr TreeSetExpr::of(Term t) { return unions({std::move(t)}); }

TreeSetExpr TreeSetExpr::unions(std::vector<Term> ts) {
  TreeSetExpr e;
  for (auto& t : ts) {
    if (auto* c = std::get_if<Children>(&t)) {
      std::sort(c->excluded.begin(), c->excluded.end());
      c->excluded.erase(std::unique(c->excluded.begin(), c->excluded.end()), c->excluded.end());
    }
    if (auto* s = std::get_if<Slice>(&t); s && s->k == 0) t = Single{s->node};
    e.terms_.push_back(std::move(t));
  }
  std::sort(e.terms_.begin(), e.terms_.end(),
            [](const Term& a, const Term& b) { return cmp_terms(a, b) < 0; });
  e.terms_.erase(std::unique(e.terms_.begin(), e.terms_.end(),
                             [](const Term& a, const Term& b) { return cmp_terms(a, b) == 0; }),
                 e.terms_.end());
  return e;
}

TreeSetExpr TreeSetExpr::unioned(const TreeSetExpr& o) const {
  std::vector<Term> ts = terms_;
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  return unions(std::move(ts));
}

bool TreeSetExpr::member_node(const NodePath& n) const {
  for (const Term& t : terms_)
    if (node_in_term(t, n)) return true;
  return false;
}

bool TreeSetExpr::member_limit(const Branch& b) const {
  for (const Term& t : terms_)
    if (limit_in_term(t, b)) return true;
  return false;
}

bool TreeSetExpr::operator==(const TreeSetExpr& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t k = 0; k < terms_.size(); ++k)
    if (cmp_terms(terms_[k], o.terms_[k]) != 0) return false;
  return true;
}

namespace {

std::string render_labels(const std::vector<Label>& ls) {
  std::string s = "[";
  for (size_t k = 0; k < ls.size(); ++k) {
    if (k) s += ", ";
    s += ls[k];
  }
  return s + "]";
}

std::string render_term(const Term& t) {
  std::ostringstream os;
  if (const auto* s = std::get_if<Single>(&t)) {
    os << "single(" << render_node(s->node) << ")";
  } else if (const auto* l = std::get_if<Limit>(&t)) {
    os << "branchlimit(" << render_node(l->branch.prefix())
       << ", period=" << render_labels(l->branch.period()) << ")";
  } else if (const auto* c = std::get_if<Children>(&t)) {
    os << "children(" << render_node(c->node);
    if (!c->excluded.empty()) os << ", exclude=" << render_labels(c->excluded);
    os << ")";
  } else if (const auto* s2 = std::get_if<Slice>(&t)) {
    os << "slice(" << render_node(s2->node) << ", " << s2->k << ")";
  } else {
    const auto& b = std::get<Tail>(t).branch;
    os << "branchtail(" << render_node(b.prefix()) << ", period=" << render_labels(b.period())
       << ")";
  }
  return os.str();
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  long depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trimmed(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trimmed(cur));
  return out;
}

std::vector<Label> parse_labels(const std::string& text) {
  NodePath n = parse_node(text);
  return n;
}

Term parse_term(const std::string& text) {
  std::string s = trimmed(text);
  size_t open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    fail(Errc::SyntaxError, "expected term(args): " + text, 0);
  std::string name = trimmed(s.substr(0, open));
  std::vector<std::string> args = split_args(s.substr(open + 1, s.size() - open - 2));
  auto need = [&](size_t lo, size_t hi) {
    if (args.size() < lo || args.size() > hi)
      fail(Errc::SyntaxError, "wrong number of arguments for " + name + ": " + text, 0);
  };
  auto keyed = [&](size_t idx, const std::string& key) -> std::string {
    std::string a = args[idx];
    if (a.rfind(key + "=", 0) == 0) return trimmed(a.substr(key.size() + 1));
    return a;
  };
  if (name == "single") {
    need(1, 1);
    return Single{parse_node(args[0])};
  }
  if (name == "children") {
    need(1, 2);
    Children c{parse_node(args[0]), {}};
    if (args.size() == 2) c.excluded = parse_labels(keyed(1, "exclude"));
    return c;
  }
  if (name == "slice") {
    need(2, 2);
    std::string k = keyed(1, "k");
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::SyntaxError, "slice depth must be a nonnegative integer: " + text, 0);
    return Slice{parse_node(args[0]), static_cast<uint32_t>(std::stoul(k))};
  }
  if (name == "branchtail") {
    need(2, 2);
    return Tail{Branch(parse_node(args[0]), parse_labels(keyed(1, "period")))};
  }
  if (name == "branchlimit") {
    need(2, 2);
    return Limit{Branch(parse_node(args[0]), parse_labels(keyed(1, "period")))};
  }
  fail(Errc::SyntaxError, "unknown term kind '" + name + "'", 0);
}

} // namespace

std::string TreeSetExpr::str() const {
  if (terms_.empty()) return "{}";
  std::string s;
  for (size_t k = 0; k < terms_.size(); ++k) {
    if (k) s += " + ";
    s += render_term(terms_[k]);
  }
  return s;
}

TreeSetExpr TreeSetExpr::parse(const std::string& text) {
  std::string s = trimmed(text);
  if (s.empty() || s == "{}") return TreeSetExpr();
  std::vector<Term> ts;
  for (const auto& part : split_top(s, '+')) {
    if (part.empty()) fail(Errc::SyntaxError, "empty term in expression: " + text, 0);
    ts.push_back(parse_term(part));
  }
  return unions(std::move(ts));
}

// ------------------------------------------------------------- derivative

TreeSetExpr derivative(const TreeSetExpr& x) {
  std::vector<Term> out;
  for (const Term& t : x.terms()) {
    if (std::holds_alternative<Single>(t) || std::holds_alternative<Limit>(t)) continue;
    if (const auto* c = std::get_if<Children>(&t)) {
      out.push_back(Single{c->node});
    } else if (const auto* s = std::get_if<Slice>(&t)) {
      if (s->k >= 1) out.push_back(Slice{s->node, s->k - 1});
    } else {
      out.push_back(Limit{std::get<Tail>(t).branch});
    }
  }
  return TreeSetExpr::unions(std::move(out));
}

CBReport cb_rank(const TreeSetExpr& x) {
  CBReport r;
  TreeSetExpr cur = x;
  // every term's derivative chain strictly shrinks, so the chain reaches the
  // empty set within max slice depth + 3 steps
  unsigned guard = 3;
  for (const Term& t : x.terms())
    if (const auto* s = std::get_if<Slice>(&t)) guard = std::max(guard, s->k + 3);
  for (unsigned n = 0; n <= guard; ++n) {
    r.chain.push_back(cur);
    if (cur.empty()) {
      r.rank = n;
      r.scattered = true;
      return r;
    }
    cur = derivative(cur);
  }
  fail(Errc::InvalidArgument, "derivative chain failed to terminate");
}

// --------------------------------------------------------- isolated points

IsolatedSet isolated_points(const TreeSetExpr& x) { return {x, derivative(x)}; }

bool IsolatedSet::contains_node(const NodePath& n) const {
  return base.member_node(n) && !removed.member_node(n);
}

bool IsolatedSet::contains_limit(const Branch& b) const {
  return base.member_limit(b) && !removed.member_limit(b);
}

namespace {

void collect_labels(const TreeSetExpr& e, std::set<Label>& out, size_t& maxdepth) {
  for (const Term& t : e.terms()) {
    auto absorb = [&](const NodePath& p) {
      for (const auto& l : p) out.insert(l);
      maxdepth = std::max(maxdepth, p.size());
    };
    if (const auto* s = std::get_if<Single>(&t)) absorb(s->node);
    if (const auto* l = std::get_if<Limit>(&t)) {
      absorb(l->branch.prefix());
      absorb(l->branch.period());
      maxdepth = std::max(maxdepth, l->branch.prefix().size() + l->branch.period().size());
    }
    if (const auto* c = std::get_if<Children>(&t)) {
      absorb(c->node);
      absorb(c->excluded);
      maxdepth = std::max(maxdepth, c->node.size() + 1);
    }
    if (const auto* s = std::get_if<Slice>(&t)) {
      absorb(s->node);
      maxdepth = std::max(maxdepth, s->node.size() + s->k);
    }
    if (const auto* tl = std::get_if<Tail>(&t)) {
      absorb(tl->branch.prefix());
      absorb(tl->branch.period());
      maxdepth = std::max(maxdepth, tl->branch.prefix().size() + tl->branch.period().size());
    }
  }
}

} // namespace

std::optional<std::string> IsolatedSet::witness() const {
  std::set<Label> mentioned;
  size_t maxdepth = 0;
  collect_labels(base, mentioned, maxdepth);
  collect_labels(removed, mentioned, maxdepth);
  // enough fresh labels to dodge every excluded set and branch pattern
  std::vector<Label> pool(mentioned.begin(), mentioned.end());
  for (unsigned k = 0; pool.size() < mentioned.size() + 3; ++k) {
    Label fresh = std::to_string(k);
    if (!mentioned.count(fresh)) pool.push_back(fresh);
  }
  for (const Term& t : base.terms()) {
    if (const auto* s = std::get_if<Single>(&t)) {
      if (!removed.member_node(s->node)) return render_node(s->node);
    } else if (const auto* l = std::get_if<Limit>(&t)) {
      if (!removed.member_limit(l->branch)) return render_term(t);
    } else if (const auto* c = std::get_if<Children>(&t)) {
      for (const Label& lab : pool) {
        if (std::find(c->excluded.begin(), c->excluded.end(), lab) != c->excluded.end()) continue;
        NodePath n = c->node;
        n.push_back(lab);
        if (!removed.member_node(n)) return render_node(n);
      }
    } else if (const auto* s = std::get_if<Slice>(&t)) {
      for (uint32_t depth = s->k + 1; depth-- > 0;) {
        for (const Label& lab : pool) {
          NodePath n = s->node;
          for (uint32_t j = 0; j < depth; ++j) n.push_back(lab);
          if (!removed.member_node(n)) return render_node(n);
          if (depth == 0) break; // label irrelevant at depth 0
        }
      }
    } else {
      const Branch& b = std::get<Tail>(t).branch;
      size_t bound = maxdepth + b.prefix().size() + b.period().size() + 2;
      for (size_t depth = 0; depth <= bound; ++depth) {
        NodePath n = b.truncation(depth);
        if (!removed.member_node(n)) return render_node(n);
      }
    }
  }
  return std::nullopt;
}

std::string IsolatedSet::str() const {
  if (removed.empty()) return base.str();
  return "(" + base.str() + ") \\ (" + removed.str() + ")";
}

// --------------------------------------------- limits and branch criteria

namespace {

// Does the subtree at node m meet the term (valuations dominating R_m)?
bool subtree_meets_term(const Term& t, const NodePath& m) {
  auto is_prefix = [](const NodePath& a, const NodePath& b) {
    if (a.size() > b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k)
      if (a[k] != b[k]) return false;
    return true;
  };
  if (const auto* s = std::get_if<Single>(&t)) return is_prefix(m, s->node);
  if (const auto* l = std::get_if<Limit>(&t)) return l->branch.passes_through(m);
  if (const auto* c = std::get_if<Children>(&t)) {
    if (is_prefix(m, c->node)) return true; // some non-excluded child exists
    if (m.size() == c->node.size() + 1 && is_prefix(c->node, m))
      return !std::binary_search(c->excluded.begin(), c->excluded.end(), m.back());
    return false;
  }
  if (const auto* s = std::get_if<Slice>(&t)) {
    if (is_prefix(m, s->node)) return true;
    return is_prefix(s->node, m) && m.size() <= s->node.size() + s->k;
  }
  return std::get<Tail>(t).branch.passes_through(m);
}

size_t max_term_depth(const TreeSetExpr& x) {
  std::set<Label> ign;
  size_t d = 0;
  collect_labels(x, ign, d);
  return d;
}

} // namespace

bool is_limit_of_branch(const NodePath& prefix, const std::vector<Label>& period,
                        const TreeSetExpr& x) {
  Branch b(prefix, period);
  // X minus {U}: drop the branch limit itself
  std::vector<Term> kept;
  for (const Term& t : x.terms()) {
    if (const auto* l = std::get_if<Limit>(&t))
      if (l->branch == b) continue;
    kept.push_back(t);
  }
  TreeSetExpr rest = TreeSetExpr::unions(std::move(kept));
  size_t bound = max_term_depth(x) + b.prefix().size() + b.period().size() + 2;
  for (size_t i = 0; i <= bound; ++i) {
    NodePath ri = b.truncation(i);
    bool met = false;
    for (const Term& t : rest.terms())
      if (subtree_meets_term(t, ri)) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  // beyond the bound only a tail along the same branch keeps meeting X
  for (const Term& t : rest.terms())
    if (const auto* tl = std::get_if<Tail>(&t))
      if (tl->branch == b) return true;
  return false;
}

bool limits_are_divisors(const TreeSetExpr& x) {
  // condition (1): no branch-limit term survives in the derivative
  bool cond1 = true;
  TreeSetExpr dx = derivative(x);
  for (const Term& t : dx.terms())
    if (std::holds_alternative<Limit>(t)) cond1 = false;

  // condition (2): along every eventually periodic branch generated by the
  // expression, |X(R_i) /\ X| is eventually <= 1. The count is
  // non-increasing in i, and beyond every term anchor it is the number of
  // limit terms on the branch plus infinity for each tail on the branch.
  bool cond2 = true;
  for (const Term& t : x.terms()) {
    const Branch* b = nullptr;
    if (const auto* tl = std::get_if<Tail>(&t)) b = &tl->branch;
    if (const auto* l = std::get_if<Limit>(&t)) b = &l->branch;
    if (!b) continue;
    bool unbounded = false;
    size_t limits_on_branch = 0;
    for (const Term& u : x.terms()) {
      if (const auto* tl = std::get_if<Tail>(&u))
        if (tl->branch == *b) unbounded = true;
      if (const auto* l = std::get_if<Limit>(&u))
        if (l->branch == *b) ++limits_on_branch;
    }
    if (unbounded || limits_on_branch > 1) cond2 = false;
  }

  if (cond1 != cond2)
    throw std::logic_error("limit-point criteria disagree on " + x.str());
  return cond1;
}

} // namespace adk::cb
