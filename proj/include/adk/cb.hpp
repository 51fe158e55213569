#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace adk::cb {

// The Cantor-Bendixson calculus works on the abstract quadratic tree: nodes
// are paths of center labels, every node has infinitely many children, and
// eventually periodic branches carry a limit valuation that is not a prime
// divisor. Labels are opaque strings ("0", "inf", "1/2", "root(t^2+2)#0").

using Label = std::string;
using NodePath = std::vector<Label>;

std::string render_node(const NodePath& n);
NodePath parse_node(const std::string& text);

// prefix . period^omega, canonicalized: minimal period, shortest prefix.
class Branch {
public:
  Branch(NodePath prefix, std::vector<Label> period);
  const NodePath& prefix() const { return prefix_; }
  const std::vector<Label>& period() const { return period_; }
  Label at(size_t depth) const;
  NodePath truncation(size_t depth) const;
  bool passes_through(const NodePath& node) const;
  bool operator==(const Branch& o) const;

private:
  NodePath prefix_;
  std::vector<Label> period_;
};

struct Single {
  NodePath node;
};
// The branch-limit valuation as a one-point set.
struct Limit {
  Branch branch;
  Limit(Branch b) : branch(std::move(b)) {}
};
// All children of a node except a finite set: an infinite set of nodes.
struct Children {
  NodePath node;
  std::vector<Label> excluded; // sorted, distinct
};
// All descendants of a node at relative depth <= k, the node included.
struct Slice {
  NodePath node;
  uint32_t k = 0;
};
// All finite truncations of an eventually periodic branch.
struct Tail {
  Branch branch;
  Tail(Branch b) : branch(std::move(b)) {}
};

using Term = std::variant<Single, Limit, Children, Slice, Tail>;

// Finite union of terms, deduplicated and canonically ordered. The class is
// closed under the Cantor-Bendixson derivative.
class TreeSetExpr {
public:
  TreeSetExpr() = default; // the empty set
  static TreeSetExpr of(Term t);
  static TreeSetExpr unions(std::vector<Term> ts);
  TreeSetExpr unioned(const TreeSetExpr& o) const;

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); } // no term denotes the empty set

  bool member_node(const NodePath& n) const;
  bool member_limit(const Branch& b) const;

  bool operator==(const TreeSetExpr& o) const; // syntactic on canonical form

  std::string str() const; // "{}" when empty
  // single([0,inf]) | children([], exclude=[0]) | slice([], 2) |
  // branchtail([], period=[0]) | branchlimit([], period=[0]), unions with +.
  static TreeSetExpr parse(const std::string& text);

private:
  std::vector<Term> terms_;
};

// The set of patch limit points, computed term by term:
// d Single = {}, d Limit = {}, d Children(S, E) = {S}, d Slice(S, k) =
// Slice(S, k-1) (empty for k = 0), d Tail(b) = {limit(b)}.
TreeSetExpr derivative(const TreeSetExpr& x);

struct CBReport {
  std::vector<TreeSetExpr> chain; // X^0, X^1, ..., X^rank (the first empty)
  unsigned rank = 0;              // smallest n with X^n = X^(n+1)
  bool scattered = true;          // certified by the finite rank
};

CBReport cb_rank(const TreeSetExpr& x);

// X minus derivative(X) with membership and emptiness decision procedures.
struct IsolatedSet {
  TreeSetExpr base;
  TreeSetExpr removed;
  bool contains_node(const NodePath& n) const;
  bool contains_limit(const Branch& b) const;
  // Witness of nonemptiness (rendered node or branch limit), if any.
  std::optional<std::string> witness() const;
  bool empty() const { return !witness().has_value(); }
  std::string str() const;
};

IsolatedSet isolated_points(const TreeSetExpr& x);

// True iff every patch limit point of the denoted set is a prime divisor
// (no branch-limit term survives in the derivative). Also evaluates the
// sequence criterion |X(R_i) /\ X| <= 1 along every branch generated by the
// expression's tail terms and insists the two answers agree.
bool limits_are_divisors(const TreeSetExpr& x);

// The limit criterion along an eventually periodic branch U: U is a patch
// limit of X iff X(R_i) /\ (X minus {U}) is nonempty for every i.
bool is_limit_of_branch(const NodePath& prefix, const std::vector<Label>& period,
                        const TreeSetExpr& x);

} // namespace adk::cb
