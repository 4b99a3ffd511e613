#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "propalg/bool_func.hpp"
#include "propalg/flip_group.hpp"

namespace propalg {

enum class NodeKind { kConst, kVar, kNot, kAnd, kOr, kXor, kImplies };

struct FormulaNode;
using NodePtr = std::shared_ptr<const FormulaNode>;

/// Immutable formula tree node. `value` is meaningful for kConst, `var`
/// (1-based) for kVar; `lhs` is the operand of kNot.
struct FormulaNode {
  NodeKind kind;
  bool value = false;
  unsigned var = 0;
  NodePtr lhs;
  NodePtr rhs;
};

NodePtr make_const(bool value);
NodePtr make_var(unsigned r);
NodePtr make_not(NodePtr operand);
NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs);

/// Structural equality of two trees.
bool same_tree(const NodePtr& a, const NodePtr& b);

/// A parsed formula over a declared variable count. When the source used
/// bare identifiers, `names()[r-1]` is the identifier mapped to a_r in
/// first-appearance order; otherwise `names()` is empty.
class FormulaAst {
 public:
  FormulaAst(NodePtr root, unsigned n, std::vector<std::string> names = {});

  const NodePtr& root() const noexcept { return root_; }
  unsigned num_vars() const noexcept { return n_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Source text in the parser's grammar; re-parsing gives the same tree.
  std::string to_string() const;
  /// "x=a1 y=a2" for bare identifiers, empty otherwise.
  std::string name_map() const;

  friend bool operator==(const FormulaAst& a, const FormulaAst& b) {
    return a.n_ == b.n_ && a.names_ == b.names_ && same_tree(a.root_, b.root_);
  }

 private:
  NodePtr root_;
  unsigned n_;
  std::vector<std::string> names_;
};

/// Parses the formula grammar:
///   implication := disjunction [ "->" implication ]
///   disjunction := conjunction { ("|" | "^") conjunction }   (one operator kind per level)
///   conjunction := unary { "&" unary }
///   unary       := "!" unary | atom
///   atom        := "0" | "1" | variable | "(" implication ")"
/// Variables are `a1..a<n>` or bare identifiers numbered by first
/// appearance; the two styles cannot be mixed. When `n` is absent it is
/// inferred from the highest variable index (at least 1).
FormulaAst parse_formula(std::string_view text, std::optional<unsigned> n = std::nullopt);

/// Evaluates the formula in the ring: & -> mul, | -> lor, ^ -> add,
/// ! -> neg, a -> b -> lor(neg(a), b).
BoolFunc eval_ast(const FormulaAst& f);

/// Replaces every flipped a_r by !a_r, collapsing double negations.
FormulaAst ast_flip(const FormulaAst& f, const FlipMask& s);

}  // namespace propalg
