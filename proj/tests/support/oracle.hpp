#pragma once

// Brute-force reference computations for tests. Nothing here goes through
// the library's word-parallel ring operations: formulas are evaluated one
// assignment at a time and truth vectors are plain std::vector<bool>.

#include <algorithm>
#include <cstdint>
#include <string>
#include <random>
#include <vector>

#include "propalg/bool_func.hpp"
#include "propalg/dimacs.hpp"
#include "propalg/formula.hpp"

namespace propalg::oracle {

inline bool bit_of(std::uint64_t j, unsigned r) { return (j >> (r - 1)) & 1; }

/// Value of a formula tree at assignment j.
inline bool eval_at(const NodePtr& node, std::uint64_t j) {
  switch (node->kind) {
    case NodeKind::kConst: return node->value;
    case NodeKind::kVar: return bit_of(j, node->var);
    case NodeKind::kNot: return !eval_at(node->lhs, j);
    case NodeKind::kAnd: return eval_at(node->lhs, j) && eval_at(node->rhs, j);
    case NodeKind::kOr: return eval_at(node->lhs, j) || eval_at(node->rhs, j);
    case NodeKind::kXor: return eval_at(node->lhs, j) != eval_at(node->rhs, j);
    case NodeKind::kImplies: return !eval_at(node->lhs, j) || eval_at(node->rhs, j);
  }
  return false;
}

inline std::vector<bool> truth_table(const FormulaAst& f) {
  std::vector<bool> out(std::size_t{1} << f.num_vars());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = eval_at(f.root(), j);
  return out;
}

inline bool clause_true(const Clause& clause, std::uint64_t j) {
  for (const auto& lit : clause) {
    if (bit_of(j, lit.var) == lit.positive) return true;
  }
  return false;
}

inline bool cnf_true(const CnfDoc& doc, std::uint64_t j) {
  for (const auto& clause : doc.clauses) {
    if (!clause_true(clause, j)) return false;
  }
  return true;
}

/// Number of assignments satisfying every clause.
inline std::uint64_t count_cnf_models(const CnfDoc& doc) {
  std::uint64_t count = 0;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << doc.n); ++j) count += cnf_true(doc, j);
  return count;
}

inline std::vector<bool> to_bools(const BoolFunc& f) {
  std::vector<bool> out(static_cast<std::size_t>(f.size()));
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.bit(j);
  return out;
}

inline BoolFunc from_bools(const std::vector<bool>& tt) {
  std::string s(tt.size(), '0');
  for (std::size_t j = 0; j < tt.size(); ++j) {
    if (tt[j]) s[tt.size() - 1 - j] = '1';
  }
  return BoolFunc::from_binary(s);
}

/// ANF coefficient of monomial m: XOR of f over every sub-assignment of m.
inline std::vector<bool> anf_coefficients(const std::vector<bool>& tt) {
  std::vector<bool> out(tt.size());
  for (std::size_t m = 0; m < tt.size(); ++m) {
    bool acc = false;
    for (std::size_t sub = m;; sub = (sub - 1) & m) {
      acc = acc != tt[sub];
      if (sub == 0) break;
    }
    out[m] = acc;
  }
  return out;
}

/// Evaluates an XOR of monomials (bit masks) at every assignment.
inline std::vector<bool> eval_monomials(unsigned n, const std::vector<std::uint32_t>& monomials) {
  std::vector<bool> out(std::size_t{1} << n);
  for (std::size_t j = 0; j < out.size(); ++j) {
    bool acc = false;
    for (auto m : monomials) acc = acc != ((j & m) == m);
    out[j] = acc;
  }
  return out;
}

inline BoolFunc random_func(unsigned n, std::mt19937_64& rng) {
  std::vector<BoolFunc::Word> w(detail::word_count(n));
  for (auto& x : w) x = rng();
  w.front() &= detail::tail_mask(n);
  return BoolFunc::from_words(n, std::move(w));
}

/// Random CNF without tautological clauses; clause widths 1..n.
inline CnfDoc random_cnf(unsigned n, unsigned clauses, std::mt19937_64& rng) {
  CnfDoc doc{n, {}};
  std::uniform_int_distribution<unsigned> width(1, n);
  for (unsigned c = 0; c < clauses; ++c) {
    std::vector<unsigned> vars(n);
    for (unsigned r = 0; r < n; ++r) vars[r] = r + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(std::min(width(rng), n));
    Clause clause;
    for (unsigned v : vars) clause.push_back({v, static_cast<bool>(rng() & 1)});
    doc.clauses.push_back(std::move(clause));
  }
  return doc;
}

/// Random formula tree over n variables with the given depth budget.
inline NodePtr random_tree(unsigned n, unsigned depth, std::mt19937_64& rng) {
  const unsigned pick = static_cast<unsigned>(rng() % (depth == 0 ? 3 : 8));
  switch (pick) {
    case 0: return make_const(rng() & 1);
    case 1:
    case 2: return make_var(1 + static_cast<unsigned>(rng() % n));
    case 3: return make_not(random_tree(n, depth - 1, rng));
    case 4: return make_binary(NodeKind::kAnd, random_tree(n, depth - 1, rng), random_tree(n, depth - 1, rng));
    case 5: return make_binary(NodeKind::kOr, random_tree(n, depth - 1, rng), random_tree(n, depth - 1, rng));
    case 6: return make_binary(NodeKind::kXor, random_tree(n, depth - 1, rng), random_tree(n, depth - 1, rng));
    default:
      return make_binary(NodeKind::kImplies, random_tree(n, depth - 1, rng), random_tree(n, depth - 1, rng));
  }
}

}  // namespace propalg::oracle
