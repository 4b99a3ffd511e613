#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "propalg/formula.hpp"

namespace propalg {

struct Literal {
  unsigned var;   // 1-based
  bool positive;

  /// Signed DIMACS form: +var or -var.
  long long dimacs() const noexcept {
    return positive ? static_cast<long long>(var) : -static_cast<long long>(var);
  }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Disjunction of literals; each variable appears at most once. The empty
/// clause is the constant 0.
using Clause = std::vector<Literal>;

/// Conjunction of clauses over n variables. No clauses means constant 1.
struct CnfDoc {
  unsigned n = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfDoc&, const CnfDoc&) = default;
};

/// Parses DIMACS cnf: optional "c" comment lines, a "p cnf <n> <m>" header,
/// then m clauses of nonzero signed literals each terminated by 0 (clauses
/// may span lines; a lone "%" line ends the clause section). Duplicate
/// literals in a clause are merged; a clause holding both x and -x is
/// rejected. ParseError::position() is the 1-based line number.
CnfDoc parse_dimacs(std::string_view text);

/// Emits DIMACS; each `comments` entry becomes a leading "c " line.
std::string to_dimacs(const CnfDoc& doc, const std::vector<std::string>& comments = {});

/// The CNF as a formula tree: conjunction of disjunctions.
FormulaAst cnf_to_ast(const CnfDoc& doc);

/// Merges duplicate literals and rejects complementary pairs. Throws
/// ArgumentError on a tautological clause or a variable outside 1..n.
Clause normalize_clause(const Clause& clause, unsigned n);

}  // namespace propalg
