#include "propalg/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "propalg/error.hpp"

namespace propalg {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view s, Int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Clause normalize_clause(const Clause& clause, unsigned n) {
  Clause out;
  out.reserve(clause.size());
  for (const Literal& lit : clause) {
    if (lit.var < 1 || lit.var > n) {
      throw ArgumentError("literal variable " + std::to_string(lit.var) +
                          " out of range 1.." + std::to_string(n));
    }
    bool duplicate = false;
    for (const Literal& seen : out) {
      if (seen.var != lit.var) continue;
      if (seen.positive != lit.positive) {
        throw ArgumentError("tautological clause: contains both " +
                            std::to_string(lit.var) + " and -" + std::to_string(lit.var));
      }
      duplicate = true;
    }
    if (!duplicate) out.push_back(lit);
  }
  return out;
}

CnfDoc parse_dimacs(std::string_view text) {
  CnfDoc doc;
  bool have_header = false;
  std::size_t expected = 0;
  Clause current;
  bool open_clause = false;
  std::size_t line_no = 0;
  std::size_t last_clause_line = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front() == "c" || tokens.front().front() == 'c') continue;
    if (tokens.front() == "%") break;

    if (tokens.front() == "p") {
      if (have_header) throw ParseError("line " + std::to_string(line_no) + ": duplicate header", line_no);
      unsigned n = 0;
      std::size_t m = 0;
      if (tokens.size() != 4 || tokens[1] != "cnf" || !parse_int(tokens[2], n) ||
          !parse_int(tokens[3], m)) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": malformed header, expected 'p cnf <vars> <clauses>'",
                         line_no);
      }
      try {
        check_var_count(n);
      } catch (const ArgumentError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
      }
      doc.n = n;
      expected = m;
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw ParseError("line " + std::to_string(line_no) + ": clause before 'p cnf' header", line_no);
    }

    for (const auto tok : tokens) {
      long long lit = 0;
      if (!parse_int(tok, lit)) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid literal '" +
                             std::string(tok) + "'",
                         line_no);
      }
      if (lit == 0) {
        try {
          doc.clauses.push_back(normalize_clause(current, doc.n));
        } catch (const ArgumentError& e) {
          throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
        current.clear();
        open_clause = false;
        continue;
      }
      const unsigned long long mag = lit < 0 ? -static_cast<unsigned long long>(lit) : lit;
      if (mag > doc.n) {
        throw ParseError("line " + std::to_string(line_no) + ": literal " + std::to_string(lit) +
                             " exceeds declared variable count " + std::to_string(doc.n),
                         line_no);
      }
      current.push_back({static_cast<unsigned>(mag), lit > 0});
      open_clause = true;
      last_clause_line = line_no;
    }
  }

  line_no = std::max<std::size_t>(line_no, 1);
  if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": missing 'p cnf' header", line_no);
  if (open_clause) {
    throw ParseError("line " + std::to_string(last_clause_line) + ": unterminated clause (missing 0)",
                     last_clause_line);
  }
  if (doc.clauses.size() != expected) {
    throw ParseError("line " + std::to_string(line_no) + ": header declares " + std::to_string(expected) + " clauses but " +
                         std::to_string(doc.clauses.size()) + " were given",
                     line_no);
  }
  return doc;
}

std::string to_dimacs(const CnfDoc& doc, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p cnf " << doc.n << ' ' << doc.clauses.size() << '\n';
  for (const auto& clause : doc.clauses) {
    for (const auto& lit : clause) out << lit.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

FormulaAst cnf_to_ast(const CnfDoc& doc) {
  NodePtr conj;
  for (const auto& clause : doc.clauses) {
    NodePtr disj;
    for (const auto& lit : clause) {
      NodePtr leaf = make_var(lit.var);
      if (!lit.positive) leaf = make_not(std::move(leaf));
      disj = disj ? make_binary(NodeKind::kOr, std::move(disj), std::move(leaf)) : std::move(leaf);
    }
    if (!disj) disj = make_const(false);
    conj = conj ? make_binary(NodeKind::kAnd, std::move(conj), std::move(disj)) : std::move(disj);
  }
  if (!conj) conj = make_const(true);
  return FormulaAst(std::move(conj), doc.n);
}

}  // namespace propalg
