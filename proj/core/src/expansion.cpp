#include "propalg/expansion.hpp"

#include "propalg/error.hpp"

namespace propalg {

namespace {

// The clause is false only where every literal is false: a positive a_r
// needs bit (r-1) clear, a negative one needs it set.
std::uint64_t falsifying_bits(const Clause& clause) {
  std::uint64_t bits = 0;
  for (const Literal& lit : clause) {
    if (!lit.positive) bits |= std::uint64_t{1} << (lit.var - 1);
  }
  return bits;
}

void blow_up(std::uint64_t index, const std::vector<unsigned>& missing, std::size_t next,
             std::vector<BoolFunc::Word>& out) {
  if (next == missing.size()) {
    out[index >> 6] |= BoolFunc::Word{1} << (index & 63);
    return;
  }
  // (C) = (C ∨ a_r)(C ∨ ¬a_r)
  blow_up(index, missing, next + 1, out);
  blow_up(index | (std::uint64_t{1} << (missing[next] - 1)), missing, next + 1, out);
}

void blow_up_into(const Clause& clause, unsigned n, std::vector<BoolFunc::Word>& out) {
  const Clause c = normalize_clause(clause, n);
  std::vector<bool> present(n + 1, false);
  for (const Literal& lit : c) present[lit.var] = true;
  std::vector<unsigned> missing;
  for (unsigned r = 1; r <= n; ++r) {
    if (!present[r]) missing.push_back(r);
  }
  blow_up(falsifying_bits(c), missing, 0, out);
}

}  // namespace

PrimeSet clause_blowup(const Clause& clause, unsigned n) {
  check_var_count(n);
  std::vector<BoolFunc::Word> words(detail::word_count(n), 0);
  blow_up_into(clause, n, words);
  return PrimeSet::from_membership(BoolFunc::from_words(n, std::move(words)));
}

std::uint64_t full_clause_index(const Clause& clause, unsigned n) {
  const Clause c = normalize_clause(clause, n);
  if (c.size() != n) {
    throw ArgumentError("clause has " + std::to_string(c.size()) + " literals, expected " +
                        std::to_string(n));
  }
  return falsifying_bits(c);
}

PrimeSet cnf_to_primes(const CnfDoc& doc) {
  check_var_count(doc.n);
  std::vector<BoolFunc::Word> words(detail::word_count(doc.n), 0);
  for (const Clause& clause : doc.clauses) blow_up_into(clause, doc.n, words);
  return PrimeSet::from_membership(BoolFunc::from_words(doc.n, std::move(words)));
}

CnfDoc primes_to_cnf(const PrimeSet& primes) {
  CnfDoc doc{primes.num_vars(), {}};
  for (std::uint64_t j : primes.indices()) {
    Clause clause;
    clause.reserve(doc.n);
    for (unsigned r = 1; r <= doc.n; ++r) clause.push_back({r, !((j >> (r - 1)) & 1)});
    doc.clauses.push_back(std::move(clause));
  }
  return doc;
}

}  // namespace propalg
