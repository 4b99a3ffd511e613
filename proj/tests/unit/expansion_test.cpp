#include "propalg/expansion.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "propalg/error.hpp"
#include "propalg/truth_maps.hpp"

namespace propalg {
namespace {

TEST(ExpansionTest, BlowUpExample) {
  // (a1 | a2 | !a3) over four variables.
  const Clause clause{{1, true}, {2, true}, {3, false}};
  const PrimeSet blown = clause_blowup(clause, 4);
  const Clause with_pos{{1, true}, {2, true}, {3, false}, {4, true}};
  const Clause with_neg{{1, true}, {2, true}, {3, false}, {4, false}};
  EXPECT_EQ(blown, PrimeSet::from_indices(4, {full_clause_index(with_pos, 4),
                                              full_clause_index(with_neg, 4)}));
  EXPECT_EQ(blown.indices(), (std::vector<std::uint64_t>{4, 12}));
  EXPECT_EQ(compose(blown), eval_ast(cnf_to_ast(CnfDoc{4, {clause}})));
}

TEST(ExpansionTest, FullAndEmptyClauses) {
  const Clause full{{1, false}, {2, true}, {3, false}};
  EXPECT_EQ(clause_blowup(full, 3).size(), 1u);
  EXPECT_EQ(full_clause_index(full, 3), 5u);
  EXPECT_EQ(clause_blowup({}, 2), PrimeSet::all(2));
  EXPECT_THROW(full_clause_index({{1, true}}, 2), ArgumentError);
}

TEST(ExpansionTest, ResolutionPremise) {
  const CnfDoc doc = parse_dimacs("p cnf 3 2\n1 2 0\n-1 3 0\n");
  const PrimeSet primes = cnf_to_primes(doc);
  EXPECT_EQ(primes.size(), 4u);
  EXPECT_EQ(count_models(compose(primes)), 4u);
}

TEST(ExpansionTest, BlowUpSizeIsPowerOfTwo) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(trial % 12);
    const CnfDoc doc = oracle::random_cnf(n, 1, rng);
    const Clause& clause = doc.clauses[0];
    const PrimeSet blown = clause_blowup(clause, n);
    ASSERT_EQ(blown.size(), std::uint64_t{1} << (n - clause.size()));
    // Every member is an assignment falsifying the clause, and vice versa.
    for (std::uint64_t j = 0; j < blown.membership().size(); ++j) {
      ASSERT_EQ(blown.contains(j), !oracle::clause_true(clause, j));
    }
  }
}

TEST(ExpansionTest, RandomCnfMatchesBruteForce) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 12);
    const CnfDoc doc = oracle::random_cnf(n, static_cast<unsigned>(rng() % 51), rng);
    const BoolFunc f = compose(cnf_to_primes(doc));
    ASSERT_EQ(f, eval_ast(cnf_to_ast(doc)));
    ASSERT_EQ(count_models(f), oracle::count_cnf_models(doc));
  }
}

TEST(ExpansionTest, PrimesToCnf) {
  const CnfDoc doc = primes_to_cnf(PrimeSet::from_indices(2, {1, 2}));
  EXPECT_EQ(doc.n, 2u);
  EXPECT_EQ(doc.clauses, (std::vector<Clause>{{{1, false}, {2, true}}, {{1, true}, {2, false}}}));

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(trial % 9);
    const PrimeSet set = decompose(oracle::random_func(n, rng));
    const CnfDoc full = primes_to_cnf(set);
    ASSERT_EQ(cnf_to_primes(full), set);
    for (const Clause& c : full.clauses) ASSERT_EQ(c.size(), n);
  }
}

}  // namespace
}  // namespace propalg
