#include "propalg/truth_maps.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "propalg/error.hpp"
#include "propalg/primes.hpp"

namespace propalg {
namespace {

TEST(TruthMapsTest, EvalExamples) {
  EXPECT_TRUE(eval(BoolFunc::var(3, 2), Assignment(3, 6)));
  EXPECT_FALSE(eval(BoolFunc::var(3, 1), Assignment(3, 6)));
  for (std::uint64_t j = 0; j < 8; ++j) {
    EXPECT_TRUE(eval(BoolFunc::one(3), Assignment(3, j)));
    for (std::uint64_t k = 0; k < 8; ++k) {
      EXPECT_EQ(eval(neg(prime(3, k)), Assignment(3, j)), j == k);
    }
  }
  EXPECT_THROW(Assignment(2, 4), ArgumentError);
  EXPECT_THROW(eval(BoolFunc::one(2), Assignment(3, 0)), ArgumentError);
}

TEST(TruthMapsTest, AssignmentText) {
  EXPECT_EQ(Assignment(3, 5).to_string(), "j=5: a1=1 a2=0 a3=1");
  EXPECT_TRUE(Assignment(3, 5).value(3));
  EXPECT_FALSE(Assignment(3, 5).value(2));
}

TEST(TruthMapsTest, CountExamples) {
  EXPECT_EQ(count_models(BoolFunc::one(5)), 32u);
  EXPECT_EQ(count_models(BoolFunc::zero(5)), 0u);
  EXPECT_EQ(count_models(lor(BoolFunc::var(2, 1), BoolFunc::var(2, 2))), 3u);
}

TEST(TruthMapsTest, SatisfyingAssignments) {
  EXPECT_TRUE(satisfying_assignments(BoolFunc::zero(3)).empty());
  const auto one_hot = satisfying_assignments(neg(prime(3, 6)));
  ASSERT_EQ(one_hot.size(), 1u);
  EXPECT_EQ(one_hot[0].index(), 6u);
  const auto sat = satisfying_assignments(BoolFunc::var(2, 1));
  ASSERT_EQ(sat.size(), 2u);
  EXPECT_EQ(sat[0].index(), 1u);
  EXPECT_EQ(sat[1].index(), 3u);
}

// T_j(a + b) = T_j(a) xor T_j(b) and T_j(a * b) = T_j(a) and T_j(b).
TEST(TruthMapsTest, CompositionalityExhaustive) {
  for (unsigned n = 1; n <= 2; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t x = 0; x < count; ++x) {
      for (std::uint64_t y = 0; y < count; ++y) {
        const BoolFunc a = BoolFunc::from_bits(n, x);
        const BoolFunc b = BoolFunc::from_bits(n, y);
        for (std::uint64_t j = 0; j < a.size(); ++j) {
          const Assignment t(n, j);
          ASSERT_EQ(eval(add(a, b), t), eval(a, t) != eval(b, t));
          ASSERT_EQ(eval(mul(a, b), t), eval(a, t) && eval(b, t));
        }
      }
    }
  }
}

TEST(TruthMapsTest, CompositionalityRandomized) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(trial % 10);
    const BoolFunc a = oracle::random_func(n, rng);
    const BoolFunc b = oracle::random_func(n, rng);
    const Assignment t(n, rng() % a.size());
    ASSERT_EQ(eval(add(a, b), t), eval(a, t) != eval(b, t));
    ASSERT_EQ(eval(mul(a, b), t), eval(a, t) && eval(b, t));
  }
}

TEST(TruthMapsTest, CountIsComplementOfPrimeCount) {
  for (unsigned n = 1; n <= 3; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t x = 0; x < count; ++x) {
      const BoolFunc a = BoolFunc::from_bits(n, x);
      std::uint64_t brute = 0;
      for (std::uint64_t j = 0; j < a.size(); ++j) brute += (x >> j) & 1;
      ASSERT_EQ(count_models(a), brute);
      ASSERT_EQ(count_models(a), a.size() - decompose(a).size());
    }
  }
}

TEST(TruthMapsTest, DerivationYieldsTwoConventions) {
  const auto conventions = derive_truth_conventions();
  ASSERT_EQ(conventions.size(), 2u);
  const TruthConvention b{1, 0, {{{1, 0}, {0, 1}}}, {{{0, 1}, {1, 1}}}};
  EXPECT_EQ(conventions[0] == kAdoptedConvention || conventions[1] == kAdoptedConvention, true);
  EXPECT_EQ(conventions[0] == b || conventions[1] == b, true);
}

TEST(TruthMapsTest, AdoptedTables) {
  EXPECT_EQ(kAndTable[0][0], 0);
  EXPECT_EQ(kAndTable[0][1], 0);
  EXPECT_EQ(kAndTable[1][1], 1);
  EXPECT_EQ(kXorTable[0][0], 0);
  EXPECT_EQ(kXorTable[1][1], 0);
  EXPECT_EQ(kXorTable[0][1], 1);
  EXPECT_EQ(kXorTable[1][0], 1);
}

TEST(TruthMapsTest, AllowedMapsMatchAssignments) {
  for (unsigned n = 1; n <= 2; ++n) {
    const AllowedMapTable table = enumerate_allowed_maps(n);
    ASSERT_EQ(table.maps.size(), std::size_t{1} << n);
    std::set<std::uint64_t> picked;
    for (const AllowedMap& map : table.maps) {
      ASSERT_LT(map.assignment, std::uint64_t{1} << n);
      picked.insert(map.assignment);
      // Element e of V is the function with truth vector e.
      for (std::uint64_t e = 0; e < (std::uint64_t{1} << (1u << n)); ++e) {
        const bool image = (map.values >> e) & 1;
        ASSERT_EQ(image, eval(BoolFunc::from_bits(n, e), Assignment(n, map.assignment)));
      }
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
        const std::uint64_t element = neg(prime(n, k)).low_word();
        ASSERT_EQ((map.values >> element) & 1, k == map.assignment ? 1u : 0u);
      }
    }
    EXPECT_EQ(picked.size(), table.maps.size());
  }
  EXPECT_THROW(enumerate_allowed_maps(3), ResourceError);
}

}  // namespace
}  // namespace propalg
