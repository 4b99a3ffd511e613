#include "propalg/anf.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "propalg/error.hpp"

namespace propalg {
namespace {

constexpr Monomial m(std::initializer_list<unsigned> vars) {
  Monomial out = 0;
  for (unsigned r : vars) out |= Monomial{1} << (r - 1);
  return out;
}

std::vector<Monomial> monos(const Anf& p) { return {p.monomials().begin(), p.monomials().end()}; }

TEST(AnfTest, Examples) {
  EXPECT_EQ(monos(to_anf(BoolFunc::one(3))), std::vector<Monomial>{0});
  EXPECT_EQ(monos(to_anf(BoolFunc::var(2, 1))), std::vector<Monomial>{m({1})});
  const Anf disj = to_anf(lor(BoolFunc::var(2, 1), BoolFunc::var(2, 2)));
  EXPECT_EQ(monos(disj), (std::vector<Monomial>{m({1}), m({2}), m({1, 2})}));
  EXPECT_EQ(disj.to_string(), "a1 ⊕ a2 ⊕ a1·a2");

  EXPECT_EQ(from_anf(Anf(2, {0})).to_binary(), "1111");
  EXPECT_EQ(from_anf(Anf::zero(2)).to_binary(), "0000");
  EXPECT_EQ(from_anf(Anf(2, {m({1}), m({2})})).to_binary(), "0110");
  EXPECT_EQ(Anf::zero(3).to_string(), "0");
}

TEST(AnfTest, DuplicatesCancel) {
  const Anf p(3, {m({1}), m({2}), m({1}), m({1})});
  EXPECT_EQ(monos(p), (std::vector<Monomial>{m({1}), m({2})}));
  EXPECT_TRUE(Anf(3, {m({3}), m({3})}).is_zero());
  EXPECT_THROW(Anf(2, {m({3})}), ArgumentError);
}

TEST(AnfTest, CanonicalOrderIsDegreeThenLexicographic) {
  const Anf p(4, {m({2, 3}), m({4}), 0, m({1, 3}), m({1, 2, 4}), m({1}), m({1, 2})});
  EXPECT_EQ(p.to_string(), "1 ⊕ a1 ⊕ a4 ⊕ a1·a2 ⊕ a1·a3 ⊕ a2·a3 ⊕ a1·a2·a4");
  EXPECT_EQ(p.degree(), 3u);
  EXPECT_TRUE(monomial_less(m({1, 3}), m({2, 3})));
  EXPECT_FALSE(monomial_less(m({2, 3}), m({1, 3})));
  EXPECT_TRUE(monomial_less(m({4}), m({1, 2})));
}

// Independent coefficient formula: c_m = XOR of f over all sub-assignments of m.
TEST(AnfTest, MatchesSubsetSumOracle) {
  std::mt19937_64 rng(5);
  for (unsigned n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const BoolFunc f = oracle::random_func(n, rng);
      const auto coeffs = oracle::anf_coefficients(oracle::to_bools(f));
      std::vector<Monomial> expected;
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i]) expected.push_back(static_cast<Monomial>(i));
      }
      EXPECT_EQ(to_anf(f), Anf(n, expected));
      // from_anf agrees with monomial-by-monomial evaluation.
      EXPECT_EQ(oracle::to_bools(from_anf(Anf(n, expected))),
                oracle::eval_monomials(n, expected));
    }
  }
}

TEST(AnfTest, RoundTripExhaustive) {
  for (unsigned n = 1; n <= 3; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t x = 0; x < count; ++x) {
      const BoolFunc f = BoolFunc::from_bits(n, x);
      ASSERT_EQ(from_anf(to_anf(f)), f);
    }
  }
}

TEST(AnfTest, RoundTripRandomized) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(trial % 10);
    const BoolFunc f = oracle::random_func(n, rng);
    ASSERT_EQ(from_anf(to_anf(f)), f);
  }
}

TEST(AnfTest, PolynomialArithmeticAgreesWithTruthVectors) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(trial % 7);
    const BoolFunc a = oracle::random_func(n, rng);
    const BoolFunc b = oracle::random_func(n, rng);
    const Anf pa = to_anf(a);
    const Anf pb = to_anf(b);
    ASSERT_EQ(pa + pb, to_anf(add(a, b)));
    ASSERT_EQ(pa * pb, to_anf(mul(a, b)));
  }
}

TEST(AnfTest, NegationAddsTheConstant) {
  const BoolFunc f = BoolFunc::var(3, 2);
  EXPECT_EQ(to_anf(neg(f)), to_anf(f) + Anf(3, {0}));
  EXPECT_EQ(to_anf(neg(f)).to_string(), "1 ⊕ a2");
}

}  // namespace
}  // namespace propalg
