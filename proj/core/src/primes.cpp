#include "propalg/primes.hpp"

#include <bit>
#include <stdexcept>

#include "propalg/error.hpp"

namespace propalg {

namespace {

void check_index(unsigned n, std::uint64_t j) {
  check_var_count(n);
  if (j >= (std::uint64_t{1} << n)) {
    throw ArgumentError("prime index " + std::to_string(j) +
                        " out of range for n=" + std::to_string(n));
  }
}

std::vector<BoolFunc::Word> copy_words(const BoolFunc& f) {
  return {f.words().begin(), f.words().end()};
}

template <typename Fn>
void for_each_member(const BoolFunc& members, Fn&& fn) {
  const auto words = members.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (BoolFunc::Word bits = words[i]; bits; bits &= bits - 1) {
      fn((std::uint64_t{i} << 6) | static_cast<unsigned>(std::countr_zero(bits)));
    }
  }
}

// Full clause (maxterm) for prime j: a_r appears negated iff bit (r-1) of j
// is set, so that the clause is false exactly at assignment j.
std::string clause_text(unsigned n, std::uint64_t j) {
  std::string out = "(";
  for (unsigned r = 1; r <= n; ++r) {
    if (r > 1) out += " ∨ ";
    if ((j >> (r - 1)) & 1) out += "¬";
    out += "a" + std::to_string(r);
  }
  return out + ")";
}

}  // namespace

PrimeSet PrimeSet::empty(unsigned n) { return PrimeSet(BoolFunc::zero(n)); }

PrimeSet PrimeSet::all(unsigned n) { return PrimeSet(BoolFunc::one(n)); }

PrimeSet PrimeSet::from_indices(unsigned n, std::span<const std::uint64_t> indices) {
  auto words = copy_words(BoolFunc::zero(n));
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t j : indices) {
    if (j >= limit) {
      throw ArgumentError("index " + std::to_string(j) +
                          " out of range for n=" + std::to_string(n));
    }
    words[j >> 6] |= BoolFunc::Word{1} << (j & 63);
  }
  return PrimeSet(BoolFunc::from_words(n, std::move(words)));
}

PrimeSet PrimeSet::from_indices(unsigned n, std::initializer_list<std::uint64_t> indices) {
  return from_indices(n, std::span<const std::uint64_t>(indices.begin(), indices.size()));
}

PrimeSet PrimeSet::from_membership(BoolFunc membership) {
  return PrimeSet(std::move(membership));
}

std::vector<std::uint64_t> PrimeSet::indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_member(members_, [&](std::uint64_t j) { out.push_back(j); });
  return out;
}

PrimeSet PrimeSet::complement() const { return PrimeSet(neg(members_)); }

std::string PrimeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each_member(members_, [&](std::uint64_t j) {
    if (!first) out += ", ";
    out += std::to_string(j);
    first = false;
  });
  return out + "}";
}

PrimeSet operator|(const PrimeSet& a, const PrimeSet& b) {
  return PrimeSet::from_membership(lor(a.membership(), b.membership()));
}

LiteralProduct::LiteralProduct(unsigned n, std::uint64_t positive)
    : n_(n), positive_(positive) {
  check_index(n, positive);
}

bool LiteralProduct::is_positive(unsigned r) const {
  if (r < 1 || r > n_) throw ArgumentError("variable index out of range");
  return (positive_ >> (r - 1)) & 1;
}

BoolFunc LiteralProduct::evaluate() const {
  BoolFunc acc = BoolFunc::one(n_);
  for (unsigned r = 1; r <= n_; ++r) {
    const BoolFunc v = BoolFunc::var(n_, r);
    acc = mul(acc, is_positive(r) ? v : neg(v));
  }
  return acc;
}

std::string LiteralProduct::to_string() const {
  std::string out;
  for (unsigned r = 1; r <= n_; ++r) {
    if (r > 1) out += " ∧ ";
    if (!is_positive(r)) out += "¬";
    out += "a" + std::to_string(r);
  }
  return out;
}

BoolFunc prime(unsigned n, std::uint64_t j) {
  check_index(n, j);
  return neg(BoolFunc::indicator(n, j));
}

LiteralProduct literal_form(unsigned n, std::uint64_t j) {
  return LiteralProduct(n, j);
}

PrimeSet decompose(const BoolFunc& a) { return PrimeSet::from_membership(neg(a)); }

BoolFunc compose_product(const PrimeSet& primes) {
  // Multiplying by p_j clears exactly bit j.
  auto words = copy_words(BoolFunc::one(primes.num_vars()));
  for_each_member(primes.membership(), [&](std::uint64_t j) {
    words[j >> 6] &= ~(BoolFunc::Word{1} << (j & 63));
  });
  return BoolFunc::from_words(primes.num_vars(), std::move(words));
}

BoolFunc compose_sum(const PrimeSet& primes) {
  // Adding ~p_j toggles exactly bit j.
  auto words = copy_words(BoolFunc::zero(primes.num_vars()));
  for_each_member(primes.complement().membership(), [&](std::uint64_t j) {
    words[j >> 6] ^= BoolFunc::Word{1} << (j & 63);
  });
  return BoolFunc::from_words(primes.num_vars(), std::move(words));
}

BoolFunc compose(const PrimeSet& primes) {
  BoolFunc product = compose_product(primes);
  if (product != compose_sum(primes)) {
    throw std::logic_error("prime product and negated-prime sum disagree");
  }
  return product;
}

BoolFunc orthogonal(unsigned n, std::uint64_t j, std::uint64_t k) {
  return mul(neg(prime(n, j)), neg(prime(n, k)));
}

BoolFunc basis(unsigned n, unsigned r) {
  BoolFunc direct = BoolFunc::var(n, r);
  // Summands are the ~p_i with bit (r-1) of i set; the complementary
  // indices form the prime set of a_r.
  auto words = copy_words(BoolFunc::zero(n));
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!((i >> (r - 1)) & 1)) words[i >> 6] |= BoolFunc::Word{1} << (i & 63);
  }
  BoolFunc acc = compose_sum(
      PrimeSet::from_membership(BoolFunc::from_words(n, std::move(words))));
  if (acc != direct) {
    throw std::logic_error("negated-prime sum for a" + std::to_string(r) +
                           " differs from its bit pattern");
  }
  return acc;
}

std::string prime_product_text(const PrimeSet& primes) {
  if (primes.size() == 0) return "1";
  std::string out;
  for_each_member(primes.membership(), [&](std::uint64_t j) {
    if (!out.empty()) out += " ∧ ";
    out += clause_text(primes.num_vars(), j);
  });
  return out;
}

std::string minterm_sum_text(const PrimeSet& minterms) {
  if (minterms.size() == 0) return "0";
  std::string out;
  for_each_member(minterms.membership(), [&](std::uint64_t j) {
    if (!out.empty()) out += " ∨ ";
    out += "(" + literal_form(minterms.num_vars(), j).to_string() + ")";
  });
  return out;
}

}  // namespace propalg
