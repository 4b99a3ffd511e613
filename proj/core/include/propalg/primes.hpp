#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "propalg/bool_func.hpp"

namespace propalg {

/// Index set I subset of {0, ..., 2^n - 1}, stored as a packed membership
/// bitmap. For a decomposition I_a these are the maxterm (prime) indices.
class PrimeSet {
 public:
  static PrimeSet empty(unsigned n);
  static PrimeSet all(unsigned n);
  static PrimeSet from_indices(unsigned n, std::span<const std::uint64_t> indices);
  static PrimeSet from_indices(unsigned n, std::initializer_list<std::uint64_t> indices);
  /// Set whose members are the 1-positions of `membership`.
  static PrimeSet from_membership(BoolFunc membership);

  unsigned num_vars() const noexcept { return members_.num_vars(); }
  std::uint64_t size() const noexcept { return members_.popcount(); }
  bool contains(std::uint64_t j) const { return members_.bit(j); }
  /// Ascending member list.
  std::vector<std::uint64_t> indices() const;
  PrimeSet complement() const;
  /// Membership bitmap; bit j set iff j is a member.
  const BoolFunc& membership() const noexcept { return members_; }

  /// "{0, 2}"
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  explicit PrimeSet(BoolFunc members) : members_(std::move(members)) {}

  BoolFunc members_;
};

/// Set union.
PrimeSet operator|(const PrimeSet& a, const PrimeSet& b);

/// Full product of literals, one per variable: bit (r-1) of `positive`
/// set means a_r appears positively, clear means ~a_r.
class LiteralProduct {
 public:
  LiteralProduct(unsigned n, std::uint64_t positive);

  unsigned num_vars() const noexcept { return n_; }
  bool is_positive(unsigned r) const;
  std::uint64_t positive_mask() const noexcept { return positive_; }

  /// Evaluates the product with ring operations on var / neg(var).
  BoolFunc evaluate() const;
  /// "¬a1 ∧ a2 ∧ ¬a3"
  std::string to_string() const;

  friend bool operator==(const LiteralProduct&, const LiteralProduct&) = default;

 private:
  unsigned n_;
  std::uint64_t positive_;
};

/// The logical prime p_j: the maxterm that is 0 only at assignment j.
BoolFunc prime(unsigned n, std::uint64_t j);

/// The negated prime ~p_j written as a product over all variables.
LiteralProduct literal_form(unsigned n, std::uint64_t j);

/// I_a: indices of the primes whose product is a (the zeros of a).
PrimeSet decompose(const BoolFunc& a);

/// Product of the primes indexed by I (pointwise route).
BoolFunc compose_product(const PrimeSet& primes);
/// XOR-sum of the negated primes outside I (pointwise route).
BoolFunc compose_sum(const PrimeSet& primes);
/// Inverse of decompose. Computes both routes and throws std::logic_error
/// if they disagree.
BoolFunc compose(const PrimeSet& primes);

/// ~p_j * ~p_k; equals ~p_k when j == k and zero otherwise.
BoolFunc orthogonal(unsigned n, std::uint64_t j, std::uint64_t k);

/// Basis variable a_r built as the XOR of all negated primes ~p_i whose
/// index has bit (r-1) set. Throws std::logic_error if the result does not
/// match the direct bit-pattern construction.
BoolFunc basis(unsigned n, unsigned r);

/// Conjunction of full clauses, one per prime: "(a1 ∨ ¬a2) ∧ (¬a1 ∨ a2)".
/// The empty set renders as "1".
std::string prime_product_text(const PrimeSet& primes);
/// Disjunction of full minterms for the given indices:
/// "(¬a1 ∧ a2) ∨ (a1 ∧ a2)". The empty set renders as "0".
std::string minterm_sum_text(const PrimeSet& minterms);

}  // namespace propalg
