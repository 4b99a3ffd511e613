#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "propalg/bool_func.hpp"
#include "propalg/report.hpp"

namespace propalg {

/// Selects the variables R_s negates: bit (r-1) of the mask flips a_r.
class FlipMask {
 public:
  FlipMask(unsigned n, std::uint64_t s);

  /// Accepts a decimal mask ("5") or a variable list ("a1,a3").
  static FlipMask parse(unsigned n, std::string_view text);

  unsigned num_vars() const noexcept { return n_; }
  std::uint64_t value() const noexcept { return s_; }
  bool flips(unsigned r) const;

  /// "a1,a3"; the identity mask renders as "-".
  std::string to_string() const;

  friend bool operator==(const FlipMask&, const FlipMask&) = default;

 private:
  unsigned n_;
  std::uint64_t s_;
};

/// R_s(a): substitutes ~a_r for every flipped a_r. Bit j of the result is
/// bit pi_s(j) of a.
BoolFunc apply_flip(const BoolFunc& a, const FlipMask& s);

/// The induced permutation of assignment indices, evaluated with the
/// arithmetic formula s + j - 2 * sum_r 2^(r-1) s_r j_r.
std::uint64_t pi(const FlipMask& s, std::uint64_t j);

/// Default cap for flip_group_check.
inline constexpr unsigned kGroupCheckLimit = 6;

/// Group axioms on R_0..R_{2^n-1}: R_0 = id, R_s o R_s = id,
/// R_s o R_t = R_{s xor t}, and every R_s permutes the primes as pi_s
/// does. Exhaustive over V for n <= 3, sampled (deterministic seed) above.
/// Throws ResourceError for n > kGroupCheckLimit.
CheckReport flip_group_check(unsigned n, std::uint64_t seed = 0x5eed);

/// count_models(R_s(a)) == count_models(a), for every mask or the given ones.
CheckReport conservation_check(const BoolFunc& a);
CheckReport conservation_check(const BoolFunc& a, std::span<const std::uint64_t> masks);

/// pi_s(j) via the arithmetic formula equals j xor s, and pi_s is an
/// involution, exhaustively over all s, j < 2^n.
CheckReport pi_formula_check(unsigned n);

/// T_j(R_s(F)) == T_{pi_s(j)}(F) for every s and j; over all of V for
/// n <= 3, over `samples` seeded random elements above.
CheckReport flip_evaluation_check(unsigned n, std::uint64_t seed = 0x5eed, unsigned samples = 64);

}  // namespace propalg
