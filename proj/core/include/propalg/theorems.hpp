#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "propalg/bool_func.hpp"
#include "propalg/report.hpp"

namespace propalg {

/// The annihilator K_s = {a : a * s = 0}, enumerated over all of V.
struct AnnihilatorSet {
  unsigned n;
  BoolFunc s;
  std::vector<BoolFunc> members;
};

/// Enumerates K_s; requires n <= 3 (|V| <= 256).
AnnihilatorSet annihilator(const BoolFunc& s);

/// All elements of V for n <= 3, ordered by truth-vector value.
std::vector<BoolFunc> all_elements(unsigned n);

/// Elements p != 1 with "p * a = 0 implies a = 0 or a = ~p" for every a.
/// The constant 1 meets the condition vacuously and is excluded.
std::vector<BoolFunc> primes_by_definition(unsigned n);

enum class Theorem {
  kPowerOfTwo,         // TI: annihilator splitting
  kPrimeDecomposition, // TII / TIII
  kOrthogonality,      // ~p_j * ~p_k = delta_jk ~p_k and the p_j * p_k identity
  kFullPrimeIdentity,  // product of all primes is 0, sum of all negated primes is 1
  kAllowedMaps,        // TIV
  kBasis,              // TV
  kResolution,         // resolution step as a ring calculation
  kFlipGroup,          // R_s group, pi_s formula, conservation of model count
};

std::string_view theorem_id(Theorem t);
/// Largest n the check accepts, or nullopt if it does not take n.
std::optional<unsigned> theorem_cap(Theorem t);
std::vector<Theorem> all_theorems();

/// Each verify_* throws ResourceError when n exceeds its cap.
CheckReport verify_TI(unsigned n, std::uint64_t seed = 0x71);
CheckReport verify_TII_TIII(unsigned n);
CheckReport verify_orthogonality(unsigned n);
CheckReport verify_full_prime_identity(unsigned n);
CheckReport verify_TIV(unsigned n);
CheckReport verify_TV(unsigned n);
CheckReport verify_resolution();
CheckReport verify_flip(unsigned n, std::uint64_t seed = 0xf11b);

/// Dispatches to the matching verify_*; `n` is ignored by kResolution.
CheckReport verify(Theorem t, unsigned n);

}  // namespace propalg
