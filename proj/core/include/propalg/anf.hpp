#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "propalg/bool_func.hpp"

namespace propalg {

/// A monomial is the set of variables it multiplies, as a bit mask: bit
/// (r-1) set means a_r is a factor. The empty mask is the constant 1.
using Monomial = std::uint32_t;

/// Canonical monomial order: by degree, then lexicographically by the
/// ascending list of variable indices.
bool monomial_less(Monomial lhs, Monomial rhs) noexcept;

/// Algebraic normal form: an XOR of AND-monomials. The empty polynomial
/// is 0. Monomials are kept unique and in canonical order, so two Anf
/// values are equal iff they denote the same element.
class Anf {
 public:
  /// Builds from an arbitrary monomial list. Duplicates cancel in pairs.
  Anf(unsigned n, std::vector<Monomial> monomials);

  static Anf zero(unsigned n) { return Anf(n, {}); }

  unsigned num_vars() const noexcept { return n_; }
  std::span<const Monomial> monomials() const noexcept { return monomials_; }
  bool is_zero() const noexcept { return monomials_.empty(); }
  /// Highest monomial degree; 0 for constants.
  unsigned degree() const noexcept;

  /// Renders as "1 ⊕ a1 ⊕ a1·a2"; the zero polynomial renders as "0".
  std::string to_string() const;

  friend bool operator==(const Anf&, const Anf&) = default;

 private:
  unsigned n_;
  std::vector<Monomial> monomials_;
};

/// Sum: symmetric difference of the monomial sets.
Anf operator+(const Anf& a, const Anf& b);
/// Product with idempotent reduction (a_r * a_r = a_r) and XOR cancellation.
Anf operator*(const Anf& a, const Anf& b);

/// Unique ANF of a truth vector (binary Moebius transform).
Anf to_anf(const BoolFunc& f);
/// Truth vector of an ANF; inverse of to_anf.
BoolFunc from_anf(const Anf& p);

/// In-place binary Moebius transform over a packed truth vector. The
/// transform is an involution.
void moebius_transform(unsigned n, std::span<BoolFunc::Word> words) noexcept;

}  // namespace propalg
