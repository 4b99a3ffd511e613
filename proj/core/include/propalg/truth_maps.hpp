#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "propalg/bool_func.hpp"

namespace propalg {

/// Truth assignment T_j over n variables. Variable a_r takes the value of
/// bit (r-1) of the index.
class Assignment {
 public:
  Assignment(unsigned n, std::uint64_t index);

  unsigned num_vars() const noexcept { return n_; }
  std::uint64_t index() const noexcept { return index_; }
  bool value(unsigned r) const;

  /// "j=5: a1=1 a2=0 a3=1"
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  unsigned n_;
  std::uint64_t index_;
};

/// T_j(a).
bool eval(const BoolFunc& a, const Assignment& j);

/// Exact number of satisfying assignments.
std::uint64_t count_models(const BoolFunc& a);

/// Satisfying assignments in ascending index order.
std::vector<Assignment> satisfying_assignments(const BoolFunc& a);

/// A binary table h(x, y) on {0,1}; entry [x][y].
using BinaryTable = std::array<std::array<std::uint8_t, 2>, 2>;

inline constexpr BinaryTable kXorTable{{{0, 1}, {1, 0}}};
inline constexpr BinaryTable kAndTable{{{0, 0}, {0, 1}}};

/// One self-consistent way to map the ring onto {0,1}: images of the
/// neutral elements together with the induced sum table f and product
/// table g.
struct TruthConvention {
  std::uint8_t image_of_zero;
  std::uint8_t image_of_one;
  BinaryTable sum_table;
  BinaryTable product_table;

  friend bool operator==(const TruthConvention&, const TruthConvention&) = default;
};

/// Enumerates every (T(0), T(1), f, g) with symmetric f, g that satisfies
/// the neutral-element laws a*1 = a, a*0 = 0, a+0 = a and a+a = 0 under a
/// compositional map that hits both 0 and 1. Returns the survivors.
std::vector<TruthConvention> derive_truth_conventions();

/// The adopted convention: T(0) = 0, T(1) = 1, f = XOR, g = AND.
inline constexpr TruthConvention kAdoptedConvention{0, 1, kXorTable, kAndTable};

/// Largest n for which enumerate_allowed_maps is feasible.
inline constexpr unsigned kAllowedMapSearchLimit = 2;

/// A map V -> {0,1}. Elements of V are numbered by the integer value of
/// their truth vector; bit e of `values` is the image of element e.
struct AllowedMap {
  std::uint64_t values;
  /// The unique k with T(~p_k) = 1, or 2^n if no unique k exists.
  std::uint64_t assignment;
};

struct AllowedMapTable {
  unsigned n;
  std::vector<AllowedMap> maps;
};

/// Brute force over all 2^|V| maps V -> {0,1}, keeping those compositional
/// under the adopted convention. Only n <= kAllowedMapSearchLimit.
AllowedMapTable enumerate_allowed_maps(unsigned n);

}  // namespace propalg
