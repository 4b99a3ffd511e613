#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace propalg {

/// Largest variable count any build accepts (truth vector of 128 MiB).
inline constexpr unsigned kMaxVarsCeiling = 30;
/// Default guard for the variable count (truth vector of 2 MiB).
inline constexpr unsigned kDefaultMaxVars = 24;

/// Current process-wide variable-count guard. Constructors of BoolFunc and
/// friends throw ResourceError when asked for more variables than this.
unsigned max_vars() noexcept;

/// Sets the guard; `limit` must lie in [1, kMaxVarsCeiling].
void set_max_vars(unsigned limit);

/// Throws ArgumentError for n == 0 and ResourceError for n > max_vars().
void check_var_count(unsigned n);

/// An element of the Boolean ring over n variables, stored as its truth
/// vector. Bit j holds the value at assignment j, where variable a_r takes
/// the value of bit (r-1) of j.
///
/// Values are immutable; every operation returns a new BoolFunc.
class BoolFunc {
 public:
  using Word = std::uint64_t;

  static BoolFunc zero(unsigned n);
  static BoolFunc one(unsigned n);
  /// The basis variable a_r, 1 <= r <= n.
  static BoolFunc var(unsigned n, unsigned r);
  /// Function that is 1 exactly at assignment j.
  static BoolFunc indicator(unsigned n, std::uint64_t j);

  /// Builds from the low 2^n bits of `bits`; requires n <= 6.
  static BoolFunc from_bits(unsigned n, std::uint64_t bits);
  /// Takes ownership of a packed word vector. Bits past 2^n must be clear.
  static BoolFunc from_words(unsigned n, std::vector<Word> words);
  /// Parses an MSB-first binary string whose length is 2^n.
  static BoolFunc from_binary(std::string_view text);
  /// Parses an MSB-first hexadecimal string for the given n.
  static BoolFunc from_hex(unsigned n, std::string_view text);

  unsigned num_vars() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool bit(std::uint64_t j) const;
  std::uint64_t popcount() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Low 64 bits of the truth vector; the whole vector when n <= 6.
  std::uint64_t low_word() const noexcept { return words_.front(); }

  /// MSB-first: bit 2^n - 1 is the leftmost character.
  std::string to_binary() const;
  /// MSB-first hexadecimal, ceil(2^n / 4) lowercase digits.
  std::string to_hex() const;

  friend bool operator==(const BoolFunc&, const BoolFunc&) = default;

 private:
  BoolFunc(unsigned n, std::vector<Word> words);

  unsigned n_;
  std::vector<Word> words_;
};

/// Ring sum (XOR).
BoolFunc add(const BoolFunc& a, const BoolFunc& b);
/// Ring product (AND).
BoolFunc mul(const BoolFunc& a, const BoolFunc& b);
/// Negation ~a := a + 1.
BoolFunc neg(const BoolFunc& a);
/// Disjunction a + b + a*b.
BoolFunc lor(const BoolFunc& a, const BoolFunc& b);

inline BoolFunc operator+(const BoolFunc& a, const BoolFunc& b) { return add(a, b); }
inline BoolFunc operator*(const BoolFunc& a, const BoolFunc& b) { return mul(a, b); }
inline BoolFunc operator~(const BoolFunc& a) { return neg(a); }
inline BoolFunc operator|(const BoolFunc& a, const BoolFunc& b) { return lor(a, b); }

namespace detail {

/// Number of 64-bit words backing a truth vector over n variables.
inline std::size_t word_count(unsigned n) noexcept {
  return n <= 6 ? 1 : std::size_t{1} << (n - 6);
}

/// Mask of valid bits in the (single) word for n < 6; all ones otherwise.
inline std::uint64_t tail_mask(unsigned n) noexcept {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1;
}

/// Repeating pattern of var(r) inside one word, for r - 1 < 6.
inline constexpr std::uint64_t kVarWordPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

}  // namespace detail

}  // namespace propalg
