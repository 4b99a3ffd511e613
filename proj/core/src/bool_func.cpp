#include "propalg/bool_func.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>

#include "propalg/error.hpp"

namespace propalg {

namespace {

std::atomic<unsigned> g_max_vars{kDefaultMaxVars};

void require_same_n(const BoolFunc& a, const BoolFunc& b) {
  if (a.num_vars() != b.num_vars()) {
    throw ArgumentError("mismatched variable counts: " +
                        std::to_string(a.num_vars()) + " vs " +
                        std::to_string(b.num_vars()));
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

template <typename Op>
BoolFunc zip(const BoolFunc& a, const BoolFunc& b, Op op) {
  require_same_n(a, b);
  std::vector<BoolFunc::Word> out(a.words().size());
  std::transform(a.words().begin(), a.words().end(), b.words().begin(),
                 out.begin(), op);
  return BoolFunc::from_words(a.num_vars(), std::move(out));
}

}  // namespace

unsigned max_vars() noexcept { return g_max_vars.load(std::memory_order_relaxed); }

void set_max_vars(unsigned limit) {
  if (limit < 1 || limit > kMaxVarsCeiling) {
    throw ArgumentError("max_vars must be in [1, " +
                        std::to_string(kMaxVarsCeiling) + "], got " +
                        std::to_string(limit));
  }
  g_max_vars.store(limit, std::memory_order_relaxed);
}

void check_var_count(unsigned n) {
  if (n == 0) throw ArgumentError("variable count must be at least 1");
  if (n > max_vars()) {
    throw ResourceError("variable count " + std::to_string(n) +
                        " exceeds max_vars " + std::to_string(max_vars()));
  }
}

BoolFunc::BoolFunc(unsigned n, std::vector<Word> words)
    : n_(n), words_(std::move(words)) {}

BoolFunc BoolFunc::zero(unsigned n) {
  check_var_count(n);
  return BoolFunc(n, std::vector<Word>(detail::word_count(n), 0));
}

BoolFunc BoolFunc::one(unsigned n) {
  check_var_count(n);
  std::vector<Word> w(detail::word_count(n), ~Word{0});
  w.front() &= detail::tail_mask(n);
  return BoolFunc(n, std::move(w));
}

BoolFunc BoolFunc::var(unsigned n, unsigned r) {
  check_var_count(n);
  if (r < 1 || r > n) {
    throw ArgumentError("variable index " + std::to_string(r) +
                        " out of range 1.." + std::to_string(n));
  }
  std::vector<Word> w(detail::word_count(n));
  const unsigned k = r - 1;
  if (k < 6) {
    std::fill(w.begin(), w.end(), detail::kVarWordPattern[k]);
    w.front() &= detail::tail_mask(n);
  } else {
    const std::size_t stride = std::size_t{1} << (k - 6);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i & stride) w[i] = ~Word{0};
    }
  }
  return BoolFunc(n, std::move(w));
}

BoolFunc BoolFunc::indicator(unsigned n, std::uint64_t j) {
  BoolFunc f = zero(n);
  if (j >= f.size()) {
    throw ArgumentError("assignment index " + std::to_string(j) +
                        " out of range for n=" + std::to_string(n));
  }
  f.words_[j >> 6] |= Word{1} << (j & 63);
  return f;
}

BoolFunc BoolFunc::from_bits(unsigned n, std::uint64_t bits) {
  check_var_count(n);
  if (n > 6) throw ArgumentError("from_bits requires n <= 6");
  if (bits & ~detail::tail_mask(n)) {
    throw ArgumentError("bits beyond 2^n are set");
  }
  return BoolFunc(n, {bits});
}

BoolFunc BoolFunc::from_words(unsigned n, std::vector<Word> words) {
  check_var_count(n);
  if (words.size() != detail::word_count(n)) {
    throw ArgumentError("word vector has wrong length for n=" +
                        std::to_string(n));
  }
  if (words.front() & ~detail::tail_mask(n)) {
    throw ArgumentError("bits beyond 2^n are set");
  }
  return BoolFunc(n, std::move(words));
}

BoolFunc BoolFunc::from_binary(std::string_view text) {
  const std::size_t len = text.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw ArgumentError("binary truth vector length must be 2^n with n >= 1");
  }
  const auto n = static_cast<unsigned>(std::countr_zero(len));
  BoolFunc f = zero(n);
  for (std::size_t i = 0; i < len; ++i) {
    const char c = text[len - 1 - i];
    if (c == '1') {
      f.words_[i >> 6] |= Word{1} << (i & 63);
    } else if (c != '0') {
      throw ArgumentError(std::string("invalid binary digit '") + c + "'");
    }
  }
  return f;
}

BoolFunc BoolFunc::from_hex(unsigned n, std::string_view text) {
  BoolFunc f = zero(n);
  const std::uint64_t bits = f.size();
  const std::size_t digits = static_cast<std::size_t>((bits + 3) / 4);
  if (text.size() != digits) {
    throw ArgumentError("hex truth vector for n=" + std::to_string(n) +
                        " needs " + std::to_string(digits) + " digits");
  }
  for (std::size_t d = 0; d < digits; ++d) {
    const int v = hex_value(text[digits - 1 - d]);
    if (v < 0) throw ArgumentError("invalid hex digit");
    for (unsigned b = 0; b < 4; ++b) {
      const std::uint64_t i = d * 4 + b;
      if (!((v >> b) & 1)) continue;
      if (i >= bits) throw ArgumentError("hex value exceeds 2^n bits");
      f.words_[i >> 6] |= Word{1} << (i & 63);
    }
  }
  return f;
}

bool BoolFunc::bit(std::uint64_t j) const {
  if (j >= size()) {
    throw ArgumentError("assignment index " + std::to_string(j) +
                        " out of range for n=" + std::to_string(n_));
  }
  return (words_[j >> 6] >> (j & 63)) & 1;
}

std::uint64_t BoolFunc::popcount() const noexcept {
  return std::transform_reduce(
      words_.begin(), words_.end(), std::uint64_t{0}, std::plus<>{},
      [](Word w) { return static_cast<std::uint64_t>(std::popcount(w)); });
}

bool BoolFunc::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool BoolFunc::is_one() const noexcept { return popcount() == size(); }

std::string BoolFunc::to_binary() const {
  const std::uint64_t bits = size();
  std::string out(static_cast<std::size_t>(bits), '0');
  for (std::uint64_t i = 0; i < bits; ++i) {
    if ((words_[i >> 6] >> (i & 63)) & 1) out[bits - 1 - i] = '1';
  }
  return out;
}

std::string BoolFunc::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint64_t bits = size();
  const std::size_t digits = static_cast<std::size_t>((bits + 3) / 4);
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    const std::uint64_t i = d * 4;
    const unsigned nibble = static_cast<unsigned>((words_[i >> 6] >> (i & 63)) & 0xF);
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

BoolFunc add(const BoolFunc& a, const BoolFunc& b) {
  return zip(a, b, [](auto x, auto y) { return x ^ y; });
}

BoolFunc mul(const BoolFunc& a, const BoolFunc& b) {
  return zip(a, b, [](auto x, auto y) { return x & y; });
}

BoolFunc neg(const BoolFunc& a) { return add(a, BoolFunc::one(a.num_vars())); }

BoolFunc lor(const BoolFunc& a, const BoolFunc& b) {
  return add(add(a, b), mul(a, b));
}

}  // namespace propalg
