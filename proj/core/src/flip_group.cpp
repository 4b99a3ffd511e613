#include "propalg/flip_group.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <vector>

#include "propalg/error.hpp"
#include "propalg/primes.hpp"
#include "propalg/truth_maps.hpp"

namespace propalg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_unsigned(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ArgumentError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<BoolFunc> sample_elements(unsigned n, std::uint64_t seed, unsigned samples = 64) {
  std::vector<BoolFunc> out;
  if (n <= 3) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t e = 0; e < count; ++e) out.push_back(BoolFunc::from_bits(n, e));
    return out;
  }
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < samples; ++i) {
    std::vector<BoolFunc::Word> w(detail::word_count(n));
    for (auto& x : w) x = rng();
    w.front() &= detail::tail_mask(n);
    out.push_back(BoolFunc::from_words(n, std::move(w)));
  }
  return out;
}

}  // namespace

FlipMask::FlipMask(unsigned n, std::uint64_t s) : n_(n), s_(s) {
  check_var_count(n);
  if (s >= (std::uint64_t{1} << n)) {
    throw ArgumentError("flip mask " + std::to_string(s) + " out of range for n=" +
                        std::to_string(n));
  }
}

FlipMask FlipMask::parse(unsigned n, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ArgumentError("empty flip mask");
  if (std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return FlipMask(n, parse_unsigned(text, "flip mask"));
  }
  std::uint64_t s = 0;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.size() < 2 || item.front() != 'a') {
      throw ArgumentError("invalid flip variable '" + std::string(item) + "'");
    }
    const std::uint64_t r = parse_unsigned(item.substr(1), "flip variable");
    if (r < 1 || r > n) {
      throw ArgumentError("flip variable " + std::string(item) + " out of range for n=" +
                          std::to_string(n));
    }
    s |= std::uint64_t{1} << (r - 1);
  }
  return FlipMask(n, s);
}

bool FlipMask::flips(unsigned r) const {
  if (r < 1 || r > n_) throw ArgumentError("variable index out of range");
  return (s_ >> (r - 1)) & 1;
}

std::string FlipMask::to_string() const {
  if (s_ == 0) return "-";
  std::string out;
  for (unsigned r = 1; r <= n_; ++r) {
    if (!flips(r)) continue;
    if (!out.empty()) out += ",";
    out += "a" + std::to_string(r);
  }
  return out;
}

BoolFunc apply_flip(const BoolFunc& a, const FlipMask& s) {
  if (a.num_vars() != s.num_vars()) {
    throw ArgumentError("flip mask and function have different variable counts");
  }
  std::vector<BoolFunc::Word> w(a.words().begin(), a.words().end());
  for (unsigned k = 0; k < a.num_vars(); ++k) {
    if (!((s.value() >> k) & 1)) continue;
    if (k < 6) {
      const unsigned shift = 1u << k;
      const BoolFunc::Word low = ~detail::kVarWordPattern[k];
      for (auto& x : w) x = ((x & low) << shift) | ((x >> shift) & low);
    } else {
      const std::size_t stride = std::size_t{1} << (k - 6);
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(i & stride)) std::swap(w[i], w[i | stride]);
      }
    }
  }
  return BoolFunc::from_words(a.num_vars(), std::move(w));
}

std::uint64_t pi(const FlipMask& s, std::uint64_t j) {
  const unsigned n = s.num_vars();
  if (j >= (std::uint64_t{1} << n)) {
    throw ArgumentError("assignment index " + std::to_string(j) + " out of range for n=" +
                        std::to_string(n));
  }
  std::uint64_t overlap = 0;
  for (unsigned r = 1; r <= n; ++r) {
    const std::uint64_t s_r = (s.value() >> (r - 1)) & 1;
    const std::uint64_t j_r = (j >> (r - 1)) & 1;
    overlap += (std::uint64_t{1} << (r - 1)) * s_r * j_r;
  }
  return s.value() + j - 2 * overlap;
}

CheckReport flip_group_check(unsigned n, std::uint64_t seed) {
  check_var_count(n);
  if (n > kGroupCheckLimit) {
    throw ResourceError("flip group check is capped at n=" + std::to_string(kGroupCheckLimit));
  }
  return timed_check("flip-group", n, [&](CheckReport& rep) {
    const std::vector<BoolFunc> elements = sample_elements(n, seed);
    const std::uint64_t masks = std::uint64_t{1} << n;
    rep.note(std::to_string(elements.size()) + " elements, " + std::to_string(masks) + " masks");

    for (const auto& a : elements) {
      rep.expect_lazy(apply_flip(a, FlipMask(n, 0)) == a,
                      [&] { return "R_0(" + a.to_binary() + ") != itself"; });
    }
    for (std::uint64_t s = 0; s < masks; ++s) {
      const FlipMask fs(n, s);
      for (const auto& a : elements) {
        const BoolFunc once = apply_flip(a, fs);
        rep.expect_lazy(apply_flip(once, fs) == a, [&] {
          return "R_" + std::to_string(s) + " not an involution on " + a.to_binary();
        });
        for (std::uint64_t t = 0; t < masks; ++t) {
          rep.expect_lazy(apply_flip(once, FlipMask(n, t)) == apply_flip(a, FlipMask(n, s ^ t)),
                          [&] {
                            return "R_" + std::to_string(t) + " o R_" + std::to_string(s) +
                                   " != R_" + std::to_string(s ^ t) + " on " + a.to_binary();
                          });
        }
      }
      std::vector<bool> hit(masks, false);
      for (std::uint64_t j = 0; j < masks; ++j) {
        const std::uint64_t image = pi(fs, j);
        rep.expect_lazy(image < masks && apply_flip(prime(n, j), fs) == prime(n, image), [&] {
          return "R_" + std::to_string(s) + "(p_" + std::to_string(j) + ") != p_" +
                 std::to_string(image);
        });
        if (image < masks) hit[image] = true;
      }
      rep.expect_lazy(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
                      [&] { return "R_" + std::to_string(s) + " does not permute the primes"; });
    }
  });
}

CheckReport conservation_check(const BoolFunc& a, std::span<const std::uint64_t> masks) {
  return timed_check("conservation", a.num_vars(), [&](CheckReport& rep) {
    const std::uint64_t base = count_models(a);
    for (std::uint64_t s : masks) {
      const std::uint64_t flipped = count_models(apply_flip(a, FlipMask(a.num_vars(), s)));
      rep.expect_lazy(flipped == base, [&] {
        return "#R_" + std::to_string(s) + "(F) = " + std::to_string(flipped) +
               " but #F = " + std::to_string(base);
      });
    }
  });
}

CheckReport conservation_check(const BoolFunc& a) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(a.size()));
  for (std::size_t s = 0; s < masks.size(); ++s) masks[s] = s;
  return conservation_check(a, masks);
}

CheckReport pi_formula_check(unsigned n) {
  check_var_count(n);
  return timed_check("pi-formula", n, [&](CheckReport& rep) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < count; ++s) {
      const FlipMask fs(n, s);
      for (std::uint64_t j = 0; j < count; ++j) {
        const std::uint64_t image = pi(fs, j);
        rep.expect_lazy(image == (j ^ s), [&] {
          return "pi_" + std::to_string(s) + "(" + std::to_string(j) + ") = " +
                 std::to_string(image);
        });
        rep.expect_lazy(image < count && pi(fs, image) == j, [&] {
          return "pi_" + std::to_string(s) + " not an involution at " + std::to_string(j);
        });
      }
    }
  });
}

CheckReport flip_evaluation_check(unsigned n, std::uint64_t seed, unsigned samples) {
  check_var_count(n);
  return timed_check("flip-evaluation", n, [&](CheckReport& rep) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (const auto& f : sample_elements(n, seed, samples)) {
      for (std::uint64_t s = 0; s < count; ++s) {
        const FlipMask fs(n, s);
        const BoolFunc flipped = apply_flip(f, fs);
        for (std::uint64_t j = 0; j < count; ++j) {
          rep.expect_lazy(flipped.bit(j) == f.bit(pi(fs, j)), [&] {
            return "T_" + std::to_string(j) + "(R_" + std::to_string(s) + "(" +
                   f.to_hex() + ")) != T_pi(j)";
          });
        }
      }
    }
  });
}

}  // namespace propalg
