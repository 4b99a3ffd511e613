#include "propalg/truth_maps.hpp"

#include <bit>

#include "propalg/error.hpp"
#include "propalg/primes.hpp"

namespace propalg {

Assignment::Assignment(unsigned n, std::uint64_t index) : n_(n), index_(index) {
  check_var_count(n);
  if (index >= (std::uint64_t{1} << n)) {
    throw ArgumentError("assignment index " + std::to_string(index) +
                        " out of range for n=" + std::to_string(n));
  }
}

bool Assignment::value(unsigned r) const {
  if (r < 1 || r > n_) throw ArgumentError("variable index out of range");
  return (index_ >> (r - 1)) & 1;
}

std::string Assignment::to_string() const {
  std::string out = "j=" + std::to_string(index_) + ":";
  for (unsigned r = 1; r <= n_; ++r) {
    out += " a" + std::to_string(r) + "=" + (value(r) ? "1" : "0");
  }
  return out;
}

bool eval(const BoolFunc& a, const Assignment& j) {
  if (a.num_vars() != j.num_vars()) {
    throw ArgumentError("assignment and function have different variable counts");
  }
  return a.bit(j.index());
}

std::uint64_t count_models(const BoolFunc& a) { return a.popcount(); }

std::vector<Assignment> satisfying_assignments(const BoolFunc& a) {
  std::vector<Assignment> out;
  out.reserve(static_cast<std::size_t>(a.popcount()));
  const auto words = a.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (BoolFunc::Word bits = words[i]; bits; bits &= bits - 1) {
      out.emplace_back(a.num_vars(), (std::uint64_t{i} << 6) |
                                         static_cast<unsigned>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<TruthConvention> derive_truth_conventions() {
  auto table_of = [](unsigned code) {
    BinaryTable t{};
    for (unsigned x = 0; x < 2; ++x)
      for (unsigned y = 0; y < 2; ++y) t[x][y] = (code >> (2 * x + y)) & 1;
    return t;
  };
  auto symmetric = [](const BinaryTable& t) { return t[0][1] == t[1][0]; };

  std::vector<TruthConvention> out;
  for (std::uint8_t t0 = 0; t0 < 2; ++t0) {
    for (std::uint8_t t1 = 0; t1 < 2; ++t1) {
      for (unsigned gc = 0; gc < 16; ++gc) {
        const BinaryTable g = table_of(gc);
        if (!symmetric(g)) continue;
        bool ok = true;
        // T(a) ranges over both 0 and 1 as a varies.
        for (std::uint8_t x = 0; x < 2 && ok; ++x) {
          ok = g[x][t1] == x        // a * 1 = a
               && g[x][t0] == t0;   // a * 0 = 0
        }
        if (!ok) continue;
        for (unsigned fc = 0; fc < 16; ++fc) {
          const BinaryTable f = table_of(fc);
          if (!symmetric(f)) continue;
          bool fok = true;
          for (std::uint8_t x = 0; x < 2 && fok; ++x) {
            fok = f[x][t0] == x     // a + 0 = a
                  && f[x][x] == t0; // a + a = 0
          }
          if (fok) out.push_back({t0, t1, f, g});
        }
      }
    }
  }
  return out;
}

AllowedMapTable enumerate_allowed_maps(unsigned n) {
  check_var_count(n);
  if (n > kAllowedMapSearchLimit) {
    throw ResourceError("allowed-map enumeration needs 2^|V| candidates; n=" +
                        std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kAllowedMapSearchLimit));
  }
  const unsigned bits = 1u << n;                 // truth-vector width
  const unsigned elements = 1u << bits;          // |V|
  const std::uint64_t candidates = std::uint64_t{1} << elements;
  const unsigned zero = 0;
  const unsigned one = elements - 1;
  const auto& f = kAdoptedConvention.sum_table;
  const auto& g = kAdoptedConvention.product_table;

  AllowedMapTable table{n, {}};
  for (std::uint64_t t = 0; t < candidates; ++t) {
    auto image = [t](unsigned e) -> std::uint8_t { return (t >> e) & 1; };
    if (image(zero) != kAdoptedConvention.image_of_zero ||
        image(one) != kAdoptedConvention.image_of_one) {
      continue;
    }
    bool allowed = true;
    for (unsigned a = 0; a < elements && allowed; ++a) {
      for (unsigned b = a; b < elements && allowed; ++b) {
        allowed = image(a ^ b) == f[image(a)][image(b)] &&
                  image(a & b) == g[image(a)][image(b)];
      }
    }
    if (!allowed) continue;

    std::uint64_t k = bits;
    unsigned hits = 0;
    for (unsigned j = 0; j < bits; ++j) {
      const auto minterm = static_cast<unsigned>(neg(prime(n, j)).low_word());
      if (image(minterm)) {
        k = j;
        ++hits;
      }
    }
    if (hits != 1) k = bits;
    table.maps.push_back({t, k});
  }
  return table;
}

}  // namespace propalg
