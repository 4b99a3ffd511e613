#include "propalg/anf.hpp"

#include <algorithm>
#include <bit>

#include "propalg/error.hpp"

namespace propalg {

namespace {

void require_same_n(const Anf& a, const Anf& b) {
  if (a.num_vars() != b.num_vars()) {
    throw ArgumentError("mismatched variable counts in ANF operation");
  }
}

// Sorts and cancels equal pairs (a + a = 0).
std::vector<Monomial> normalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end());
  std::vector<Monomial> out;
  out.reserve(ms.size());
  for (std::size_t i = 0; i < ms.size();) {
    std::size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(ms[i]);
    i = j;
  }
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

}  // namespace

bool monomial_less(Monomial lhs, Monomial rhs) noexcept {
  const int dl = std::popcount(lhs);
  const int dr = std::popcount(rhs);
  if (dl != dr) return dl < dr;
  // Equal degree: the first differing variable (lowest differing bit)
  // decides; the monomial that contains it comes first.
  const Monomial diff = lhs ^ rhs;
  if (diff == 0) return false;
  const Monomial lowest = diff & (~diff + 1);
  return (lhs & lowest) != 0;
}

Anf::Anf(unsigned n, std::vector<Monomial> monomials) : n_(n) {
  check_var_count(n);
  const Monomial limit = n >= 32 ? ~Monomial{0} : (Monomial{1} << n) - 1;
  for (Monomial m : monomials) {
    if (m & ~limit) {
      throw ArgumentError("monomial references a variable beyond n=" +
                          std::to_string(n));
    }
  }
  monomials_ = normalize(std::move(monomials));
}

unsigned Anf::degree() const noexcept {
  // Canonical order sorts by degree, so the last monomial has the maximum.
  return monomials_.empty() ? 0 : std::popcount(monomials_.back());
}

std::string Anf::to_string() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (i) out += " ⊕ ";
    const Monomial m = monomials_[i];
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (unsigned r = 1; r <= n_; ++r) {
      if (!((m >> (r - 1)) & 1)) continue;
      if (!first) out += "·";
      out += "a" + std::to_string(r);
      first = false;
    }
  }
  return out;
}

Anf operator+(const Anf& a, const Anf& b) {
  require_same_n(a, b);
  std::vector<Monomial> all(a.monomials().begin(), a.monomials().end());
  all.insert(all.end(), b.monomials().begin(), b.monomials().end());
  return Anf(a.num_vars(), std::move(all));
}

Anf operator*(const Anf& a, const Anf& b) {
  require_same_n(a, b);
  std::vector<Monomial> all;
  all.reserve(a.monomials().size() * b.monomials().size());
  for (Monomial x : a.monomials()) {
    for (Monomial y : b.monomials()) all.push_back(x | y);
  }
  return Anf(a.num_vars(), std::move(all));
}

void moebius_transform(unsigned n, std::span<BoolFunc::Word> words) noexcept {
  const unsigned in_word = std::min(n, 6u);
  for (unsigned k = 0; k < in_word; ++k) {
    const unsigned shift = 1u << k;
    const BoolFunc::Word low = ~detail::kVarWordPattern[k];
    for (auto& w : words) w ^= (w & low) << shift;
  }
  for (std::size_t stride = 1; stride < words.size(); stride <<= 1) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i & stride) words[i] ^= words[i ^ stride];
    }
  }
}

Anf to_anf(const BoolFunc& f) {
  std::vector<BoolFunc::Word> w(f.words().begin(), f.words().end());
  moebius_transform(f.num_vars(), w);
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (BoolFunc::Word bits = w[i]; bits; bits &= bits - 1) {
      ms.push_back(static_cast<Monomial>((i << 6) | std::countr_zero(bits)));
    }
  }
  return Anf(f.num_vars(), std::move(ms));
}

BoolFunc from_anf(const Anf& p) {
  std::vector<BoolFunc::Word> w(detail::word_count(p.num_vars()), 0);
  for (Monomial m : p.monomials()) w[m >> 6] |= BoolFunc::Word{1} << (m & 63);
  moebius_transform(p.num_vars(), w);
  return BoolFunc::from_words(p.num_vars(), std::move(w));
}

}  // namespace propalg
