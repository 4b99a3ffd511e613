#include "propalg/theorems.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "propalg/error.hpp"
#include "propalg/flip_group.hpp"
#include "propalg/primes.hpp"
#include "propalg/truth_maps.hpp"

namespace propalg {

namespace {

constexpr unsigned kEnumerationCap = 3;  // |V| = 256, |V|^2 pair scans
constexpr unsigned kIndexPairCap = 6;

void require_cap(Theorem t, unsigned n) {
  check_var_count(n);
  const auto cap = theorem_cap(t);
  if (cap && n > *cap) {
    throw ResourceError(std::string(theorem_id(t)) + " is capped at n=" + std::to_string(*cap) +
                        "; refusing n=" + std::to_string(n));
  }
}

std::string label(const BoolFunc& f) { return f.to_binary(); }

void absorb(CheckReport& into, const CheckReport& part) {
  into.checks += part.checks;
  into.failure_count += part.failure_count;
  for (const auto& f : part.failures) {
    if (into.failures.size() < CheckReport::kMaxRecordedFailures) {
      into.failures.push_back(part.id + ": " + f);
    }
  }
  for (const auto& note : part.notes) into.note(part.id + ": " + note);
}

// Expected bit pattern of a_r, built character by character: blocks of
// 2^(r-1) ones then 2^(r-1) zeros, read MSB first.
std::string basis_pattern(unsigned n, unsigned r) {
  const std::uint64_t len = std::uint64_t{1} << n;
  const std::uint64_t half = std::uint64_t{1} << (r - 1);
  std::string out;
  out.reserve(static_cast<std::size_t>(len));
  for (std::uint64_t i = 0; i < len; ++i) out += ((i / half) % 2 == 0) ? '1' : '0';
  return out;
}

// a_r as the triple sum over ~p_i with i = s + 2^r l.
BoolFunc triple_sum_basis(unsigned n, unsigned r) {
  BoolFunc acc = BoolFunc::zero(n);
  const std::uint64_t lo = std::uint64_t{1} << (r - 1);
  const std::uint64_t hi = std::uint64_t{1} << r;
  const std::uint64_t blocks = std::uint64_t{1} << (n - r);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < count; ++i) {
    unsigned delta = 0;
    for (std::uint64_t s = lo; s < hi; ++s) {
      for (std::uint64_t l = 0; l < blocks; ++l) delta += (i == s + hi * l);
    }
    if (delta % 2) acc = add(acc, neg(prime(n, i)));
  }
  return acc;
}

}  // namespace

std::vector<BoolFunc> all_elements(unsigned n) {
  check_var_count(n);
  if (n > kEnumerationCap) {
    throw ResourceError("enumerating V is capped at n=" + std::to_string(kEnumerationCap));
  }
  const std::uint64_t count = std::uint64_t{1} << (1u << n);
  std::vector<BoolFunc> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t e = 0; e < count; ++e) out.push_back(BoolFunc::from_bits(n, e));
  return out;
}

AnnihilatorSet annihilator(const BoolFunc& s) {
  AnnihilatorSet k{s.num_vars(), s, {}};
  for (const auto& a : all_elements(s.num_vars())) {
    if (mul(a, s).is_zero()) k.members.push_back(a);
  }
  return k;
}

std::vector<BoolFunc> primes_by_definition(unsigned n) {
  const auto elements = all_elements(n);
  std::vector<BoolFunc> found;
  for (const auto& p : elements) {
    if (p.is_one()) continue;
    const BoolFunc not_p = neg(p);
    const bool is_prime = std::all_of(elements.begin(), elements.end(), [&](const BoolFunc& a) {
      return !mul(p, a).is_zero() || a.is_zero() || a == not_p;
    });
    if (is_prime) found.push_back(p);
  }
  return found;
}

std::string_view theorem_id(Theorem t) {
  switch (t) {
    case Theorem::kPowerOfTwo: return "TI";
    case Theorem::kPrimeDecomposition: return "TII-TIII";
    case Theorem::kOrthogonality: return "orthogonality";
    case Theorem::kFullPrimeIdentity: return "full-prime-identity";
    case Theorem::kAllowedMaps: return "TIV";
    case Theorem::kBasis: return "TV";
    case Theorem::kResolution: return "resolution";
    case Theorem::kFlipGroup: return "flip-group";
  }
  return "?";
}

std::optional<unsigned> theorem_cap(Theorem t) {
  switch (t) {
    case Theorem::kPowerOfTwo:
    case Theorem::kPrimeDecomposition: return kEnumerationCap;
    case Theorem::kOrthogonality:
    case Theorem::kFullPrimeIdentity:
    case Theorem::kBasis: return kIndexPairCap;
    case Theorem::kAllowedMaps: return kAllowedMapSearchLimit;
    case Theorem::kFlipGroup: return kGroupCheckLimit;
    case Theorem::kResolution: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Theorem> all_theorems() {
  return {Theorem::kPowerOfTwo,   Theorem::kPrimeDecomposition, Theorem::kOrthogonality,
          Theorem::kFullPrimeIdentity, Theorem::kAllowedMaps,    Theorem::kBasis,
          Theorem::kResolution,   Theorem::kFlipGroup};
}

CheckReport verify_TI(unsigned n, std::uint64_t seed) {
  require_cap(Theorem::kPowerOfTwo, n);
  return timed_check("TI", n, [&](CheckReport& rep) {
    const auto elements = all_elements(n);
    const std::uint64_t size = elements.size();
    rep.expect(size == (std::uint64_t{1} << (1u << n)), "|V| != 2^(2^n)");
    rep.note("|V| = " + std::to_string(size));

    std::vector<BoolFunc> samples;
    for (const auto& s : elements) {
      if (!s.is_zero() && !s.is_one()) samples.push_back(s);
    }
    if (n >= 3) {
      std::mt19937_64 rng(seed);
      std::shuffle(samples.begin(), samples.end(), rng);
      if (samples.size() > 16) samples.erase(samples.begin() + 16, samples.end());
      std::sort(samples.begin(), samples.end(),
                [](const BoolFunc& a, const BoolFunc& b) { return a.low_word() < b.low_word(); });
    }
    rep.note(std::to_string(samples.size()) + " nontrivial s tested");

    for (const auto& s : samples) {
      const BoolFunc not_s = neg(s);
      const auto ks = annihilator(s);
      const auto kns = annihilator(not_s);
      auto contains = [](const AnnihilatorSet& k, const BoolFunc& x) { return mul(x, k.s).is_zero(); };
      const std::string tag = "s=" + label(s);

      rep.expect(contains(ks, BoolFunc::zero(n)) && contains(ks, not_s), tag + ": 0 or ~s missing from K_s");
      rep.expect(contains(kns, BoolFunc::zero(n)) && contains(kns, s), tag + ": 0 or s missing from K_~s");
      for (const auto* k : {&ks, &kns}) {
        const BoolFunc& unit = k == &ks ? not_s : s;
        for (const auto& u : k->members) {
          rep.expect_lazy(mul(unit, u) == u, [&] { return tag + ": unit fails on " + label(u); });
          for (const auto& v : k->members) {
            rep.expect_lazy(contains(*k, add(u, v)) && contains(*k, mul(u, v)),
                            [&] { return tag + ": not closed at " + label(u) + "," + label(v); });
          }
        }
      }
      std::size_t common = 0;
      for (const auto& u : ks.members) common += contains(kns, u);
      rep.expect(common == 1, tag + ": K_s and K_~s share more than 0");

      for (const auto& a : elements) {
        unsigned splits = 0;
        for (const auto& u : ks.members) {
          for (const auto& v : kns.members) splits += add(u, v) == a;
        }
        rep.expect_lazy(splits == 1, [&] {
          return tag + ": " + label(a) + " has " + std::to_string(splits) + " splits";
        });
      }
      const std::uint64_t ns = ks.members.size();
      const std::uint64_t nns = kns.members.size();
      rep.expect(ns * nns == size, tag + ": |K_s| * |K_~s| != |V|");
      rep.expect(std::has_single_bit(ns) && std::has_single_bit(nns),
                 tag + ": subgroup orders are not powers of 2");
    }
  });
}

CheckReport verify_TII_TIII(unsigned n) {
  require_cap(Theorem::kPrimeDecomposition, n);
  return timed_check("TII-TIII", n, [&](CheckReport& rep) {
    const std::uint64_t count = std::uint64_t{1} << n;
    const auto found = primes_by_definition(n);
    rep.note("definition scan found " + std::to_string(found.size()) + " primes (1 excluded as trivial)");
    rep.expect(found.size() == count, "prime count " + std::to_string(found.size()) +
                                          " != 2^n = " + std::to_string(count));
    std::set<std::uint64_t> expected;
    for (std::uint64_t j = 0; j < count; ++j) expected.insert(prime(n, j).low_word());
    std::set<std::uint64_t> actual;
    for (const auto& p : found) actual.insert(p.low_word());
    rep.expect(actual == expected, "scanned primes differ from the maxterm constructions");

    const auto elements = all_elements(n);
    std::set<std::uint64_t> distinct_sets;
    for (const auto& a : elements) {
      const PrimeSet ia = decompose(a);
      distinct_sets.insert(ia.membership().low_word());
      rep.expect_lazy(compose(ia) == a, [&] { return "compose(decompose(" + label(a) + ")) != a"; });

      // Ring-operation routes: product of primes and OR-sum of negated primes.
      BoolFunc product = BoolFunc::one(n);
      for (auto j : ia.indices()) product = mul(product, prime(n, j));
      BoolFunc xor_sum = BoolFunc::zero(n);
      BoolFunc or_sum = BoolFunc::zero(n);
      for (auto j : ia.complement().indices()) {
        xor_sum = add(xor_sum, neg(prime(n, j)));
        or_sum = lor(or_sum, neg(prime(n, j)));
      }
      rep.expect_lazy(product == a && xor_sum == a && or_sum == a,
                      [&] { return "prime/negated-prime routes disagree for " + label(a); });
    }
    rep.expect(distinct_sets.size() == elements.size(), "decompose is not injective");

    for (std::uint64_t bits = 0; bits < elements.size(); ++bits) {
      const PrimeSet ps = PrimeSet::from_membership(BoolFunc::from_bits(n, bits));
      rep.expect_lazy(decompose(compose(ps)) == ps,
                      [&] { return "decompose(compose(" + ps.to_string() + ")) differs"; });
    }
  });
}

CheckReport verify_orthogonality(unsigned n) {
  require_cap(Theorem::kOrthogonality, n);
  return timed_check("orthogonality", n, [&](CheckReport& rep) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t j = 0; j < count; ++j) {
      for (std::uint64_t k = 0; k < count; ++k) {
        const BoolFunc expected = j == k ? neg(prime(n, k)) : BoolFunc::zero(n);
        rep.expect_lazy(orthogonal(n, j, k) == expected, [&] {
          return "~p_" + std::to_string(j) + " * ~p_" + std::to_string(k);
        });
        if (j == k) continue;
        const BoolFunc pp = mul(prime(n, j), prime(n, k));
        rep.expect_lazy(pp == add(prime(n, j), neg(prime(n, k))) &&
                            pp == add(neg(prime(n, j)), prime(n, k)),
                        [&] { return "p_j * p_k identity at j=" + std::to_string(j) +
                                     " k=" + std::to_string(k); });
      }
    }
  });
}

CheckReport verify_full_prime_identity(unsigned n) {
  require_cap(Theorem::kFullPrimeIdentity, n);
  return timed_check("full-prime-identity", n, [&](CheckReport& rep) {
    const std::uint64_t count = std::uint64_t{1} << n;
    BoolFunc product = BoolFunc::one(n);
    BoolFunc sum = BoolFunc::zero(n);
    BoolFunc clause_product = BoolFunc::one(n);
    for (std::uint64_t j = 0; j < count; ++j) {
      product = mul(product, prime(n, j));
      sum = add(sum, neg(prime(n, j)));
      // The same factor spelled as a full disjunction of literals.
      BoolFunc clause = BoolFunc::zero(n);
      for (unsigned r = 1; r <= n; ++r) {
        const BoolFunc v = BoolFunc::var(n, r);
        clause = lor(clause, ((j >> (r - 1)) & 1) ? neg(v) : v);
      }
      rep.expect_lazy(clause == prime(n, j), [&] { return "clause form of p_" + std::to_string(j); });
      clause_product = mul(clause_product, clause);
    }
    rep.expect(product.is_zero(), "product of all primes != 0");
    rep.expect(clause_product.is_zero(), "product of all full clauses != 0");
    rep.expect(sum.is_one(), "sum of all negated primes != 1");
    rep.expect(compose(PrimeSet::all(n)).is_zero(), "compose(all primes) != 0");
    rep.expect(compose(PrimeSet::empty(n)).is_one(), "compose(no primes) != 1");
  });
}

CheckReport verify_TIV(unsigned n) {
  require_cap(Theorem::kAllowedMaps, n);
  return timed_check("TIV", n, [&](CheckReport& rep) {
    const auto conventions = derive_truth_conventions();
    rep.expect(conventions.size() == 2, "expected exactly two consistent conventions, found " +
                                            std::to_string(conventions.size()));
    rep.expect(std::count(conventions.begin(), conventions.end(), kAdoptedConvention) == 1,
               "adopted convention (T(0)=0, T(1)=1, XOR, AND) not derived");
    const auto& g = kAdoptedConvention.product_table;
    const auto& f = kAdoptedConvention.sum_table;
    rep.expect(g[0][0] == 0 && g[0][1] == 0 && g[1][0] == 0 && g[1][1] == 1, "g is not AND");
    rep.expect(f[0][0] == 0 && f[1][1] == 0 && f[0][1] == 1 && f[1][0] == 1, "f is not XOR");

    const std::uint64_t count = std::uint64_t{1} << n;
    const auto table = enumerate_allowed_maps(n);
    rep.note(std::to_string(table.maps.size()) + " allowed maps");
    rep.expect(table.maps.size() == count, "allowed map count " + std::to_string(table.maps.size()) +
                                               " != 2^n = " + std::to_string(count));
    std::set<std::uint64_t> labels;
    std::set<std::uint64_t> distinct;
    const auto elements = all_elements(n);
    for (const auto& map : table.maps) {
      distinct.insert(map.values);
      rep.expect(map.assignment < count, "map singles out no unique negated prime");
      if (map.assignment >= count) continue;
      labels.insert(map.assignment);
      const Assignment j(n, map.assignment);
      for (std::uint64_t k = 0; k < count; ++k) {
        const auto e = neg(prime(n, k)).low_word();
        rep.expect_lazy(((map.values >> e) & 1) == (k == map.assignment ? 1u : 0u),
                        [&] { return "T_j(~p_k) != delta_jk at j=" + j.to_string(); });
      }
      for (const auto& a : elements) {
        rep.expect_lazy(((map.values >> a.low_word()) & 1) == static_cast<unsigned>(eval(a, j)),
                        [&] { return "map " + std::to_string(map.assignment) + " differs from eval at " +
                                     label(a); });
      }
    }
    rep.expect(labels.size() == table.maps.size(), "two maps single out the same negated prime");
    rep.expect(distinct.size() == table.maps.size(), "allowed maps are not pairwise distinct");
  });
}

CheckReport verify_TV(unsigned n) {
  require_cap(Theorem::kBasis, n);
  return timed_check("TV", n, [&](CheckReport& rep) {
    std::vector<BoolFunc> basis_elems;
    for (unsigned r = 1; r <= n; ++r) {
      const BoolFunc a = basis(n, r);
      rep.expect(a.to_binary() == basis_pattern(n, r), "a" + std::to_string(r) + " bit pattern");
      rep.expect(triple_sum_basis(n, r) == a, "a" + std::to_string(r) + " triple-sum form");
      rep.expect(!a.is_zero() && !a.is_one(), "a" + std::to_string(r) + " is trivial");
      for (const auto& prev : basis_elems) rep.expect(prev != a, "basis elements coincide");
      basis_elems.push_back(a);
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < count; ++s) {
      BoolFunc product = BoolFunc::one(n);
      for (unsigned r = 1; r <= n; ++r) {
        const BoolFunc& a = basis_elems[r - 1];
        product = mul(product, ((s >> (r - 1)) & 1) ? a : neg(a));
      }
      rep.expect_lazy(product == neg(prime(n, s)),
                      [&] { return "basis product for s=" + std::to_string(s) + " != ~p_s"; });
      rep.expect_lazy(literal_form(n, s).evaluate() == neg(prime(n, s)),
                      [&] { return "literal_form(" + std::to_string(s) + ")"; });
    }

    if (n == 3) {
      const BoolFunc& a1 = basis_elems[0];
      const BoolFunc& a2 = basis_elems[1];
      const BoolFunc& a3 = basis_elems[2];
      const BoolFunc alt[3] = {a1, a3, add(mul(a1, neg(a2)), mul(neg(a1), a2))};
      std::set<std::uint64_t> generated;
      for (std::uint64_t s = 0; s < count; ++s) {
        BoolFunc product = BoolFunc::one(n);
        for (unsigned r = 0; r < 3; ++r) product = mul(product, ((s >> r) & 1) ? alt[r] : neg(alt[r]));
        generated.insert(product.low_word());
      }
      std::set<std::uint64_t> minterms;
      for (std::uint64_t s = 0; s < count; ++s) minterms.insert(neg(prime(n, s)).low_word());
      rep.expect(generated == minterms, "alternative basis does not generate the 8 minterms");
      rep.note("alternative basis {a1, a3, a1~a2 + ~a1a2} generates all minterms");
    }
  });
}

CheckReport verify_resolution() {
  return timed_check("resolution", 3, [](CheckReport& rep) {
    const unsigned n = 3;
    const BoolFunc one = BoolFunc::one(n);
    const BoolFunc a = BoolFunc::var(n, 1);
    const BoolFunc b = BoolFunc::var(n, 2);
    const BoolFunc c = BoolFunc::var(n, 3);
    const BoolFunc na = neg(a);
    const BoolFunc nb = neg(b);

    const BoolFunc premise = mul(lor(a, b), lor(na, c));
    const BoolFunc conclusion = lor(b, c);
    const BoolFunc implication = lor(neg(premise), conclusion);
    rep.expect(implication == one, "((a1|a2)&(!a1|a3)) -> (a2|a3) is not 1");
    rep.expect(count_models(premise) == 4, "premise model count != 4");
    rep.expect(count_models(conclusion) == 6, "conclusion model count != 6");

    // Replays each rewriting step as a ring equality.
    rep.expect(lor(a, b) == add(a, mul(na, b)), "a v b = a + ~a b");
    rep.expect(lor(na, c) == add(na, mul(c, a)), "~a v c = ~a + c a");
    const BoolFunc p = mul(add(a, mul(na, b)), add(na, mul(c, a)));
    rep.expect(p == premise, "premise in sum form");
    const BoolFunc y = add(add(b, c), mul(b, c));
    const BoolFunc step1 = add(add(add(one, p), y), mul(y, add(one, p)));
    rep.expect(step1 == implication, "x v y = x + y + xy with x = 1 + P");
    const BoolFunc step2 = add(add(add(one, mul(a, c)), mul(na, b)), mul(mul(y, add(a, mul(na, b))), add(na, mul(c, a))));
    rep.expect(step2 == step1, "1 + ac + ~ab + (b+c+bc)(a+~ab)(~a+ca)");
    const BoolFunc abc = mul(mul(a, b), c);
    const BoolFunc step3 = add(add(add(add(add(one, mul(a, c)), mul(na, b)), abc), mul(na, b)), mul(mul(nb, a), c));
    rep.expect(step3 == step2, "1 + ac + ~ab + abc + ~ab + ~bac");
    const BoolFunc step4 = add(one, mul(mul(a, c), add(add(one, b), nb)));
    rep.expect(step4 == step3, "1 + ac(1 + b + ~b)");
    rep.expect(add(add(one, b), nb).is_zero(), "1 + b + ~b = 0");
    rep.expect(step4 == one, "final value 1");
  });
}

CheckReport verify_flip(unsigned n, std::uint64_t seed) {
  require_cap(Theorem::kFlipGroup, n);
  return timed_check("flip-group", n, [&](CheckReport& rep) {
    absorb(rep, pi_formula_check(n));
    absorb(rep, flip_group_check(n, seed));
    absorb(rep, flip_evaluation_check(n, seed));

    std::mt19937_64 rng(seed);
    const unsigned samples = n <= 3 ? (1u << (1u << n)) : 64;
    for (unsigned i = 0; i < samples; ++i) {
      std::vector<BoolFunc::Word> w(detail::word_count(n));
      if (n <= 3) {
        w.front() = i;
      } else {
        for (auto& x : w) x = rng();
        w.front() &= detail::tail_mask(n);
      }
      const BoolFunc f = BoolFunc::from_words(n, std::move(w));
      const CheckReport part = conservation_check(f);
      rep.checks += part.checks;
      rep.failure_count += part.failure_count;
      for (const auto& msg : part.failures) {
        if (rep.failures.size() < CheckReport::kMaxRecordedFailures) {
          rep.failures.push_back("conservation " + f.to_hex() + ": " + msg);
        }
      }
      // Flipped primes keep their number.
      const PrimeSet before = decompose(f);
      for (std::uint64_t s = 0; s < f.size(); ++s) {
        const FlipMask fs(n, s);
        std::vector<std::uint64_t> mapped;
        for (auto j : before.indices()) mapped.push_back(pi(fs, j));
        rep.expect_lazy(decompose(apply_flip(f, fs)) == PrimeSet::from_indices(n, mapped),
                        [&] { return "prime set of R_" + std::to_string(s) + "(" + f.to_hex() + ")"; });
      }
    }
  });
}

CheckReport verify(Theorem t, unsigned n) {
  switch (t) {
    case Theorem::kPowerOfTwo: return verify_TI(n);
    case Theorem::kPrimeDecomposition: return verify_TII_TIII(n);
    case Theorem::kOrthogonality: return verify_orthogonality(n);
    case Theorem::kFullPrimeIdentity: return verify_full_prime_identity(n);
    case Theorem::kAllowedMaps: return verify_TIV(n);
    case Theorem::kBasis: return verify_TV(n);
    case Theorem::kResolution: return verify_resolution();
    case Theorem::kFlipGroup: return verify_flip(n);
  }
  throw std::logic_error("unknown theorem");
}

}  // namespace propalg
