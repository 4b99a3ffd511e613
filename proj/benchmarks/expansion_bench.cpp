#include <benchmark/benchmark.h>

#include <random>

#include "propalg/expansion.hpp"
#include "propalg/truth_maps.hpp"

namespace {

// Random 3-CNF with the given clause count.
propalg::CnfDoc random_3cnf(unsigned n, unsigned clauses, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  propalg::CnfDoc doc{n, {}};
  for (unsigned c = 0; c < clauses; ++c) {
    propalg::Clause clause;
    while (clause.size() < 3) {
      const unsigned v = 1 + static_cast<unsigned>(rng() % n);
      bool seen = false;
      for (const auto& lit : clause) seen = seen || lit.var == v;
      if (!seen) clause.push_back({v, static_cast<bool>(rng() & 1)});
    }
    doc.clauses.push_back(std::move(clause));
  }
  return doc;
}

void BM_CnfToPrimes(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto doc = random_3cnf(n, 4 * n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(propalg::cnf_to_primes(doc));
}
BENCHMARK(BM_CnfToPrimes)->DenseRange(8, 20, 4);

void BM_PrimeCount(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto doc = random_3cnf(n, 4 * n, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(propalg::count_models(propalg::compose(propalg::cnf_to_primes(doc))));
  }
}
BENCHMARK(BM_PrimeCount)->DenseRange(8, 20, 4);

}  // namespace
BENCHMARK_MAIN();
