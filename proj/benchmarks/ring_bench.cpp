#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "propalg/anf.hpp"
#include "propalg/bool_func.hpp"
#include "propalg/flip_group.hpp"
#include "propalg/truth_maps.hpp"

namespace {

using propalg::BoolFunc;

BoolFunc random_func(unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BoolFunc::Word> words(propalg::detail::word_count(n));
  for (auto& w : words) w = rng();
  words.front() &= propalg::detail::tail_mask(n);
  return BoolFunc::from_words(n, std::move(words));
}

void BM_Mul(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const BoolFunc a = random_func(n, 1);
  const BoolFunc b = random_func(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(a.size() / 8));
}
BENCHMARK(BM_Mul)->DenseRange(6, 22, 4);

void BM_MoebiusTransform(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const BoolFunc a = random_func(n, 3);
  std::vector<BoolFunc::Word> words(a.words().begin(), a.words().end());
  for (auto _ : state) {
    propalg::moebius_transform(n, words);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_MoebiusTransform)->DenseRange(4, 22, 3);

void BM_ApplyFlip(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const BoolFunc a = random_func(n, 4);
  const propalg::FlipMask s(n, (std::uint64_t{1} << n) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply_flip(a, s));
}
BENCHMARK(BM_ApplyFlip)->DenseRange(6, 22, 4);

void BM_CountModels(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const BoolFunc a = random_func(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(propalg::count_models(a));
}
BENCHMARK(BM_CountModels)->DenseRange(6, 22, 4);

}  // namespace
