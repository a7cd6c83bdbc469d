#include <benchmark/benchmark.h>

#include <random>

#include "varpat/gapped.hpp"
#include "varpat/kernels.hpp"

namespace {

using namespace varpat;

std::vector<std::uint32_t> random_sequence(std::size_t length, std::size_t alphabet, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(alphabet - 1));
  std::vector<std::uint32_t> seq(length);
  for (std::size_t i = 0; i < alphabet && i < length; ++i) seq[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = alphabet; i < length; ++i) seq[i] = pick(rng);
  return seq;
}

std::vector<kernels::Edge> random_edges(std::size_t n, std::size_t m, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  std::vector<kernels::Edge> edges;
  while (edges.size() < m) {
    const auto u = pick(rng), v = pick(rng);
    if (u != v) edges.push_back({u, v});
  }
  return edges;
}

void BM_LocalitySerial(benchmark::State& state) {
  const auto sigma = static_cast<std::size_t>(state.range(0));
  const auto seq = random_sequence(4 * sigma, sigma, 7);
  for (auto _ : state) {
    const auto g = kernels::serial::run_counts(seq, sigma);
    benchmark::DoNotOptimize(kernels::serial::minmax_layout(g, sigma));
  }
}

void BM_LocalityParallel(benchmark::State& state) {
  const auto sigma = static_cast<std::size_t>(state.range(0));
  const auto seq = random_sequence(4 * sigma, sigma, 7);
  for (auto _ : state) {
    const auto g = kernels::parallel::tabulate(kernels::run_count_function(seq, sigma));
    benchmark::DoNotOptimize(kernels::parallel::minmax_layout(g, sigma));
  }
}

void BM_CutwidthSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto edges = random_edges(n, 3 * n, 11);
  for (auto _ : state) {
    const auto g = kernels::serial::cut_sizes(n, edges);
    benchmark::DoNotOptimize(kernels::serial::minmax_layout(g, n));
  }
}

void BM_CutwidthParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto edges = random_edges(n, 3 * n, 11);
  for (auto _ : state) {
    const auto g = kernels::parallel::tabulate(kernels::cut_function(n, edges));
    benchmark::DoNotOptimize(kernels::parallel::minmax_layout(g, n));
  }
}

Word random_binary_word(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  Word w(n);
  for (auto& c : w) c = rng() & 1u;
  return w;
}

void BM_GappedSerial(benchmark::State& state) {
  const auto w = random_binary_word(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gapped::serial::repeats(w, Ratio{2, 1}));
}

void BM_GappedParallel(benchmark::State& state) {
  const auto w = random_binary_word(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gapped::parallel::repeats(w, Ratio{2, 1}));
}

}  // namespace

BENCHMARK(BM_LocalitySerial)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalityParallel)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CutwidthSerial)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CutwidthParallel)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GappedSerial)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GappedParallel)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
