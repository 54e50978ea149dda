#include <benchmark/benchmark.h>

#include <random>

#include "fano10/aut_w.hpp"
#include "fano10/poly_matrix.hpp"
#include "fano10/quadric_nets.hpp"
#include "fano10/schubert.hpp"

using namespace fano10;

namespace {

PolyMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-5, 5);
  const auto ring = make_ring({"p", "q", "r"});
  PolyMatrix m(n, n, ring);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly e(ring, Rational(coeff(rng)));
      for (std::size_t v = 0; v < 3; ++v) e += Poly(coeff(rng)) * Poly::variable(ring, v);
      m(i, j) = e;
    }
  }
  return m;
}

void BM_DetBareiss(benchmark::State& state) {
  const PolyMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
}
BENCHMARK(BM_DetBareiss)->DenseRange(3, 6);

void BM_DetCofactor(benchmark::State& state) {
  const PolyMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det_cofactor(m));
}
BENCHMARK(BM_DetCofactor)->DenseRange(3, 6);

void BM_SchubertMultiplyAllPairs(benchmark::State& state) {
  const GrassmannRingSpec spec{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  const auto parts = spec.partitions();
  for (auto _ : state) {
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        benchmark::DoNotOptimize(multiply(SchubertClass::sigma(spec, a), SchubertClass::sigma(spec, b)));
      }
    }
  }
}
BENCHMARK(BM_SchubertMultiplyAllPairs)->Args({1, 4})->Args({2, 6})->Args({3, 7});

void BM_DeterminantalSeptic(benchmark::State& state) {
  const QuadricNet net = build_net(random_quadric(3));
  for (auto _ : state) benchmark::DoNotOptimize(determinantal_septic(net));
}
BENCHMARK(BM_DeterminantalSeptic);

void BM_AnalyzeSample(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(analyze_sample(seed++));
}
BENCHMARK(BM_AnalyzeSample);

void BM_SymbolicP7(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(preserves_P7_symbolic());
}
BENCHMARK(BM_SymbolicP7);

}  // namespace

BENCHMARK_MAIN();
