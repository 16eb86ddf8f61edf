#include <benchmark/benchmark.h>

#include <random>

#include "granular/epr.hpp"
#include "granular/hypercomplex.hpp"
#include "granular/qubits.hpp"

using namespace granular;

namespace {

BitString random_string(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1);
  return BitString(std::move(b));
}

void BM_ChampernowneBits(benchmark::State& state) {
  const std::size_t length = std::size_t(1) << state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(champernowne_bits(length, 0));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(length));
}
BENCHMARK(BM_ChampernowneBits)->Arg(16)->Arg(20)->Arg(24);

void BM_Correlation(benchmark::State& state) {
  const std::size_t length = std::size_t(1) << state.range(0);
  BitString s = random_string(length, 1);
  BitString t = random_string(length, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation(s, t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(length));
}
BENCHMARK(BM_Correlation)->Arg(16)->Arg(20)->Arg(24);

void BM_FlipFraction(benchmark::State& state) {
  const std::size_t length = std::size_t(1) << state.range(0);
  BitString s = random_string(length, 3);
  const Dyadic f(75, 9);  // the flip fraction of cos = 181/256
  for (auto _ : state) {
    benchmark::DoNotOptimize(flip_fraction(s, f));
  }
}
BENCHMARK(BM_FlipFraction)->Arg(16)->Arg(20)->Arg(24);

void BM_BuildRoot(benchmark::State& state) {
  const unsigned level = static_cast<unsigned>(state.range(0));
  const std::uint32_t index = (std::uint32_t(1) << (level - 1)) + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_root({level, index}));
  }
}
BENCHMARK(BM_BuildRoot)->Arg(8)->Arg(10)->Arg(12);

void BM_ApplyRoot(benchmark::State& state) {
  const unsigned level = static_cast<unsigned>(state.range(0));
  SignedPermutation op = build_root({level, 2});
  BitString s = random_string(std::size_t(1) << level, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op.apply(s));
  }
}
BENCHMARK(BM_ApplyRoot)->Arg(8)->Arg(10)->Arg(12);

void BM_OrthogonalityTable(benchmark::State& state) {
  const unsigned level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(orthogonality_table(level));
  }
}
BENCHMARK(BM_OrthogonalityTable)->Arg(6)->Arg(8);

void BM_CorrCurve(benchmark::State& state) {
  const unsigned level = static_cast<unsigned>(state.range(0));
  SpinFunction s0 = build_s0(level, 0);
  std::vector<AngleCos> thetas;
  for (int n = -4; n <= 4; ++n) {
    bool extremal = n == -4 || n == 4;
    thetas.emplace_back(Dyadic(n, 2), extremal ? 0 : 1);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(corr_curve(s0, thetas));
  }
}
BENCHMARK(BM_CorrCurve)->Arg(16)->Arg(20);

void BM_CauchyProbe(benchmark::State& state) {
  const unsigned level = 20;
  SpinFunction s0 = build_s0(level, 0);
  AngleCos theta(Dyadic(3, 2), 1);
  AnglePi lambda(12345, level);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cauchy_probe(theta, lambda, 4, level, s0));
  }
}
BENCHMARK(BM_CauchyProbe);

void BM_ClassScan(benchmark::State& state) {
  const unsigned level = static_cast<unsigned>(state.range(0));
  QuaternionTriple t = quaternion_triple({level, 2});
  BitString base = to_spin(champernowne_bits(std::size_t(1) << level, 0));
  std::vector<AngleCos> grid = {AngleCos(Dyadic(3, 2), 1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_scan(t, grid, base));
  }
}
BENCHMARK(BM_ClassScan)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
