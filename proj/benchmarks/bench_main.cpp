#include <benchmark/benchmark.h>

#include "qm/conic.hpp"
#include "qm/harmonic.hpp"
#include "qm/parcelling.hpp"
#include "qm/random.hpp"
#include "qm/sylvester.hpp"

namespace {

void BM_Decompose(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  qm::Rng rng(1);
  const qm::Poly p = rng.poly(d, false);
  const qm::QuadForm s = qm::QuadForm::sphere();
  for (auto _ : state) benchmark::DoNotOptimize(qm::decompose(p, s, qm::Policy::CanonicalReal));
}
BENCHMARK(BM_Decompose)->DenseRange(2, 8, 2);

void BM_HarmonicSplit(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  qm::Rng rng(2);
  const qm::HPoly p = rng.hpoly(d, true);
  const qm::QuadForm s = qm::QuadForm::sphere();
  qm::harmonic_split(p, s);  // warm the per-degree factorization cache
  for (auto _ : state) benchmark::DoNotOptimize(qm::harmonic_split(p, s));
}
BENCHMARK(BM_HarmonicSplit)->DenseRange(2, 10, 2);

void BM_ProjRoots(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  qm::Rng rng(3);
  Eigen::VectorXcd c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = rng.complex_normal();
  const qm::BinaryForm b(d, c);
  for (auto _ : state) benchmark::DoNotOptimize(qm::proj_roots(b));
}
BENCHMARK(BM_ProjRoots)->RangeMultiplier(2)->Range(4, 32);

void BM_EnumerateParcellings(benchmark::State& state) {
  const std::vector<int> mu(2 * static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(qm::enumerate_parcellings(mu));
}
BENCHMARK(BM_EnumerateParcellings)->DenseRange(2, 6);

void BM_EnumerateDecompositions(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  qm::Rng rng(4);
  const qm::QuadForm s = qm::QuadForm::sphere();
  const qm::HPoly h = qm::harmonic_split(rng.hpoly(d, true), s).harmonic;
  for (auto _ : state) benchmark::DoNotOptimize(qm::enumerate_decompositions(h, s));
}
BENCHMARK(BM_EnumerateDecompositions)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
