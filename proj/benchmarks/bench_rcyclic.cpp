#include <benchmark/benchmark.h>

#include "rcyclic/contraction.hpp"
#include "rcyclic/decomposition.hpp"
#include "rcyclic/instances.hpp"
#include "rcyclic/solver.hpp"

using namespace rcyclic;

static void BM_Decompose(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int r = 1; r < m; ++r) benchmark::DoNotOptimize(decompose(m, r));
  state.SetItemsProcessed(state.iterations() * (m - 1));
}
BENCHMARK(BM_Decompose)->Arg(12)->Arg(64)->Arg(512);

static void BM_GroupAxioms(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_group_axioms(m));
}
BENCHMARK(BM_GroupAxioms)->Arg(8)->Arg(24)->Arg(64);

static void BM_CertifySector(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto spec = gen_sector_rotation(m, 1, 0.5, 1);
  const auto mode = state.range(1) ? Mode::Asynchronous : Mode::Synchronous;
  std::size_t pairs = 0;
  for (auto _ : state) {
    const auto cert = certify(spec.space, spec.covering, spec.map, 1, mode, 0.5);
    pairs = cert.pairs_checked;
    benchmark::DoNotOptimize(cert);
  }
  state.counters["pairs"] = static_cast<double>(pairs);
}
BENCHMARK(BM_CertifySector)->Args({4, 0})->Args({8, 0})->Args({8, 1})->Unit(benchmark::kMillisecond);

static void BM_CertifyFiniteShift(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto spec = gen_finite_shift(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(certify(spec.space, spec.covering, spec.map, 1, Mode::Synchronous, 0.5));
}
BENCHMARK(BM_CertifyFiniteShift)->Arg(12)->Arg(128);

static void BM_Picard(benchmark::State& state) {
  const MetricSpace plane = EuclideanSpace(2);
  const SelfMap f(ScaledRotation{{0.0, 0.0}, 1.0, static_cast<double>(state.range(0)) / 100.0});
  const Point x0 = Point::at({1.0, 0.5});
  int iterations = 0;
  for (auto _ : state) {
    const auto trace = picard(plane, f, x0, static_cast<double>(state.range(0)) / 100.0);
    iterations = trace.iterations;
    benchmark::DoNotOptimize(trace);
  }
  state.counters["iterations"] = iterations;
}
BENCHMARK(BM_Picard)->Arg(50)->Arg(90)->Arg(99);

static void BM_SolveAsynchronous(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const auto spec = gen_sector_rotation(m, r, 0.5, 1);
  const auto cert = certify(spec.space, spec.covering, spec.map, r, Mode::Asynchronous, 0.5);
  std::vector<Point> starts;
  for (int t = 0; t < r; ++t) starts.push_back(spec.covering.set(1 + t).witnesses().back());
  for (auto _ : state) benchmark::DoNotOptimize(solve_asynchronous(spec.space, spec.covering, spec.map, r, cert, 1, starts));
}
BENCHMARK(BM_SolveAsynchronous)->Args({5, 3})->Args({7, 4});

BENCHMARK_MAIN();
