#include <benchmark/benchmark.h>

#include "l12glasso/b_step.hpp"
#include "l12glasso/rng.hpp"
#include "l12glasso/simulator.hpp"
#include "l12glasso/solver.hpp"
#include "l12glasso/theta_step.hpp"

using namespace l12;

namespace {

Dataset bench_data(std::uint64_t seed) {
  const SimulationConfig cfg =
      SimulationConfig::from_case(2, 120, 60, 60, 3, 3, seed);
  return sample_dataset(make_truth(cfg), cfg);
}

Hyperparams bench_hp() {
  Hyperparams hp;
  hp.lambda1 = 0.2;
  hp.lambda2 = 0.1;
  hp.gamma = 0.05;
  hp.tau = 0.02;
  return hp;
}

void BM_prox_kernels(benchmark::State& state) {
  Rng rng(1);
  double z = 0.3, up = 0.2, low = 0.4;
  for (auto _ : state) {
    z = soft_threshold(z + rng.uniform(-1, 1), 0.1);
    benchmark::DoNotOptimize(asym_soft_threshold(z, up, low));
    benchmark::DoNotOptimize(fusion_prox_pair(z, -z, -1, 0.2));
  }
}
BENCHMARK(BM_prox_kernels);

void BM_proximal_average_step(benchmark::State& state) {
  const Dataset d = bench_data(5);
  const Hyperparams hp = bench_hp();
  Rng rng(2);
  DenseMatrix theta(60, 60);
  for (Index i = 0; i < 60; ++i) {
    for (Index j = 0; j < 60; ++j) theta(i, j) = rng.uniform01() < 0.1 ? 0.3 : 0.0;
  }
  theta = ((theta + theta.transpose()) * 0.5).eval();
  const ProxDecomposition decomp = build_prox_decomposition(theta, hp);
  DenseMatrix Z(60, 60);
  for (Index i = 0; i < 60; ++i) {
    for (Index j = 0; j < 60; ++j) Z(i, j) = rng.normal();
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(proximal_average_step(Z, decomp, 0.1));
  }
  state.counters["fusion_blocks"] = static_cast<double>(decomp.components.size());
}
BENCHMARK(BM_proximal_average_step);

void BM_theta_subproblem(benchmark::State& state) {
  const Dataset d = bench_data(7);
  const Hyperparams hp = bench_hp();
  const DenseMatrix S = (d.Y.transpose() * d.Y) / static_cast<double>(d.n());
  const DenseMatrix B = DenseMatrix::Zero(d.p(), d.q());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_theta_subproblem(d, B, default_theta_init(S, hp.lambda2), hp));
  }
}
BENCHMARK(BM_theta_subproblem)->Unit(benchmark::kMillisecond);

void BM_fit_bench_scale(benchmark::State& state) {
  const Dataset d = bench_data(9);
  Hyperparams hp = bench_hp();
  hp.outer_tol = 1e-5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit(d, hp));
  }
}
BENCHMARK(BM_fit_bench_scale)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
