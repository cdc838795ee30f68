#include <benchmark/benchmark.h>

#include "ll/coulomb.hpp"
#include "ll/hamiltonian.hpp"
#include "ll/radial_oracle.hpp"

using namespace ll;

static void BM_MomentumHamiltonian(benchmark::State& state) {
  PhysParams pp;
  pp.eps = 1e-3;
  Eigen::Vector3d p(0.1, 0.05, 0.02);
  for (auto _ : state) {
    auto es = finite_and_divergent_eigenvalues(momentum_hamiltonian(p, pp), pp);
    benchmark::DoNotOptimize(es);
  }
}
BENCHMARK(BM_MomentumHamiltonian);

static void BM_RecursionChain(benchmark::State& state) {
  PhysParams pp;
  pp.alpha = 0.2;
  pp.eps = 1e-4;
  const int n = static_cast<int>(state.range(0));
  const double E = solve_energy_finite_eps(n - 1, 1, pp);
  for (auto _ : state) {
    auto sol = run_recursions(E, {n - 1, 1}, pp);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_RecursionChain)->Arg(2)->Arg(4);

static void BM_FiniteEpsRoot(benchmark::State& state) {
  PhysParams pp;
  pp.alpha = 0.2;
  pp.eps = 1e-4;
  for (auto _ : state) {
    double E = solve_energy_finite_eps(1, 1, pp);
    benchmark::DoNotOptimize(E);
  }
}
BENCHMARK(BM_FiniteEpsRoot);

static void BM_Shooting(benchmark::State& state) {
  PhysParams pp;
  RadialGrid grid = RadialGrid::for_state(2, pp, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = shoot_eigenvalue(1, 1, pp, grid);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_Shooting)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
