// Microbenchmarks for the hot kernels: two-point fluxes, the viscous flux in
// entropy-gradient form, and a full rhs evaluation on a small mesh.

#include <benchmark/benchmark.h>

#include <random>

#include "esdgmhd/scenarios.hpp"
#include "esdgmhd/semidiscrete.hpp"

using namespace esdg;

namespace {

State make_state(std::mt19937_64& gen, double gamma) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uni = [&](double a, double b) { return a + (b - a) * u01(gen); };
  return State::from_prim(uni(0.5, 2.0), {uni(-1, 1), uni(-1, 1), uni(-1, 1)}, uni(0.5, 2.0),
                          {uni(-1, 1), uni(-1, 1), uni(-1, 1)}, uni(-0.2, 0.2), gamma);
}

void bm_ec_flux(benchmark::State& state) {
  std::mt19937_64 gen(1);
  const double gamma = 5.0 / 3.0;
  const State a = make_state(gen, gamma);
  const State b = make_state(gen, gamma);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ec_flux(a, b, gamma, 1.2, Direction::X));
  }
}
BENCHMARK(bm_ec_flux);

void bm_es_flux(benchmark::State& state) {
  std::mt19937_64 gen(2);
  const double gamma = 5.0 / 3.0;
  const State a = make_state(gen, gamma);
  const State b = make_state(gen, gamma);
  const DissipationOperator diss{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(es_flux(a, b, gamma, 1.2, Direction::X, diss));
  }
}
BENCHMARK(bm_es_flux);

void bm_viscous_flux(benchmark::State& state) {
  std::mt19937_64 gen(3);
  const double gamma = 5.0 / 3.0;
  GasConfig gas;
  gas.gamma = gamma;
  gas.mu = 8.5e-4;
  gas.eta = 1e-5;
  const Vec9 w = entropy_vars(make_state(gen, gamma), gamma).w;
  std::uniform_real_distribution<double> u01(-1.0, 1.0);
  Vec9 wx, wy;
  for (int c = 0; c < 9; ++c) {
    wx[c] = u01(gen);
    wy[c] = u01(gen);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(viscous_flux(w, wx, wy, gas));
  }
}
BENCHMARK(bm_viscous_flux);

void bm_rhs(benchmark::State& state) {
  const Scenario sc = orszag_tang_scenario();
  const auto ops = build_sbp_operators(7);
  const auto mesh = build_mesh(sc.bounds, 8, 8, ops);
  SolutionField field = sample_initial_condition(sc, mesh);
  SchemeMode mode;
  NodalField dudt(mesh.num_elements(), mesh.n1(), 9);
  RhsWorkspace ws;
  ThreadPool pool(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    rhs(field.u, 0.0, mesh, ops, sc.gas, mode, 2.0, dudt, ws, pool);
    benchmark::DoNotOptimize(dudt.data());
  }
  state.SetItemsProcessed(state.iterations() * mesh.num_elements());
}
BENCHMARK(bm_rhs)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
