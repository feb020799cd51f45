#include <benchmark/benchmark.h>

#include "qmg/classical.hpp"
#include "qmg/equilibrium.hpp"
#include "qmg/stabilizer.hpp"

namespace {

using namespace qmg;

void BM_ApplyLocalUnitary(benchmark::State& state) {
  StateVector psi = build_initial_state();
  const LocalUnitary u = rotation_matrix(canonical_params());
  for (auto _ : state) {
    psi = apply_local_unitary(psi, 2, u);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_ApplyLocalUnitary);

void BM_PauliExpectation(benchmark::State& state) {
  const StateVector psi = build_game_state_via_rotation();
  const PauliString p = PauliString::parse("-XZZZ");
  for (auto _ : state) {
    benchmark::DoNotOptimize(pauli_expectation(psi, p));
  }
}
BENCHMARK(BM_PauliExpectation);

void BM_ExpectedPayoffs(benchmark::State& state) {
  const StateVector psi = build_initial_state();
  const QuantumStrategy strat = canonical_strategy();
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_payoffs(psi, strat));
  }
}
BENCHMARK(BM_ExpectedPayoffs);

void BM_DeviatorConditional(benchmark::State& state) {
  const TaggedList list = all_question_lists()[0];
  const LocalUnitary u = rotation_matrix({1.1, 0.3, -0.7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(deviator_conditional_payoff(list, u));
  }
}
BENCHMARK(BM_DeviatorConditional);

void BM_DeviationSweep(benchmark::State& state) {
  const GridSpec grid{static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(nash_deviation_sweep(Question::Z, grid, false));
  }
  state.SetItemsProcessed(state.iterations() * grid.theta_points *
                          grid.phase_points * grid.phase_points);
}
BENCHMARK(BM_DeviationSweep)->Args({13, 12})->Args({31, 36});

void BM_EnumerateAssignments(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_all());
  }
}
BENCHMARK(BM_EnumerateAssignments);

void BM_TournamentRound(benchmark::State& state) {
  const StateVector psi = build_initial_state();
  const QuantumStrategy strat = canonical_strategy();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo_tournament(psi, strat, 1000, seed++));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_TournamentRound);

}  // namespace

BENCHMARK_MAIN();
