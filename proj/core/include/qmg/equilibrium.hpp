#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qmg/game.hpp"
#include "qmg/strategy.hpp"

namespace qmg {

struct PayoffReport {
  std::array<double, 4> per_player{};
  double total = 0.0;
  // Conditional payoffs, one per question list in chart order.
  std::array<PayoffVector, 8> per_list{};
  std::string state_desc;
  std::string strategy_desc;
};

// Exact expected payoffs: for each list apply every player's
// question-conditioned rotation, measure in the questioned bases, and
// average payoff over the outcome distribution; lists weighted 1/8.
PayoffReport expected_payoffs(const StateVector& state,
                              const QuantumStrategy& strategy,
                              const std::string& state_desc = "",
                              const std::string& strategy_desc = "");

// Closed-form payoff of a lone deviator playing M(p) against three
// canonical players, conditional on the question she is asked:
//   Z: 1/8 - (1/8) cos(alpha - beta) sin(theta)
//   X: 1/8 - (1/16)[cos(2 alpha)(1 + cos theta) + cos(2 beta)(1 - cos theta)]
double deviator_payoff_formula(Question q, const RotationParams& p);

// Exact simulated payoff of player 4 deviating to u4 (players 1-3
// canonical from psi_in), conditional on one question list.
double deviator_conditional_payoff(const TaggedList& tagged,
                                   const LocalUnitary& u4);

// Uniform parameter grid. theta_points over [0, pi] inclusive;
// phase_points over (-pi, pi], right-closed.
struct GridSpec {
  int theta_points = 61;
  int phase_points = 72;

  std::vector<double> thetas() const;
  std::vector<double> phases() const;
};

struct FormulaCheck {
  // Worst |closed form - exact simulation| over the grid.
  double max_abs_error = 0.0;
  // Worst spread between conditional payoffs of lists sharing the
  // deviator's question (the payoff must not depend on the game).
  double max_question_spread = 0.0;
  long points_checked = 0;
};

FormulaCheck formula_vs_simulation(const GridSpec& grid);

struct SweepResult {
  Question question;
  double max_payoff = 0.0;
  // 1/4 - max_payoff
  double gap = 0.0;
  // Every swept point within 1e-9 of the max, sorted by (theta, alpha, beta).
  std::vector<RotationParams> argmax_set;
  // Best point after coordinate-descent refinement (equals the best grid
  // point when refinement is disabled).
  RotationParams refined_best{};
  double refined_payoff = 0.0;
};

inline constexpr double kArgmaxTol = 1e-9;

// Maximizes the closed-form deviation payoff over an explicit point set,
// optionally refining the best point by coordinate descent (step halving
// down to 1e-6 rad).
SweepResult nash_deviation_sweep(Question q, std::span<const double> thetas,
                                 std::span<const double> alphas,
                                 std::span<const double> betas, bool refine);

SweepResult nash_deviation_sweep(Question q, const GridSpec& grid,
                                 bool refine = true);

struct TournamentReport {
  std::array<double, 4> mean{};
  std::array<double, 4> std_error{};
  int rounds = 0;
  std::uint64_t seed = 0;
};

// Seeded Monte Carlo play: each round draws a list, rotates the prepared
// state, samples the measurement, and scores it.
TournamentReport monte_carlo_tournament(const StateVector& prepared,
                                        const QuantumStrategy& strategy,
                                        int rounds, std::uint64_t seed);

// Same referee, but answers come from a deterministic assignment.
TournamentReport monte_carlo_tournament(const ClassicalAssignment& assignment,
                                        int rounds, std::uint64_t seed);

// Plain quantum minority game baseline: GHZ state, every player applies the
// ghz_params() rotation, all qubits measured in the computational basis.
// Returns the per-player expected minority payoff (the answer distribution
// is question-independent, so this is the conditional payoff on every
// minority list). Equals 1/4 per player, against 1/8 for uniformly random
// classical answers.
std::array<double, 4> ghz_baseline_payoffs();

// Expected minority payoff per player when all four answers are uniform
// independent coins: 1/8 each.
std::array<double, 4> random_answer_minority_payoffs();

}  // namespace qmg
