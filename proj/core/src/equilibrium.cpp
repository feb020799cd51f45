#include "qmg/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmg/stabilizer.hpp"

namespace qmg {

namespace {

constexpr double kPi = std::numbers::pi;

StateVector rotate_for_list(const StateVector& state,
                            const QuantumStrategy& strategy,
                            const QuestionList& list) {
  StateVector s = state;
  for (int player = 1; player <= 4; ++player) {
    const RotationParams& p =
        strategy.rotation_for(player, list.question_for(player));
    s = apply_local_unitary(s, player, rotation_matrix(p));
  }
  return s;
}

PayoffVector conditional_payoff(const StateVector& state,
                                const QuantumStrategy& strategy,
                                const QuestionList& list) {
  const StateVector rotated = rotate_for_list(state, strategy, list);
  const OutcomeDistribution dist =
      outcome_distribution(rotated, list.questions);
  PayoffVector out{};
  for (int idx = 0; idx < kDim; ++idx) {
    if (dist.p[idx] == 0.0) continue;
    const PayoffVector pv = payoff(list, AnswerProfile::from_index(idx));
    for (int i = 0; i < 4; ++i) out.v[i] += dist.p[idx] * pv.v[i];
  }
  return out;
}

double wrap_phase(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

}  // namespace

PayoffReport expected_payoffs(const StateVector& state,
                              const QuantumStrategy& strategy,
                              const std::string& state_desc,
                              const std::string& strategy_desc) {
  PayoffReport report;
  report.state_desc = state_desc;
  report.strategy_desc = strategy_desc;
  const auto& chart = all_question_lists();
  for (int k = 0; k < 8; ++k) {
    report.per_list[k] = conditional_payoff(state, strategy, chart[k].list);
    for (int i = 0; i < 4; ++i) {
      report.per_player[i] += report.per_list[k].v[i] / 8.0;
    }
  }
  report.total = report.per_player[0] + report.per_player[1] +
                 report.per_player[2] + report.per_player[3];
  return report;
}

double deviator_payoff_formula(Question q, const RotationParams& p) {
  if (q == Question::Z) {
    return 0.125 - 0.125 * std::cos(p.alpha - p.beta) * std::sin(p.theta);
  }
  return 0.125 - 0.0625 * (std::cos(2.0 * p.alpha) * (1.0 + std::cos(p.theta)) +
                           std::cos(2.0 * p.beta) * (1.0 - std::cos(p.theta)));
}

double deviator_conditional_payoff(const TaggedList& tagged,
                                   const LocalUnitary& u4) {
  const LocalUnitary s = rotation_matrix(canonical_params());
  StateVector state = build_initial_state();
  for (int player = 1; player <= 3; ++player) {
    state = apply_local_unitary(state, player, s);
  }
  state = apply_local_unitary(state, 4, u4);
  const OutcomeDistribution dist =
      outcome_distribution(state, tagged.list.questions);
  double out = 0.0;
  for (int idx = 0; idx < kDim; ++idx) {
    if (dist.p[idx] == 0.0) continue;
    out += dist.p[idx] * payoff(tagged.list, AnswerProfile::from_index(idx)).v[3];
  }
  return out;
}

std::vector<double> GridSpec::thetas() const {
  if (theta_points < 1) throw std::invalid_argument("empty theta grid");
  std::vector<double> out(theta_points);
  if (theta_points == 1) {
    out[0] = kPi / 2.0;
    return out;
  }
  for (int i = 0; i < theta_points; ++i) {
    out[i] = kPi * i / (theta_points - 1);
  }
  return out;
}

std::vector<double> GridSpec::phases() const {
  if (phase_points < 1) throw std::invalid_argument("empty phase grid");
  std::vector<double> out(phase_points);
  for (int k = 1; k <= phase_points; ++k) {
    out[k - 1] = -kPi + 2.0 * kPi * k / phase_points;
  }
  return out;
}

namespace {

// Per-list context for the fast deviation scan: everything except player
// 4's rotation is folded into a fixed base state, and player 4's
// measurement basis change is folded into a matrix applied after M.
struct DeviationListContext {
  std::array<cplx, kDim> base;      // psi_in with canonical rotations and
                                    // basis changes on players 1-3
  LocalUnitary post;                // H if player 4 is asked X, else I
  std::array<double, kDim> payoff4; // player 4's payoff per profile
  Question question4;
};

std::array<DeviationListContext, 8> make_deviation_contexts() {
  const LocalUnitary s = rotation_matrix(canonical_params());
  const LocalUnitary h = LocalUnitary::hadamard();
  std::array<DeviationListContext, 8> out{};
  const auto& chart = all_question_lists();
  for (int k = 0; k < 8; ++k) {
    const QuestionList& list = chart[k].list;
    StateVector st = build_initial_state();
    for (int player = 1; player <= 3; ++player) {
      st = apply_local_unitary(st, player, s);
      if (list.question_for(player) == Question::X) {
        st = apply_local_unitary(st, player, h);
      }
    }
    DeviationListContext& ctx = out[k];
    ctx.base = st.amplitudes();
    ctx.question4 = list.question_for(4);
    ctx.post = ctx.question4 == Question::X ? h : LocalUnitary::identity();
    for (int idx = 0; idx < kDim; ++idx) {
      ctx.payoff4[idx] = payoff(list, AnswerProfile::from_index(idx)).v[3];
    }
  }
  return out;
}

// Player 4's conditional payoff for one list, given her full rotation
// (post-basis-change already composed in).
double scan_payoff(const DeviationListContext& ctx, const LocalUnitary& u) {
  double out = 0.0;
  for (int i = 0; i < kDim; i += 2) {
    const cplx a0 = ctx.base[i];
    const cplx a1 = ctx.base[i + 1];
    out += ctx.payoff4[i] * std::norm(u.m[0] * a0 + u.m[1] * a1);
    out += ctx.payoff4[i + 1] * std::norm(u.m[2] * a0 + u.m[3] * a1);
  }
  return out;
}

}  // namespace

FormulaCheck formula_vs_simulation(const GridSpec& grid) {
  const auto contexts = make_deviation_contexts();
  const std::vector<double> thetas = grid.thetas();
  const std::vector<double> phases = grid.phases();

  FormulaCheck check;
  std::array<double, 8> cond{};
  for (const double theta : thetas) {
    for (const double alpha : phases) {
      for (const double beta : phases) {
        const RotationParams p{theta, alpha, beta};
        const LocalUnitary m = rotation_matrix(p);
        for (int k = 0; k < 8; ++k) {
          cond[k] = scan_payoff(contexts[k], contexts[k].post * m);
        }
        for (const Question q : {Question::Z, Question::X}) {
          const double formula = deviator_payoff_formula(q, p);
          double lo = 1.0;
          double hi = 0.0;
          for (int k = 0; k < 8; ++k) {
            if (contexts[k].question4 != q) continue;
            lo = std::min(lo, cond[k]);
            hi = std::max(hi, cond[k]);
            check.max_abs_error =
                std::max(check.max_abs_error, std::abs(cond[k] - formula));
          }
          check.max_question_spread =
              std::max(check.max_question_spread, hi - lo);
        }
        ++check.points_checked;
      }
    }
  }
  return check;
}

namespace {

RotationParams clamp_params(RotationParams p) {
  p.theta = std::clamp(p.theta, 0.0, kPi);
  p.alpha = wrap_phase(p.alpha);
  p.beta = wrap_phase(p.beta);
  return p;
}

RotationParams refine_by_coordinate_descent(Question q, RotationParams best,
                                            double initial_step) {
  double step = initial_step;
  double best_val = deviator_payoff_formula(q, best);
  while (step > 1e-6) {
    bool improved = false;
    for (int coord = 0; coord < 3; ++coord) {
      for (const double dir : {1.0, -1.0}) {
        RotationParams trial = best;
        (coord == 0 ? trial.theta : coord == 1 ? trial.alpha : trial.beta) +=
            dir * step;
        trial = clamp_params(trial);
        const double val = deviator_payoff_formula(q, trial);
        if (val > best_val) {
          best = trial;
          best_val = val;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

SweepResult nash_deviation_sweep(Question q, std::span<const double> thetas,
                                 std::span<const double> alphas,
                                 std::span<const double> betas, bool refine) {
  if (thetas.empty() || alphas.empty() || betas.empty()) {
    throw std::invalid_argument("sweep grid is empty");
  }
  SweepResult result;
  result.question = q;
  result.max_payoff = -1.0;
  for (const double theta : thetas) {
    for (const double alpha : alphas) {
      for (const double beta : betas) {
        const double val = deviator_payoff_formula(q, {theta, alpha, beta});
        if (val > result.max_payoff) result.max_payoff = val;
      }
    }
  }
  for (const double theta : thetas) {
    for (const double alpha : alphas) {
      for (const double beta : betas) {
        const RotationParams p{theta, alpha, beta};
        if (deviator_payoff_formula(q, p) >= result.max_payoff - kArgmaxTol) {
          result.argmax_set.push_back(p);
        }
      }
    }
  }
  std::sort(result.argmax_set.begin(), result.argmax_set.end(),
            [](const RotationParams& a, const RotationParams& b) {
              if (a.theta != b.theta) return a.theta < b.theta;
              if (a.alpha != b.alpha) return a.alpha < b.alpha;
              return a.beta < b.beta;
            });

  result.refined_best = result.argmax_set.front();
  result.refined_payoff = deviator_payoff_formula(q, result.refined_best);
  if (refine) {
    const double step =
        thetas.size() > 1 ? thetas[1] - thetas[0] : kPi / 60.0;
    result.refined_best =
        refine_by_coordinate_descent(q, result.refined_best, step);
    result.refined_payoff = deviator_payoff_formula(q, result.refined_best);
    result.max_payoff = std::max(result.max_payoff, result.refined_payoff);
  }
  result.gap = 0.25 - result.max_payoff;
  return result;
}

SweepResult nash_deviation_sweep(Question q, const GridSpec& grid,
                                 bool refine) {
  const std::vector<double> thetas = grid.thetas();
  const std::vector<double> phases = grid.phases();
  return nash_deviation_sweep(q, thetas, phases, phases, refine);
}

namespace {

TournamentReport tournament_stats(const std::array<double, 4>& sum,
                                  const std::array<double, 4>& sum_sq,
                                  int rounds, std::uint64_t seed) {
  TournamentReport report;
  report.rounds = rounds;
  report.seed = seed;
  for (int i = 0; i < 4; ++i) {
    report.mean[i] = sum[i] / rounds;
    const double var =
        std::max(0.0, sum_sq[i] / rounds - report.mean[i] * report.mean[i]);
    report.std_error[i] = rounds > 1 ? std::sqrt(var / rounds) : 0.0;
  }
  return report;
}

}  // namespace

TournamentReport monte_carlo_tournament(const StateVector& prepared,
                                        const QuantumStrategy& strategy,
                                        int rounds, std::uint64_t seed) {
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  Rng rng(seed);
  std::array<double, 4> sum{};
  std::array<double, 4> sum_sq{};
  for (int r = 0; r < rounds; ++r) {
    const QuestionList list = referee_sample(rng);
    const StateVector rotated = rotate_for_list(prepared, strategy, list);
    const OutcomeDistribution dist =
        outcome_distribution(rotated, list.questions);
    const AnswerProfile profile = sample_outcome(dist, rng);
    const PayoffVector pv = payoff(list, profile);
    for (int i = 0; i < 4; ++i) {
      sum[i] += pv.v[i];
      sum_sq[i] += pv.v[i] * pv.v[i];
    }
  }
  return tournament_stats(sum, sum_sq, rounds, seed);
}

TournamentReport monte_carlo_tournament(const ClassicalAssignment& assignment,
                                        int rounds, std::uint64_t seed) {
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  Rng rng(seed);
  std::array<double, 4> sum{};
  std::array<double, 4> sum_sq{};
  for (int r = 0; r < rounds; ++r) {
    const QuestionList list = referee_sample(rng);
    const PayoffVector pv = payoff(list, classical_answers(assignment, list));
    for (int i = 0; i < 4; ++i) {
      sum[i] += pv.v[i];
      sum_sq[i] += pv.v[i] * pv.v[i];
    }
  }
  return tournament_stats(sum, sum_sq, rounds, seed);
}

std::array<double, 4> ghz_baseline_payoffs() {
  constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
  std::array<cplx, kDim> amps{};
  amps[0] = kInvSqrt2;
  amps[kDim - 1] = kInvSqrt2;
  StateVector ghz(amps);
  const LocalUnitary u = rotation_matrix(ghz_params());
  for (int player = 1; player <= 4; ++player) {
    ghz = apply_local_unitary(ghz, player, u);
  }
  // All qubits measured in the computational basis; score as a minority
  // game (any minority list gives the same payoff table).
  const QuestionList minority_list = all_question_lists()[0].list;
  std::array<double, 4> out{};
  for (int idx = 0; idx < kDim; ++idx) {
    const double prob = std::norm(ghz.amplitude(idx));
    if (prob == 0.0) continue;
    const PayoffVector pv = payoff(minority_list, AnswerProfile::from_index(idx));
    for (int i = 0; i < 4; ++i) out[i] += prob * pv.v[i];
  }
  return out;
}

std::array<double, 4> random_answer_minority_payoffs() {
  const QuestionList minority_list = all_question_lists()[0].list;
  std::array<double, 4> out{};
  for (int idx = 0; idx < kDim; ++idx) {
    const PayoffVector pv = payoff(minority_list, AnswerProfile::from_index(idx));
    for (int i = 0; i < 4; ++i) out[i] += pv.v[i] / kDim;
  }
  return out;
}

}  // namespace qmg
