// Command-line front end: every analysis as a subcommand emitting one JSON
// report on stdout (human summary on stderr). Exit codes: 0 success, 1
// verification failure, 2 usage error.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmg/classical.hpp"
#include "qmg/equilibrium.hpp"
#include "qmg/stabilizer.hpp"

using json = nlohmann::ordered_json;
using namespace qmg;

namespace {

constexpr const char* kSchemaVersion = "1.0";
constexpr double kPi = std::numbers::pi;

// Best rational approximation with denominator <= 1e9 by continued
// fractions; exact for every payoff this tool reports.
std::string fraction_string(double v) {
  const bool negative = v < 0.0;
  double x = std::abs(v);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_f = std::floor(frac);
    const long long a = static_cast<long long>(a_f);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > 1000000000LL) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (std::abs(x - static_cast<double>(p1) / q1) <= 1e-12 * std::max(1.0, x)) {
      break;
    }
    const double rem = frac - a_f;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  const Fraction f = Fraction::of(negative ? -p1 : p1, q1);
  return f.str();
}

json payoff_json(double v) {
  return json{{"decimal", v}, {"fraction", fraction_string(v)}};
}

json report_header(const std::string& command, json config) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"config", std::move(config)}};
}

struct OutputOptions {
  bool json_only = false;
};

void emit(const json& report, const std::string& summary,
          const OutputOptions& out) {
  std::cout << report.dump(2) << "\n";
  if (!out.json_only) std::cerr << summary;
}

json amplitudes_json(const StateVector& s) {
  json out = json::array();
  for (const cplx& a : s.amplitudes()) {
    out.push_back(json::array({a.real(), a.imag()}));
  }
  return out;
}

json params_json(const RotationParams& p) {
  return json{{"theta", p.theta}, {"alpha", p.alpha}, {"beta", p.beta}};
}

int cmd_state(double tolerance, const OutputOptions& out) {
  const StateVector via_proj = build_game_state_via_projectors();
  const StateVector via_rot = build_game_state_via_rotation();
  const double overlap = via_proj.overlap(via_rot);
  const StabilizerReport stab = verify_stabilizer(via_rot);

  json report = report_header("state", {{"tolerance", tolerance}});
  report["psi_via_projectors"] = amplitudes_json(via_proj);
  report["psi_via_rotation"] = amplitudes_json(via_rot);
  report["route_overlap"] = overlap;
  json entries = json::array();
  for (const auto& [p, e] : stab.entries) {
    entries.push_back({{"operator", p.str()}, {"expectation", e}});
  }
  report["stabilizer"] = entries;
  const bool ok =
      std::abs(overlap - 1.0) <= tolerance && stab.all_plus_one(tolerance);
  report["ok"] = ok;

  std::string summary = "state: |<psi_proj|psi_rot>| = " +
                        std::to_string(overlap) + ", stabilizer " +
                        (stab.all_plus_one(tolerance) ? "all +1" : "FAILED") +
                        "\n";
  emit(report, summary, out);
  return ok ? 0 : 1;
}

int cmd_formulas(int grid_theta, int grid_phase, double tolerance,
                 const OutputOptions& out) {
  const GridSpec grid{grid_theta, grid_phase};
  const FormulaCheck check = formula_vs_simulation(grid);
  const bool ok =
      check.max_abs_error <= tolerance && check.max_question_spread <= 1e-12;

  json report = report_header("formulas", {{"grid_theta", grid_theta},
                                           {"grid_phase", grid_phase},
                                           {"tolerance", tolerance}});
  report["points_checked"] = check.points_checked;
  report["max_abs_error"] = check.max_abs_error;
  report["max_question_spread"] = check.max_question_spread;
  report["ok"] = ok;

  emit(report,
       "formulas: max |closed form - simulation| = " +
           std::to_string(check.max_abs_error) + " over " +
           std::to_string(check.points_checked) + " points\n",
       out);
  return ok ? 0 : 1;
}

int cmd_nash(int grid_theta, int grid_phase, double tolerance,
             const OutputOptions& out) {
  json report = report_header("nash", {{"grid_theta", grid_theta},
                                       {"grid_phase", grid_phase},
                                       {"tolerance", tolerance},
                                       {"argmax_tolerance", kArgmaxTol}});
  bool ok = true;
  std::string summary;
  for (const Question q : {Question::Z, Question::X}) {
    const SweepResult r =
        nash_deviation_sweep(q, GridSpec{grid_theta, grid_phase}, true);
    bool canonical = false;
    for (const RotationParams& p : r.argmax_set) {
      canonical = canonical || (std::abs(p.theta - kPi / 2) < 1e-9 &&
                                std::abs(p.alpha - kPi / 2) < 1e-9 &&
                                std::abs(p.beta + kPi / 2) < 1e-9);
    }
    ok = ok && r.max_payoff <= 0.25 + tolerance && canonical;

    json sweep;
    sweep["question"] = std::string(1, question_letter(q));
    sweep["max_payoff"] = payoff_json(r.max_payoff);
    sweep["gap"] = r.gap;
    sweep["canonical_in_argmax"] = canonical;
    sweep["argmax_count"] = r.argmax_set.size();
    json argmax = json::array();
    for (const RotationParams& p : r.argmax_set) argmax.push_back(params_json(p));
    sweep["argmax_set"] = argmax;
    sweep["refined_best"] = params_json(r.refined_best);
    sweep["refined_payoff"] = r.refined_payoff;
    report["sweeps"].push_back(sweep);

    summary += std::string("nash ") + question_letter(q) +
               ": max = " + std::to_string(r.max_payoff) +
               ", argmax points = " + std::to_string(r.argmax_set.size()) +
               "\n";
  }
  report["ok"] = ok;
  emit(report, summary, out);
  return ok ? 0 : 1;
}

int cmd_lhv(const OutputOptions& out) {
  const auto rows = enumerate_all();
  int max_satisfied = 0;
  int perfect = 0;
  std::array<int, 9> histogram{};
  for (const AssignmentRow& row : rows) {
    max_satisfied = std::max(max_satisfied, row.satisfied);
    if (row.satisfied == 8) ++perfect;
    ++histogram[row.satisfied];
  }
  const auto witnesses = contradiction_witnesses();
  const bool ok = perfect == 0 && witnesses[0].is_contradiction() &&
                  witnesses[1].is_contradiction();

  json report = report_header("lhv", json::object());
  report["assignments_enumerated"] = rows.size();
  report["all_eight_satisfiable"] = perfect > 0;
  report["max_satisfied"] = max_satisfied;
  report["satisfied_histogram"] = histogram;
  report["best_symmetrized_payoff"] =
      payoff_json(Fraction::of(max_satisfied, 32).value());
  json ws = json::array();
  for (const auto& w : witnesses) {
    ws.push_back({{"multiplied", std::string{w.multiplied[0], w.multiplied[1],
                                             w.multiplied[2]}},
                  {"product_lhs", w.product_lhs},
                  {"product_rhs", w.product_rhs},
                  {"conflicting", std::string(1, w.conflicting)},
                  {"conflicting_lhs", w.conflicting_lhs},
                  {"conflicting_rhs", w.conflicting_rhs},
                  {"is_contradiction", w.is_contradiction()}});
  }
  report["contradiction_witnesses"] = ws;
  report["ok"] = ok;

  emit(report,
       "lhv: no perfect assignment; max satisfied = " +
           std::to_string(max_satisfied) + "/8\n",
       out);
  return ok ? 0 : 1;
}

int cmd_bound(const OutputOptions& out) {
  json report = report_header("bound", json::object());
  bool ok = true;
  json sweep = json::array();
  for (int k = 0; k <= 16; ++k) {
    const double m_x = k / 16.0;
    const BoundLedger l = bound_ledger(m_x);
    ok = ok && std::abs(3.0 * l.m_z + l.m_x - 1.0) <= 1e-15;
    sweep.push_back({{"m_x", payoff_json(l.m_x)},
                     {"m_z", payoff_json(l.m_z)},
                     {"x_sacrifice_minority", payoff_json(l.x_sacrifice_minority)},
                     {"x_sacrifice_anti", payoff_json(l.x_sacrifice_anti)},
                     {"z_sacrifice_minority", payoff_json(l.z_sacrifice_minority)},
                     {"z_sacrifice_anti", payoff_json(l.z_sacrifice_anti)},
                     {"max_payoff", payoff_json(l.max_payoff)}});
  }
  report["ledger_sweep"] = sweep;
  ok = ok && std::abs(bound_ledger(0.0).max_payoff - 7.0 / 32.0) <= 1e-15 &&
       std::abs(bound_ledger(1.0).max_payoff - 7.0 / 32.0) <= 1e-15 &&
       bound_ledger(0.25).max_payoff == (17.0 + 1.0) / 96.0;

  const ClassicalSupremum s = classical_supremum();
  report["classical_supremum"] = {
      {"analytic_bound", payoff_json(s.analytic_bound.value())},
      {"exhaustive_optimum", payoff_json(s.exhaustive_optimum.value())},
      {"quantum_value", payoff_json(s.quantum_value.value())},
      {"classical_to_quantum_ratio",
       payoff_json(s.analytic_bound.value() / s.quantum_value.value())}};
  ok = ok && s.exhaustive_optimum.value() <= s.analytic_bound.value() &&
       s.exhaustive_optimum.value() < s.quantum_value.value();
  report["ok"] = ok;

  emit(report,
       "bound: analytic 7/32, exhaustive " + s.exhaustive_optimum.str() +
           ", quantum 1/4\n",
       out);
  return ok ? 0 : 1;
}

int cmd_play(int rounds, std::uint64_t seed, const std::string& strategy,
             const OutputOptions& out) {
  TournamentReport r;
  std::string state_desc;
  if (strategy == "quantum") {
    r = monte_carlo_tournament(build_initial_state(), canonical_strategy(),
                               rounds, seed);
    state_desc = "psi_in + canonical rotations";
  } else if (strategy == "ghz") {
    constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
    std::array<cplx, kDim> amps{};
    amps[0] = kInvSqrt2;
    amps[kDim - 1] = kInvSqrt2;
    r = monte_carlo_tournament(StateVector(amps), ghz_strategy(), rounds, seed);
    state_desc = "GHZ + plain minority-game rotation";
  } else if (strategy.rfind("classical:", 0) == 0) {
    int index;
    try {
      index = std::stoi(strategy.substr(10));
    } catch (const std::exception&) {
      std::cerr << "invalid classical assignment index\n";
      return 2;
    }
    if (index < 0 || index > 255) {
      std::cerr << "classical assignment index must be in 0..255\n";
      return 2;
    }
    r = monte_carlo_tournament(
        ClassicalAssignment::from_index(static_cast<std::uint8_t>(index)),
        rounds, seed);
    state_desc = "deterministic assignment " + std::to_string(index);
  } else {
    std::cerr << "unknown strategy '" << strategy
              << "' (expected quantum, ghz, or classical:<index>)\n";
    return 2;
  }

  json report = report_header(
      "play",
      {{"rounds", rounds}, {"seed", seed}, {"strategy", strategy}});
  report["state"] = state_desc;
  json means = json::array(), errs = json::array();
  for (int i = 0; i < 4; ++i) {
    means.push_back(payoff_json(r.mean[i]));
    errs.push_back(r.std_error[i]);
  }
  report["mean_payoff"] = means;
  report["std_error"] = errs;
  report["ok"] = true;

  std::string summary = "play: means =";
  for (int i = 0; i < 4; ++i) summary += " " + std::to_string(r.mean[i]);
  emit(report, summary + "\n", out);
  return 0;
}

int cmd_povm(double a, double b, int trials, std::uint64_t seed,
             const OutputOptions& out) {
  if (!(0.0 <= b && b <= a && a <= 1.0)) {
    std::cerr << "POVM weights must satisfy 0 <= b <= a <= 1\n";
    return 2;
  }
  const StateVector psi = build_game_state_via_rotation();
  Rng rng(seed);
  json report = report_header("povm", {{"a", a},
                                       {"b", b},
                                       {"trials", trials},
                                       {"seed", seed}});
  bool ok = true;
  json checks = json::array();
  for (int player = 1; player <= 4; ++player) {
    const RotationParams basis{rng.uniform01() * kPi,
                               (rng.uniform01() * 2.0 - 1.0) * 0.999 * kPi,
                               (rng.uniform01() * 2.0 - 1.0) * 0.999 * kPi};
    const TwoOutcomePOVM povm{a, b, rotation_matrix(basis)};
    const QubitMarginal rho = reduced_density(psi, player);
    const auto [p_plus, p_minus] = povm_probabilities(rho, povm);

    const cplx u0 = povm.eigenbasis(0, 0);
    const cplx u1 = povm.eigenbasis(1, 0);
    const double p_up =
        (std::conj(u0) * (rho.rho[0] * u0 + rho.rho[1] * u1) +
         std::conj(u1) * (rho.rho[2] * u0 + rho.rho[3] * u1))
            .real();
    std::vector<int> projective(trials);
    for (auto& o : projective) o = rng.uniform01() < p_up ? 1 : -1;
    const std::vector<int> sim = povm_simulate(projective, povm, rng);
    long plus = 0;
    for (const int o : sim) plus += o == 1;
    const double empirical = static_cast<double>(plus) / trials;
    const double sigma = std::sqrt(p_plus * (1.0 - p_plus) / trials);
    const bool within =
        std::abs(empirical - p_plus) <= std::max(4.0 * sigma, 1.0 / trials);
    ok = ok && within;
    checks.push_back({{"player", player},
                      {"exact_p_plus", p_plus},
                      {"empirical_p_plus", empirical},
                      {"four_sigma", 4.0 * sigma},
                      {"within", within}});
  }
  report["checks"] = checks;
  // Projective special case passes through unchanged.
  const TwoOutcomePOVM projective_povm{1.0, 0.0, LocalUnitary::identity()};
  const std::vector<int> echo = {1, -1, 1};
  Rng coin(seed + 1);
  const bool projective_exact =
      povm_simulate(echo, projective_povm, coin) == echo;
  report["projective_case_exact"] = projective_exact;
  ok = ok && projective_exact;
  report["ok"] = ok;

  emit(report,
       std::string("povm: reduction ") + (ok ? "verified" : "FAILED") + "\n",
       out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact analysis of the four-player minority/anti-minority quantum "
      "game: state construction, Nash deviation sweeps, local-hidden-"
      "variable no-go, and classical payoff bounds."};
  app.require_subcommand(1);

  OutputOptions out;
  std::uint64_t seed = 1;
  int rounds = 100000;
  int grid_theta = 61;
  int grid_phase = 72;
  double tolerance = 1e-9;
  double state_tolerance = 1e-12;
  std::string strategy = "quantum";
  double povm_a = 0.8;
  double povm_b = 0.3;
  int trials = 100000;

  app.add_flag("--json-only", out.json_only,
               "suppress the human-readable summary on stderr");

  auto* state = app.add_subcommand(
      "state", "build psi by both routes and verify its stabilizer");
  state->fallthrough();
  state->add_option("--tolerance", state_tolerance, "verification tolerance");

  auto* formulas = app.add_subcommand(
      "formulas", "compare the closed-form deviation payoffs with simulation");
  formulas->fallthrough();
  formulas->add_option("--grid-theta", grid_theta, "theta grid points");
  formulas->add_option("--grid-phase", grid_phase, "alpha/beta grid points");
  formulas->add_option("--tolerance", tolerance, "max allowed error");

  auto* nash = app.add_subcommand(
      "nash", "sweep unilateral deviations and certify the equilibrium");
  nash->fallthrough();
  nash->add_option("--grid-theta", grid_theta, "theta grid points");
  nash->add_option("--grid-phase", grid_phase, "alpha/beta grid points");
  nash->add_option("--tolerance", tolerance, "allowed excess over 1/4");

  auto* lhv = app.add_subcommand(
      "lhv", "enumerate all 256 assignments and derive the contradiction");
  lhv->fallthrough();

  auto* bound = app.add_subcommand(
      "bound", "classical payoff ledger and the 7/32 supremum");
  bound->fallthrough();

  auto* play = app.add_subcommand("play", "seeded Monte Carlo tournament");
  play->fallthrough();
  play->add_option("--rounds", rounds, "number of rounds")
      ->check(CLI::PositiveNumber);
  play->add_option("--seed", seed, "rng seed");
  play->add_option("--strategy", strategy,
                   "quantum | ghz | classical:<index>");

  auto* povm = app.add_subcommand(
      "povm", "POVM-to-projective-plus-coin reduction check");
  povm->fallthrough();
  povm->add_option("--a", povm_a, "POVM weight a");
  povm->add_option("--b", povm_b, "POVM weight b");
  povm->add_option("--trials", trials, "samples per check")
      ->check(CLI::PositiveNumber);
  povm->add_option("--seed", seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (state->parsed()) return cmd_state(state_tolerance, out);
    if (formulas->parsed())
      return cmd_formulas(grid_theta, grid_phase, tolerance, out);
    if (nash->parsed()) return cmd_nash(grid_theta, grid_phase, tolerance, out);
    if (lhv->parsed()) return cmd_lhv(out);
    if (bound->parsed()) return cmd_bound(out);
    if (play->parsed()) return cmd_play(rounds, seed, strategy, out);
    if (povm->parsed()) return cmd_povm(povm_a, povm_b, trials, seed, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
