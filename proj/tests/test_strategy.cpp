#include "qmg/strategy.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "qmg/stabilizer.hpp"

using namespace qmg;

namespace {

constexpr double kPi = std::numbers::pi;

bool equal_up_to_phase(const LocalUnitary& a, const LocalUnitary& b,
                       double tol) {
  // Find the largest-magnitude entry of b and align phases there.
  int best = 0;
  for (int k = 1; k < 4; ++k) {
    if (std::abs(b.m[k]) > std::abs(b.m[best])) best = k;
  }
  if (std::abs(b.m[best]) < tol) return false;
  const cplx phase = a.m[best] / b.m[best];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (int k = 0; k < 4; ++k) {
    if (std::abs(a.m[k] - phase * b.m[k]) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rotation_matrix: M(0, 0, anything) is the identity") {
  for (const double beta : {0.0, 1.0, -2.5, kPi}) {
    const LocalUnitary u = rotation_matrix({0.0, 0.0, beta});
    CHECK(std::abs(u.m[0] - 1.0) <= 1e-12);
    CHECK(std::abs(u.m[1]) <= 1e-12);
    CHECK(std::abs(u.m[2]) <= 1e-12);
    CHECK(std::abs(u.m[3] - 1.0) <= 1e-12);
  }
}

TEST_CASE("rotation_matrix: canonical params give s = (i/sqrt(2))(Y+Z)") {
  const LocalUnitary u = rotation_matrix(canonical_params());
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  CHECK(std::abs(u.m[0] - i * r) <= 1e-12);
  CHECK(std::abs(u.m[1] - r) <= 1e-12);
  CHECK(std::abs(u.m[2] + r) <= 1e-12);
  CHECK(std::abs(u.m[3] + i * r) <= 1e-12);
  CHECK(u.is_unitary());
}

TEST_CASE("rotation_matrix: GHZ-game operator is unitary and matches its closed form") {
  const LocalUnitary u = rotation_matrix(ghz_params());
  CHECK(u.is_unitary());
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  CHECK(std::abs(u.m[0] - r * std::exp(i * (kPi / 8.0))) <= 1e-12);
  CHECK(std::abs(u.m[1] - r * i * std::exp(-i * (kPi / 8.0))) <= 1e-12);
  CHECK(std::abs(u.m[2] - r * i * std::exp(i * (kPi / 8.0))) <= 1e-12);
  CHECK(std::abs(u.m[3] - r * std::exp(-i * (kPi / 8.0))) <= 1e-12);
}

TEST_CASE("rotation_matrix rejects out-of-range parameters") {
  CHECK_THROWS_AS(rotation_matrix({-0.1, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(rotation_matrix({kPi + 0.1, 0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rotation_matrix({1.0, 4.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(rotation_matrix({1.0, 0.0, -kPi}), std::invalid_argument);
}

TEST_CASE("canonical_strategy: symmetric, and psi_in rotates to psi") {
  const QuantumStrategy s = canonical_strategy();
  for (int player = 1; player <= 4; ++player) {
    for (const Question q : {Question::X, Question::Z}) {
      const RotationParams& p = s.rotation_for(player, q);
      CHECK(p.theta == kPi / 2.0);
      CHECK(p.alpha == kPi / 2.0);
      CHECK(p.beta == -kPi / 2.0);
    }
  }
  StateVector state = build_initial_state();
  for (int player = 1; player <= 4; ++player) {
    state = apply_local_unitary(
        state, player, rotation_matrix(s.rotation_for(player, Question::Z)));
  }
  CHECK(state.overlap(build_game_state_via_projectors()) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rotation parameterization covers U(2) up to global phase") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const LocalUnitary u = oracle::random_unitary(rng);
    const RotationParams p = recover_rotation_params(u);
    CHECK(p.in_range());
    CHECK(equal_up_to_phase(rotation_matrix(p), u, 1e-9));
  }
}

TEST_CASE("parameter recovery at the poles returns canonical representatives") {
  const RotationParams p0 = recover_rotation_params(LocalUnitary::identity());
  CHECK(p0.theta == doctest::Approx(0.0));
  CHECK(p0.beta == 0.0);
  CHECK(equal_up_to_phase(rotation_matrix(p0), LocalUnitary::identity(), 1e-9));

  const LocalUnitary flip = rotation_matrix({kPi, 0.0, 0.0});
  const RotationParams p1 = recover_rotation_params(flip);
  CHECK(p1.theta == doctest::Approx(kPi));
  CHECK(p1.alpha == 0.0);
  CHECK(equal_up_to_phase(rotation_matrix(p1), flip, 1e-9));
}

TEST_CASE("classical_answer: table lookup") {
  const ClassicalAssignment all_plus = ClassicalAssignment::from_index(0xFF);
  for (int player = 1; player <= 4; ++player) {
    CHECK(classical_answer(all_plus, player, Question::X) == 1);
    CHECK(classical_answer(all_plus, player, Question::Z) == 1);
  }

  ClassicalAssignment a = all_plus;
  a.x_answers[2] = -1;  // X_3 = -1
  CHECK(classical_answer(a, 3, Question::X) == -1);
  CHECK(classical_answer(a, 3, Question::Z) == 1);
}

TEST_CASE("classical_answers reproduce the constraint left-hand sides") {
  // For the list XZZZ, the answer product is X1 Z2 Z3 Z4 evaluated on the
  // table.
  Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = ClassicalAssignment::from_index(
        static_cast<std::uint8_t>(rng.uniform_int(256)));
    for (const auto& [list, kind] : all_question_lists()) {
      int direct = 1;
      for (int player = 1; player <= 4; ++player) {
        direct *= classical_answer(a, player, list.question_for(player));
      }
      CHECK(classical_answers(a, list).product() == direct);
    }
  }
}

TEST_CASE("exactly 256 distinct assignments, round-tripping their index") {
  std::set<std::uint8_t> seen;
  for (int i = 0; i < 256; ++i) {
    const auto a = ClassicalAssignment::from_index(static_cast<std::uint8_t>(i));
    CHECK(a.index() == i);
    seen.insert(a.index());
  }
  CHECK(seen.size() == 256);
}

TEST_CASE("povm_probabilities: a=1, b=0 reduces to projective statistics") {
  Rng rng(41);
  const StateVector psi = build_game_state_via_rotation();
  for (int player = 1; player <= 4; ++player) {
    const TwoOutcomePOVM povm{1.0, 0.0, oracle::random_unitary(rng)};
    const QubitMarginal marginal = reduced_density(psi, player);
    const auto [p_plus, p_minus] = povm_probabilities(marginal, povm);
    // Projective probability of |up> via the dense trace oracle.
    const cplx u0 = povm.eigenbasis(0, 0);
    const cplx u1 = povm.eigenbasis(1, 0);
    const double p_up =
        (std::conj(u0) * (marginal.rho[0] * u0 + marginal.rho[1] * u1) +
         std::conj(u1) * (marginal.rho[2] * u0 + marginal.rho[3] * u1))
            .real();
    CHECK(p_plus == doctest::Approx(p_up).epsilon(1e-12));
    CHECK(p_plus + p_minus == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("povm_probabilities: a=b=1/2 gives p+ = 1/2 for every state") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    std::array<cplx, kDim> amps{};
    double norm2 = 0.0;
    for (auto& amp : amps) {
      amp = cplx{rng.gaussian(), rng.gaussian()};
      norm2 += std::norm(amp);
    }
    for (auto& amp : amps) amp /= std::sqrt(norm2);
    const StateVector s(amps);
    const TwoOutcomePOVM povm{0.5, 0.5, oracle::random_unitary(rng)};
    const auto [p_plus, p_minus] =
        povm_probabilities(reduced_density(s, 1 + trial % 4), povm);
    CHECK(p_plus == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("povm_probabilities: random POVM matches tr(E+ rho) dense oracle") {
  Rng rng(47);
  const StateVector psi = build_game_state_via_rotation();
  for (int trial = 0; trial < 20; ++trial) {
    double a = rng.uniform01();
    double b = rng.uniform01();
    if (b > a) std::swap(a, b);
    const LocalUnitary u = oracle::random_unitary(rng);
    const TwoOutcomePOVM povm{a, b, u};
    const int player = 1 + trial % 4;
    const QubitMarginal rho = reduced_density(psi, player);

    // E+ = a U|0><0|U^dag + b U|1><1|U^dag, dense.
    oracle::Mat e_plus(2, std::vector<cplx>(2));
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        e_plus[i][j] = a * u(i, 0) * std::conj(u(j, 0)) +
                       b * u(i, 1) * std::conj(u(j, 1));
      }
    }
    cplx trace = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        trace += e_plus[i][j] * rho.rho[2 * j + i];
      }
    }
    const auto [p_plus, p_minus] = povm_probabilities(rho, povm);
    CHECK(p_plus == doctest::Approx(trace.real()).epsilon(1e-12));
  }
}

TEST_CASE("povm validation rejects bad weights") {
  const TwoOutcomePOVM bad1{0.4, 0.6, LocalUnitary::identity()};
  CHECK_THROWS_AS(bad1.validate(), std::invalid_argument);
  const TwoOutcomePOVM bad2{1.2, 0.1, LocalUnitary::identity()};
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
}

TEST_CASE("povm_simulate: a=1, b=0 echoes the projective outcomes") {
  const TwoOutcomePOVM projective{1.0, 0.0, LocalUnitary::identity()};
  const std::vector<int> outcomes = {1, -1, -1, 1, 1, -1};
  Rng rng(53);
  CHECK(povm_simulate(outcomes, projective, rng) == outcomes);
}

TEST_CASE("povm_simulate: a=b makes the output input-independent") {
  const double a = 0.7;
  const TwoOutcomePOVM povm{a, a, LocalUnitary::identity()};
  constexpr int kN = 100000;
  std::vector<int> outcomes(kN);
  Rng in_rng(59);
  for (auto& o : outcomes) o = in_rng.uniform_int(2) == 0 ? 1 : -1;
  Rng rng(61);
  const std::vector<int> out = povm_simulate(outcomes, povm, rng);
  int heads = 0;
  for (const int o : out) heads += o == 1;
  const double sigma = std::sqrt(a * (1.0 - a) * kN);
  CHECK(std::abs(heads - a * kN) <= 4.0 * sigma);
}

TEST_CASE("povm_simulate: empirical p+ matches povm_probabilities within 4 sigma") {
  Rng rng(67);
  const StateVector psi = build_game_state_via_rotation();
  const LocalUnitary basis = oracle::random_unitary(rng);
  const TwoOutcomePOVM povm{0.85, 0.25, basis};
  const QubitMarginal rho = reduced_density(psi, 2);
  const auto [p_plus, p_minus] = povm_probabilities(rho, povm);

  // Projective sampling in the POVM eigenbasis followed by the coin.
  const cplx u0 = basis(0, 0), u1 = basis(1, 0);
  const double p_up =
      (std::conj(u0) * (rho.rho[0] * u0 + rho.rho[1] * u1) +
       std::conj(u1) * (rho.rho[2] * u0 + rho.rho[3] * u1))
          .real();
  constexpr int kN = 100000;
  std::vector<int> projective(kN);
  for (auto& o : projective) o = rng.uniform01() < p_up ? 1 : -1;
  const std::vector<int> sim = povm_simulate(projective, povm, rng);
  int plus = 0;
  for (const int o : sim) plus += o == 1;
  const double sigma = std::sqrt(p_plus * (1.0 - p_plus) * kN);
  CHECK(std::abs(plus - p_plus * kN) <= 4.0 * sigma);
}
