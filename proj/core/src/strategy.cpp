#include "qmg/strategy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmg/game.hpp"

namespace qmg {

namespace {

constexpr double kPi = std::numbers::pi;

// Wrap into (-pi, pi].
double wrap_phase(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

}  // namespace

bool RotationParams::in_range() const {
  return theta >= 0.0 && theta <= kPi && alpha > -kPi && alpha <= kPi &&
         beta > -kPi && beta <= kPi;
}

LocalUnitary rotation_matrix(const RotationParams& p) {
  if (!p.in_range()) {
    throw std::invalid_argument("rotation parameters out of range");
  }
  const double c = std::cos(p.theta / 2.0);
  const double s = std::sin(p.theta / 2.0);
  const cplx i{0.0, 1.0};
  return {{std::exp(i * p.alpha) * c, i * std::exp(i * p.beta) * s,
           i * std::exp(-i * p.beta) * s, std::exp(-i * p.alpha) * c}};
}

RotationParams recover_rotation_params(const LocalUnitary& u) {
  if (!u.is_unitary()) {
    throw std::invalid_argument("matrix is not unitary");
  }
  // M(theta, alpha, beta) has determinant 1; divide out the global phase
  // to land in SU(2), where the form is [[p, q], [-conj(q), conj(p)]] with
  // p = e^{i alpha} cos(theta/2) and q = i e^{i beta} sin(theta/2).
  const cplx det = u.m[0] * u.m[3] - u.m[1] * u.m[2];
  const cplx root = std::sqrt(det);
  const cplx p = u.m[0] / root;
  const cplx q = u.m[1] / root;

  const double c = std::abs(p);
  const double s = std::abs(q);
  const double theta = 2.0 * std::atan2(s, c);
  double alpha = c > kTol ? std::arg(p) : 0.0;
  double beta = s > kTol ? std::arg(q * cplx{0.0, -1.0}) : 0.0;
  alpha = wrap_phase(alpha);
  beta = wrap_phase(beta);

  RotationParams out{theta, alpha, beta};
  // A global sign of the SU(2) representative shifts both phases by pi;
  // pick the representative whose matrix actually matches up to phase.
  if (!out.in_range()) {
    out = RotationParams{theta, wrap_phase(alpha + kPi), wrap_phase(beta + kPi)};
  }
  return out;
}

RotationParams canonical_params() { return {kPi / 2.0, kPi / 2.0, -kPi / 2.0}; }

QuantumStrategy canonical_strategy() {
  return QuantumStrategy::uniform(canonical_params());
}

RotationParams ghz_params() { return {kPi / 2.0, kPi / 8.0, -kPi / 8.0}; }

QuantumStrategy ghz_strategy() { return QuantumStrategy::uniform(ghz_params()); }

QuantumStrategy identity_strategy() {
  return QuantumStrategy::uniform({0.0, 0.0, 0.0});
}

ClassicalAssignment ClassicalAssignment::from_index(std::uint8_t index) {
  ClassicalAssignment a;
  for (int i = 0; i < 4; ++i) {
    a.x_answers[i] = (index >> i) & 1 ? 1 : -1;
    a.z_answers[i] = (index >> (i + 4)) & 1 ? 1 : -1;
  }
  return a;
}

std::uint8_t ClassicalAssignment::index() const {
  std::uint8_t idx = 0;
  for (int i = 0; i < 4; ++i) {
    if (x_answers[i] == 1) idx |= 1 << i;
    if (z_answers[i] == 1) idx |= 1 << (i + 4);
  }
  return idx;
}

int classical_answer(const ClassicalAssignment& a, int player, Question q) {
  if (player < 1 || player > 4) {
    throw std::domain_error("player index must be in 1..4");
  }
  return q == Question::X ? a.x_answers[player - 1] : a.z_answers[player - 1];
}

AnswerProfile classical_answers(const ClassicalAssignment& a,
                                const QuestionList& list) {
  AnswerProfile profile;
  for (int player = 1; player <= 4; ++player) {
    profile.answers[player - 1] =
        classical_answer(a, player, list.question_for(player));
  }
  return profile;
}

QubitMarginal reduced_density(const StateVector& state, int player) {
  if (player < 1 || player > 4) {
    throw std::domain_error("player index must be in 1..4");
  }
  const int bit = 1 << (4 - player);
  QubitMarginal m{{cplx{0.0}, cplx{0.0}, cplx{0.0}, cplx{0.0}}};
  const auto& amp = state.amplitudes();
  for (int i = 0; i < kDim; ++i) {
    if (i & bit) continue;
    const cplx a0 = amp[i];
    const cplx a1 = amp[i | bit];
    m.rho[0] += a0 * std::conj(a0);
    m.rho[1] += a0 * std::conj(a1);
    m.rho[2] += a1 * std::conj(a0);
    m.rho[3] += a1 * std::conj(a1);
  }
  return m;
}

void TwoOutcomePOVM::validate() const {
  if (!(0.0 <= b && b <= a && a <= 1.0)) {
    throw std::invalid_argument("POVM weights must satisfy 0 <= b <= a <= 1");
  }
  if (!eigenbasis.is_unitary()) {
    throw std::invalid_argument("POVM eigenbasis is not unitary");
  }
}

std::pair<double, double> povm_probabilities(const QubitMarginal& marginal,
                                             const TwoOutcomePOVM& povm) {
  povm.validate();
  // p(up) = <up| rho |up> with |up> = U|0>, |down> = U|1>.
  const cplx u0 = povm.eigenbasis(0, 0);
  const cplx u1 = povm.eigenbasis(1, 0);
  const cplx v0 = povm.eigenbasis(0, 1);
  const cplx v1 = povm.eigenbasis(1, 1);
  const auto quad = [&](cplx a, cplx b) {
    return (std::conj(a) * (marginal.rho[0] * a + marginal.rho[1] * b) +
            std::conj(b) * (marginal.rho[2] * a + marginal.rho[3] * b))
        .real();
  };
  const double p_up = quad(u0, u1);
  const double p_down = quad(v0, v1);
  const double p_plus = povm.a * p_up + povm.b * p_down;
  return {p_plus, 1.0 - p_plus};
}

std::vector<int> povm_simulate(std::span<const int> projective_outcomes,
                               const TwoOutcomePOVM& povm, Rng& rng) {
  povm.validate();
  std::vector<int> out;
  out.reserve(projective_outcomes.size());
  for (const int o : projective_outcomes) {
    if (o != 1 && o != -1) {
      throw std::invalid_argument("projective outcomes must be +1 or -1");
    }
    const double heads = o == 1 ? povm.a : povm.b;
    out.push_back(rng.uniform01() < heads ? 1 : -1);
  }
  return out;
}

}  // namespace qmg
