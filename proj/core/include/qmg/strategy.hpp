#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qmg/game.hpp"
#include "qmg/quantum.hpp"

namespace qmg {

// Parameters of the general single-qubit unitary (up to global phase)
//
//   M(theta, alpha, beta) = [ e^{i alpha} cos(theta/2)   i e^{i beta}  sin(theta/2) ]
//                           [ i e^{-i beta} sin(theta/2)  e^{-i alpha} cos(theta/2) ]
//
// with theta in [0, pi] and alpha, beta in (-pi, pi].
struct RotationParams {
  double theta;
  double alpha;
  double beta;

  bool in_range() const;
};

// Throws std::invalid_argument for out-of-range parameters.
LocalUnitary rotation_matrix(const RotationParams& p);

// Inverts rotation_matrix up to global phase. At theta in {0, pi} only one
// phase is identifiable; the unused angle is returned as 0.
RotationParams recover_rotation_params(const LocalUnitary& u);

// Question-conditioned pre-measurement rotations, one pair per player.
struct QuantumStrategy {
  std::array<RotationParams, 4> when_asked_x;
  std::array<RotationParams, 4> when_asked_z;

  const RotationParams& rotation_for(int player, Question q) const {
    return q == Question::X ? when_asked_x.at(player - 1)
                            : when_asked_z.at(player - 1);
  }

  static QuantumStrategy uniform(const RotationParams& p) {
    return {{p, p, p, p}, {p, p, p, p}};
  }
};

// (pi/2, pi/2, -pi/2) for every player and both questions. rotation_matrix
// of it is s = (i/sqrt(2))(Y + Z) exactly.
QuantumStrategy canonical_strategy();
RotationParams canonical_params();

// (pi/2, pi/8, -pi/8): the operator of the plain quantum minority game
// played on the GHZ state.
RotationParams ghz_params();
QuantumStrategy ghz_strategy();

// A trivial strategy: no rotation under either question.
QuantumStrategy identity_strategy();

// Deterministic local-hidden-variable pure strategy: a full table of the
// eight answers {X_i, Z_i}. The 256 possible tables are indexed by a byte
// with bit (i-1) holding X_i and bit (i+3) holding Z_i (set bit = +1).
struct ClassicalAssignment {
  std::array<int, 4> x_answers{1, 1, 1, 1};
  std::array<int, 4> z_answers{1, 1, 1, 1};

  static ClassicalAssignment from_index(std::uint8_t index);
  std::uint8_t index() const;

  bool operator==(const ClassicalAssignment&) const = default;
};

// Pure table lookup of the player's answer to a question.
int classical_answer(const ClassicalAssignment& a, int player, Question q);

// All four answers for a question list.
AnswerProfile classical_answers(const ClassicalAssignment& a,
                                const QuestionList& list);

// 2x2 reduced density matrix of one player's qubit, row-major.
struct QubitMarginal {
  std::array<cplx, 4> rho;
};

QubitMarginal reduced_density(const StateVector& state, int player);

// Two-outcome POVM {E+, I - E+} with E+ = a|up><up| + b|down><down|,
// 0 <= b <= a <= 1, where |up> = eigenbasis|0> and |down> = eigenbasis|1>.
struct TwoOutcomePOVM {
  double a;
  double b;
  LocalUnitary eigenbasis;

  // Throws std::invalid_argument unless 0 <= b <= a <= 1 and the basis is
  // unitary.
  void validate() const;
};

// (p+, p-) of the POVM on the given marginal:
// p+ = a p(up) + b p(down).
std::pair<double, double> povm_probabilities(const QubitMarginal& marginal,
                                             const TwoOutcomePOVM& povm);

// Reduction of the POVM to a projective measurement in its eigenbasis plus
// a weighted coin: heads-probability a after up (+1), b after down (-1);
// heads -> +1.
std::vector<int> povm_simulate(std::span<const int> projective_outcomes,
                               const TwoOutcomePOVM& povm, Rng& rng);

}  // namespace qmg
