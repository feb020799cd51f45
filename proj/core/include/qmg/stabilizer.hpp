#pragma once

#include <array>
#include <utility>

#include "qmg/quantum.hpp"

namespace qmg {

// The four commuting generators {-X1Z2Z3Z4, -Z1X2Z3Z4, -Z1Z2X3Z4, -Z1Z2Z3X4}
// that force the answers to multiply to -1 under every minority question
// list.
const std::array<PauliString, 4>& minority_generators();

// psi_in = (|0000> - i|1111>)/sqrt(2), the state the players prepare before
// applying their rotations.
StateVector build_initial_state();

// The unique joint +1 eigenstate of the minority generators, extracted from
// the product of the four rank-halving projectors (I + G)/2. Throws
// std::logic_error if the product fails to have rank 1.
StateVector build_game_state_via_projectors();

// The same state built as s x s x s x s applied to psi_in.
StateVector build_game_state_via_rotation();

// Products of every triple of minority generators, tracked through symbolic
// Pauli multiplication. Equals {+Z1X2X3X4, +X1Z2X3X4, +X1X2Z3X4, +X1X2X3Z4},
// the operators that force a +1 product under the anti-minority lists.
std::array<PauliString, 4> derive_antiminority_generators();

struct StabilizerReport {
  // 4 minority generators followed by the 4 derived anti-minority strings,
  // each paired with its expectation value in the given state.
  std::array<std::pair<PauliString, double>, 8> entries;

  bool all_plus_one(double tol = kTol) const;
};

StabilizerReport verify_stabilizer(const StateVector& state);

}  // namespace qmg
