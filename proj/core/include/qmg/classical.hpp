#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qmg/game.hpp"
#include "qmg/strategy.hpp"

namespace qmg {

// Exact rational with a small reduced denominator. Every payoff in the
// classical analysis is a ratio of small integers.
struct Fraction {
  long long num = 0;
  long long den = 1;

  static Fraction of(long long num, long long den);
  double value() const { return static_cast<double>(num) / den; }
  std::string str() const;
  bool operator==(const Fraction&) const = default;
};

// One of the eight parity constraints a perfect classical strategy would
// have to satisfy: the product of the questioned answers over `list` must
// equal `required_product` (-1 on minority lists, +1 on anti-minority).
// Labels 'a'..'h' follow chart order.
struct Constraint {
  char label;
  QuestionList list;
  int required_product;
};

const std::array<Constraint, 8>& constraint_system();

// Bitmask over the 8 constraints (bit k = constraint 'a'+k satisfied).
std::uint8_t satisfied_equations(const ClassicalAssignment& a);

inline int satisfied_count(std::uint8_t mask) {
  return __builtin_popcount(mask);
}

struct AssignmentRow {
  std::uint8_t index;
  std::uint8_t satisfied_mask;
  int satisfied;
  // Per-player expected payoff under the uniform referee, in units of 1/32
  // (exact: every per-list payoff is a multiple of 1/4, averaged over 8
  // lists).
  std::array<int, 4> payoff_32nds;

  Fraction player_payoff(int player) const {
    return Fraction::of(payoff_32nds.at(player - 1), 32);
  }
  // Payoff after uniformly random relabeling of the players.
  Fraction symmetrized_payoff() const { return Fraction::of(satisfied, 32); }
};

// All 256 deterministic assignments with satisfied counts and exact
// payoffs. None satisfies all 8 constraints.
std::vector<AssignmentRow> enumerate_all();

// Symbolic product of a set of constraints. Each answer variable appears
// squared or not at all; squares cancel to 1.
struct ContradictionWitness {
  std::array<char, 3> multiplied;   // labels of the constraints multiplied
  std::string product_lhs;          // e.g. "X1X2X3Z4"
  int product_rhs;                  // product of the required values
  char conflicting;                 // label of the constraint contradicted
  std::string conflicting_lhs;
  int conflicting_rhs;

  bool is_contradiction() const {
    return product_lhs == conflicting_lhs && product_rhs != conflicting_rhs;
  }
};

// The two derivations (a)(b)(c) vs (h) and (e)(f)(g) vs (d).
std::array<ContradictionWitness, 2> contradiction_witnesses();

// Closed-form payoff ledger parameterized by M_X, the expected minority
// payoff of the player asked X, with M_Z = (1 - M_X)/3 fixed by saturating
// the total-payoff bound.
struct BoundLedger {
  double m_x;
  double m_z;
  double x_sacrifice_minority;  // 3/16
  double x_sacrifice_anti;      // (1 + 2 M_X)/8
  double z_sacrifice_minority;  // (11 - 8 M_X)/48
  double z_sacrifice_anti;      // (1 - M_X)/4
  double max_payoff;            // (7 - 4 M_X)/32 or (17 + 4 M_X)/96
};

// Throws std::invalid_argument for M_X outside [0, 1].
BoundLedger bound_ledger(double m_x);

struct ClassicalSupremum {
  Fraction analytic_bound;      // 7/32
  Fraction exhaustive_optimum;  // max symmetrized deterministic payoff
  Fraction quantum_value;       // 1/4
};

ClassicalSupremum classical_supremum();

}  // namespace qmg
