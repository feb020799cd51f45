#include "qmg/classical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmg {

Fraction Fraction::of(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Fraction{num, den};
}

std::string Fraction::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

const std::array<Constraint, 8>& constraint_system() {
  static const std::array<Constraint, 8> system = [] {
    std::array<Constraint, 8> out{};
    const auto& chart = all_question_lists();
    for (int k = 0; k < 8; ++k) {
      out[k] = {static_cast<char>('a' + k), chart[k].list,
                win_condition_product(chart[k].kind)};
    }
    return out;
  }();
  return system;
}

std::uint8_t satisfied_equations(const ClassicalAssignment& a) {
  std::uint8_t mask = 0;
  for (int k = 0; k < 8; ++k) {
    const Constraint& c = constraint_system()[k];
    if (classical_answers(a, c.list).product() == c.required_product) {
      mask |= 1 << k;
    }
  }
  return mask;
}

std::vector<AssignmentRow> enumerate_all() {
  std::vector<AssignmentRow> rows;
  rows.reserve(256);
  for (int index = 0; index < 256; ++index) {
    const auto a = ClassicalAssignment::from_index(
        static_cast<std::uint8_t>(index));
    AssignmentRow row{};
    row.index = static_cast<std::uint8_t>(index);
    row.satisfied_mask = satisfied_equations(a);
    row.satisfied = satisfied_count(row.satisfied_mask);
    for (const auto& tagged : all_question_lists()) {
      const PayoffVector pv = payoff(tagged.list, classical_answers(a, tagged.list));
      // Per-list payoffs are multiples of 1/4; averaging over the 8 lists
      // lands on exact multiples of 1/32.
      for (int i = 0; i < 4; ++i) {
        row.payoff_32nds[i] += static_cast<int>(pv.v[i] * 4.0 + 0.5);
      }
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

// Symbolic product of constraint left-hand sides over the 8 answer
// variables, as a parity mask: bit i = X_{i+1}, bit i+4 = Z_{i+1}.
std::uint8_t variable_mask(const QuestionList& list) {
  std::uint8_t mask = 0;
  for (int player = 1; player <= 4; ++player) {
    const int bit = player - 1;
    mask |= list.question_for(player) == Question::X ? 1 << bit
                                                     : 1 << (bit + 4);
  }
  return mask;
}

std::string mask_str(std::uint8_t mask) {
  std::string out;
  for (int player = 1; player <= 4; ++player) {
    if (mask & (1 << (player - 1))) {
      out += "X" + std::to_string(player);
    }
    if (mask & (1 << (player + 3))) {
      out += "Z" + std::to_string(player);
    }
  }
  return out;
}

ContradictionWitness witness_for(const std::array<int, 3>& multiplied,
                                 int conflicting) {
  const auto& system = constraint_system();
  ContradictionWitness w{};
  std::uint8_t mask = 0;
  int rhs = 1;
  for (int k = 0; k < 3; ++k) {
    const Constraint& c = system[multiplied[k]];
    w.multiplied[k] = c.label;
    mask ^= variable_mask(c.list);  // squared variables cancel
    rhs *= c.required_product;
  }
  w.product_lhs = mask_str(mask);
  w.product_rhs = rhs;
  w.conflicting = system[conflicting].label;
  w.conflicting_lhs = mask_str(variable_mask(system[conflicting].list));
  w.conflicting_rhs = system[conflicting].required_product;
  return w;
}

}  // namespace

std::array<ContradictionWitness, 2> contradiction_witnesses() {
  // (a)(b)(c) multiply to the LHS of (h) with product -1 against its +1;
  // (e)(f)(g) likewise contradict (d).
  return {witness_for({0, 1, 2}, 7), witness_for({4, 5, 6}, 3)};
}

BoundLedger bound_ledger(double m_x) {
  if (!(m_x >= 0.0 && m_x <= 1.0)) {
    throw std::invalid_argument("M_X must lie in [0, 1]");
  }
  BoundLedger ledger{};
  ledger.m_x = m_x;
  ledger.m_z = (1.0 - m_x) / 3.0;
  ledger.x_sacrifice_minority = 3.0 / 16.0;
  ledger.x_sacrifice_anti = (1.0 + 2.0 * m_x) / 8.0;
  ledger.z_sacrifice_minority = (11.0 - 8.0 * m_x) / 48.0;
  ledger.z_sacrifice_anti = (1.0 - m_x) / 4.0;
  ledger.max_payoff = m_x <= 0.25 ? (7.0 - 4.0 * m_x) / 32.0
                                  : (17.0 + 4.0 * m_x) / 96.0;
  return ledger;
}

ClassicalSupremum classical_supremum() {
  int max_satisfied = 0;
  for (const AssignmentRow& row : enumerate_all()) {
    max_satisfied = std::max(max_satisfied, row.satisfied);
  }
  return ClassicalSupremum{
      .analytic_bound = Fraction::of(7, 32),
      .exhaustive_optimum = Fraction::of(max_satisfied, 32),
      .quantum_value = Fraction::of(1, 4),
  };
}

}  // namespace qmg
