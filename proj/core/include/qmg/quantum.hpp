#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "qmg/rng.hpp"

namespace qmg {

using cplx = std::complex<double>;

inline constexpr int kNumPlayers = 4;
inline constexpr int kDim = 16;  // 2^4
inline constexpr double kTol = 1e-12;

// The two questions the referee can ask a player.
enum class Question : std::uint8_t { X, Z };

inline char question_letter(Question q) { return q == Question::X ? 'X' : 'Z'; }

// 2x2 complex matrix, row-major.
struct LocalUnitary {
  std::array<cplx, 4> m{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}};

  cplx operator()(int row, int col) const { return m[2 * row + col]; }

  static LocalUnitary identity() { return {}; }
  static LocalUnitary hadamard();

  bool is_unitary(double tol = kTol) const;
  LocalUnitary adjoint() const;
  LocalUnitary operator*(const LocalUnitary& rhs) const;
};

// Joint state of the four qubits. Player 1 owns the most significant bit of
// the 4-bit basis index, player 4 the least significant. Immutable after
// construction; every operation returns a fresh value.
class StateVector {
 public:
  // |0000>
  StateVector() { amp_[0] = 1.0; }

  // Throws std::invalid_argument unless the amplitudes are unit-norm
  // within kTol.
  explicit StateVector(const std::array<cplx, kDim>& amplitudes);

  static StateVector basis(int index);

  const std::array<cplx, kDim>& amplitudes() const { return amp_; }
  cplx amplitude(int index) const { return amp_.at(index); }

  double norm() const;
  // <this|other>
  cplx inner(const StateVector& other) const;
  // |<this|other>| -- the global-phase-insensitive overlap.
  double overlap(const StateVector& other) const;

 private:
  std::array<cplx, kDim> amp_{};
};

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

inline char pauli_char(PauliLetter l) { return "IXYZ"[static_cast<int>(l)]; }

// Signed four-letter Pauli word: phase * (p1 x p2 x p3 x p4) with the phase
// restricted to {+1, +i, -1, -i}, stored as a power of i.
class PauliString {
 public:
  PauliString(std::array<PauliLetter, 4> letters, int phase_power_of_i)
      : letters_(letters), phase_pow_(((phase_power_of_i % 4) + 4) % 4) {}

  // Accepts e.g. "XZZZ", "-XZZZ", "+iXYZI", "-iZZZZ".
  static PauliString parse(std::string_view text);

  const std::array<PauliLetter, 4>& letters() const { return letters_; }
  int phase_power() const { return phase_pow_; }
  cplx phase() const;
  bool is_hermitian() const { return phase_pow_ % 2 == 0; }

  PauliString operator*(const PauliString& rhs) const;
  bool commutes_with(const PauliString& rhs) const;
  bool operator==(const PauliString& rhs) const = default;

  std::string str() const;

 private:
  std::array<PauliLetter, 4> letters_;
  int phase_pow_;  // phase = i^phase_pow_
};

// Four +-1 answers, one per player.
struct AnswerProfile {
  std::array<int, 4> answers{1, 1, 1, 1};

  int product() const {
    return answers[0] * answers[1] * answers[2] * answers[3];
  }

  // Basis-index encoding: bit value 0 -> answer +1, player 1 = MSB.
  static AnswerProfile from_index(int index);
  int index() const;

  bool operator==(const AnswerProfile&) const = default;
};

// Probability table over the 16 answer profiles, indexed by
// AnswerProfile::index().
struct OutcomeDistribution {
  std::array<double, kDim> p{};

  double total() const;
  // Throws std::invalid_argument on negative entries or a non-unit total.
  void validate(double tol = kTol) const;
};

// (I x ... x u x ... x I)|state> with u acting on the given player's qubit.
// player is 1-based. Throws std::domain_error for player outside 1..4 and
// std::invalid_argument for a non-unitary u.
StateVector apply_local_unitary(const StateVector& state, int player,
                                const LocalUnitary& u);

// <state| p |state>. Requires p Hermitian (real phase).
double pauli_expectation(const StateVector& state, const PauliString& p);

// Projective measurement of every qubit, player i in basis bases[i-1].
// X-basis outcome +1 corresponds to (|0>+|1>)/sqrt(2); Z-basis +1 to |0>.
OutcomeDistribution outcome_distribution(const StateVector& state,
                                         const std::array<Question, 4>& bases);

// Draws one profile. Same seed and distribution give the same sequence.
AnswerProfile sample_outcome(const OutcomeDistribution& dist, Rng& rng);

}  // namespace qmg
