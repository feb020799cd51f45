#include "qmg/quantum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qmg {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

int bit_shift_for_player(int player) {
  if (player < 1 || player > kNumPlayers) {
    throw std::domain_error("player index must be in 1..4");
  }
  return kNumPlayers - player;  // player 1 owns the MSB
}

}  // namespace

LocalUnitary LocalUnitary::hadamard() {
  return {{cplx{kInvSqrt2}, cplx{kInvSqrt2}, cplx{kInvSqrt2},
           cplx{-kInvSqrt2}}};
}

bool LocalUnitary::is_unitary(double tol) const {
  const LocalUnitary p = adjoint() * (*this);
  return std::abs(p.m[0] - 1.0) <= tol && std::abs(p.m[1]) <= tol &&
         std::abs(p.m[2]) <= tol && std::abs(p.m[3] - 1.0) <= tol;
}

LocalUnitary LocalUnitary::adjoint() const {
  return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
           std::conj(m[3])}};
}

LocalUnitary LocalUnitary::operator*(const LocalUnitary& rhs) const {
  return {{m[0] * rhs.m[0] + m[1] * rhs.m[2], m[0] * rhs.m[1] + m[1] * rhs.m[3],
           m[2] * rhs.m[0] + m[3] * rhs.m[2],
           m[2] * rhs.m[1] + m[3] * rhs.m[3]}};
}

StateVector::StateVector(const std::array<cplx, kDim>& amplitudes)
    : amp_(amplitudes) {
  if (std::abs(norm() - 1.0) > kTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector StateVector::basis(int index) {
  if (index < 0 || index >= kDim) {
    throw std::domain_error("basis index must be in 0..15");
  }
  StateVector s;
  s.amp_[0] = 0.0;
  s.amp_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double n2 = 0.0;
  for (const cplx& a : amp_) n2 += std::norm(a);
  return std::sqrt(n2);
}

cplx StateVector::inner(const StateVector& other) const {
  cplx r = 0.0;
  for (int i = 0; i < kDim; ++i) r += std::conj(amp_[i]) * other.amp_[i];
  return r;
}

double StateVector::overlap(const StateVector& other) const {
  return std::abs(inner(other));
}

PauliString PauliString::parse(std::string_view text) {
  int phase_pow = 0;
  size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase_pow += 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i' && text.size() - pos == 5) {
    phase_pow += 1;
    ++pos;
  }
  if (text.size() - pos != 4) {
    throw std::invalid_argument("Pauli string must have exactly 4 letters");
  }
  std::array<PauliLetter, 4> letters{};
  for (int k = 0; k < 4; ++k) {
    switch (text[pos + k]) {
      case 'I': letters[k] = PauliLetter::I; break;
      case 'X': letters[k] = PauliLetter::X; break;
      case 'Y': letters[k] = PauliLetter::Y; break;
      case 'Z': letters[k] = PauliLetter::Z; break;
      default:
        throw std::invalid_argument("Pauli letters must be one of IXYZ");
    }
  }
  return PauliString(letters, phase_pow);
}

cplx PauliString::phase() const {
  static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[phase_pow_];
}

namespace {

// Single-qubit product a*b = i^phase * letter.
struct SinglePauliProduct {
  PauliLetter letter;
  int phase_pow;
};

SinglePauliProduct multiply_letters(PauliLetter a, PauliLetter b) {
  using L = PauliLetter;
  if (a == L::I) return {b, 0};
  if (b == L::I) return {a, 0};
  if (a == b) return {L::I, 0};
  // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
  static constexpr struct { L a, b, r; } kCycle[3] = {
      {L::X, L::Y, L::Z}, {L::Y, L::Z, L::X}, {L::Z, L::X, L::Y}};
  for (const auto& c : kCycle) {
    if (a == c.a && b == c.b) return {c.r, 1};
    if (a == c.b && b == c.a) return {c.r, 3};
  }
  throw std::logic_error("unreachable Pauli product");
}

}  // namespace

PauliString PauliString::operator*(const PauliString& rhs) const {
  std::array<PauliLetter, 4> letters{};
  int phase_pow = phase_pow_ + rhs.phase_pow_;
  for (int k = 0; k < 4; ++k) {
    const auto prod = multiply_letters(letters_[k], rhs.letters_[k]);
    letters[k] = prod.letter;
    phase_pow += prod.phase_pow;
  }
  return PauliString(letters, phase_pow);
}

bool PauliString::commutes_with(const PauliString& rhs) const {
  int anticommuting = 0;
  for (int k = 0; k < 4; ++k) {
    const PauliLetter a = letters_[k];
    const PauliLetter b = rhs.letters_[k];
    if (a != PauliLetter::I && b != PauliLetter::I && a != b) ++anticommuting;
  }
  return anticommuting % 2 == 0;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_pow_];
  for (const PauliLetter l : letters_) out.push_back(pauli_char(l));
  return out;
}

AnswerProfile AnswerProfile::from_index(int index) {
  if (index < 0 || index >= kDim) {
    throw std::domain_error("profile index must be in 0..15");
  }
  AnswerProfile p;
  for (int i = 0; i < 4; ++i) {
    p.answers[i] = ((index >> (3 - i)) & 1) == 0 ? 1 : -1;
  }
  return p;
}

int AnswerProfile::index() const {
  int idx = 0;
  for (int i = 0; i < 4; ++i) {
    if (answers[i] != 1 && answers[i] != -1) {
      throw std::invalid_argument("answers must be +1 or -1");
    }
    idx = (idx << 1) | (answers[i] == 1 ? 0 : 1);
  }
  return idx;
}

double OutcomeDistribution::total() const {
  return std::accumulate(p.begin(), p.end(), 0.0);
}

void OutcomeDistribution::validate(double tol) const {
  for (const double q : p) {
    if (q < -tol) {
      throw std::invalid_argument("distribution has a negative entry");
    }
  }
  if (std::abs(total() - 1.0) > tol) {
    throw std::invalid_argument("distribution does not sum to 1");
  }
}

StateVector apply_local_unitary(const StateVector& state, int player,
                                const LocalUnitary& u) {
  const int shift = bit_shift_for_player(player);
  if (!u.is_unitary()) {
    throw std::invalid_argument("matrix is not unitary");
  }
  const int bit = 1 << shift;
  std::array<cplx, kDim> out = state.amplitudes();
  for (int i = 0; i < kDim; ++i) {
    if (i & bit) continue;
    const cplx a0 = out[i];
    const cplx a1 = out[i | bit];
    out[i] = u.m[0] * a0 + u.m[1] * a1;
    out[i | bit] = u.m[2] * a0 + u.m[3] * a1;
  }
  return StateVector(out);
}

double pauli_expectation(const StateVector& state, const PauliString& p) {
  if (!p.is_hermitian()) {
    throw std::invalid_argument("Pauli string is not Hermitian");
  }
  // Apply p letter by letter: X flips the bit, Z contributes a sign,
  // Y = iXZ does both with a factor of i (acting on |b>: Y|b> = i(-1)^b|1-b>).
  const auto& in = state.amplitudes();
  std::array<cplx, kDim> out{};
  for (int i = 0; i < kDim; ++i) {
    int j = i;
    cplx coeff = p.phase();
    for (int k = 0; k < 4; ++k) {
      const int bit = 1 << (3 - k);
      const bool one = (i & bit) != 0;
      switch (p.letters()[k]) {
        case PauliLetter::I:
          break;
        case PauliLetter::X:
          j ^= bit;
          break;
        case PauliLetter::Z:
          if (one) coeff = -coeff;
          break;
        case PauliLetter::Y:
          j ^= bit;
          coeff *= one ? cplx{0, -1} : cplx{0, 1};
          break;
      }
    }
    out[j] += coeff * in[i];
  }
  cplx e = 0.0;
  for (int i = 0; i < kDim; ++i) e += std::conj(in[i]) * out[i];
  return e.real();
}

OutcomeDistribution outcome_distribution(const StateVector& state,
                                         const std::array<Question, 4>& bases) {
  // Rotating an X-questioned qubit by H maps its X eigenbasis onto the
  // computational one with +1 <-> |0>.
  StateVector rotated = state;
  for (int player = 1; player <= 4; ++player) {
    if (bases[player - 1] == Question::X) {
      rotated = apply_local_unitary(rotated, player, LocalUnitary::hadamard());
    }
  }
  OutcomeDistribution dist;
  for (int i = 0; i < kDim; ++i) {
    dist.p[i] = std::norm(rotated.amplitude(i));
  }
  return dist;
}

AnswerProfile sample_outcome(const OutcomeDistribution& dist, Rng& rng) {
  dist.validate();
  const double u = rng.uniform01() * dist.total();
  double acc = 0.0;
  for (int i = 0; i < kDim; ++i) {
    acc += dist.p[i];
    if (u < acc) return AnswerProfile::from_index(i);
  }
  return AnswerProfile::from_index(kDim - 1);
}

}  // namespace qmg
