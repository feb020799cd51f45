#include "qmg/stabilizer.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qmg/strategy.hpp"

namespace qmg {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

using Matrix16 = std::array<std::array<cplx, kDim>, kDim>;

// Dense matrix of a signed Pauli word, used only for the projector route.
Matrix16 pauli_matrix(const PauliString& p) {
  Matrix16 m{};
  for (int col = 0; col < kDim; ++col) {
    int row = col;
    cplx coeff = p.phase();
    for (int k = 0; k < 4; ++k) {
      const int bit = 1 << (3 - k);
      const bool one = (col & bit) != 0;
      switch (p.letters()[k]) {
        case PauliLetter::I:
          break;
        case PauliLetter::X:
          row ^= bit;
          break;
        case PauliLetter::Z:
          if (one) coeff = -coeff;
          break;
        case PauliLetter::Y:
          row ^= bit;
          coeff *= one ? cplx{0, -1} : cplx{0, 1};
          break;
      }
    }
    m[row][col] += coeff;
  }
  return m;
}

Matrix16 multiply(const Matrix16& a, const Matrix16& b) {
  Matrix16 out{};
  for (int i = 0; i < kDim; ++i) {
    for (int k = 0; k < kDim; ++k) {
      if (a[i][k] == cplx{0.0}) continue;
      for (int j = 0; j < kDim; ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

}  // namespace

const std::array<PauliString, 4>& minority_generators() {
  static const std::array<PauliString, 4> gens = {
      PauliString::parse("-XZZZ"), PauliString::parse("-ZXZZ"),
      PauliString::parse("-ZZXZ"), PauliString::parse("-ZZZX")};
  return gens;
}

StateVector build_initial_state() {
  std::array<cplx, kDim> amps{};
  amps[0] = cplx{kInvSqrt2, 0.0};
  amps[kDim - 1] = cplx{0.0, -kInvSqrt2};
  return StateVector(amps);
}

StateVector build_game_state_via_projectors() {
  // Product of the projectors (I + G)/2 over the four generators; the
  // stabilizer group has 16 elements, so the product has rank 1.
  Matrix16 proj{};
  for (int i = 0; i < kDim; ++i) proj[i][i] = 1.0;
  for (const PauliString& g : minority_generators()) {
    Matrix16 half = pauli_matrix(g);
    for (int i = 0; i < kDim; ++i) {
      half[i][i] += 1.0;
      for (int j = 0; j < kDim; ++j) half[i][j] *= 0.5;
    }
    proj = multiply(proj, half);
  }

  cplx trace = 0.0;
  for (int i = 0; i < kDim; ++i) trace += proj[i][i];
  if (std::abs(trace - 1.0) > kTol) {
    throw std::logic_error("stabilizer projector product is not rank 1");
  }

  // Any basis vector with nonzero overlap recovers the rank-1 range.
  for (int col = 0; col < kDim; ++col) {
    double norm2 = 0.0;
    for (int row = 0; row < kDim; ++row) norm2 += std::norm(proj[row][col]);
    if (norm2 > 1e-6) {
      const double inv = 1.0 / std::sqrt(norm2);
      std::array<cplx, kDim> amps{};
      for (int row = 0; row < kDim; ++row) amps[row] = proj[row][col] * inv;
      return StateVector(amps);
    }
  }
  throw std::logic_error("no basis vector survives the projection");
}

StateVector build_game_state_via_rotation() {
  const LocalUnitary s = rotation_matrix(canonical_params());
  StateVector state = build_initial_state();
  for (int player = 1; player <= 4; ++player) {
    state = apply_local_unitary(state, player, s);
  }
  return state;
}

std::array<PauliString, 4> derive_antiminority_generators() {
  const auto& gens = minority_generators();
  std::array<PauliString, 4> out = {gens[0], gens[0], gens[0], gens[0]};
  for (int skip = 0; skip < 4; ++skip) {
    // Product of the three generators other than `skip`, in index order.
    PauliString prod = PauliString::parse("IIII");
    for (int k = 0; k < 4; ++k) {
      if (k != skip) prod = prod * gens[k];
    }
    // Skipping generator i leaves the lone Z in slot i, matching the
    // chart order of the anti-minority lists.
    out[skip] = prod;
  }
  return out;
}

bool StabilizerReport::all_plus_one(double tol) const {
  for (const auto& [p, e] : entries) {
    if (std::abs(e - 1.0) > tol) return false;
  }
  return true;
}

StabilizerReport verify_stabilizer(const StateVector& state) {
  StabilizerReport report{{{
      {minority_generators()[0], 0.0},
      {minority_generators()[1], 0.0},
      {minority_generators()[2], 0.0},
      {minority_generators()[3], 0.0},
      {derive_antiminority_generators()[0], 0.0},
      {derive_antiminority_generators()[1], 0.0},
      {derive_antiminority_generators()[2], 0.0},
      {derive_antiminority_generators()[3], 0.0},
  }}};
  for (auto& [p, e] : report.entries) {
    e = pauli_expectation(state, p);
  }
  return report;
}

}  // namespace qmg
