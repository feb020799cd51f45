// Independent dense-matrix oracles for cross-checking the core library.
// Everything here is built from explicit 2x2 Kronecker products and plain
// 16x16 linear algebra, deliberately sharing no code with qmg's bit-twiddled
// implementations.
#pragma once

#include <array>
#include <complex>
#include <string_view>
#include <vector>

#include "qmg/quantum.hpp"
#include "qmg/rng.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = std::vector<std::vector<cplx>>;  // square, any power-of-two dim

inline Mat eye(int n) {
  Mat m(n, std::vector<cplx>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat single_pauli(char letter) {
  switch (letter) {
    case 'I': return {{1.0, 0.0}, {0.0, 1.0}};
    case 'X': return {{0.0, 1.0}, {1.0, 0.0}};
    case 'Y': return {{0.0, cplx{0, -1}}, {cplx{0, 1}, 0.0}};
    case 'Z': return {{1.0, 0.0}, {0.0, -1.0}};
  }
  throw std::invalid_argument("bad letter");
}

inline Mat kron(const Mat& a, const Mat& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  Mat out(na * nb, std::vector<cplx>(na * nb));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l)
          out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return out;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat out(n, std::vector<cplx>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline std::vector<cplx> matvec(const Mat& a, const std::vector<cplx>& v) {
  const int n = static_cast<int>(a.size());
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += a[i][j] * v[j];
  return out;
}

// Dense matrix of a signed 4-letter Pauli word, e.g. "-XZZZ".
inline Mat pauli_word(std::string_view word) {
  cplx phase = 1.0;
  size_t pos = 0;
  if (word[pos] == '+' || word[pos] == '-') {
    if (word[pos] == '-') phase = -1.0;
    ++pos;
  }
  if (word[pos] == 'i') {
    phase *= cplx{0, 1};
    ++pos;
  }
  Mat m = single_pauli(word[pos]);
  for (size_t k = pos + 1; k < word.size(); ++k) {
    m = kron(m, single_pauli(word[k]));
  }
  for (auto& row : m)
    for (auto& e : row) e *= phase;
  return m;
}

inline std::vector<cplx> to_vec(const qmg::StateVector& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

// <v| M |v>
inline cplx quadratic_form(const Mat& m, const std::vector<cplx>& v) {
  const std::vector<cplx> mv = matvec(m, v);
  cplx out = 0.0;
  for (size_t i = 0; i < v.size(); ++i) out += std::conj(v[i]) * mv[i];
  return out;
}

// Measurement distribution via explicit rank-1 projectors. X-basis +1
// projector is |+><+|, Z-basis +1 is |0><0|; profile index uses player 1 as
// the MSB with bit 0 meaning answer +1.
inline std::array<double, 16> projective_distribution(
    const qmg::StateVector& state, const std::array<qmg::Question, 4>& bases) {
  const double r = 0.5;
  const Mat plus = {{r, r}, {r, r}};          // |+><+|
  const Mat minus = {{r, -r}, {-r, r}};       // |-><-|
  const Mat zero = {{1.0, 0.0}, {0.0, 0.0}};  // |0><0|
  const Mat one = {{0.0, 0.0}, {0.0, 1.0}};   // |1><1|
  std::array<double, 16> out{};
  const std::vector<cplx> v = to_vec(state);
  for (int idx = 0; idx < 16; ++idx) {
    Mat proj = eye(1);
    for (int player = 0; player < 4; ++player) {
      const bool bit_one = (idx >> (3 - player)) & 1;
      const Mat& p = bases[player] == qmg::Question::X
                         ? (bit_one ? minus : plus)
                         : (bit_one ? one : zero);
      proj = kron(proj, p);
    }
    out[idx] = quadratic_form(proj, v).real();
  }
  return out;
}

// Haar-ish random 2x2 unitary: Gram-Schmidt on complex Gaussian columns.
inline qmg::LocalUnitary random_unitary(qmg::Rng& rng) {
  const auto g = [&] { return cplx{rng.gaussian(), rng.gaussian()}; };
  cplx a0 = g(), a1 = g();
  const double na = std::sqrt(std::norm(a0) + std::norm(a1));
  a0 /= na;
  a1 /= na;
  cplx b0 = g(), b1 = g();
  const cplx overlap = std::conj(a0) * b0 + std::conj(a1) * b1;
  b0 -= overlap * a0;
  b1 -= overlap * a1;
  const double nb = std::sqrt(std::norm(b0) + std::norm(b1));
  b0 /= nb;
  b1 /= nb;
  return qmg::LocalUnitary{{a0, b0, a1, b1}};
}

}  // namespace oracle
