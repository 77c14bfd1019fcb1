#pragma once
// Test-side reference implementations. Nothing in here calls into the library's
// generator or coherence code, so agreement is a real cross-check.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "mwvortex/atoms.hpp"

namespace oracle {

using cd = std::complex<double>;
using M3 = Eigen::Matrix3cd;
constexpr cd I{0.0, 1.0};

inline M3 ket_bra(int i, int j) {
  M3 m = M3::Zero();
  m(i - 1, j - 1) = 1.0;
  return m;
}

// H = -(W2|1><2| + W1|1><3| + W3|2><3| + h.c.), level energies 0, d2, d1
inline M3 hamiltonian(const mwvortex::LevelScheme& s, const mwvortex::DriveSet& d) {
  M3 h = -(d.o2 * ket_bra(1, 2) + d.o1 * ket_bra(1, 3) + d.o3 * ket_bra(2, 3));
  h += h.adjoint().eval();
  h(1, 1) += s.d2;
  h(2, 2) += s.d1;
  return h;
}

inline M3 dissipate(const M3& l, const M3& rho) {
  const M3 ld = l.adjoint();
  return l * rho * ld - 0.5 * (ld * l * rho + rho * ld * l);
}

// -i[H, rho] + sum D[L] rho with L = sqrt(2 g13)|1><3|, sqrt(2 g32)|2><3|, sqrt(2 g12)|1><2|
inline M3 lindblad(const mwvortex::LevelScheme& s, const mwvortex::DriveSet& d, const M3& rho) {
  const M3 h = hamiltonian(s, d);
  M3 out = -I * (h * rho - rho * h);
  out += dissipate(std::sqrt(2.0 * s.g13) * ket_bra(1, 3), rho);
  out += dissipate(std::sqrt(2.0 * s.g32) * ket_bra(2, 3), rho);
  out += dissipate(std::sqrt(2.0 * s.g12) * ket_bra(1, 2), rho);
  return out;
}

// Rate equations transcribed row by row from the printed V-type system. Only the
// upper triangle is written out; the lower one is the same rule applied to rho^dagger,
// which keeps the map linear on non-Hermitian inputs.
inline M3 printed_upper(const mwvortex::LevelScheme& s, const mwvortex::DriveSet& d, const M3& r) {
  const cd o1 = d.o1, o2 = d.o2, o3 = d.o3;
  const double sum = s.g13 + s.g12 + s.g32;
  M3 out = M3::Zero();
  out(1, 1) = I * std::conj(o2) * r(0, 1) - I * o2 * r(1, 0) + I * o3 * r(2, 1) - I * std::conj(o3) * r(1, 2) -
              2.0 * s.g12 * r(1, 1) + 2.0 * s.g32 * r(2, 2);
  out(2, 2) = I * std::conj(o1) * r(0, 2) - I * o1 * r(2, 0) - I * o3 * r(2, 1) + I * std::conj(o3) * r(1, 2) -
              2.0 * (s.g13 + s.g32) * r(2, 2);
  out(0, 0) = -out(1, 1) - out(2, 2);
  out(0, 1) = -I * o2 * (r(1, 1) - r(0, 0)) + I * o1 * r(2, 1) - I * std::conj(o3) * r(0, 2) +
              (I * s.d2 - s.g12) * r(0, 1);
  out(0, 2) = -I * o1 * (r(2, 2) - r(0, 0)) + I * o2 * r(1, 2) - I * o3 * r(0, 1) +
              (I * s.d1 - (s.g13 + s.g32)) * r(0, 2);
  out(1, 2) = -I * o1 * r(1, 0) + I * std::conj(o2) * r(0, 2) + I * o3 * (r(1, 1) - r(2, 2)) +
              (I * s.d3 - sum) * r(1, 2);
  return out;
}

inline M3 printed(const mwvortex::LevelScheme& s, const mwvortex::DriveSet& d, const M3& r) {
  M3 out = printed_upper(s, d, r);
  const M3 mirror = printed_upper(s, d, r.adjoint());
  out(1, 0) = std::conj(mirror(0, 1));
  out(2, 0) = std::conj(mirror(0, 2));
  out(2, 1) = std::conj(mirror(1, 2));
  return out;
}

template <class F>
Eigen::Matrix<cd, 9, 9> superoperator(F f) {
  Eigen::Matrix<cd, 9, 9> g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      M3 e = M3::Zero();
      e(i, j) = 1.0;
      const M3 col = f(e);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) g(3 * a + b, 3 * i + j) = col(a, b);
    }
  return g;
}

// Null vector of a Liouvillian with trace normalisation, via full-pivot LU.
template <class F>
M3 steady(F f) {
  Eigen::Matrix<cd, 9, 9> g = superoperator(f);
  Eigen::Matrix<cd, 9, 1> rhs = Eigen::Matrix<cd, 9, 1>::Zero();
  g.row(0).setZero();
  g(0, 0) = g(0, 4) = g(0, 8) = 1.0;
  rhs(0) = 1.0;
  const Eigen::Matrix<cd, 9, 1> v = g.fullPivLu().solve(rhs);
  M3 r;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r(a, b) = v(3 * a + b);
  return r;
}

inline M3 random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  M3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = cd{n(rng), n(rng)};
  M3 r = a * a.adjoint();
  return r / r.trace();
}

inline cd random_complex(std::mt19937_64& rng, double max_mag) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(max_mag * u(rng), 2.0 * M_PI * u(rng));
}

inline double rel(cd a, cd b) { return std::abs(a - b) / std::abs(b); }

}  // namespace oracle
