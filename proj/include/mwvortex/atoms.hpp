#pragma once

#include <complex>

#include <Eigen/Dense>

namespace mwvortex {

using cd = std::complex<double>;

enum class Kind { V, Lambda };

// as_printed: the coherence rows carry the population-difference terms with the
// signs of the printed V-type equations. hamiltonian: the signs that follow from
// -i[H, rho] with the same Hamiltonian; this is a proper Lindblad generator.
enum class Convention { as_printed, hamiltonian };

struct LevelScheme {
  Kind kind = Kind::V;
  double g12 = 1.0, g13 = 1.0, g32 = 2.0;
  double d1 = 0.0, d2 = 0.0, d3 = 0.0;
  Convention convention = Convention::as_printed;

  static LevelScheme v_default(Convention c = Convention::as_printed);
  static LevelScheme lambda_default(Convention c = Convention::as_printed);
  void check() const;
};

// W1 drives 1<->3, W2 drives 1<->2, W3 drives 2<->3 for both kinds.
struct DriveSet {
  cd o1{0.0, 0.0}, o2{0.0, 0.0}, o3{0.0, 0.0};
};

using DensityMatrix = Eigen::Matrix3cd;
using Generator = Eigen::Matrix<cd, 9, 9>;
using Vec9 = Eigen::Matrix<cd, 9, 1>;

// rho_ij (levels 1..3) sits at index 3(i-1) + (j-1)
constexpr int vec_index(int i, int j) { return 3 * (i - 1) + (j - 1); }

Vec9 to_vec(const DensityMatrix& rho);
DensityMatrix from_vec(const Vec9& v);

Generator build_generator(const LevelScheme& scheme, const DriveSet& drives);

struct EvolveOptions {
  double tolerance = 1e-5;  // trace / hermiticity / population drift
};

// Classical RK4 on d vec(rho)/dt = G vec(rho).
DensityMatrix evolve(const LevelScheme& scheme, const DriveSet& drives, const DensityMatrix& rho0,
                     double t_final, double dt, const EvolveOptions& opt = {});

struct SteadyState {
  DensityMatrix rho;
  double condition = 0.0;  // 1 / rcond estimate of the bordered system
};

SteadyState steady_state(const LevelScheme& scheme, const DriveSet& drives);

// Largest real part in the spectrum of G; > 0 means an unstable generator.
double spectral_abscissa(const Generator& g);

}  // namespace mwvortex
