#include <cmath>
#include <random>

#include "doctest.h"
#include "mwvortex/atoms.hpp"
#include "mwvortex/errors.hpp"
#include "oracles.hpp"

using namespace mwvortex;

namespace {

DriveSet random_drives(std::mt19937_64& rng, double max_mag) {
  return {oracle::random_complex(rng, max_mag), oracle::random_complex(rng, max_mag),
          oracle::random_complex(rng, max_mag)};
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

LevelScheme detuned(LevelScheme s) {
  s.d1 = 0.7;
  s.d2 = -0.4;
  s.d3 = s.d1 - s.d2;
  return s;
}

}  // namespace

TEST_CASE("hamiltonian generator equals the Lindblad form") {
  std::mt19937_64 rng(11);
  for (LevelScheme s : {LevelScheme::v_default(Convention::hamiltonian),
                        LevelScheme::lambda_default(Convention::hamiltonian),
                        detuned(LevelScheme::v_default(Convention::hamiltonian))}) {
    for (int k = 0; k < 30; ++k) {
      const DriveSet d = random_drives(rng, 20.0);
      const Generator g = build_generator(s, d);
      const Generator want = oracle::superoperator([&](const oracle::M3& r) { return oracle::lindblad(s, d, r); });
      REQUIRE(max_abs(g - want) < 1e-12);
    }
  }
}

TEST_CASE("printed-sign generator equals the transcribed rate equations") {
  std::mt19937_64 rng(12);
  for (LevelScheme s : {LevelScheme::v_default(), LevelScheme::lambda_default(), detuned(LevelScheme::v_default())}) {
    for (int k = 0; k < 30; ++k) {
      const DriveSet d = random_drives(rng, 20.0);
      const Generator want = oracle::superoperator([&](const oracle::M3& r) { return oracle::printed(s, d, r); });
      REQUIRE(max_abs(build_generator(s, d) - want) < 1e-12);
    }
  }
}

TEST_CASE("rho23 row term by term") {
  const LevelScheme s = detuned(LevelScheme::v_default());
  const DriveSet d{cd{1.5, 0.2}, cd{-0.3, 0.9}, cd{0.4, -1.1}};
  const Generator g = build_generator(s, d);
  const int row = vec_index(2, 3);
  const cd I{0.0, 1.0};
  CHECK(g(row, vec_index(2, 1)) == -I * d.o1);
  CHECK(g(row, vec_index(1, 3)) == I * std::conj(d.o2));
  CHECK(g(row, vec_index(2, 2)) == I * d.o3);
  CHECK(g(row, vec_index(3, 3)) == -I * d.o3);
  CHECK(g(row, vec_index(2, 3)) == cd{-(s.g13 + s.g12 + s.g32), s.d3});
}

TEST_CASE("trace is conserved and hermiticity closes") {
  std::mt19937_64 rng(13);
  for (Convention c : {Convention::as_printed, Convention::hamiltonian})
    for (int k = 0; k < 20; ++k) {
      const DriveSet d = random_drives(rng, 20.0);
      const Generator g = build_generator(LevelScheme::v_default(c), d);
      const auto trace_row = g.row(vec_index(1, 1)) + g.row(vec_index(2, 2)) + g.row(vec_index(3, 3));
      CHECK(trace_row.cwiseAbs().maxCoeff() < 1e-13);

      const oracle::M3 rho = oracle::random_density(rng);
      const DensityMatrix out = from_vec(g * to_vec(rho));
      CHECK(max_abs(out - out.adjoint()) < 1e-12);
    }
}

TEST_CASE("free decay from the upper level") {
  DensityMatrix rho = DensityMatrix::Zero();
  rho(2, 2) = 1.0;
  const DensityMatrix out = evolve(LevelScheme::v_default(), {}, rho, 10.0, 0.01);
  CHECK(std::abs(out(2, 2)) <= 1e-8);
  CHECK((out(0, 0) + out(1, 1)).real() == doctest::Approx(1.0).epsilon(1e-7));
  // rho33 follows exp(-2(g13 + g32) t)
  const DensityMatrix early = evolve(LevelScheme::v_default(), {}, rho, 0.5, 0.001);
  CHECK(early(2, 2).real() == doctest::Approx(std::exp(-3.0)).epsilon(1e-9));
}

TEST_CASE("time evolution relaxes to the steady state") {
  // physical generator only; the printed-sign one has growing modes
  std::mt19937_64 rng(14);
  for (int k = 0; k < 50; ++k) {
    const LevelScheme s = k % 2 ? LevelScheme::lambda_default(Convention::hamiltonian)
                                : LevelScheme::v_default(Convention::hamiltonian);
    const DriveSet d = random_drives(rng, 20.0);
    const double dt = 0.01 / std::max({1.0, std::abs(d.o1), std::abs(d.o2), std::abs(d.o3)});
    DensityMatrix rho0 = DensityMatrix::Zero();
    rho0(0, 0) = 1.0;
    const DensityMatrix late = evolve(s, d, rho0, 200.0, dt);
    const SteadyState ss = steady_state(s, d);
    CAPTURE(k);
    REQUIRE(max_abs(late - ss.rho) < 1e-6);
  }
}

TEST_CASE("hermiticity holds after 1e4 steps") {
  const DriveSet d{cd{3.0, 1.0}, cd{0.5, -2.0}, cd{-1.0, 0.25}};
  std::mt19937_64 rng(15);
  const DensityMatrix rho0 = oracle::random_density(rng);
  const DensityMatrix out = evolve(LevelScheme::v_default(Convention::hamiltonian), d, rho0, 10000 * 0.003, 0.003);
  CHECK(max_abs(out - out.adjoint()) < 1e-10);
  CHECK(std::abs(out.trace() - 1.0) < 1e-10);
}

TEST_CASE("evolve rejects coarse steps") {
  DensityMatrix rho0 = DensityMatrix::Zero();
  rho0(0, 0) = 1.0;
  const LevelScheme s = LevelScheme::v_default(Convention::hamiltonian);
  CHECK_THROWS_AS(evolve(s, {10.0, 0.0, 0.0}, rho0, 1.0, 0.002), StepTooLarge);
  CHECK_NOTHROW(evolve(s, {10.0, 0.0, 0.0}, rho0, 0.1, 0.001));
  // the printed signs pump rho33 negative from the first step
  CHECK_THROWS_AS(evolve(LevelScheme::v_default(), {10.0, 0.0, 0.0}, rho0, 0.1, 0.001), UnphysicalState);
}

TEST_CASE("steady state agrees with an independent null-space solve") {
  std::mt19937_64 rng(16);
  for (Convention c : {Convention::as_printed, Convention::hamiltonian})
    for (int k = 0; k < 20; ++k) {
      const LevelScheme s = k % 2 ? LevelScheme::lambda_default(c) : LevelScheme::v_default(c);
      const DriveSet d = random_drives(rng, 20.0);
      const oracle::M3 want = oracle::steady([&](const oracle::M3& r) {
        return c == Convention::hamiltonian ? oracle::lindblad(s, d, r) : oracle::printed(s, d, r);
      });
      const SteadyState got = steady_state(s, d);
      CHECK(max_abs(got.rho - want) < 1e-10);
      CHECK(got.condition > 1.0);
    }
}

TEST_CASE("steady state is a density matrix") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    const LevelScheme s = k % 2 ? LevelScheme::lambda_default(Convention::hamiltonian)
                                : LevelScheme::v_default(Convention::hamiltonian);
    const DensityMatrix r = steady_state(s, random_drives(rng, 20.0)).rho;
    CHECK(std::abs(r.trace() - 1.0) < 1e-12);
    CHECK(max_abs(r - r.adjoint()) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(0.5 * (r + r.adjoint()));
    CHECK(es.eigenvalues().minCoeff() > -1e-9);
  }
}

TEST_CASE("steady state special cases") {
  for (Convention c : {Convention::as_printed, Convention::hamiltonian}) {
    const DensityMatrix v0 = steady_state(LevelScheme::v_default(c), {}).rho;
    CHECK(std::abs(v0(0, 0) - 1.0) < 1e-12);
    CHECK(max_abs(v0 - oracle::ket_bra(1, 1)) < 1e-12);
    const DensityMatrix l0 = steady_state(LevelScheme::lambda_default(c), {}).rho;
    CHECK(std::abs(l0(0, 0) - 1.0) < 1e-12);

    // only W1 on: |2> is never driven, fed by the 3 -> 2 cascade, and carries no coherence
    const LevelScheme s = LevelScheme::v_default(c);
    const DensityMatrix r = steady_state(s, {5.0, 0.0, 0.0}).rho;
    CHECK(std::abs(r(0, 1)) < 1e-14);
    CHECK(std::abs(r(2, 1)) < 1e-14);
    CHECK(r(1, 1).real() == doctest::Approx(s.g32 / s.g12 * r(2, 2).real()).epsilon(1e-12));
  }
}

TEST_CASE("steady state without decay is singular") {
  LevelScheme s = LevelScheme::v_default();
  s.g12 = s.g13 = s.g32 = 0.0;
  CHECK_THROWS_AS(steady_state(s, {1.0, 1.0, 1.0}), SingularSystem);
  s.g12 = -1.0;
  CHECK_THROWS_AS(s.check(), ConfigError);
}

TEST_CASE("stability of the two sign conventions") {
  const DriveSet d{10.0, 1e-3, 5e-4};
  CHECK(spectral_abscissa(build_generator(LevelScheme::v_default(Convention::hamiltonian), d)) < 1e-10);
  // the printed population-difference signs give growing modes at strong drive
  CHECK(spectral_abscissa(build_generator(LevelScheme::v_default(Convention::as_printed), d)) > 1.0);
}

TEST_CASE("vec layout") {
  std::mt19937_64 rng(18);
  const oracle::M3 r = oracle::random_density(rng);
  const Vec9 v = to_vec(r);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(v(vec_index(i, j)) == r(i - 1, j - 1));
  CHECK(max_abs(from_vec(v) - r) == 0.0);
}
