#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "mwvortex/beams.hpp"
#include "mwvortex/errors.hpp"
#include "oracles.hpp"

using namespace mwvortex;

namespace {

// direct evaluation with tgamma and pow; fine for |l| <= 16
cd lg_direct(cd a, int l, double w, double r, double phi) {
  const int m = std::abs(l);
  const double radial = std::pow(std::sqrt(2.0) * r / w, m) * std::exp(-r * r / (w * w)) / std::sqrt(std::tgamma(m + 1.0));
  return a * radial * std::polar(1.0, l * phi);
}

FieldMode lg(int l, double w = 2.0, cd a = 1.0) { return {a, l, w, Role::control}; }

}  // namespace

TEST_CASE("lg amplitude matches the direct formula") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> r(0.0, 6.0), phi(0.0, 2.0 * M_PI);
  for (int l = -16; l <= 16; ++l)
    for (int k = 0; k < 40; ++k) {
      const double rr = r(rng), pp = phi(rng);
      const cd a = oracle::random_complex(rng, 20.0);
      const cd got = lg_amplitude(lg(l, 2.0, a), {rr, pp});
      const cd want = lg_direct(a, l, 2.0, rr, pp);
      if (std::abs(want) < 1e-300) continue;
      REQUIRE(std::abs(got - want) <= 1e-12 * std::abs(want));
    }
}

TEST_CASE("plane wave and gaussian limits") {
  FieldMode pw{cd{0.5, 0.0}, 0, std::numeric_limits<double>::infinity(), Role::coupling};
  CHECK(pw.plane_wave());
  CHECK(std::abs(lg_amplitude(pw, {123.0, 1.0}) - cd{0.5, 0.0}) == 0.0);
  CHECK(std::abs(lg_amplitude(lg(0), {0.0, 0.0}) - 1.0) < 1e-15);
  CHECK(std::abs(lg_amplitude(lg(3), {0.0, 0.3})) == 0.0);
}

TEST_CASE("mode validation") {
  CHECK_THROWS_AS(lg(17).check(), ConfigError);
  CHECK_THROWS_AS(lg(1, 0.0).check(), ConfigError);
  CHECK_THROWS_AS(lg(1, std::numeric_limits<double>::infinity()).check(), ConfigError);
  CHECK_NOTHROW(lg(-16).check());
}

TEST_CASE("radial peak sits at w sqrt(|l|/2)") {
  // fine 1-D scan; l = 2, w = 2 mm peaks at 2 mm
  for (int l = 1; l <= 5; ++l) {
    double best_r = 0.0, best = 0.0;
    for (int k = 0; k <= 200000; ++k) {
      const double rr = 6.0 * k / 200000;
      const double v = std::abs(lg_amplitude(lg(l), {rr, 0.0}));
      if (v > best) {
        best = v;
        best_r = rr;
      }
    }
    CHECK(best_r == doctest::Approx(2.0 * std::sqrt(l / 2.0)).epsilon(1e-4));
  }
}

TEST_CASE("modulus does not depend on azimuth") {
  for (int l : {-3, 1, 4})
    for (double phi : {0.0, 0.7, 2.0, 5.5})
      CHECK(std::abs(lg_amplitude(lg(l), {1.3, phi})) ==
            doctest::Approx(std::abs(lg_amplitude(lg(l), {1.3, 0.0}))).epsilon(1e-15));
}

TEST_CASE("winding number of sampled modes") {
  for (int l = -5; l <= 5; ++l) {
    const TransverseMap m = sample_mode(lg(l), 128, 3.0);
    for (double f : {0.3, 0.5, 0.8}) {
      CAPTURE(l);
      CAPTURE(f);
      CHECK(measure_topological_charge(m, f) == l);
      CHECK(measure_topological_charge(conj(m), f) == -l);
    }
  }
  CHECK(measure_topological_charge(sample_mode(lg(16), 256, 3.0), 0.5) == 16);
}

TEST_CASE("winding number needs a nonzero field") {
  TransverseMap z(128, 3.0);
  CHECK_THROWS_AS(measure_topological_charge(z, 0.5), DegenerateField);
  CHECK_THROWS_AS(measure_topological_charge(sample_mode(lg(1), 128, 3.0), 0.0), std::invalid_argument);
}

TEST_CASE("radial profiles") {
  const std::vector<RadialBin> g = radial_profile(sample_mode(lg(0), 256, 3.0), 64);
  for (size_t k = 1; k < g.size(); ++k) CHECK(g[k].intensity < g[k - 1].intensity);

  // l = 1, grid unit = w: single interior maximum near 1/sqrt2
  const std::vector<RadialBin> p = radial_profile(sample_mode(lg(1), 256, 3.0), 64);
  int maxima = 0;
  double at = 0.0;
  for (size_t k = 1; k + 1 < p.size(); ++k)
    if (p[k].intensity > p[k - 1].intensity && p[k].intensity > p[k + 1].intensity) {
      ++maxima;
      at = p[k].r;
    }
  CHECK(maxima == 1);
  CHECK(std::abs(at - 1.0 / std::sqrt(2.0)) <= 3.0 / 63);

  for (const RadialBin& b : radial_profile(TransverseMap(128, 3.0), 16)) CHECK(b.intensity == 0.0);
  CHECK_THROWS_AS(radial_profile(TransverseMap(128, 3.0), 7), std::invalid_argument);
}

TEST_CASE("ring counting") {
  CHECK(count_radial_rings(radial_profile(sample_mode(lg(1), 256, 3.0), 64)) == 1);
  CHECK(count_radial_rings(radial_profile(sample_mode(lg(0), 256, 3.0), 64)) == 1);
  CHECK(count_radial_rings(radial_profile(TransverseMap(128, 3.0), 64)) == 0);

  auto synth = [](auto f) {
    std::vector<RadialBin> p(64);
    for (int k = 0; k < 64; ++k) p[k] = {k / 63.0 * 3.0, f(k / 63.0 * 3.0)};
    return p;
  };
  // two well separated doughnuts
  CHECK(count_radial_rings(synth([](double r) {
          return std::exp(-(r - 0.6) * (r - 0.6) / 0.02) + 0.7 * std::exp(-(r - 2.0) * (r - 2.0) / 0.05);
        })) == 2);
  // a second bump under 5 % of the peak is ignored
  CHECK(count_radial_rings(synth([](double r) {
          return std::exp(-(r - 0.6) * (r - 0.6) / 0.02) + 0.02 * std::exp(-(r - 2.0) * (r - 2.0) / 0.05);
        })) == 1);
  // one-bin ripple on a smooth ring is smoothed away
  CHECK(count_radial_rings(synth([](double r) {
          return std::exp(-(r - 1.0) * (r - 1.0) / 0.2) * (1.0 + 0.01 * std::cos(60.0 * r));
        })) == 1);
}

TEST_CASE("conj negates source charges") {
  TransverseMap m = sample_mode(lg(2), 128, 3.0);
  m.source_charges = {2, -1};
  const TransverseMap c = conj(m);
  CHECK(c.source_charges == std::vector<int>{-2, 1});
  CHECK(c.at(10, 20) == std::conj(m.at(10, 20)));
}

TEST_CASE("phase layer masks the zeros") {
  const TransverseMap m = sample_mode(lg(1), 128, 3.0);
  const std::vector<double> ph = m.phase();
  const double top = m.max_abs();
  for (size_t k = 0; k < ph.size(); ++k) {
    if (std::abs(m.field[k]) < 1e-12 * top) {
      CHECK(std::isnan(ph[k]));
    } else {
      CHECK(ph[k] > -M_PI);
      CHECK(ph[k] <= M_PI);
    }
  }
}
