#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "mwvortex/stark.hpp"

using namespace mwvortex::stark;

TEST_CASE("stark unit") {
  // 3 e a0 (1e5 V/m), CODATA 2018
  CHECK(stark_unit(1e3) == doctest::Approx(2.5435060876622299e-24).epsilon(1e-14));
  CHECK(stark_unit(0.0) == 0.0);
  CHECK(stark_unit(2e3) == doctest::Approx(2.0 * stark_unit(1e3)).epsilon(1e-15));
}

TEST_CASE("transition wavelengths") {
  CHECK(transition_wavelength(1e3, 6) == doctest::Approx(0.013016454378889112).epsilon(1e-13));
  CHECK(std::abs(transition_wavelength(1e3, 6) - 1.30e-2) / 1.30e-2 < 0.01);
  CHECK(transition_wavelength(1e3, 2) == doctest::Approx(3.0 * 0.013016454378889112).epsilon(1e-13));
  CHECK(transition_wavelength(1e3, 12) == doctest::Approx(0.5 * transition_wavelength(1e3, 6)).epsilon(1e-15));
  CHECK_THROWS_AS(transition_wavelength(1e3, 0), std::invalid_argument);
}

TEST_CASE("wavelength times splitting is hc") {
  const double hc = kPlanck * kSpeedOfLight;
  for (double eps : {500.0, 1e3, 3.3e3, 1e4, 4e4})
    for (int k = 1; k <= 12; ++k) {
      CHECK(transition_wavelength(eps, k) * k * stark_unit(eps) == doctest::Approx(hc).epsilon(1e-15));
      CHECK(transition_wavelength(eps, k + 1) < transition_wavelength(eps, k));
      CHECK(transition_wavelength(eps * 1.5, k) < transition_wavelength(eps, k));
      CHECK(transition_frequency(eps, k) * transition_wavelength(eps, k) ==
            doctest::Approx(kSpeedOfLight).epsilon(1e-15));
    }
}

TEST_CASE("field band") {
  CHECK_FALSE(outside_field_band(1e3));
  CHECK_FALSE(outside_field_band(1e4));
  CHECK(outside_field_band(999.0));
  CHECK(outside_field_band(2e4));
}

TEST_CASE("worked examples") {
  const auto& ex = example_states();
  REQUIRE(ex.size() == 2);
  CHECK(&ex == &example_states());
  CHECK(ex[0].configuration == "V");
  CHECK(ex[0].splitting_multiple == 6);
  int excited = 0;
  for (const Superposition& s : ex[0].states)
    if (s.label.rfind("excited", 0) == 0) {
      ++excited;
      CHECK(s.ket.find("|3,") != std::string::npos);
      CHECK(s.ket.find("|2,") == std::string::npos);
    }
  CHECK(excited == 2);
  CHECK(ex[1].configuration == "Lambda");
  CHECK(ex[1].splitting_multiple == 2);
  for (const Superposition& s : ex[1].states)
    if (s.label.rfind("ground", 0) == 0) {
      CHECK(s.ket.find("|2,0,0>") != std::string::npos);
      CHECK(s.ket.find("|2,1,0>") != std::string::npos);
    }
}

TEST_CASE("quoted wavelengths are checked, not forced") {
  const auto checks = check_examples();
  REQUIRE(checks.size() == 2);
  CHECK_FALSE(checks[0].flagged);
  CHECK(checks[1].flagged);
  CHECK(checks[1].computed_m == doctest::Approx(3.905e-2).epsilon(1e-3));
  CHECK(checks[1].quoted_m == 1.47e-3);
  CHECK(checks[1].note.rfind("DISCREPANCY", 0) == 0);
}
