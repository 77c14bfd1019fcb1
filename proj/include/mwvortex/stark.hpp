#pragma once

#include <string>
#include <vector>

namespace mwvortex::stark {

// CODATA 2018
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kBohrRadius = 5.29177210903e-11;      // m
inline constexpr double kPlanck = 6.62607015e-34;              // J s
inline constexpr double kSpeedOfLight = 299792458.0;           // m / s

// E0 = 3 e a0 eps, eps in V/cm.
double stark_unit(double epsilon_v_per_cm);

// hc / (k E0), metres.
double transition_wavelength(double epsilon_v_per_cm, int multiple);
double transition_frequency(double epsilon_v_per_cm, int multiple);

// True when eps lies outside 1e3..1e4 V/cm, where fine structure is no longer negligible.
bool outside_field_band(double epsilon_v_per_cm);

struct Superposition {
  std::string label;
  std::string ket;  // written in the |n,l,m> basis
};

struct StarkExample {
  std::string configuration;  // "V" or "Lambda"
  std::vector<Superposition> states;
  int splitting_multiple;      // k in dE = k E0 between the microwave pair
  double quoted_wavelength_m;  // value printed alongside the example
};

const std::vector<StarkExample>& example_states();

struct WavelengthCheck {
  std::string configuration;
  double epsilon_v_per_cm;
  int multiple;
  double computed_m;
  double quoted_m;
  double relative_gap;
  bool flagged;  // computed and quoted differ by more than 1%
  std::string note;
};

std::vector<WavelengthCheck> check_examples(double epsilon_v_per_cm = 1e3);

}  // namespace mwvortex::stark
