#include "mwvortex/stark.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mwvortex::stark {

double stark_unit(double eps) {
  if (eps < 0.0) throw std::invalid_argument("field strength must be >= 0");
  return 3.0 * kElementaryCharge * kBohrRadius * (eps * 100.0);
}

double transition_wavelength(double eps, int k) {
  if (k < 1) throw std::invalid_argument("splitting multiple must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("field strength must be > 0");
  return kPlanck * kSpeedOfLight / (k * stark_unit(eps));
}

double transition_frequency(double eps, int k) {
  if (k < 1) throw std::invalid_argument("splitting multiple must be >= 1");
  return k * stark_unit(eps) / kPlanck;
}

bool outside_field_band(double eps) { return eps < 1e3 || eps > 1e4; }

const std::vector<StarkExample>& example_states() {
  static const std::vector<StarkExample> examples = {
      {"V",
       {{"ground", "|2,1,1>"},
        {"excited_a", "(1/sqrt3)((1/sqrt2)|3,2,0> - sqrt(3/2)|3,1,0> + |3,0,0>)"},
        {"excited_b", "(1/sqrt3)((1/sqrt2)|3,2,0> + sqrt(3/2)|3,1,0> + |3,0,0>)"}},
       6,
       1.30e-2},
      {"Lambda",
       {{"ground_a", "(1/sqrt2)(|2,0,0> - |2,1,0>)"},
        {"ground_b", "(1/sqrt2)(|2,0,0> + |2,1,0>)"},
        {"excited", "(1/sqrt2)(|3,2,-1> + |3,1,-1>)"}},
       2,
       1.47e-3},
  };
  return examples;
}

std::vector<WavelengthCheck> check_examples(double eps) {
  std::vector<WavelengthCheck> out;
  for (const StarkExample& ex : example_states()) {
    WavelengthCheck c;
    c.configuration = ex.configuration;
    c.epsilon_v_per_cm = eps;
    c.multiple = ex.splitting_multiple;
    c.computed_m = transition_wavelength(eps, ex.splitting_multiple);
    c.quoted_m = ex.quoted_wavelength_m;
    c.relative_gap = std::abs(c.computed_m - c.quoted_m) / c.quoted_m;
    c.flagged = c.relative_gap > 0.01;
    char buf[256];
    if (c.flagged) {
      std::snprintf(buf, sizeof buf,
                    "DISCREPANCY: hc/(%dE0) = %.4g m at %.4g V/cm, quoted %.4g m (ratio %.4g)", c.multiple,
                    c.computed_m, eps, c.quoted_m, c.computed_m / c.quoted_m);
    } else {
      std::snprintf(buf, sizeof buf, "agrees: hc/(%dE0) = %.4g m, quoted %.4g m", c.multiple, c.computed_m,
                    c.quoted_m);
    }
    c.note = buf;
    out.push_back(c);
  }
  return out;
}

}  // namespace mwvortex::stark
