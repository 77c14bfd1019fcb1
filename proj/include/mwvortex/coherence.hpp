#pragma once

#include <complex>
#include <functional>

namespace mwvortex {

using cd = std::complex<double>;

struct CoherencePair {
  cd first;
  cd second;
};

// V scheme, resonant, default decay rates: (rho32, rho21).
CoherencePair v_coherences(cd o1, cd o2, cd o3, double gamma = 1.0);

// Lambda scheme with W3 strong: (rho21, rho31).
CoherencePair lambda_coherences_controlA(cd o1, cd o2, cd o3, double gamma = 1.0);

// Lambda scheme with W1 strong: (rho21, rho32). Throws ResonantDenominator
// when |8g^2 - 3|W1|^2| < 1e-6 g^2.
CoherencePair lambda_coherences_controlB(cd o1, cd o2, cd o3, double gamma = 1.0);

// Control-A coherences with the denominator 16g^2 + 4|W3|^2, which is what the
// Lambda steady state gives to first order in the weak fields.
CoherencePair lambda_coherences_controlA_refit(cd o1, cd o2, cd o3, double gamma = 1.0);

// Injectable set of closed forms; the validation suite runs against whatever is
// installed here so mutated formulas can be checked to fail.
struct CoherenceSet {
  std::function<CoherencePair(cd, cd, cd, double)> v = v_coherences;
  std::function<CoherencePair(cd, cd, cd, double)> lambda_a = lambda_coherences_controlA;
  std::function<CoherencePair(cd, cd, cd, double)> lambda_b = lambda_coherences_controlB;
};

}  // namespace mwvortex
