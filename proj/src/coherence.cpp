#include "mwvortex/coherence.hpp"

#include <cmath>

#include "mwvortex/errors.hpp"

namespace mwvortex {

namespace {
constexpr cd I{0.0, 1.0};
}

CoherencePair v_coherences(cd o1, cd o2, cd o3, double g) {
  const double den = 18.0 * g * g + std::norm(o1);
  return {-6.0 * o1 * std::conj(o2) / den,
          (-18.0 * I * g * std::conj(o2) + 6.0 * o1 * o3) / den};
}

CoherencePair lambda_coherences_controlA(cd o1, cd o2, cd o3, double g) {
  const double den = 16.0 * g * g + 5.0 * std::norm(o3);
  return {(-8.0 * I * g * o2 + 4.0 * o1 * std::conj(o3)) / den,
          (-8.0 * I * g * o1 + 4.0 * o2 * std::conj(o3)) / den};
}

CoherencePair lambda_coherences_controlA_refit(cd o1, cd o2, cd o3, double g) {
  const double den = 16.0 * g * g + 4.0 * std::norm(o3);
  return {(-8.0 * I * g * o2 + 4.0 * o1 * std::conj(o3)) / den,
          (-8.0 * I * g * o1 + 4.0 * o2 * std::conj(o3)) / den};
}

CoherencePair lambda_coherences_controlB(cd o1, cd o2, cd o3, double g) {
  const double den = 8.0 * g * g - 3.0 * std::norm(o1);
  if (std::abs(den) < 1e-6 * g * g)
    throw ResonantDenominator("8 gamma^2 - 3|W1|^2 vanishes; perturb the control amplitude");
  return {(-4.0 * I * g * o2 + 2.0 * o1 * std::conj(o3)) / den, -2.0 * o1 * o2 / den};
}

}  // namespace mwvortex
