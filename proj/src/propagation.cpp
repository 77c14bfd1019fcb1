#include "mwvortex/propagation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mwvortex/coherence.hpp"
#include "mwvortex/errors.hpp"

namespace mwvortex {

namespace {
constexpr cd I{0.0, 1.0};

struct Polar {
  double mag;
  cd unit;
};

Polar split(cd z) {
  const double a = std::abs(z);
  return {a, a > 0.0 ? z / a : cd{1.0, 0.0}};
}

// e^{m z} sinh(d z / 2) / (d / 2): (e^{l1 z} - e^{l2 z}) / (l1 - l2) without cancellation
cd two_exp(cd l1, cd l2, double z) {
  const cd m = 0.5 * (l1 + l2);
  const cd d = l1 - l2;
  const cd dz = d * z;
  if (std::abs(dz) < 1e-6) return std::exp(m * z) * z * (1.0 + dz * dz / 24.0);
  return std::exp(m * z) * std::sinh(0.5 * dz) / (0.5 * d);
}
}  // namespace

const char* to_string(Configuration c) {
  switch (c) {
    case Configuration::v: return "v";
    case Configuration::lambda_control_a: return "lambda_control_a";
    case Configuration::lambda_control_b: return "lambda_control_b";
  }
  return "?";
}

void MediumParams::check() const {
  if (!(alpha > 0.0) || !(L > 0.0)) throw std::invalid_argument("alpha and L must be > 0");
}

cd weak_to_slot(Configuration c, cd weak) {
  return c == Configuration::lambda_control_a ? weak : std::conj(weak);
}

cd slot_to_weak(Configuration c, cd slot) {
  return c == Configuration::lambda_control_a ? slot : std::conj(slot);
}

Envelope rhs(Configuration c, cd strong, const Envelope& s, double g) {
  const Polar p = split(strong);
  switch (c) {
    case Configuration::v: {
      // dW3 = i (g32/2) rho32, dW2 = i (g21/2) rho21 with g32 = 2g, g21 = g
      const CoherencePair r = v_coherences(p.mag, std::conj(s[1]), s[0] * std::conj(p.unit), g);
      return {p.unit * I * g * r.first, I * (0.5 * g) * r.second};
    }
    case Configuration::lambda_control_a: {
      // dW2 = i (g21/2) rho21, dW1 = i (g32/2) rho31 with g21 = 2g, g32 = g
      const CoherencePair r = lambda_coherences_controlA(s[1], s[0] * p.unit, p.mag, g);
      return {std::conj(p.unit) * I * g * r.first, I * (0.5 * g) * r.second};
    }
    case Configuration::lambda_control_b: {
      // dW2 = i (g21/2) rho21, dW3 = i (g32/2) rho32
      const CoherencePair r = lambda_coherences_controlB(p.mag, s[0] * std::conj(p.unit), std::conj(s[1]), g);
      return {p.unit * I * g * r.first, I * (0.5 * g) * r.second};
    }
  }
  throw std::logic_error("unknown configuration");
}

cd generated_coherence(Configuration c, cd strong, const Envelope& s, double g) {
  switch (c) {
    case Configuration::v: return v_coherences(strong, std::conj(s[1]), s[0], g).first;
    case Configuration::lambda_control_a: return lambda_coherences_controlA(s[1], s[0], strong, g).first;
    case Configuration::lambda_control_b:
      return lambda_coherences_controlB(strong, s[0], std::conj(s[1]), g).first;
  }
  throw std::logic_error("unknown configuration");
}

Eigen::Matrix2cd system_matrix(Configuration c, cd strong, double g) {
  const Envelope e0 = rhs(c, strong, {cd{1.0, 0.0}, cd{0.0, 0.0}}, g);
  const Envelope e1 = rhs(c, strong, {cd{0.0, 0.0}, cd{1.0, 0.0}}, g);
  Eigen::Matrix2cd m;
  m << e0[0], e1[0], e0[1], e1[1];
  return m;
}

Eigen::Matrix2cd rk4_propagator(const Eigen::Matrix2cd& m, double zeta, long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Eigen::Matrix2cd hm = (zeta / n) * m;
  const Eigen::Matrix2cd hm2 = hm * hm;
  Eigen::Matrix2cd step = Eigen::Matrix2cd::Identity() + hm + hm2 / 2.0 + hm2 * hm / 6.0 + hm2 * hm2 / 24.0;
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Identity();
  for (long k = n; k > 0; k >>= 1) {
    if (k & 1) out = step * out;
    step = step * step;
  }
  return out;
}

namespace {

PropagationTrace run_rk4(Configuration c, cd strong, cd weak0, double zeta_final, long n, double g) {
  PropagationTrace t;
  t.zeta.resize(n + 1);
  t.omega_generated.resize(n + 1);
  t.omega_coupling.resize(n + 1);
  const double h = zeta_final / n;
  Envelope s{cd{0.0, 0.0}, weak_to_slot(c, weak0)};
  auto axpy = [](const Envelope& a, double k, const Envelope& b) {
    return Envelope{a[0] + k * b[0], a[1] + k * b[1]};
  };
  for (long k = 0;; ++k) {
    t.zeta[k] = k * h;
    t.omega_generated[k] = s[0];
    t.omega_coupling[k] = slot_to_weak(c, s[1]);
    if (k == n) break;
    const Envelope k1 = rhs(c, strong, s, g);
    const Envelope k2 = rhs(c, strong, axpy(s, 0.5 * h, k1), g);
    const Envelope k3 = rhs(c, strong, axpy(s, 0.5 * h, k2), g);
    const Envelope k4 = rhs(c, strong, axpy(s, h, k3), g);
    for (int i = 0; i < 2; ++i) s[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  t.zeta[n] = zeta_final;
  return t;
}

}  // namespace

PropagationTrace integrate(Configuration c, cd strong, cd weak0, const MediumParams& medium, int n_steps,
                           const IntegratorOptions& opt, double g) {
  medium.check();
  if (n_steps < 1000) throw std::invalid_argument("n_steps must be >= 1000");
  PropagationTrace t = run_rk4(c, strong, weak0, medium.zeta_final(), n_steps, g);
  if (opt.step_check) {
    const PropagationTrace fine = run_rk4(c, strong, weak0, medium.zeta_final(), 2L * n_steps, g);
    // the generated field alone can sit near a zero of an oscillation, so compare the whole state
    const double da = std::hypot(std::abs(t.omega_generated.back() - fine.omega_generated.back()),
                                 std::abs(t.omega_coupling.back() - fine.omega_coupling.back()));
    const double scale = std::hypot(std::abs(fine.omega_generated.back()), std::abs(fine.omega_coupling.back()));
    if (da > opt.step_tolerance * scale)
      throw StepTooLarge("doubling n_steps changed the endpoint by " + std::to_string(da / scale) + " relative");
  }
  return t;
}

PropagationTrace integrate_v(cd o1, cd o2_0, const MediumParams& m, int n, const IntegratorOptions& opt, double g) {
  return integrate(Configuration::v, o1, o2_0, m, n, opt, g);
}

PropagationTrace integrate_lambda_controlA(cd o3, cd o1_0, const MediumParams& m, int n,
                                           const IntegratorOptions& opt, double g) {
  return integrate(Configuration::lambda_control_a, o3, o1_0, m, n, opt, g);
}

PropagationTrace integrate_lambda_controlB(cd o1, cd o3_0, const MediumParams& m, int n,
                                           const IntegratorOptions& opt, double g) {
  return integrate(Configuration::lambda_control_b, o1, o3_0, m, n, opt, g);
}

cd closed_form_v(cd o1, cd o2_0, double g, double zeta) {
  const double a2 = std::norm(o1);
  const double den = 18.0 * g * g + a2;
  const double root = std::sqrt(9.0 * g * g + 8.0 * a2);
  return -4.0 * I * std::conj(o2_0) * o1 / root * std::exp(9.0 * g * g * zeta / (2.0 * den)) *
         std::sinh(3.0 * g * root * zeta / (2.0 * den));
}

cd closed_form_lambda_A(cd o3, cd o1_0, double g, double zeta) {
  const double b2 = std::norm(o3);
  const double den = 16.0 * g * g + 5.0 * b2;
  const cd s = std::sqrt(cd{g * g - 2.0 * b2, 0.0});
  // -i W1 W3* / s [exp(2g(3g - s)z/D) - exp(2g(3g + s)z/D)]
  const cd lp = 2.0 * g * (3.0 * g + s) / den;
  const cd lm = 2.0 * g * (3.0 * g - s) / den;
  return I * o1_0 * std::conj(o3) * (4.0 * g / den) * two_exp(lp, lm, zeta);
}

cd closed_form_lambda_B(cd o1, cd o3_0, double g, double zeta) {
  const double a2 = std::norm(o1);
  const double den = 8.0 * g * g - 3.0 * a2;
  if (std::abs(den) < 1e-6 * g * g)
    throw ResonantDenominator("8 gamma^2 - 3|W1|^2 vanishes; perturb the control amplitude");
  const double q = std::sqrt(4.0 * g * g + 2.0 * a2);
  // i W1 W3*(0) / q [exp(g(2g + q)z/D) - exp(g(2g - q)z/D)]
  const cd lp = g * (2.0 * g + q) / den;
  const cd lm = g * (2.0 * g - q) / den;
  return I * o1 * std::conj(o3_0) * (2.0 * g / den) * two_exp(lp, lm, zeta);
}

cd closed_form(Configuration c, cd strong, cd weak0, double g, double zeta) {
  switch (c) {
    case Configuration::v: return closed_form_v(strong, weak0, g, zeta);
    case Configuration::lambda_control_a: return closed_form_lambda_A(strong, weak0, g, zeta);
    case Configuration::lambda_control_b: return closed_form_lambda_B(strong, weak0, g, zeta);
  }
  throw std::logic_error("unknown configuration");
}

double efficiency_v(cd o1, double g, double zeta) {
  const double a2 = std::norm(o1);
  const double den = 18.0 * g * g + a2;
  const double root = std::sqrt(9.0 * g * g + 8.0 * a2);
  const double sh = std::sinh(3.0 * g * root * zeta / (2.0 * den));
  return 16.0 * a2 / (root * root) * std::exp(9.0 * g * g * zeta / den) * sh * sh;
}

double efficiency_lambda_A(cd o3, double g, double zeta) {
  return std::norm(closed_form_lambda_A(o3, 1.0, g, zeta));
}

double efficiency_lambda_B(cd o1, double g, double zeta) {
  return std::norm(closed_form_lambda_B(o1, 1.0, g, zeta));
}

double efficiency(Configuration c, cd strong, double g, double zeta) {
  switch (c) {
    case Configuration::v: return efficiency_v(strong, g, zeta);
    case Configuration::lambda_control_a: return efficiency_lambda_A(strong, g, zeta);
    case Configuration::lambda_control_b: return efficiency_lambda_B(strong, g, zeta);
  }
  throw std::logic_error("unknown configuration");
}

double printed_efficiency_v(cd o1, double g, double zeta) {
  const double a = std::abs(o1);
  const double den = 18.0 * g * g + a * a;
  const double sh = std::sinh(3.0 * g * zeta * std::sqrt(9.0 * g * g + 8.0 * a * a) / (2.0 * den));
  return 16.0 * a / (9.0 * g + 8.0 * a * a) * std::exp(9.0 * g * g * zeta / den) * sh * sh;
}

cd printed_closed_form_lambda_B(cd o1, cd o3_0, double g, double zeta) {
  const double a2 = std::norm(o1);
  const double den = 8.0 * g * g - 3.0 * a2;
  const double r = std::sqrt(g * g + 4.0 * a2);
  return I * std::conj(o3_0) * o1 / (2.0 * r) *
         (std::exp(g * (g - r) * zeta / den) - std::exp(g * (g + r) * zeta / den));
}

}  // namespace mwvortex
