#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace mwvortex {

using cd = std::complex<double>;

// v:                W1 strong, W2 weak input, W3 generated
// lambda_control_a: W3 strong, W1 weak input, W2 generated
// lambda_control_b: W1 strong, W3 weak input, W2 generated
enum class Configuration { v, lambda_control_a, lambda_control_b };

const char* to_string(Configuration c);

struct MediumParams {
  double alpha = 1.0;  // optical depth
  double L = 1.0;
  void check() const;
  double zeta_at(double z) const { return alpha * z / L; }
  double zeta_final() const { return alpha; }
};

struct PropagationTrace {
  std::vector<double> zeta;
  std::vector<cd> omega_generated;
  std::vector<cd> omega_coupling;  // the weak input field as it propagates
};

struct IntegratorOptions {
  bool step_check = true;        // rerun with 2n steps and compare endpoints
  double step_tolerance = 1e-6;  // relative
};

// Envelope state (generated, weak-slot). The printed coherences feed the weak
// field into the first-order terms conjugated for v and control-B, so the second
// slot holds conj(weak) there and the weak field itself for control-A. With the
// strong field's phase carried by the generated field, the right-hand side is
// linear over the complex numbers and reduces to the printed equations for real
// fields.
using Envelope = std::array<cd, 2>;

cd weak_to_slot(Configuration c, cd weak);
cd slot_to_weak(Configuration c, cd slot);

Envelope rhs(Configuration c, cd strong, const Envelope& s, double gamma = 1.0);

// Generated-transition coherence at a given envelope: rho32 for v, rho21 otherwise.
cd generated_coherence(Configuration c, cd strong, const Envelope& s, double gamma = 1.0);

Eigen::Matrix2cd system_matrix(Configuration c, cd strong, double gamma = 1.0);

// n classical RK4 steps of size zeta/n for d/dzeta x = M x, as one matrix.
Eigen::Matrix2cd rk4_propagator(const Eigen::Matrix2cd& m, double zeta, long n);

PropagationTrace integrate(Configuration c, cd strong, cd weak0, const MediumParams& medium,
                           int n_steps, const IntegratorOptions& opt = {}, double gamma = 1.0);

PropagationTrace integrate_v(cd o1, cd o2_0, const MediumParams& medium, int n_steps,
                             const IntegratorOptions& opt = {}, double gamma = 1.0);
PropagationTrace integrate_lambda_controlA(cd o3, cd o1_0, const MediumParams& medium, int n_steps,
                                           const IntegratorOptions& opt = {}, double gamma = 1.0);
PropagationTrace integrate_lambda_controlB(cd o1, cd o3_0, const MediumParams& medium, int n_steps,
                                           const IntegratorOptions& opt = {}, double gamma = 1.0);

// Closed forms for the generated field with zero generated input.
cd closed_form_v(cd o1, cd o2_0, double gamma, double zeta);
cd closed_form_lambda_A(cd o3, cd o1_0, double gamma, double zeta);
cd closed_form_lambda_B(cd o1, cd o3_0, double gamma, double zeta);
cd closed_form(Configuration c, cd strong, cd weak0, double gamma, double zeta);

double efficiency_v(cd o1, double gamma, double zeta);
double efficiency_lambda_A(cd o3, double gamma, double zeta);
double efficiency_lambda_B(cd o1, double gamma, double zeta);
double efficiency(Configuration c, cd strong, double gamma, double zeta);

// The forms exactly as typeset, kept for the errata report.
double printed_efficiency_v(cd o1, double gamma, double zeta);
cd printed_closed_form_lambda_B(cd o1, cd o3_0, double gamma, double zeta);

}  // namespace mwvortex
