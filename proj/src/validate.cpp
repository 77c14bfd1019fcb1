#include "mwvortex/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "mwvortex/atoms.hpp"
#include "mwvortex/beams.hpp"
#include "mwvortex/errors.hpp"
#include "mwvortex/oamgate.hpp"
#include "mwvortex/propagation.hpp"
#include "mwvortex/scenes.hpp"
#include "mwvortex/stark.hpp"
#include "mwvortex/transverse.hpp"

namespace mwvortex {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string cnum(cd v) { return "(" + num(v.real()) + ", " + num(v.imag()) + ")"; }

std::string ints(const std::vector<int>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
  return s;
}

CriterionResult make(int id, const char* name) {
  CriterionResult c;
  c.id = id;
  c.name = name;
  return c;
}

void metric(CriterionResult& c, const std::string& k, const std::string& v) { c.metrics.emplace_back(k, v); }

// ---------------------------------------------------------------- criterion 1

constexpr Configuration kConfigs[3] = {Configuration::v, Configuration::lambda_control_a,
                                       Configuration::lambda_control_b};

DriveSet probe_drives(Configuration c, double strong, double p) {
  // weak input = p, generated field = p / 2
  switch (c) {
    case Configuration::v: return {strong, p, 0.5 * p};
    case Configuration::lambda_control_a: return {p, 0.5 * p, strong};
    case Configuration::lambda_control_b: return {strong, 0.5 * p, p};
  }
  return {};
}

CoherencePair oracle_pair(Configuration c, const DensityMatrix& r) {
  switch (c) {
    case Configuration::v: return {r(2, 1), r(1, 0)};
    case Configuration::lambda_control_a: return {r(1, 0), r(2, 0)};
    case Configuration::lambda_control_b: return {r(1, 0), r(2, 1)};
  }
  return {};
}

const char* pair_names(Configuration c) {
  switch (c) {
    case Configuration::v: return "rho32, rho21";
    case Configuration::lambda_control_a: return "rho21, rho31";
    case Configuration::lambda_control_b: return "rho21, rho32";
  }
  return "";
}

using PairFn = std::function<CoherencePair(cd, cd, cd, double)>;

double pair_error(const CoherencePair& closed, const CoherencePair& oracle) {
  return std::max(std::abs(closed.first - oracle.first) / std::abs(oracle.first),
                  std::abs(closed.second - oracle.second) / std::abs(oracle.second));
}

struct OracleSweep {
  double worst[2] = {0.0, 0.0};  // probe, probe / 2
  double worst_hamiltonian[2] = {0.0, 0.0};
  double worst_refit[2] = {0.0, 0.0};
};

OracleSweep sweep_oracle(Configuration c, const PairFn& fn, const std::vector<double>& strong, double probe) {
  OracleSweep s;
  const LevelScheme printed = c == Configuration::v ? LevelScheme::v_default(Convention::as_printed)
                                                    : LevelScheme::lambda_default(Convention::as_printed);
  LevelScheme ham = printed;
  ham.convention = Convention::hamiltonian;
  for (int h = 0; h < 2; ++h) {
    const double p = h == 0 ? probe : 0.5 * probe;
    for (double a : strong) {
      const DriveSet d = probe_drives(c, a, p);
      const CoherencePair closed = fn(d.o1, d.o2, d.o3, 1.0);
      const CoherencePair o_lit = oracle_pair(c, steady_state(printed, d).rho);
      const CoherencePair o_ham = oracle_pair(c, steady_state(ham, d).rho);
      s.worst[h] = std::max(s.worst[h], pair_error(closed, o_lit));
      s.worst_hamiltonian[h] = std::max(s.worst_hamiltonian[h], pair_error(closed, o_ham));
      if (c == Configuration::lambda_control_a)
        s.worst_refit[h] =
            std::max(s.worst_refit[h], pair_error(lambda_coherences_controlA_refit(d.o1, d.o2, d.o3, 1.0), o_lit));
    }
  }
  return s;
}

bool converges(const double w[2]) { return w[0] < 1e-2 && (w[1] <= 0.5 * w[0] || w[0] < 1e-10); }

}  // namespace

CriterionResult check_coherence_oracle(const ValidateOptions& o, ValidateNotes& notes) {
  CriterionResult res = make(1, "coherence_vs_steady_state");
  const double probe = 1e-3;
  bool ok = true;
  std::ostringstream rep;

  // direct substitution values quoted with the closed forms, 3 significant figures
  struct Quoted {
    const char* label;
    cd got;
    cd quoted;
  };
  const Quoted quoted[3] = {
      {"v_rho32(5, 1e-3, 0)", o.coherence.v(5.0, 1e-3, 0.0, 1.0).first, cd{-6.98e-4, 0.0}},
      {"lambdaA_rho31(1e-3, 0, 5)", o.coherence.lambda_a(1e-3, 0.0, 5.0, 1.0).second, cd{0.0, -5.67e-5}},
      {"lambdaB_rho21(10, 0, 1e-3)", o.coherence.lambda_b(10.0, 0.0, 1e-3, 1.0).first, cd{-6.85e-5, 0.0}},
  };
  for (const Quoted& q : quoted) {
    const double rel = std::abs(q.got - q.quoted) / std::abs(q.quoted);
    metric(res, std::string("substitution_") + q.label, cnum(q.got));
    if (!(rel < 5e-3)) {
      ok = false;
      metric(res, std::string("substitution_fail_") + q.label, num(rel));
    }
  }

  for (int ci = 0; ci < 3; ++ci) {
    const Configuration c = kConfigs[ci];
    std::mt19937_64 rng(o.seed + 101 * ci);
    std::uniform_real_distribution<double> mag(2.0, 20.0);
    std::vector<double> strong(50);
    for (double& s : strong) s = mag(rng);
    const PairFn& fn = c == Configuration::v ? o.coherence.v
                       : c == Configuration::lambda_control_a ? o.coherence.lambda_a
                                                              : o.coherence.lambda_b;
    const OracleSweep s = sweep_oracle(c, fn, strong, probe);
    const std::string tag = to_string(c);
    metric(res, tag + "_worst_rel_err_probe", num(s.worst[0]));
    metric(res, tag + "_worst_rel_err_half_probe", num(s.worst[1]));
    if (converges(s.worst)) continue;

    // persistent mismatch: written up, and the criterion rests on the report
    rep << "[" << tag << "] closed-form " << pair_names(c) << " vs 9x9 steady state\n"
        << "  strong field: 50 real magnitudes in [2, 20] gamma, seed " << (o.seed + 101 * ci) << "\n"
        << "  weak input = probe, generated field = probe/2, all detunings 0\n"
        << "  worst relative error, printed-sign generator: probe 1e-3 -> " << num(s.worst[0])
        << ", probe 5e-4 -> " << num(s.worst[1]) << " (ratio " << num(s.worst[1] / s.worst[0]) << ")\n"
        << "  worst relative error, hamiltonian-sign generator: probe 1e-3 -> " << num(s.worst_hamiltonian[0])
        << ", probe 5e-4 -> " << num(s.worst_hamiltonian[1]) << "\n";
    {
      const DriveSet d = probe_drives(c, 10.0, probe);
      const LevelScheme sc = c == Configuration::v ? LevelScheme::v_default() : LevelScheme::lambda_default();
      const CoherencePair cl = fn(d.o1, d.o2, d.o3, 1.0);
      const CoherencePair orc = oracle_pair(c, steady_state(sc, d).rho);
      rep << "  at strong = 10, probe 1e-3: closed " << cnum(cl.first) << " " << cnum(cl.second)
          << "; steady state " << cnum(orc.first) << " " << cnum(orc.second) << "\n"
          << "  spectral abscissa of the printed-sign generator at strong = 10: "
          << num(spectral_abscissa(build_generator(sc, d))) << "\n";
    }
    if (c == Configuration::lambda_control_a) {
      rep << "  candidate: denominator 16 gamma^2 + 4|W3|^2 instead of 16 gamma^2 + 5|W3|^2 gives worst "
          << num(s.worst_refit[0]) << " / " << num(s.worst_refit[1])
          << " (probe 1e-3 / 5e-4); numerators unchanged\n";
    } else {
      rep << "  no single-constant change of the closed form reproduces the steady state; the error does not\n"
          << "  shrink with the probe, so this is not a higher-order effect\n";
    }
    rep << "  resolution: closed forms kept as printed; propagation uses them as printed\n\n";
    metric(res, tag + "_discrepancy_reported", "yes");
  }
  notes.discrepancy = rep.str();
  res.pass = ok;
  return res;
}

// ---------------------------------------------------------------- criterion 2

namespace {
constexpr double kZetaMax = 600.0;
constexpr int kSamples = 200;
constexpr int kStepsPerSample = 200;
constexpr int kSteps = (kSamples - 1) * kStepsPerSample;

double sweep_error(Configuration c, double strong, double weak) {
  MediumParams m;
  m.alpha = kZetaMax;
  const PropagationTrace t = integrate(c, strong, weak, m, kSteps);
  double worst = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const size_t i = static_cast<size_t>(k) * kStepsPerSample;
    const cd cf = closed_form(c, strong, weak, 1.0, t.zeta[i]);
    const double d = std::abs(t.omega_generated[i] - cf);
    worst = std::max(worst, k == 0 ? d : d / std::abs(cf));
  }
  return worst;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (size_t k = 0; k < x.size(); ++k) {
    mx += std::log(x[k]);
    my += std::log(y[k]);
  }
  mx /= x.size();
  my /= x.size();
  double sxy = 0, sxx = 0;
  for (size_t k = 0; k < x.size(); ++k) {
    const double dx = std::log(x[k]) - mx;
    sxy += dx * (std::log(y[k]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}
}  // namespace

CriterionResult check_closed_forms(const ValidateOptions&, ValidateNotes& notes) {
  CriterionResult res = make(2, "closed_form_vs_rk4");
  bool ok = true;
  double worst_by_cfg[3] = {0, 0, 0};
  for (int ci = 0; ci < 3; ++ci) {
    for (double s : {5.0, 10.0, 15.0}) {
      const double e = sweep_error(kConfigs[ci], s, 0.5);
      worst_by_cfg[ci] = std::max(worst_by_cfg[ci], e);
      metric(res, std::string(to_string(kConfigs[ci])) + "_strong_" + std::to_string(int(s)) + "_max_rel_err",
             num(e));
      if (!(e < 1e-3)) ok = false;
    }
  }

  std::vector<double> ns = {1000, 2000, 4000, 8000}, errs;
  MediumParams m;
  m.alpha = kZetaMax;
  IntegratorOptions loose;
  loose.step_check = false;
  const cd exact = closed_form_v(5.0, 0.5, 1.0, kZetaMax);
  for (double n : ns) {
    const PropagationTrace t = integrate_v(5.0, 0.5, m, static_cast<int>(n), loose);
    errs.push_back(std::abs(t.omega_generated.back() - exact) / std::abs(exact));
  }
  const double slope = fit_slope(ns, errs);
  for (size_t k = 0; k < ns.size(); ++k)
    metric(res, "v_endpoint_rel_err_n" + std::to_string(int(ns[k])), num(errs[k]));
  metric(res, "rk4_slope", num(slope));
  if (!(std::abs(slope + 4.0) <= 0.3)) ok = false;
  res.pass = ok;

  // errata: each correction, with the evidence that settles it
  std::ostringstream e;
  e << "ERRATA (corrections applied to printed closed forms; RK4 integration is the reference)\n\n";
  e << "1. V generated field W3(zeta): radicand '9 gamma + 8|W1|^2' -> '9 gamma^2 + 8|W1|^2' (both\n"
    << "   occurrences). Corrected form vs RK4 over zeta in [0, 600], W1 in {5, 10, 15}: worst relative\n"
    << "   error " << num(worst_by_cfg[0]) << ".\n\n";
  const double ratio = printed_efficiency_v(5.0, 1.0, 1.0) / efficiency_v(5.0, 1.0, 1.0);
  e << "2. V efficiency: prefactor '16 W1 / (9 gamma + 8|W1|^2)' -> '16|W1|^2 / (9 gamma^2 + 8|W1|^2)',\n"
    << "   which is |W3|^2/|W2(0)|^2 of item 1. Printed/corrected at W1 = 5: " << num(ratio) << ".\n\n";
  e << "3. Lambda control-A efficiency: the printed bracket and prefactor are squared without moduli and\n"
    << "   are complex when gamma^2 < 2|W3|^2; evaluated as |W2(zeta)|^2/|W1(0)|^2. The generated-field\n"
    << "   closed form itself needs no change: worst relative error vs RK4 " << num(worst_by_cfg[1]) << ".\n\n";
  MediumParams m10;
  m10.alpha = 1.0;
  const cd rk_b = integrate_lambda_controlB(10.0, 0.5, m10, 20000).omega_generated.back();
  const cd pr_b = printed_closed_form_lambda_B(10.0, 0.5, 1.0, 1.0);
  e << "4. Lambda control-B generated field W2(zeta): the printed form does not solve the printed\n"
    << "   propagation equations (at W1 = 10, zeta = 1: printed " << cnum(pr_b) << ", RK4 " << cnum(rk_b)
    << ").\n"
    << "   Replaced by the exact solution i W1 W3*(0)/q [exp(g(2g+q)z/D) - exp(g(2g-q)z/D)],\n"
    << "   q = sqrt(4 gamma^2 + 2|W1|^2), D = 8 gamma^2 - 3|W1|^2: radicand changed, leading gamma in the\n"
    << "   exponents doubled, the 1/2 prefactor dropped and the bracket order reversed. Worst relative error\n"
    << "   vs RK4: " << num(worst_by_cfg[2]) << ".\n\n";
  e << "5. Complex fields: printed first-order terms W1 W3 (V), W2 W3* (control-A) and W1 W2 (control-B)\n"
    << "   are not phase covariant. Propagation feeds the strong field's modulus to the coherences and\n"
    << "   carries its phase on the generated field; identical to the printed equations for real fields.\n";
  notes.errata = e.str();
  return res;
}

// ---------------------------------------------------------------- criterion 3

namespace {
int interior_maxima(const std::vector<double>& y) {
  int n = 0;
  for (size_t k = 1; k + 1 < y.size(); ++k)
    if (y[k] > y[k - 1] && y[k] > y[k + 1]) ++n;
  return n;
}

bool strictly_increasing(const std::vector<double>& y) {
  for (size_t k = 1; k < y.size(); ++k)
    if (!(y[k] > y[k - 1])) return false;
  return true;
}
}  // namespace

CriterionResult check_efficiency_shapes(const ValidateOptions&) {
  CriterionResult res = make(3, "efficiency_shapes");
  // eta grows like exp(1.2 zeta) at W1 = 5 and overflows a double near zeta = 580
  std::vector<double> eta;
  for (int k = 0; k < 200; ++k) eta.push_back(efficiency_v(5.0, 1.0, 100.0 * k / 199));
  const bool inc = strictly_increasing(eta);
  metric(res, "eta_zeta_strictly_increasing_0_100", inc ? "yes" : "no");

  std::vector<double> eta_w;
  double best_w = 0, best = -1;
  for (int k = 1; k <= 200; ++k) {
    const double w = 50.0 * k / 200;
    eta_w.push_back(efficiency_v(w, 1.0, 1.0));
    if (eta_w.back() > best) {
      best = eta_w.back();
      best_w = w;
    }
  }
  const int maxima = interior_maxima(eta_w);
  metric(res, "eta_vs_w1_interior_maxima", std::to_string(maxima));
  metric(res, "eta_vs_w1_argmax", num(best_w));

  std::vector<double> i3;
  for (double w : {5.0, 20.0, 50.0}) i3.push_back(std::norm(closed_form_v(w, 0.5, 1.0, 1.0)));
  const bool dec = i3[0] > i3[1] && i3[1] > i3[2];
  metric(res, "w3_intensity_w1_5_20_50", num(i3[0]) + " " + num(i3[1]) + " " + num(i3[2]));
  res.pass = inc && maxima == 1 && dec;
  return res;
}

// ---------------------------------------------------------------- criterion 4

CriterionResult check_lambda_dichotomy(const ValidateOptions&) {
  CriterionResult res = make(4, "lambda_dichotomy");
  bool ok = true;
  for (double s : {10.0, 12.0, 15.0}) {
    std::vector<double> a, b;
    for (int k = 0; k <= 1200; ++k) {
      const double z = kZetaMax * k / 1200;
      a.push_back(efficiency_lambda_A(s, 1.0, z));
      b.push_back(efficiency_lambda_B(s, 1.0, z));
    }
    const int ma = interior_maxima(a);
    const int mb = interior_maxima(b);
    const bool incb = strictly_increasing(b);
    metric(res, "controlA_" + std::to_string(int(s)) + "_interior_maxima", std::to_string(ma));
    metric(res, "controlB_" + std::to_string(int(s)) + "_interior_maxima", std::to_string(mb));
    ok = ok && ma >= 2 && mb == 0 && incb;
  }
  res.pass = ok;
  return res;
}

// ---------------------------------------------------------------- criterion 5

CriterionResult check_oam_conservation(const ValidateOptions& o) {
  CriterionResult res = make(5, "oam_conservation");
  bool ok = true;
  for (Configuration c : kConfigs) {
    int matched = 0;
    std::vector<int> wrong;
    for (int lc = -2; lc <= 2; ++lc)
      for (int lw = -2; lw <= 2; ++lw) {
        SceneConfig cfg = scenes::oam_pair(c, lc, lw);
        cfg.grid_n = o.grid_n;
        cfg.threads = o.threads;
        const int q = measure_topological_charge(render_scene(cfg), 0.5);
        // frequency relation: generated = W1-side charge minus the other input's
        const int expect = c == Configuration::lambda_control_a ? lw - lc : lc - lw;
        if (q == expect) {
          ++matched;
        } else {
          wrong.push_back(lc);
          wrong.push_back(lw);
        }
      }
    metric(res, std::string(to_string(c)) + "_matched_of_25", std::to_string(matched));
    if (!wrong.empty()) metric(res, std::string(to_string(c)) + "_mismatched_pairs", ints(wrong));
    ok = ok && matched == 25;
  }
  res.pass = ok;
  return res;
}

// ---------------------------------------------------------------- criterion 6

CriterionResult check_petals(const ValidateOptions& o) {
  CriterionResult res = make(6, "petal_law");
  bool ok = true;
  std::vector<int> pv, pl;
  for (int l = 1; l <= 3; ++l) {
    SceneConfig v = scenes::table_v(-l);
    SceneConfig a = scenes::table_lambda(l);
    v.grid_n = a.grid_n = o.grid_n;
    v.threads = a.threads = o.threads;
    pv.push_back(petal_count(render_scene(v)));
    pl.push_back(petal_count(render_scene(a)));
    ok = ok && pv.back() == 2 * l && pl.back() == 2 * l;
  }
  metric(res, "v_petals_l123", ints(pv));
  metric(res, "lambda_petals_l123", ints(pl));
  res.pass = ok;
  return res;
}

// ---------------------------------------------------------------- criterion 7

namespace {
bool split_ok(const std::vector<int>& r) {
  if (r.front() != 1 || r.back() != 2) return false;
  for (size_t k = 1; k < r.size(); ++k)
    if (r[k] < r[k - 1]) return false;
  return true;
}
}  // namespace

CriterionResult check_ring_split(const ValidateOptions& o) {
  CriterionResult res = make(7, "ring_split");
  std::vector<int> rv, rl;
  for (double a : {5.0, 20.0, 50.0}) {
    SceneConfig c = scenes::rings_v(a);
    c.grid_n = o.grid_n;
    c.threads = o.threads;
    rv.push_back(ring_count(render_scene(c)));
  }
  for (double a : {5.0, 10.0, 20.0}) {
    SceneConfig c = scenes::rings_lambda_a(a);
    c.grid_n = o.grid_n;
    c.threads = o.threads;
    rl.push_back(ring_count(render_scene(c)));
  }
  metric(res, "v_rings_5_20_50", ints(rv));
  metric(res, "lambdaA_rings_5_10_20", ints(rl));
  // A control-A profile is already split once the l = 1 control peak (0.607 W03) passes the
  // efficiency maximum, so report both numbers next to the counts.
  double best = 0.0, best_w = 0.0;
  for (int k = 1; k <= 4000; ++k) {
    const double w = 0.005 * k;
    const double e = efficiency_lambda_A(w, 1.0, scenes::kRingZeta);
    if (e > best) {
      best = e;
      best_w = w;
    }
  }
  metric(res, "lambdaA_efficiency_argmax_w3", num(best_w));
  metric(res, "lambdaA_control_peak_at_5", num(5.0 * std::exp(-0.5)));
  res.pass = split_ok(rv) && split_ok(rl);
  return res;
}

// ---------------------------------------------------------------- criterion 8

CriterionResult check_hollow(const ValidateOptions& o) {
  CriterionResult res = make(8, "hollow_beam");
  HollowVerdict h[2];
  const double amps[2] = {10.0, 150.0};
  for (int k = 0; k < 2; ++k) {
    SceneConfig c = scenes::hollow_v(amps[k]);
    c.grid_n = o.grid_n;
    c.threads = o.threads;
    h[k] = classify_hollow(render_scene(c));
  }
  metric(res, "central_ratio_10", num(h[0].central_ratio));
  metric(res, "central_ratio_150", num(h[1].central_ratio));
  {
    // literal plane-wave reading of the weak input, for comparison only
    SceneConfig c = scenes::hollow_v(10.0);
    c.coupling = scenes::plane_wave(0.5, Role::coupling);
    c.zeta_final = scenes::kRingZeta;
    c.grid_n = o.grid_n;
    c.threads = o.threads;
    metric(res, "plane_weak_central_ratio_10", num(classify_hollow(render_scene(c)).central_ratio));
  }
  res.pass = h[0].shape == BeamShape::peaked && h[1].shape == BeamShape::hollow && h[1].central_ratio < 0.5;
  return res;
}

// ---------------------------------------------------------------- criterion 9

CriterionResult check_cnot(const ValidateOptions& o) {
  CriterionResult res = make(9, "cnot_truth_table");
  GateSettings g;
  g.grid_n = o.grid_n;
  g.threads = o.threads;
  const std::vector<TruthRow> rows = truth_table(g);
  std::vector<int> q, sgn;
  for (const TruthRow& r : rows) {
    q.push_back(r.l2_qubit);
    sgn.push_back(r.l2_signed);
  }
  bool invol = true;
  for (const TruthRow& r : rows) {
    const CnotResult back = cnot_apply(r.l1, r.l2_qubit, g);
    invol = invol && back.l2_qubit == r.target_in && back.l1 == r.l1;
  }
  GateSettings gv{5.0, 0.5, 1.0, o.grid_n, o.threads};
  const bool v_ok = table_passes(truth_table_v(gv));
  metric(res, "lambda_qubits", ints(q));
  metric(res, "lambda_signed", ints(sgn));
  metric(res, "involution", invol ? "yes" : "no");
  metric(res, "v_swapped_table", v_ok ? "pass" : "fail");
  res.pass = table_passes(rows) && invol && v_ok;
  return res;
}

// --------------------------------------------------------------- criterion 10

CriterionResult check_stark(const ValidateOptions&, ValidateNotes& notes) {
  CriterionResult res = make(10, "stark_numerics");
  const std::vector<stark::WavelengthCheck> checks = stark::check_examples(1e3);
  std::ostringstream s;
  s << "E0(1e3 V/cm) = " << num(stark::stark_unit(1e3)) << " J\n";
  bool v_ok = false, flag_ok = false;
  for (const stark::WavelengthCheck& c : checks) {
    s << c.configuration << " (k = " << c.multiple << "): " << c.note << "\n";
    metric(res, c.configuration + "_wavelength_m", num(c.computed_m));
    if (c.configuration == "V") v_ok = std::abs(c.computed_m - 1.30e-2) / 1.30e-2 < 0.01 && !c.flagged;
    if (c.configuration == "Lambda") flag_ok = c.flagged && c.note.rfind("DISCREPANCY", 0) == 0;
  }
  notes.stark = s.str();
  metric(res, "lambda_discrepancy_flagged", flag_ok ? "yes" : "no");
  res.pass = v_ok && flag_ok && notes.stark.find("DISCREPANCY") != std::string::npos;
  return res;
}

// ------------------------------------------------------------------- driver

bool ValidateReport::all_pass() const {
  for (const CriterionResult& c : criteria)
    if (!c.pass) return false;
  return !criteria.empty();
}

ValidateReport run_core_criteria(const ValidateOptions& o) {
  ValidateReport r;
  r.criteria.push_back(check_coherence_oracle(o, r.notes));
  r.criteria.push_back(check_closed_forms(o, r.notes));
  r.criteria.push_back(check_efficiency_shapes(o));
  r.criteria.push_back(check_lambda_dichotomy(o));
  r.criteria.push_back(check_oam_conservation(o));
  r.criteria.push_back(check_petals(o));
  r.criteria.push_back(check_ring_split(o));
  r.criteria.push_back(check_hollow(o));
  r.criteria.push_back(check_cnot(o));
  r.criteria.push_back(check_stark(o, r.notes));
  return r;
}

ValidateReport run_validation(const ValidateOptions& o) {
  ValidateReport first = run_core_criteria(o);
  const ValidateReport second = run_core_criteria(o);
  CriterionResult det = make(11, "determinism");
  const bool same = report_csv(first) == report_csv(second) && errata_text(first) == errata_text(second) &&
                    discrepancy_text(first) == discrepancy_text(second);
  metric(det, "byte_identical_rerun", same ? "yes" : "no");
  det.pass = same;
  first.criteria.push_back(det);
  return first;
}

std::string report_csv(const ValidateReport& r) {
  std::ostringstream s;
  s << "# kind=validate\n# version=" << MWVORTEX_VERSION << "\n";
  s << "criterion,name,status,metric,value\n";
  for (const CriterionResult& c : r.criteria) {
    const char* st = c.pass ? "pass" : "fail";
    if (c.metrics.empty()) s << c.id << "," << c.name << "," << st << ",,\n";
    for (const auto& [k, v] : c.metrics) s << c.id << "," << c.name << "," << st << "," << k << ",\"" << v << "\"\n";
  }
  return s.str();
}

std::string errata_text(const ValidateReport& r) { return r.notes.errata + "\nSTARK\n" + r.notes.stark; }

std::string discrepancy_text(const ValidateReport& r) {
  if (r.notes.discrepancy.empty()) return "no persistent closed-form / steady-state mismatch\n";
  return "DISCREPANCY REPORT (first-order closed forms vs full steady state)\n\n" + r.notes.discrepancy;
}

std::string format_line(const CriterionResult& c) {
  std::string s = std::string(c.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(c.id) + " " + c.name;
  for (const auto& [k, v] : c.metrics) s += " " + k + "=" + v;
  return s;
}

}  // namespace mwvortex
