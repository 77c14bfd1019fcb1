#include "mwvortex/oamgate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "mwvortex/errors.hpp"
#include "mwvortex/scenes.hpp"

namespace mwvortex {

namespace {

void check_basis(int a, int b) {
  if ((a != 0 && a != 1) || (b != 0 && b != 1)) throw std::invalid_argument("gate inputs must be 0 or 1");
}

CnotResult run_gate(Configuration c, int control_side, const FieldMode& strong, const FieldMode& weak,
                    const GateSettings& s) {
  SceneConfig cfg;
  cfg.configuration = c;
  cfg.control = strong;
  cfg.coupling = weak;
  cfg.zeta_final = s.zeta;
  cfg.grid_n = s.grid_n;
  cfg.threads = s.threads;
  const TransverseMap m = render_scene(cfg);
  double top = 0.0;
  for (const cd& v : m.field) top = std::max(top, std::norm(v));
  if (!(top > 1e-30)) throw DegenerateField("generated intensity is zero everywhere; no gate output");
  const int q = measure_topological_charge(m, 0.5);
  return {control_side, q, std::abs(q)};
}

}  // namespace

CnotResult cnot_apply(int l1, int l3, const GateSettings& s) {
  check_basis(l1, l3);
  // control-A: W3 is the strong field, W1 the weak input; generated l2 = l1 - l3
  return run_gate(Configuration::lambda_control_a, l1, scenes::lg_mode(s.strong, l3, Role::control),
                  scenes::lg_mode(s.weak, l1, Role::coupling), s);
}

CnotResult cnot_apply_v(int l1, int l2, const GateSettings& s) {
  check_basis(l1, l2);
  return run_gate(Configuration::v, l1, scenes::lg_mode(s.strong, l1, Role::control),
                  scenes::lg_mode(s.weak, l2, Role::coupling), s);
}

namespace {
std::vector<TruthRow> tabulate(CnotResult (*gate)(int, int, const GateSettings&), const GateSettings& s) {
  static constexpr int kInputs[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  static constexpr int kExpected[4] = {0, 1, 1, 0};
  std::vector<TruthRow> rows;
  for (int k = 0; k < 4; ++k) {
    const CnotResult r = gate(kInputs[k][0], kInputs[k][1], s);
    TruthRow row;
    row.l1 = kInputs[k][0];
    row.target_in = kInputs[k][1];
    row.l2_signed = r.l2_signed;
    row.l2_qubit = r.l2_qubit;
    row.expected = kExpected[k];
    row.pass = r.l2_qubit == kExpected[k] && r.l1 == row.l1;
    rows.push_back(row);
  }
  return rows;
}
}  // namespace

std::vector<TruthRow> truth_table(const GateSettings& s) { return tabulate(cnot_apply, s); }

std::vector<TruthRow> truth_table_v(GateSettings s) { return tabulate(cnot_apply_v, s); }

bool table_passes(const std::vector<TruthRow>& rows) {
  if (rows.size() != 4) return false;
  for (const TruthRow& r : rows)
    if (!r.pass) return false;
  return true;
}

}  // namespace mwvortex
