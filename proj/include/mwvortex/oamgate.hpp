#pragma once

#include <vector>

#include "mwvortex/transverse.hpp"

namespace mwvortex {

struct GateSettings {
  double strong = 0.5;  // amplitude of the field carrying the control-side charge split
  double weak = 0.5;
  double zeta = 1.0;
  int grid_n = 256;
  int threads = 1;
};

struct CnotResult {
  int l1 = 0;
  int l2_signed = 0;
  int l2_qubit = 0;
};

// Lambda control-A scene: W1 carries l1 (amplitude settings.weak), W3 carries l3
// (amplitude settings.strong). Returns the generated winding and its magnitude.
CnotResult cnot_apply(int l1, int l3, const GateSettings& settings = {});

// Same gate on the V scheme: W1 carries l1, W2 carries l2, generated l3 = l1 - l2.
CnotResult cnot_apply_v(int l1, int l2, const GateSettings& settings);

struct TruthRow {
  int l1 = 0, target_in = 0;
  int l2_signed = 0, l2_qubit = 0;
  int expected = 0;
  bool pass = false;
};

std::vector<TruthRow> truth_table(const GateSettings& settings = {});
// Swapped-role table on the V scheme, W1 = 5, W2 = 0.5 by default.
std::vector<TruthRow> truth_table_v(GateSettings settings = {5.0, 0.5, 1.0, 256, 1});

bool table_passes(const std::vector<TruthRow>& rows);

}  // namespace mwvortex
