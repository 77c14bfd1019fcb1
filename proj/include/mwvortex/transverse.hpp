#pragma once

#include <utility>
#include <vector>

#include "mwvortex/beams.hpp"
#include "mwvortex/field_map.hpp"
#include "mwvortex/propagation.hpp"

namespace mwvortex {

struct SceneConfig {
  Configuration configuration = Configuration::v;
  FieldMode control{cd{5.0, 0.0}, 0, 2.0, Role::control};
  FieldMode coupling{cd{0.5, 0.0}, 0, 2.0, Role::coupling};
  double zeta_final = 1.0;
  int grid_n = 256;
  double extent = 3.0;    // half-width in units of `waist`
  double waist = 2.0;     // mm; the grid length unit
  int steps = 1000;       // RK4 steps per pixel
  int threads = 1;
  double gamma = 1.0;

  void check() const;
};

// Pixel-wise propagation of the scene to zeta_final. Output does not depend on
// the number of threads.
TransverseMap render_scene(const SceneConfig& cfg);

// Sign changes of im_coherence around the ring where |im_coherence| peaks.
int petal_count(const TransverseMap& map);

enum class BeamShape { peaked, hollow };

struct HollowVerdict {
  BeamShape shape = BeamShape::peaked;
  double central_ratio = 0.0;  // I(r = 0) / max radial-profile intensity
  bool zero_field = false;
};

HollowVerdict classify_hollow(const TransverseMap& map);

int ring_count(const TransverseMap& map);

std::vector<std::pair<double, int>> ring_split_curve(const SceneConfig& cfg,
                                                     const std::vector<double>& amplitudes);

int resolve_threads(int requested);

}  // namespace mwvortex
