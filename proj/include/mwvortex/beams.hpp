#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "mwvortex/field_map.hpp"

namespace mwvortex {

enum class Role { control, coupling, generated };

inline constexpr int kMaxCharge = 16;

struct FieldMode {
  cd omega0{0.0, 0.0};  // units of gamma
  int charge = 0;
  double waist = 2.0;   // mm; +inf means a plane wave (charge must be 0)
  Role role = Role::control;

  bool plane_wave() const { return waist == std::numeric_limits<double>::infinity(); }
  // Throws ConfigError when an invariant is broken.
  void check() const;
};

struct PolarPoint {
  double r = 0.0;
  double phi = 0.0;
};

// Omega0 / sqrt(|l|!) (sqrt2 r/w)^|l| exp(-r^2/w^2) exp(i l phi)
cd lg_amplitude(const FieldMode& mode, PolarPoint p);

// Map of a single mode on a grid whose length unit is `unit_mm`.
TransverseMap sample_mode(const FieldMode& mode, int n, double extent, double unit_mm = 2.0);

// Winding number around a circle of radius radius_fraction * extent, counted
// counterclockwise. 720 samples, bilinear interpolation.
int measure_topological_charge(const TransverseMap& map, double radius_fraction);

struct RadialBin {
  double r;
  double intensity;
};

// Azimuthal mean of |field|^2, bin centres evenly spaced on [0, extent].
std::vector<RadialBin> radial_profile(const TransverseMap& map, int n_bins);

int count_radial_rings(const std::vector<RadialBin>& profile);

}  // namespace mwvortex
