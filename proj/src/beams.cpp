#include "mwvortex/beams.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mwvortex/errors.hpp"

namespace mwvortex {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kCircleSamples = 720;
}  // namespace

void FieldMode::check() const {
  if (!(waist > 0.0) || std::isnan(waist)) throw ConfigError("waist must be > 0");
  if (!std::isfinite(omega0.real()) || !std::isfinite(omega0.imag()))
    throw ConfigError("omega0 must be finite");
  if (std::abs(charge) > kMaxCharge)
    throw ConfigError("|charge| must be <= " + std::to_string(kMaxCharge));
  if (plane_wave() && charge != 0) throw ConfigError("a plane wave cannot carry charge");
}

cd lg_amplitude(const FieldMode& mode, PolarPoint p) {
  if (mode.plane_wave()) return mode.omega0;
  const int al = std::abs(mode.charge);
  const double s = p.r / mode.waist;
  double radial;
  if (al == 0) {
    radial = std::exp(-s * s);
  } else if (s == 0.0) {
    radial = 0.0;
  } else {
    // log space keeps sqrt(|l|!) and (sqrt2 s)^|l| finite for |l| up to 16
    double lg = -0.5 * std::lgamma(al + 1.0) + al * std::log(std::numbers::sqrt2 * s) - s * s;
    radial = std::exp(lg);
  }
  return mode.omega0 * radial * std::polar(1.0, mode.charge * p.phi);
}

TransverseMap sample_mode(const FieldMode& mode, int n, double extent, double unit_mm) {
  mode.check();
  TransverseMap m(n, extent);
  for (int i = 0; i < n; ++i) {
    const double y = m.coord(i);
    for (int j = 0; j < n; ++j) {
      const double x = m.coord(j);
      double phi = std::atan2(y, x);
      if (phi < 0) phi += kTwoPi;
      m.at(i, j) = lg_amplitude(mode, {std::hypot(x, y) * unit_mm, phi});
    }
  }
  m.source_charges = {mode.charge};
  return m;
}

int measure_topological_charge(const TransverseMap& map, double radius_fraction) {
  if (!(radius_fraction > 0.0 && radius_fraction <= 1.0))
    throw std::invalid_argument("radius_fraction must lie in (0, 1]");
  const double R = radius_fraction * map.extent;
  const double floor = 1e-12 * map.max_abs();

  double total = 0.0;
  double prev = 0.0;
  for (int k = 0; k <= kCircleSamples; ++k) {
    const double th = kTwoPi * (k % kCircleSamples) / kCircleSamples;
    cd v = map.sample(R * std::cos(th), R * std::sin(th));
    if (!(std::abs(v) > floor))
      throw DegenerateField("field vanishes on the sampling circle; charge undefined");
    double ph = std::arg(v);
    if (k == 0) {
      prev = ph;
      continue;
    }
    double d = ph - prev;
    if (d > std::numbers::pi) d -= kTwoPi;
    if (d < -std::numbers::pi) d += kTwoPi;
    total += d;
    prev = ph;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

std::vector<RadialBin> radial_profile(const TransverseMap& map, int n_bins) {
  if (n_bins < 8) throw std::invalid_argument("radial_profile needs at least 8 bins");
  const double dr = map.extent / (n_bins - 1);
  std::vector<double> sum(n_bins, 0.0);
  std::vector<int> count(n_bins, 0);
  for (int i = 0; i < map.n; ++i) {
    const double y = map.coord(i);
    for (int j = 0; j < map.n; ++j) {
      const double r = std::hypot(map.coord(j), y);
      const long b = std::lround(r / dr);
      if (b >= n_bins) continue;
      sum[b] += std::norm(map.at(i, j));
      ++count[b];
    }
  }
  std::vector<RadialBin> out(n_bins);
  for (int b = 0; b < n_bins; ++b) {
    const double r = b * dr;
    double value;
    if (count[b] > 0) {
      value = sum[b] / count[b];
    } else {
      // coarse grids leave the innermost bins empty; fall back to a circle average
      constexpr int kSamples = 360;
      double acc = 0.0;
      for (int k = 0; k < kSamples; ++k) {
        const double th = kTwoPi * k / kSamples;
        acc += std::norm(map.sample(r * std::cos(th), r * std::sin(th)));
      }
      value = acc / kSamples;
    }
    out[b] = {r, value};
  }
  return out;
}

int count_radial_rings(const std::vector<RadialBin>& profile) {
  const int n = static_cast<int>(profile.size());
  if (n < 3) return 0;
  // 5-bin moving average, window truncated at both ends
  std::vector<double> s(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    int cnt = 0;
    for (int k = std::max(0, i - 2); k <= std::min(n - 1, i + 2); ++k) {
      acc += profile[k].intensity;
      ++cnt;
    }
    s[i] = acc / cnt;
  }
  const double top = *std::max_element(s.begin(), s.end());
  if (!(top > 0.0)) return 0;
  const double thresh = 0.05 * top;

  int rings = 0;
  if (s[0] > s[1] && s[0] > thresh) ++rings;
  for (int i = 1; i < n - 1; ++i)
    if (s[i] > s[i - 1] && s[i] > s[i + 1] && s[i] > thresh) ++rings;
  return rings;
}

}  // namespace mwvortex
