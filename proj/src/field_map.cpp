#include "mwvortex/field_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mwvortex {

TransverseMap::TransverseMap(int n_, double extent_)
    : n(n_), extent(extent_), field(static_cast<size_t>(n_) * n_, cd{0.0, 0.0}) {}

std::vector<double> TransverseMap::intensity() const {
  std::vector<double> out(field.size());
  for (size_t k = 0; k < field.size(); ++k) out[k] = std::norm(field[k]);
  return out;
}

double TransverseMap::max_abs() const {
  double m = 0.0;
  for (const cd& v : field) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> TransverseMap::phase() const {
  const double floor = 1e-12 * max_abs();
  std::vector<double> out(field.size());
  for (size_t k = 0; k < field.size(); ++k) {
    double a = std::abs(field[k]);
    if (a == 0.0 || a < floor) {
      out[k] = std::numeric_limits<double>::quiet_NaN();
    } else {
      double p = std::arg(field[k]);
      out[k] = (p == -M_PI) ? M_PI : p;
    }
  }
  return out;
}

namespace {

struct Stencil {
  int r0, c0;
  double tr, tc;
};

Stencil locate(const TransverseMap& m, double x, double y) {
  const double dx = m.spacing();
  double u = (x + m.extent) / dx - 0.5;
  double v = (y + m.extent) / dx - 0.5;
  int c0 = std::clamp(static_cast<int>(std::floor(u)), 0, m.n - 2);
  int r0 = std::clamp(static_cast<int>(std::floor(v)), 0, m.n - 2);
  return {r0, c0, std::clamp(v - r0, 0.0, 1.0), std::clamp(u - c0, 0.0, 1.0)};
}

template <class T>
T blend(const Stencil& s, const T& a00, const T& a01, const T& a10, const T& a11) {
  return (1 - s.tr) * ((1 - s.tc) * a00 + s.tc * a01) + s.tr * ((1 - s.tc) * a10 + s.tc * a11);
}

}  // namespace

cd TransverseMap::sample(double x, double y) const {
  Stencil s = locate(*this, x, y);
  return blend(s, at(s.r0, s.c0), at(s.r0, s.c0 + 1), at(s.r0 + 1, s.c0), at(s.r0 + 1, s.c0 + 1));
}

double TransverseMap::sample_im(double x, double y) const {
  Stencil s = locate(*this, x, y);
  auto im = [&](int r, int c) { return im_coherence[static_cast<size_t>(r) * n + c]; };
  return blend(s, im(s.r0, s.c0), im(s.r0, s.c0 + 1), im(s.r0 + 1, s.c0), im(s.r0 + 1, s.c0 + 1));
}

TransverseMap conj(const TransverseMap& m) {
  TransverseMap out = m;
  for (cd& v : out.field) v = std::conj(v);
  for (double& v : out.im_coherence) v = -v;
  for (int& l : out.source_charges) l = -l;
  return out;
}

}  // namespace mwvortex
