#pragma once

#include <complex>
#include <vector>

namespace mwvortex {

using cd = std::complex<double>;

// Square n x n sample of a complex field over [-extent, extent]^2, lengths in
// units of the scene waist. Row index runs along +y, column index along +x, and
// pixel centres sit at -extent + (k + 1/2) * 2 extent / n.
struct TransverseMap {
  int n = 0;
  double extent = 3.0;
  std::vector<cd> field;
  // Im of the generated-transition coherence at the exit plane; empty if absent.
  std::vector<double> im_coherence;
  // Charges of the input modes the map was built from (empty for synthetic maps).
  std::vector<int> source_charges;

  TransverseMap() = default;
  TransverseMap(int n_, double extent_);

  double spacing() const { return 2.0 * extent / n; }
  double coord(int k) const { return -extent + (k + 0.5) * spacing(); }
  cd& at(int row, int col) { return field[static_cast<size_t>(row) * n + col]; }
  const cd& at(int row, int col) const { return field[static_cast<size_t>(row) * n + col]; }

  std::vector<double> intensity() const;
  // arg in (-pi, pi]; NaN where |field| < 1e-12 * max|field|.
  std::vector<double> phase() const;
  double max_abs() const;

  cd sample(double x, double y) const;
  double sample_im(double x, double y) const;
};

TransverseMap conj(const TransverseMap& m);

}  // namespace mwvortex
