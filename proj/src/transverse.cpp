#include "mwvortex/transverse.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "mwvortex/errors.hpp"

namespace mwvortex {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kProfileBins = 64;

struct RowFailure {
  int row = -1;
  std::exception_ptr error;
};

void render_rows(const SceneConfig& cfg, TransverseMap& out, int row_begin, int row_end, RowFailure& fail) {
  const Eigen::Vector2cd unit0(1.0, 0.0);
  for (int i = row_begin; i < row_end; ++i) {
    const double y = out.coord(i);
    for (int j = 0; j < out.n; ++j) {
      try {
        const double x = out.coord(j);
        double phi = std::atan2(y, x);
        if (phi < 0) phi += kTwoPi;
        const PolarPoint p{std::hypot(x, y) * cfg.waist, phi};
        const cd strong = lg_amplitude(cfg.control, p);
        const cd weak = lg_amplitude(cfg.coupling, p);

        const Eigen::Matrix2cd m = system_matrix(cfg.configuration, strong, cfg.gamma);
        const Eigen::Vector2cd x0(0.0, weak_to_slot(cfg.configuration, weak));
        const Eigen::Vector2cd xn = rk4_propagator(m, cfg.zeta_final, cfg.steps) * x0;
        const Eigen::Vector2cd x2n = rk4_propagator(m, cfg.zeta_final, 2L * cfg.steps) * x0;
        if ((xn - x2n).norm() > 1e-6 * x2n.norm())
          throw StepTooLarge("pixel (" + std::to_string(i) + ", " + std::to_string(j) +
                             "): doubling the step count moved the endpoint by more than 1e-6");

        const size_t k = static_cast<size_t>(i) * out.n + j;
        out.field[k] = xn(0);
        out.im_coherence[k] =
            generated_coherence(cfg.configuration, strong, {xn(0), xn(1)}, cfg.gamma).imag();
      } catch (const ResonantDenominator& e) {
        fail = {i, std::make_exception_ptr(ResonantDenominator(
                       std::string(e.what()) + " at pixel (" + std::to_string(i) + ", " + std::to_string(j) + ")",
                       i, j))};
        return;
      } catch (...) {
        fail = {i, std::current_exception()};
        return;
      }
    }
  }
}

}  // namespace

void SceneConfig::check() const {
  control.check();
  coupling.check();
  if (control.role != Role::control || coupling.role != Role::coupling)
    throw ConfigError("scene needs one control (strong) and one coupling (weak) mode");
  if (!(zeta_final > 0.0)) throw ConfigError("zeta_final must be > 0");
  if (grid_n < 128) throw ConfigError("grid_n must be >= 128");
  if (!(extent > 0.0)) throw ConfigError("extent must be > 0");
  if (!(waist > 0.0) || !std::isfinite(waist)) throw ConfigError("scene waist must be finite and > 0");
  if (steps < 1) throw ConfigError("steps must be >= 1");
  if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

TransverseMap render_scene(const SceneConfig& cfg) {
  cfg.check();
  TransverseMap out(cfg.grid_n, cfg.extent);
  out.im_coherence.assign(out.field.size(), 0.0);
  out.source_charges = {cfg.control.charge, cfg.coupling.charge};

  const int workers = std::clamp(resolve_threads(cfg.threads), 1, cfg.grid_n);
  std::vector<RowFailure> failures(workers);
  if (workers == 1) {
    render_rows(cfg, out, 0, cfg.grid_n, failures[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const int b = static_cast<int>(static_cast<long>(cfg.grid_n) * w / workers);
      const int e = static_cast<int>(static_cast<long>(cfg.grid_n) * (w + 1) / workers);
      pool.emplace_back(render_rows, std::cref(cfg), std::ref(out), b, e, std::ref(failures[w]));
    }
    for (std::thread& t : pool) t.join();
  }
  // report the failure a sequential sweep would have hit first
  for (const RowFailure& f : failures)
    if (f.error) std::rethrow_exception(f.error);
  return out;
}

int petal_count(const TransverseMap& map) {
  if (map.im_coherence.size() != map.field.size())
    throw std::invalid_argument("map has no im_coherence layer");
  double top = 0.0;
  for (double v : map.im_coherence) top = std::max(top, std::abs(v));
  if (!(top >= 1e-12)) throw DegenerateField("im_coherence is below 1e-12 everywhere");

  // radius where the azimuthal mean of |im| peaks
  const double dr = map.extent / (kProfileBins - 1);
  std::vector<double> sum(kProfileBins, 0.0);
  std::vector<int> count(kProfileBins, 0);
  for (int i = 0; i < map.n; ++i)
    for (int j = 0; j < map.n; ++j) {
      const long b = std::lround(std::hypot(map.coord(i), map.coord(j)) / dr);
      if (b >= kProfileBins) continue;
      sum[b] += std::abs(map.im_coherence[static_cast<size_t>(i) * map.n + j]);
      ++count[b];
    }
  int best = 1;
  double best_val = -1.0;
  for (int b = 1; b < kProfileBins; ++b) {
    if (count[b] == 0) continue;
    const double v = sum[b] / count[b];
    if (v > best_val) {
      best_val = v;
      best = b;
    }
  }

  const double R = best * dr;
  constexpr int kSamples = 720;
  std::vector<int> signs;
  signs.reserve(kSamples);
  for (int k = 0; k < kSamples; ++k) {
    const double th = kTwoPi * k / kSamples;
    const double v = map.sample_im(R * std::cos(th), R * std::sin(th));
    if (std::abs(v) > 1e-9 * top) signs.push_back(v > 0 ? 1 : -1);
  }
  if (signs.empty()) return 0;
  int changes = 0;
  for (size_t k = 0; k < signs.size(); ++k)
    if (signs[k] != signs[(k + 1) % signs.size()]) ++changes;
  return changes;
}

HollowVerdict classify_hollow(const TransverseMap& map) {
  for (int l : map.source_charges)
    if (l != 0) throw std::invalid_argument("classify_hollow requires charge-0 drives");
  const std::vector<RadialBin> prof = radial_profile(map, kProfileBins);
  double top = 0.0;
  for (const RadialBin& b : prof) top = std::max(top, b.intensity);
  HollowVerdict v;
  if (!(top > 0.0)) {
    v.zero_field = true;
    return v;
  }
  v.central_ratio = prof.front().intensity / top;
  v.shape = v.central_ratio < 0.5 ? BeamShape::hollow : BeamShape::peaked;
  return v;
}

// the inner ring of a strongly driven l = 1 scene sits within ~0.05 w of the axis, so the bins
// have to follow the pixel pitch or the 5-bin smoothing smears it into the background
int ring_count(const TransverseMap& map) {
  return count_radial_rings(radial_profile(map, std::max(kProfileBins, map.n / 2)));
}

std::vector<std::pair<double, int>> ring_split_curve(const SceneConfig& cfg, const std::vector<double>& amplitudes) {
  std::vector<std::pair<double, int>> out;
  out.reserve(amplitudes.size());
  for (double a : amplitudes) {
    SceneConfig c = cfg;
    const double mag = std::abs(cfg.control.omega0);
    c.control.omega0 = mag > 0.0 ? cfg.control.omega0 / mag * a : cd{a, 0.0};
    out.emplace_back(a, ring_count(render_scene(c)));
  }
  return out;
}

}  // namespace mwvortex
