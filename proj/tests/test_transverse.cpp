#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "mwvortex/errors.hpp"
#include "mwvortex/scenes.hpp"
#include "mwvortex/transverse.hpp"

using namespace mwvortex;

namespace {

SceneConfig small(SceneConfig s, int n = 128) {
  s.grid_n = n;
  return s;
}

int centre_ring_count(const TransverseMap& m) { return count_radial_rings(radial_profile(m, 64)); }

}  // namespace

TEST_CASE("v: coupling charge -1 gives a +1 doughnut") {
  const TransverseMap m = render_scene(small(scenes::table_v(-1), 256));
  CHECK(measure_topological_charge(m, 0.5) == 1);
  CHECK(centre_ring_count(m) == 1);
  // the four pixels around the axis sit half a pixel off it; near the axis the intensity goes as r^2
  const std::vector<double> in = m.intensity();
  const double top = *std::max_element(in.begin(), in.end());
  const double c = in[127 * 256 + 127];
  CHECK(c < 3e-3 * top);
  CHECK(in[128 * 256 + 128] == doctest::Approx(c).epsilon(1e-9));
  CHECK(in[127 * 256 + 128] == doctest::Approx(c).epsilon(1e-9));
  CHECK(in[126 * 256 + 126] == doctest::Approx(9.0 * c).epsilon(0.02));  // three times as far out
}

TEST_CASE("no charges, no winding") {
  SceneConfig s = small(scenes::hollow_v(5.0));
  s.zeta_final = 1.0;
  const TransverseMap m = render_scene(s);
  CHECK(measure_topological_charge(m, 0.5) == 0);
  const std::vector<double> ph = m.phase();
  const double ref = ph[(m.n / 2) * m.n + m.n / 2];
  REQUIRE_FALSE(std::isnan(ref));
  int masked = 0;
  for (double p : ph) {
    if (std::isnan(p)) {
      ++masked;
      continue;
    }
    REQUIRE(p == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK(masked < m.n * m.n / 2);
}

TEST_CASE("control-A carries the weak charge") {
  SceneConfig s = small(scenes::table_lambda(2));
  s.control = scenes::lg_mode(5.0, 0, Role::control);
  const TransverseMap m = render_scene(s);
  CHECK(measure_topological_charge(m, 0.5) == 2);
  CHECK(measure_topological_charge(m, 0.3) == 2);
}

TEST_CASE("petals") {
  for (int l : {1, 3}) {
    CHECK(petal_count(render_scene(small(scenes::table_v(-l), 256))) == 2 * l);
    CHECK(petal_count(render_scene(small(scenes::table_lambda(l), 256))) == 2 * l);
  }
  // real l = 0 drives leave Im(rho32) identically zero
  SceneConfig flat = small(scenes::hollow_v(5.0));
  CHECK_THROWS_AS(petal_count(render_scene(flat)), DegenerateField);
  // with a phase on the weak input the layer is nonzero but has one sign
  flat.coupling.omega0 = std::polar(0.5, 0.3);
  CHECK(petal_count(render_scene(flat)) == 0);
}

TEST_CASE("hollow classification") {
  CHECK(classify_hollow(render_scene(scenes::hollow_v(10.0))).shape == BeamShape::peaked);
  const HollowVerdict h = classify_hollow(render_scene(scenes::hollow_v(150.0)));
  CHECK(h.shape == BeamShape::hollow);
  CHECK(h.central_ratio < 0.5);

  const HollowVerdict z = classify_hollow(render_scene(small(scenes::hollow_v(0.0))));
  CHECK(z.zero_field);
  CHECK(z.shape == BeamShape::peaked);

  CHECK_THROWS_AS(classify_hollow(render_scene(small(scenes::table_v(1)))), std::invalid_argument);
}

TEST_CASE("ring split for the v scheme") {
  const auto curve = ring_split_curve(scenes::rings_v(5.0), {5.0, 20.0, 50.0});
  REQUIRE(curve.size() == 3);
  CHECK(curve[0].second == 1);
  CHECK(curve[1].second == 2);
  CHECK(curve[2].second == 2);
  CHECK(curve[2].first == 50.0);
}

TEST_CASE("renders are deterministic and thread-count independent") {
  SceneConfig s = small(scenes::table_lambda(1));
  s.control = scenes::lg_mode(cd{3.0, 1.0}, -1, Role::control);
  const TransverseMap a = render_scene(s);
  const TransverseMap b = render_scene(s);
  s.threads = 5;
  const TransverseMap c = render_scene(s);
  CHECK(a.field == b.field);
  CHECK(a.field == c.field);
  CHECK(a.im_coherence == c.im_coherence);
}

TEST_CASE("rotating the inputs rotates the output") {
  // scene B has each input's phase advanced by l pi/2, which is scene A read a quarter turn on
  const double d = M_PI / 2;
  SceneConfig a = small(scenes::oam_pair(Configuration::v, 2, -1));
  SceneConfig b = a;
  b.control.omega0 *= std::polar(1.0, a.control.charge * d);
  b.coupling.omega0 *= std::polar(1.0, a.coupling.charge * d);
  const TransverseMap ma = render_scene(a), mb = render_scene(b);
  const int n = ma.n;
  const double top = ma.max_abs();
  double worst = 0.0;
  // (x, y) -> (-y, x) maps pixel (row i, col j) to (row j, col n - 1 - i)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(mb.at(i, j) - ma.at(j, n - 1 - i)));
  CHECK(worst < 1e-10 * top);
  // and the generated phase moved by (2 - (-1)) pi/2 at a fixed point
  const double shift = std::arg(mb.at(40, 90) / ma.at(40, 90));
  CHECK(std::remainder(shift - 3 * d, 2 * M_PI) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("resonant pixels are reported with coordinates") {
  SceneConfig s = small(scenes::oam_pair(Configuration::lambda_control_b, 0, 0));
  s.control = scenes::plane_wave(std::sqrt(8.0 / 3.0), Role::control);
  try {
    render_scene(s);
    FAIL("expected ResonantDenominator");
  } catch (const ResonantDenominator& e) {
    CHECK(e.row == 0);
    CHECK(e.col == 0);
    CHECK(std::string(e.what()).find("pixel (0, 0)") != std::string::npos);
  }
}

TEST_CASE("scene validation") {
  SceneConfig s = scenes::table_v(1);
  s.grid_n = 64;
  CHECK_THROWS_AS(render_scene(s), ConfigError);
  s = scenes::table_v(1);
  s.zeta_final = 0.0;
  CHECK_THROWS_AS(render_scene(s), ConfigError);
  s = scenes::table_v(1);
  s.control.role = Role::coupling;
  CHECK_THROWS_AS(render_scene(s), ConfigError);
  s = scenes::table_v(1);
  s.coupling.waist = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(render_scene(s), ConfigError);  // plane wave with charge
}

TEST_CASE("too few steps per pixel trips the step check") {
  SceneConfig s = small(scenes::table_v(1));
  s.zeta_final = 300.0;
  s.steps = 10;
  CHECK_THROWS_AS(render_scene(s), StepTooLarge);
}

TEST_CASE("thread resolution") {
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(0) >= 1);
}
