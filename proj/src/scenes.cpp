#include "mwvortex/scenes.hpp"

#include <limits>

namespace mwvortex::scenes {

FieldMode plane_wave(double amplitude, Role role) {
  return {cd{amplitude, 0.0}, 0, std::numeric_limits<double>::infinity(), role};
}

FieldMode lg_mode(cd amplitude, int charge, Role role, double waist_mm) {
  return {amplitude, charge, waist_mm, role};
}

namespace {
SceneConfig base(Configuration c, FieldMode control, FieldMode coupling, double zeta) {
  SceneConfig s;
  s.configuration = c;
  s.control = control;
  s.coupling = coupling;
  s.zeta_final = zeta;
  return s;
}
}  // namespace

SceneConfig table_v(int coupling_charge) {
  return base(Configuration::v, plane_wave(5.0, Role::control),
              lg_mode(0.5, coupling_charge, Role::coupling), kTableZeta);
}

SceneConfig table_lambda(int weak_charge) {
  return base(Configuration::lambda_control_a, plane_wave(5.0, Role::control),
              lg_mode(0.5, weak_charge, Role::coupling), kTableZeta);
}

SceneConfig rings_v(double a) {
  return base(Configuration::v, lg_mode(a, 1, Role::control), plane_wave(0.5, Role::coupling), kRingZeta);
}

SceneConfig rings_lambda_a(double a) {
  return base(Configuration::lambda_control_a, lg_mode(a, 1, Role::control), plane_wave(0.5, Role::coupling),
              kRingZeta);
}

SceneConfig hollow_v(double a) {
  return base(Configuration::v, lg_mode(a, 0, Role::control), lg_mode(0.5, 0, Role::coupling), kHollowZeta);
}

SceneConfig oam_pair(Configuration c, int control_charge, int weak_charge) {
  const double strong = c == Configuration::lambda_control_b ? 1.0 : 5.0;
  return base(c, lg_mode(strong, control_charge, Role::control), lg_mode(0.5, weak_charge, Role::coupling),
              kTableZeta);
}

}  // namespace mwvortex::scenes
