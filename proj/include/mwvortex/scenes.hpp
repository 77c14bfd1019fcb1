#pragma once

#include "mwvortex/transverse.hpp"

// Scene presets behind the tables and figures. A Rabi frequency written without
// the 0 subscript in a caption is taken as a plane wave.
namespace mwvortex::scenes {

inline constexpr double kTableZeta = 1.0;
// Ring figures are taken at Z = L with alpha = 1, like the tables.
inline constexpr double kRingZeta = 1.0;
// Hollow-beam figure. With a Gaussian weak input the V-type peaked-to-hollow
// change at W01 = 150 happens between roughly zeta = 3.6 and 4.9.
inline constexpr double kHollowZeta = 4.0;

FieldMode plane_wave(double amplitude, Role role);
FieldMode lg_mode(cd amplitude, int charge, Role role, double waist_mm = 2.0);

// Plane-wave control 5, LG coupling 0.5 carrying `coupling_charge`.
SceneConfig table_v(int coupling_charge);
// Plane-wave control W3 = 5, LG weak W1 = 0.5 carrying `weak_charge`.
SceneConfig table_lambda(int weak_charge);
// LG l = 1 control, plane-wave weak input 0.5.
SceneConfig rings_v(double control_amplitude);
// LG l = 1 control, plane-wave weak input 0.5.
SceneConfig rings_lambda_a(double control_amplitude);
// Gaussian control and Gaussian weak input 0.5. A plane-wave weak input never
// gives a peaked profile at W01 = 10 (central ratio 0.41 at zeta = 1).
SceneConfig hollow_v(double control_amplitude);
// Both inputs LG at zeta = 1; control 5 except control-B, which uses 1 to stay
// below the 8g^2 = 3|W1|^2 resonance.
SceneConfig oam_pair(Configuration c, int control_charge, int weak_charge);

}  // namespace mwvortex::scenes
