#pragma once
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mwvortex/beams.hpp"
#include "mwvortex/propagation.hpp"

namespace cli {

using json = nlohmann::json;
using mwvortex::cd;

enum class Command { efficiency, propagate, map, rings, hollow, cnot, stark, validate };
const std::vector<std::string>& command_names();
std::optional<Command> parse_command(const std::string& s);
std::string to_string(Command c);

// Config input mode; waist is in units of the reference waist w, or +inf for "plane".
struct ModeSpec {
  cd amplitude{0.0, 0.0};
  int charge = 0;
  double waist = 1.0;
};

struct Sweep {
  std::string parameter;
  std::vector<double> values;
};

struct GridSpec {
  int n = 256;
  double extent = 3.0;  // half-width, units of w
  int steps = 1000;     // RK4 steps per pixel
};

struct ImageSpec {
  bool png = false;
  std::string colormap = "heat";
};

struct RunConfig {
  Command command = Command::validate;
  std::string run;
  std::optional<mwvortex::Configuration> scheme;
  double gamma = 1.0;
  double zeta = 1.0;
  int steps = 1000;     // propagate: RK4 steps over [0, zeta]
  int samples = 200;    // propagate: rows written
  std::vector<double> strong_list;  // efficiency: one column per strong amplitude
  cd strong{0.0, 0.0}, weak_input{0.0, 0.0};  // propagate, cnot
  std::optional<ModeSpec> control, weak;
  std::optional<Sweep> sweep;
  GridSpec grid;
  ImageSpec images;
  std::vector<int> multiples;  // stark
  int seed = 0;                // reserved, not used by the physics
  json resolved;               // full config with defaults filled in, for the manifest
};

// Parses a config document for the given command. Every key must be consumed;
// anything else is a ConfigError carrying the field path.
RunConfig parse_config(const json& doc, Command command);
RunConfig load_config(const std::string& path, Command command);

mwvortex::FieldMode to_field_mode(const ModeSpec& m, mwvortex::Role role, double unit_mm);

}  // namespace cli
