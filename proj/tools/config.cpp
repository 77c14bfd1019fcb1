#include "config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "mwvortex/errors.hpp"
#include "mwvortex/validate.hpp"

namespace cli {

using mwvortex::ConfigError;
using mwvortex::Configuration;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"efficiency", "propagate", "map",  "rings",
                                              "hollow",     "cnot",      "stark", "validate"};
  return names;
}

std::optional<Command> parse_command(const std::string& s) {
  const auto& n = command_names();
  for (size_t k = 0; k < n.size(); ++k)
    if (n[k] == s) return static_cast<Command>(k);
  return std::nullopt;
}

std::string to_string(Command c) { return command_names()[static_cast<size_t>(c)]; }

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config field '" + path + "': " + what);
}

// A JSON object read key by key. finish() rejects whatever was not asked for.
class Obj {
 public:
  Obj(const json& j, std::string path) : j_(j), path_(std::move(path)), out_(json::object()) {
    if (!j_.is_object()) fail(path_.empty() ? "(root)" : path_, "expected an object");
  }

  bool has(const std::string& k) const { return j_.contains(k); }
  std::string path(const std::string& k) const { return join(path_, k); }

  const json& need(const std::string& k) {
    if (!j_.contains(k)) fail(path(k), "missing");
    used_.insert(k);
    return j_.at(k);
  }

  double number(const std::string& k, std::optional<double> def = std::nullopt) {
    double v;
    if (!has(k)) {
      if (!def) fail(path(k), "missing");
      v = *def;
    } else {
      const json& x = need(k);
      if (!x.is_number()) fail(path(k), "expected a number");
      v = x.get<double>();
      if (!std::isfinite(v)) fail(path(k), "must be finite");
    }
    out_[k] = v;
    return v;
  }

  int integer(const std::string& k, std::optional<int> def = std::nullopt) {
    int v;
    if (!has(k)) {
      if (!def) fail(path(k), "missing");
      v = *def;
    } else {
      const json& x = need(k);
      if (!x.is_number_integer()) fail(path(k), "expected an integer");
      v = x.get<int>();
    }
    out_[k] = v;
    return v;
  }

  std::string text(const std::string& k, std::optional<std::string> def = std::nullopt) {
    std::string v;
    if (!has(k)) {
      if (!def) fail(path(k), "missing");
      v = *def;
    } else {
      const json& x = need(k);
      if (!x.is_string()) fail(path(k), "expected a string");
      v = x.get<std::string>();
    }
    out_[k] = v;
    return v;
  }

  bool flag(const std::string& k, bool def) {
    bool v = def;
    if (has(k)) {
      const json& x = need(k);
      if (!x.is_boolean()) fail(path(k), "expected true or false");
      v = x.get<bool>();
    }
    out_[k] = v;
    return v;
  }

  // a real number or [re, im]
  cd amplitude(const std::string& k, std::optional<cd> def = std::nullopt) {
    cd v;
    if (!has(k)) {
      if (!def) fail(path(k), "missing");
      v = *def;
    } else {
      const json& x = need(k);
      if (x.is_number()) {
        v = x.get<double>();
      } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
        v = {x[0].get<double>(), x[1].get<double>()};
      } else {
        fail(path(k), "expected a number or [re, im]");
      }
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) fail(path(k), "must be finite");
    }
    out_[k] = v.imag() == 0.0 ? json(v.real()) : json::array({v.real(), v.imag()});
    return v;
  }

  std::vector<double> numbers(const std::string& k) {
    const json& x = need(k);
    if (!x.is_array() || x.empty()) fail(path(k), "expected a nonempty array of numbers");
    std::vector<double> v;
    for (const json& e : x) {
      if (!e.is_number()) fail(path(k), "expected a nonempty array of numbers");
      v.push_back(e.get<double>());
      if (!std::isfinite(v.back())) fail(path(k), "values must be finite");
    }
    out_[k] = v;
    return v;
  }

  void put(const std::string& k, json v) { out_[k] = std::move(v); }

  json finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!used_.count(it.key())) fail(path(it.key()), "unknown key");
    return out_;
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
  json out_;
};

Configuration scheme_from(Obj& o, std::optional<std::string> def = std::nullopt) {
  const std::string s = o.text("scheme", def);
  if (s == "v") return Configuration::v;
  if (s == "lambda_control_a") return Configuration::lambda_control_a;
  if (s == "lambda_control_b") return Configuration::lambda_control_b;
  fail(o.path("scheme"), "expected v, lambda_control_a or lambda_control_b, got '" + s + "'");
}

ModeSpec mode_from(Obj& parent, const std::string& key, bool with_amplitude) {
  Obj o(parent.need(key), parent.path(key));
  ModeSpec m;
  if (with_amplitude) m.amplitude = o.amplitude("amplitude");
  m.charge = o.integer("charge", 0);
  const json& w = o.need("waist");
  if (w.is_string() && w.get<std::string>() == "plane") {
    m.waist = std::numeric_limits<double>::infinity();
    o.put("waist", "plane");
  } else if (w.is_number() && w.get<double>() > 0.0 && std::isfinite(w.get<double>())) {
    m.waist = w.get<double>();
    o.put("waist", m.waist);
  } else {
    fail(o.path("waist"), "expected a positive number (units of w) or \"plane\"");
  }
  if (std::abs(m.charge) > mwvortex::kMaxCharge) fail(o.path("charge"), "|charge| must be <= 16");
  if (!std::isfinite(m.waist) && m.charge != 0) fail(o.path("charge"), "a plane wave carries no charge");
  parent.put(key, o.finish());
  return m;
}

Sweep sweep_from(Obj& parent, const std::string& parameter) {
  Obj o(parent.need("sweep"), "sweep");
  Sweep s;
  s.parameter = o.text("parameter");
  if (s.parameter != parameter) fail(o.path("parameter"), "this command sweeps '" + parameter + "'");
  if (o.has("values")) {
    if (o.has("start") || o.has("stop") || o.has("count"))
      fail("sweep", "give either values or start/stop/count, not both");
    s.values = o.numbers("values");
  } else {
    const double a = o.number("start"), b = o.number("stop");
    const int n = o.integer("count");
    if (n < 1) fail(o.path("count"), "must be >= 1");
    for (int k = 0; k < n; ++k) s.values.push_back(n == 1 ? a : a + (b - a) * k / (n - 1));
  }
  parent.put("sweep", o.finish());
  return s;
}

GridSpec grid_from(Obj& parent, bool full) {
  GridSpec g;
  if (!parent.has("grid")) {
    json d{{"n", g.n}};
    if (full) d["extent"] = g.extent, d["steps"] = g.steps;
    parent.put("grid", d);
    return g;
  }
  Obj o(parent.need("grid"), "grid");
  g.n = o.integer("n", g.n);
  if (g.n < 128 || g.n > 4096) fail(o.path("n"), "must lie in [128, 4096]");
  if (full) {
    g.extent = o.number("extent", g.extent);
    if (!(g.extent > 0.0)) fail(o.path("extent"), "must be > 0");
    g.steps = o.integer("steps", g.steps);
    if (g.steps < 1) fail(o.path("steps"), "must be >= 1");
  }
  parent.put("grid", o.finish());
  return g;
}

ImageSpec images_from(Obj& parent) {
  ImageSpec im;
  if (!parent.has("images")) {
    parent.put("images", json{{"png", im.png}, {"colormap", im.colormap}});
    return im;
  }
  Obj o(parent.need("images"), "images");
  im.png = o.flag("png", im.png);
  im.colormap = o.text("colormap", im.colormap);
  if (im.colormap != "heat" && im.colormap != "gray") fail(o.path("colormap"), "expected heat or gray");
  parent.put("images", o.finish());
  return im;
}

double positive(Obj& o, const std::string& k, std::optional<double> def = std::nullopt) {
  const double v = o.number(k, def);
  if (!(v > 0.0)) fail(o.path(k), "must be > 0");
  return v;
}

}  // namespace

RunConfig parse_config(const json& doc, Command command) {
  Obj o(doc, "");
  RunConfig c;
  c.command = command;
  if (o.has("command") && o.text("command") != to_string(command))
    fail("command", "file is for '" + doc.at("command").get<std::string>() + "', not '" + to_string(command) + "'");
  o.put("command", to_string(command));
  c.run = o.text("run", to_string(command));
  if (c.run.empty() || c.run.find_first_of("/\\") != std::string::npos)
    fail("run", "must be a nonempty file-name stem");
  // validate draws its random strong fields from this seed; elsewhere it is reserved
  c.seed = o.integer("seed", command == Command::validate ? static_cast<int>(mwvortex::ValidateOptions{}.seed) : 0);
  if (c.seed < 0) fail("seed", "must be >= 0");

  switch (command) {
    case Command::efficiency: {
      c.scheme = scheme_from(o);
      c.gamma = positive(o, "gamma", 1.0);
      c.strong_list = o.numbers("strong");
      c.sweep = sweep_from(o, "zeta");
      for (double z : c.sweep->values)
        if (z < 0.0) fail("sweep", "zeta values must be >= 0");
      break;
    }
    case Command::propagate: {
      c.scheme = scheme_from(o);
      c.gamma = positive(o, "gamma", 1.0);
      c.strong = o.amplitude("strong");
      c.weak_input = o.amplitude("weak");
      c.zeta = positive(o, "zeta");
      c.steps = o.integer("steps", 1000);
      if (c.steps < 1000) fail("steps", "must be >= 1000");
      c.samples = o.integer("samples", 200);
      if (c.samples < 1 || c.steps % c.samples != 0) fail("samples", "must be >= 1 and divide steps");
      break;
    }
    case Command::map: {
      c.scheme = scheme_from(o);
      c.gamma = positive(o, "gamma", 1.0);
      c.control = mode_from(o, "control", true);
      c.weak = mode_from(o, "weak", true);
      c.zeta = positive(o, "zeta", 1.0);
      c.grid = grid_from(o, true);
      c.images = images_from(o);
      break;
    }
    case Command::rings:
    case Command::hollow: {
      c.scheme = scheme_from(o);
      c.gamma = positive(o, "gamma", 1.0);
      c.control = mode_from(o, "control", false);
      c.weak = mode_from(o, "weak", true);
      c.zeta = positive(o, "zeta", 1.0);
      c.grid = grid_from(o, true);
      c.sweep = sweep_from(o, "control_amplitude");
      for (double a : c.sweep->values)
        if (a < 0.0) fail("sweep", "amplitudes must be >= 0");
      break;
    }
    case Command::cnot: {
      c.scheme = scheme_from(o, std::string("lambda_control_a"));
      if (*c.scheme == Configuration::lambda_control_b) fail("scheme", "the gate runs on v or lambda_control_a");
      const bool v = *c.scheme == Configuration::v;
      c.strong = o.amplitude("strong", cd{v ? 5.0 : 0.5, 0.0});
      c.weak_input = o.amplitude("weak", cd{0.5, 0.0});
      if (c.strong.imag() != 0.0 || c.weak_input.imag() != 0.0) fail("strong", "gate amplitudes are real");
      c.zeta = positive(o, "zeta", 1.0);
      c.grid = grid_from(o, false);
      break;
    }
    case Command::stark: {
      c.sweep = sweep_from(o, "epsilon_v_per_cm");
      for (double e : c.sweep->values)
        if (!(e > 0.0)) fail("sweep", "field strengths must be > 0");
      if (o.has("multiples")) {
        const std::vector<double> m = o.numbers("multiples");
        for (double k : m) {
          if (k < 1 || k != std::floor(k)) fail("multiples", "expected positive integers");
          c.multiples.push_back(static_cast<int>(k));
        }
        o.put("multiples", c.multiples);
      } else {
        c.multiples = {2, 6};
        o.put("multiples", c.multiples);
      }
      break;
    }
    case Command::validate: {
      c.grid = grid_from(o, false);
      break;
    }
  }
  c.resolved = o.finish();
  return c;
}

RunConfig load_config(const std::string& path, Command command) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc, command);
}

mwvortex::FieldMode to_field_mode(const ModeSpec& m, mwvortex::Role role, double unit_mm) {
  mwvortex::FieldMode f;
  f.omega0 = m.amplitude;
  f.charge = m.charge;
  f.waist = std::isfinite(m.waist) ? m.waist * unit_mm : std::numeric_limits<double>::infinity();
  f.role = role;
  return f;
}

}  // namespace cli
