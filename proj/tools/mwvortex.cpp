// mwvortex <command> --config <path> [--out <dir>] [--threads N]
//
// exit 0 success, 1 validate found a failing criterion, 2 bad config or arguments,
// 3 physics-domain error from the library.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "config.hpp"
#include "mwvortex/errors.hpp"
#include "mwvortex/oamgate.hpp"
#include "mwvortex/stark.hpp"
#include "mwvortex/transverse.hpp"
#include "mwvortex/validate.hpp"
#include "writers.hpp"

using namespace mwvortex;

namespace cli {
namespace {

constexpr double kUnitMm = 2.0;  // grid length unit handed to the library; results only see ratios

struct Outcome {
  FileSet files;
  int status = 0;
};

Csv header(const RunConfig& c) {
  Csv csv;
  csv.meta("kind", to_string(c.command)).meta("version", MWVORTEX_VERSION).meta("run", c.run);
  if (c.scheme) csv.meta("scheme", mwvortex::to_string(*c.scheme));
  return csv;
}

std::string complex_text(cd v) { return v.imag() == 0.0 ? num(v.real()) : num(v.real()) + " " + num(v.imag()); }

SceneConfig scene_of(const RunConfig& c, int threads) {
  SceneConfig s;
  s.configuration = *c.scheme;
  s.control = to_field_mode(*c.control, Role::control, kUnitMm);
  s.coupling = to_field_mode(*c.weak, Role::coupling, kUnitMm);
  s.zeta_final = c.zeta;
  s.grid_n = c.grid.n;
  s.extent = c.grid.extent;
  s.waist = kUnitMm;
  s.steps = c.grid.steps;
  s.threads = threads;
  s.gamma = c.gamma;
  return s;
}

void add_mode_meta(Csv& csv, const std::string& name, const ModeSpec& m) {
  csv.meta(name + "_charge", std::to_string(m.charge));
  csv.meta(name + "_waist", std::isfinite(m.waist) ? num(m.waist) : "plane");
}

Outcome run_efficiency(const RunConfig& c) {
  Csv csv = header(c);
  std::string strong;
  std::vector<std::string> cols{"zeta"};
  for (double a : c.strong_list) {
    strong += (strong.empty() ? "" : " ") + num(a);
    cols.push_back("eta_strong_" + std::to_string(cols.size()));
  }
  csv.meta("gamma", num(c.gamma)).meta("strong", strong).columns(cols);
  for (double z : c.sweep->values) {
    std::vector<std::string> r{num(z)};
    for (double a : c.strong_list) r.push_back(num(efficiency(*c.scheme, a, c.gamma, z)));
    csv.row(r);
  }
  return {{{c.run + ".csv", csv.str()}}};
}

Outcome run_propagate(const RunConfig& c) {
  MediumParams m;
  m.alpha = c.zeta;
  const PropagationTrace t = integrate(*c.scheme, c.strong, c.weak_input, m, c.steps, {}, c.gamma);
  Csv csv = header(c);
  csv.meta("gamma", num(c.gamma))
      .meta("strong", complex_text(c.strong))
      .meta("weak", complex_text(c.weak_input))
      .meta("zeta", num(c.zeta))
      .meta("steps", std::to_string(c.steps))
      .columns({"zeta", "generated_re", "generated_im", "weak_re", "weak_im", "generated_intensity",
                "closed_form_re", "closed_form_im"});
  const size_t stride = (t.zeta.size() - 1) / static_cast<size_t>(c.samples);
  for (size_t k = 0; k < t.zeta.size(); k += std::max<size_t>(stride, 1)) {
    const cd g = t.omega_generated[k], w = t.omega_coupling[k];
    const cd cf = closed_form(*c.scheme, c.strong, c.weak_input, c.gamma, t.zeta[k]);
    csv.row({num(t.zeta[k]), num(g.real()), num(g.imag()), num(w.real()), num(w.imag()), num(std::norm(g)),
             num(cf.real()), num(cf.imag())});
  }
  return {{{c.run + ".csv", csv.str()}}};
}

template <class F>
std::string metric(F f) {
  try {
    return f();
  } catch (const DegenerateField&) {
    return "undefined";
  } catch (const std::invalid_argument&) {
    return "undefined";
  }
}

Outcome run_map(const RunConfig& c, int threads) {
  const TransverseMap m = render_scene(scene_of(c, threads));
  Outcome out;
  const size_t np = m.field.size();
  Layer inten{m.n, m.intensity(), 0.0, 0.0};
  for (double v : inten.values) inten.hi = std::max(inten.hi, v);
  Layer phase{m.n, m.phase(), -M_PI, M_PI};
  Layer coh{m.n, m.im_coherence, 0.0, 0.0};
  double cmax = 0.0;
  for (double v : coh.values) cmax = std::max(cmax, std::abs(v));
  coh.lo = -cmax;
  coh.hi = cmax;
  if (coh.values.size() != np) coh.values.assign(np, 0.0);

  const std::vector<std::pair<std::string, const Layer*>> layers{
      {"intensity", &inten}, {"phase", &phase}, {"im_coherence", &coh}};
  for (const auto& [name, l] : layers) {
    const std::string range = "range " + num(l->lo) + " " + num(l->hi) + ", top row is +y";
    out.files[c.run + "_" + name + ".pgm"] = pgm16(*l, name + " " + range);
    if (c.images.png) out.files[c.run + "_" + name + ".png"] = png_rgb(*l, c.images.colormap);
  }

  Csv csv = header(c);
  add_mode_meta(csv, "control", *c.control);
  add_mode_meta(csv, "weak", *c.weak);
  csv.meta("control_amplitude", complex_text(c.control->amplitude))
      .meta("weak_amplitude", complex_text(c.weak->amplitude))
      .meta("zeta", num(c.zeta))
      .meta("grid_n", std::to_string(m.n))
      .meta("extent", num(m.extent))
      .columns({"metric", "value"});
  csv.row({"max_intensity", num(inten.hi)});
  csv.row({"max_abs_im_coherence", num(cmax)});
  csv.row({"charge", metric([&] { return std::to_string(measure_topological_charge(m, 0.5)); })});
  csv.row({"petals", metric([&] { return std::to_string(petal_count(m)); })});
  csv.row({"rings", metric([&] { return std::to_string(ring_count(m)); })});
  csv.row({"central_ratio", metric([&] { return num(classify_hollow(m).central_ratio); })});
  out.files[c.run + ".csv"] = csv.str();
  return out;
}

Outcome run_sweep_scene(const RunConfig& c, int threads) {
  const bool rings = c.command == Command::rings;
  RunConfig base = c;
  base.control->amplitude = 0.0;
  SceneConfig s = scene_of(base, threads);
  Csv csv = header(c);
  add_mode_meta(csv, "control", *c.control);
  add_mode_meta(csv, "weak", *c.weak);
  csv.meta("weak_amplitude", complex_text(c.weak->amplitude))
      .meta("zeta", num(c.zeta))
      .meta("grid_n", std::to_string(c.grid.n));
  Csv prof;
  prof.meta("kind", "radial_profile").meta("version", MWVORTEX_VERSION).meta("run", c.run);
  prof.columns({"control_amplitude", "r", "intensity"});
  if (rings)
    csv.columns({"control_amplitude", "rings"});
  else
    csv.columns({"control_amplitude", "shape", "central_ratio", "zero_field"});

  for (double a : c.sweep->values) {
    s.control.omega0 = a;
    const TransverseMap m = render_scene(s);
    if (rings) {
      csv.row({num(a), std::to_string(ring_count(m))});
    } else {
      const HollowVerdict h = classify_hollow(m);
      csv.row({num(a), h.shape == BeamShape::hollow ? "hollow" : "peaked", num(h.central_ratio),
               h.zero_field ? "yes" : "no"});
    }
    for (const RadialBin& b : radial_profile(m, std::max(64, m.n / 2))) prof.row({num(a), num(b.r), num(b.intensity)});
  }
  return {{{c.run + ".csv", csv.str()}, {c.run + "_profiles.csv", prof.str()}}};
}

Outcome run_cnot(const RunConfig& c, int threads) {
  const GateSettings g{c.strong.real(), c.weak_input.real(), c.zeta, c.grid.n, threads};
  const bool v = *c.scheme == Configuration::v;
  const std::vector<TruthRow> rows = v ? truth_table_v(g) : truth_table(g);
  Csv csv = header(c);
  csv.meta("strong", num(g.strong)).meta("weak", num(g.weak)).meta("zeta", num(g.zeta));
  csv.meta("grid_n", std::to_string(g.grid_n));
  csv.columns({"l1", "target_in", "generated_signed", "generated_qubit", "expected", "pass"});
  for (const TruthRow& r : rows)
    csv.row({std::to_string(r.l1), std::to_string(r.target_in), std::to_string(r.l2_signed),
             std::to_string(r.l2_qubit), std::to_string(r.expected), r.pass ? "pass" : "fail"});
  Outcome out{{{c.run + ".csv", csv.str()}}};
  out.status = table_passes(rows) ? 0 : 1;
  return out;
}

Outcome run_stark(const RunConfig& c) {
  Csv csv = header(c);
  csv.columns({"epsilon_v_per_cm", "multiple", "wavelength_m", "frequency_hz", "outside_field_band"});
  for (double e : c.sweep->values)
    for (int k : c.multiples)
      csv.row({num(e), std::to_string(k), num(stark::transition_wavelength(e, k)),
               num(stark::transition_frequency(e, k)), stark::outside_field_band(e) ? "yes" : "no"});
  Csv ex;
  ex.meta("kind", "stark_examples").meta("version", MWVORTEX_VERSION).meta("run", c.run);
  ex.columns({"configuration", "epsilon_v_per_cm", "multiple", "computed_m", "quoted_m", "relative_gap", "flagged",
              "note"});
  for (const stark::WavelengthCheck& w : stark::check_examples())
    ex.row({w.configuration, num(w.epsilon_v_per_cm), std::to_string(w.multiple), num(w.computed_m),
            num(w.quoted_m), num(w.relative_gap), w.flagged ? "yes" : "no", w.note});
  return {{{c.run + ".csv", csv.str()}, {c.run + "_examples.csv", ex.str()}}};
}

Outcome run_validate(const RunConfig& c, int threads) {
  ValidateOptions o;
  o.threads = threads;
  o.grid_n = c.grid.n;
  o.seed = static_cast<std::uint64_t>(c.seed);
  const ValidateReport r = run_validation(o);
  for (const CriterionResult& k : r.criteria) std::printf("%s\n", format_line(k).c_str());
  Outcome out{{{c.run + "_report.csv", report_csv(r)},
               {c.run + "_errata.txt", errata_text(r)},
               {c.run + "_discrepancy.txt", discrepancy_text(r)},
               {c.run + "_stark.txt", r.notes.stark}}};
  out.status = r.all_pass() ? 0 : 1;
  return out;
}

int threads_from(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("MWVORTEX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024)
      throw ConfigError("MWVORTEX_THREADS must be an integer in [1, 1024], got '" + std::string(env) + "'");
    return static_cast<int>(v);
  }
  return resolve_threads(0);
}

}  // namespace
}  // namespace cli

int main(int argc, char** argv) {
  using namespace cli;
  CLI::App app{"Difference-frequency generation of vortex microwave fields in three-level atoms"};
  app.set_version_flag("--version", MWVORTEX_VERSION);
  std::string command, config_path, out_dir = ".";
  int threads_flag = 0;
  app.add_option("command", command, "one of: efficiency propagate map rings hollow cnot stark validate")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_dir, "output directory (created if missing)");
  app.add_option("--threads", threads_flag, "worker threads; falls back to MWVORTEX_THREADS")
      ->check(CLI::Range(1, 1024));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const Command cmd = *parse_command(command);
  try {
    const int threads = threads_from(threads_flag);
    const RunConfig cfg = load_config(config_path, cmd);
    ensure_writable_dir(out_dir);

    Outcome out;
    switch (cmd) {
      case Command::efficiency: out = run_efficiency(cfg); break;
      case Command::propagate: out = run_propagate(cfg); break;
      case Command::map: out = run_map(cfg, threads); break;
      case Command::rings:
      case Command::hollow: out = run_sweep_scene(cfg, threads); break;
      case Command::cnot: out = run_cnot(cfg, threads); break;
      case Command::stark: out = run_stark(cfg); break;
      case Command::validate: out = run_validate(cfg, threads); break;
    }

    json manifest{{"tool", "mwvortex"},
                  {"version", MWVORTEX_VERSION},
                  {"command", command},
                  {"config", cfg.resolved},
                  {"threads", threads},
                  {"status", out.status},
                  {"timestamp", utc_timestamp()}};
    json files = json::array();
    for (const auto& kv : out.files) files.push_back(kv.first);
    manifest["files"] = files;
    out.files[cfg.run + "_manifest.json"] = manifest.dump(2) + "\n";
    write_files(out_dir, out.files);
    return out.status;
  } catch (const ConfigError& e) {
    std::cerr << "mwvortex: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mwvortex: " << command << ": rejected input: " << e.what() << "\n";
    return 2;
  } catch (const mwvortex::Error& e) {
    std::cerr << "mwvortex: " << command << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "mwvortex: " << command << ": " << e.what() << "\n";
    return 1;
  }
}
