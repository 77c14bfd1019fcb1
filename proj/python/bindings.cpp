#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mwvortex/atoms.hpp"
#include "mwvortex/errors.hpp"
#include "mwvortex/oamgate.hpp"
#include "mwvortex/scenes.hpp"
#include "mwvortex/stark.hpp"
#include "mwvortex/transverse.hpp"
#include "mwvortex/validate.hpp"

namespace py = pybind11;
using namespace mwvortex;

namespace {

template <class T>
py::array_t<T> square(const std::vector<T>& v, int n) {
  py::array_t<T> a({n, n});
  std::copy(v.begin(), v.end(), a.mutable_data());
  return a;
}

}  // namespace

PYBIND11_MODULE(_mwvortex, m) {
  m.attr("__version__") = MWVORTEX_VERSION;

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<DegenerateField>(m, "DegenerateField", base.ptr());
  py::register_exception<StepTooLarge>(m, "StepTooLarge", base.ptr());
  py::register_exception<SingularSystem>(m, "SingularSystem", base.ptr());
  py::register_exception<ResonantDenominator>(m, "ResonantDenominator", base.ptr());
  py::register_exception<UnphysicalState>(m, "UnphysicalState", base.ptr());

  py::enum_<Configuration>(m, "Configuration")
      .value("v", Configuration::v)
      .value("lambda_control_a", Configuration::lambda_control_a)
      .value("lambda_control_b", Configuration::lambda_control_b);
  py::enum_<Role>(m, "Role").value("control", Role::control).value("coupling", Role::coupling);
  py::enum_<Convention>(m, "Convention")
      .value("as_printed", Convention::as_printed)
      .value("hamiltonian", Convention::hamiltonian);
  py::enum_<BeamShape>(m, "BeamShape").value("peaked", BeamShape::peaked).value("hollow", BeamShape::hollow);

  py::class_<FieldMode>(m, "FieldMode")
      .def(py::init([](cd omega0, int charge, double waist, Role role) {
             FieldMode f{omega0, charge, waist, role};
             f.check();
             return f;
           }),
           py::arg("omega0"), py::arg("charge") = 0, py::arg("waist") = 2.0, py::arg("role") = Role::control)
      .def_readwrite("omega0", &FieldMode::omega0)
      .def_readwrite("charge", &FieldMode::charge)
      .def_readwrite("waist", &FieldMode::waist)
      .def_readwrite("role", &FieldMode::role)
      .def_property_readonly("plane_wave", &FieldMode::plane_wave);

  m.def("lg_amplitude", [](const FieldMode& f, double r, double phi) { return lg_amplitude(f, {r, phi}); },
        py::arg("mode"), py::arg("r"), py::arg("phi"));

  py::class_<LevelScheme>(m, "LevelScheme")
      .def_static("v_default", &LevelScheme::v_default, py::arg("convention") = Convention::as_printed)
      .def_static("lambda_default", &LevelScheme::lambda_default, py::arg("convention") = Convention::as_printed)
      .def_readwrite("g12", &LevelScheme::g12)
      .def_readwrite("g13", &LevelScheme::g13)
      .def_readwrite("g32", &LevelScheme::g32)
      .def_readwrite("convention", &LevelScheme::convention);

  m.def(
      "steady_state",
      [](const LevelScheme& s, cd o1, cd o2, cd o3) { return Eigen::Matrix3cd(steady_state(s, {o1, o2, o3}).rho); },
      py::arg("scheme"), py::arg("o1"), py::arg("o2"), py::arg("o3"));

  m.def("efficiency", &efficiency, py::arg("configuration"), py::arg("strong"), py::arg("gamma"), py::arg("zeta"));
  m.def("closed_form", &closed_form, py::arg("configuration"), py::arg("strong"), py::arg("weak0"),
        py::arg("gamma"), py::arg("zeta"));
  m.def(
      "integrate",
      [](Configuration c, cd strong, cd weak0, double zeta, int steps, double gamma) {
        MediumParams med;
        med.alpha = zeta;
        const PropagationTrace t = integrate(c, strong, weak0, med, steps, {}, gamma);
        return py::make_tuple(py::array_t<double>(t.zeta.size(), t.zeta.data()),
                              py::array_t<cd>(t.omega_generated.size(), t.omega_generated.data()),
                              py::array_t<cd>(t.omega_coupling.size(), t.omega_coupling.data()));
      },
      py::arg("configuration"), py::arg("strong"), py::arg("weak0"), py::arg("zeta"), py::arg("steps") = 1000,
      py::arg("gamma") = 1.0, "Returns (zeta, generated, weak) arrays.");

  py::class_<SceneConfig>(m, "SceneConfig")
      .def(py::init<>())
      .def_readwrite("configuration", &SceneConfig::configuration)
      .def_readwrite("control", &SceneConfig::control)
      .def_readwrite("coupling", &SceneConfig::coupling)
      .def_readwrite("zeta_final", &SceneConfig::zeta_final)
      .def_readwrite("grid_n", &SceneConfig::grid_n)
      .def_readwrite("extent", &SceneConfig::extent)
      .def_readwrite("waist", &SceneConfig::waist)
      .def_readwrite("steps", &SceneConfig::steps)
      .def_readwrite("threads", &SceneConfig::threads)
      .def_readwrite("gamma", &SceneConfig::gamma);

  py::class_<TransverseMap>(m, "TransverseMap")
      .def_readonly("n", &TransverseMap::n)
      .def_readonly("extent", &TransverseMap::extent)
      .def_property_readonly("field", [](const TransverseMap& t) { return square(t.field, t.n); })
      .def_property_readonly("im_coherence",
                             [](const TransverseMap& t) -> py::object {
                               if (t.im_coherence.empty()) return py::none();
                               return square(t.im_coherence, t.n);
                             })
      .def_property_readonly("intensity", [](const TransverseMap& t) { return square(t.intensity(), t.n); });

  m.def("render_scene", &render_scene, py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def("measure_topological_charge", &measure_topological_charge, py::arg("map"), py::arg("radius_fraction") = 0.5);
  m.def("petal_count", &petal_count, py::arg("map"));
  m.def("ring_count", &ring_count, py::arg("map"));
  m.def(
      "classify_hollow",
      [](const TransverseMap& t) {
        const HollowVerdict h = classify_hollow(t);
        return py::make_tuple(h.shape, h.central_ratio, h.zero_field);
      },
      py::arg("map"), "Returns (shape, central_ratio, zero_field).");

  py::module_ sc = m.def_submodule("scenes", "preset scenes");
  sc.def("table_v", &scenes::table_v, py::arg("coupling_charge"));
  sc.def("table_lambda", &scenes::table_lambda, py::arg("weak_charge"));
  sc.def("rings_v", &scenes::rings_v, py::arg("control_amplitude"));
  sc.def("rings_lambda_a", &scenes::rings_lambda_a, py::arg("control_amplitude"));
  sc.def("hollow_v", &scenes::hollow_v, py::arg("control_amplitude"));
  sc.def("oam_pair", &scenes::oam_pair, py::arg("configuration"), py::arg("control_charge"), py::arg("weak_charge"));

  py::class_<GateSettings>(m, "GateSettings")
      .def(py::init<>())
      .def_readwrite("strong", &GateSettings::strong)
      .def_readwrite("weak", &GateSettings::weak)
      .def_readwrite("zeta", &GateSettings::zeta)
      .def_readwrite("grid_n", &GateSettings::grid_n)
      .def_readwrite("threads", &GateSettings::threads);
  m.def(
      "cnot_apply",
      [](int l1, int l3, const GateSettings& g) {
        CnotResult r;
        {
          py::gil_scoped_release nogil;
          r = cnot_apply(l1, l3, g);
        }
        return py::make_tuple(r.l1, r.l2_signed, r.l2_qubit);
      },
      py::arg("l1"), py::arg("target"), py::arg("settings") = GateSettings{},
      "Returns (l1, generated signed charge, generated qubit).");

  py::module_ st = m.def_submodule("stark", "linear Stark splitting in hydrogen");
  st.def("stark_unit", &stark::stark_unit, py::arg("epsilon_v_per_cm"));
  st.def("transition_wavelength", &stark::transition_wavelength, py::arg("epsilon_v_per_cm"), py::arg("multiple"));
  st.def("transition_frequency", &stark::transition_frequency, py::arg("epsilon_v_per_cm"), py::arg("multiple"));

  m.def(
      "validate",
      [](int threads, int grid_n) {
        ValidateOptions o;
        o.threads = threads;
        o.grid_n = grid_n;
        const ValidateReport r = run_validation(o);
        py::list out;
        for (const CriterionResult& c : r.criteria) out.append(py::make_tuple(c.id, c.name, c.pass, c.metrics));
        return out;
      },
      py::arg("threads") = 1, py::arg("grid_n") = 256, "Runs every acceptance criterion; returns (id, name, pass, metrics).");
}
