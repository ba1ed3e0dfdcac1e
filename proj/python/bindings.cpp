#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sal/adjoint.hpp"
#include "sal/conserved.hpp"
#include "sal/format.hpp"
#include "sal/parser.hpp"
#include "sal/report.hpp"

namespace py = pybind11;
using namespace sal;

namespace {

// Parameters are accepted as anything whose str() parses: 2, "-1", "b + 1".
ParamExpr P(const py::handle& o) { return parse_param(std::string(py::str(o))); }

JetLimits limits_of(int max_order) { return JetLimits{max_order}; }

Axis axis_of(const std::string& s) {
  if (s == "x") return Axis::x;
  if (s == "t") return Axis::t;
  throw py::value_error("axis must be 't' or 'x'");
}

Dep dep_of(const std::string& s) {
  if (s == "u") return Dep::u;
  if (s == "v") return Dep::v;
  throw py::value_error("dependent variable must be 'u' or 'v'");
}

ReportFormat format_of(const std::string& s) {
  if (s == "machine") return ReportFormat::machine;
  if (s == "text") return ReportFormat::text;
  throw py::value_error("format must be 'text' or 'machine'");
}

GeneratorKind generator_of(const std::string& s) {
  if (s == "scaling") return GeneratorKind::scaling;
  if (s == "t") return GeneratorKind::time_translation;
  if (s == "x") return GeneratorKind::space_translation;
  throw py::value_error("generator must be 'scaling', 't' or 'x'");
}

InitKind init_of(const std::string& s) {
  if (s == "gaussian") return InitKind::gaussian;
  if (s == "smoothed_peakon") return InitKind::smoothed_peakon;
  if (s == "sine") return InitKind::sine;
  if (s == "constant") return InitKind::constant;
  throw py::value_error("init must be gaussian, smoothed_peakon, sine or constant");
}

template <class T>
std::string str_opt(const std::optional<T>& v) {
  return v ? to_string(*v) : std::string();
}

std::vector<std::string> condition_strings(const std::vector<Condition>& cs) {
  std::vector<std::string> out;
  for (const Condition& c : cs) out.push_back(to_string(JetExpr::term(c.monomial, c.coefficient)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Self-adjointness, conservation laws and numerics for u_t + eps u_txx + f u_x + g u_x u_xx + h u_xxx = 0";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<OrderOverflowError>(m, "OrderOverflowError", error);
  py::register_exception<AlgebraError>(m, "AlgebraError", error);
  py::register_exception<DegenerateMatchError>(m, "DegenerateMatchError", error);
  auto unsupported = py::register_exception<UnsupportedSpecError>(m, "UnsupportedSpecError", error);
  py::register_exception<UnsupportedRegimeError>(m, "UnsupportedRegimeError", unsupported);
  py::register_exception<NonConservationError>(m, "NonConservationError", error);
  py::register_exception<NotASymmetryError>(m, "NotASymmetryError", error);
  py::register_exception<BlowUpError>(m, "BlowUpError", error);
  py::register_exception<FloorViolationError>(m, "FloorViolationError", error);
  py::register_exception<WaveBreakingError>(m, "WaveBreakingError", error);

  // ------------------------------------------------------------ expressions
  py::class_<ParamExpr>(m, "ParamExpr")
      .def(py::init([](const py::handle& o) { return P(o); }))
      .def("__str__", [](const ParamExpr& p) { return to_string(p); })
      .def("__repr__", [](const ParamExpr& p) { return "ParamExpr('" + to_string(p) + "')"; })
      .def(py::self == py::self);

  py::class_<UCoeff>(m, "UCoeff")
      .def(py::init([](const std::string& s) { return parse_expr(s); }))
      .def("__str__", [](const UCoeff& c) { return to_string(c); })
      .def("__repr__", [](const UCoeff& c) { return "UCoeff('" + to_string(c) + "')"; })
      .def("is_zero", &UCoeff::is_zero)
      .def(py::self == py::self);

  py::class_<JetExpr>(m, "JetExpr")
      .def(py::init([](const std::string& s, int max_order) { return parse_jet(s, limits_of(max_order)); }),
           py::arg("text"), py::arg("max_order") = JetLimits{}.max_order)
      .def("__str__", [](const JetExpr& e) { return to_string(e); })
      .def("__repr__", [](const JetExpr& e) { return "JetExpr('" + to_string(e) + "')"; })
      .def("is_zero", &JetExpr::is_zero)
      .def("max_order", &JetExpr::max_order)
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self);

  m.def("parse_jet", [](const std::string& s, int max_order) { return parse_jet(s, limits_of(max_order)); },
        py::arg("text"), py::arg("max_order") = JetLimits{}.max_order);
  m.def("parse_expr", [](const std::string& s) { return parse_expr(s); });
  m.def("parse_param", [](const std::string& s) { return parse_param(s); });
  m.def(
      "total_derivative",
      [](const JetExpr& e, const std::string& axis, int max_order) {
        return total_derivative(e, axis_of(axis), limits_of(max_order));
      },
      py::arg("expr"), py::arg("axis"), py::arg("max_order") = JetLimits{}.max_order);
  m.def(
      "variational_derivative",
      [](const JetExpr& e, const std::string& dep, int max_order) {
        return variational_derivative(e, dep_of(dep), limits_of(max_order));
      },
      py::arg("expr"), py::arg("dep") = "u", py::arg("max_order") = JetLimits{}.max_order);

  // ------------------------------------------------------------ equations
  py::class_<EquationSpec>(m, "EquationSpec")
      .def_readonly("name", &EquationSpec::name)
      .def_readonly("epsilon", &EquationSpec::epsilon)
      .def_readonly("f", &EquationSpec::f)
      .def_readonly("g", &EquationSpec::g)
      .def_readonly("h", &EquationSpec::h)
      .def_property_readonly("equation", [](const EquationSpec& s) { return equation_expr(s); })
      .def("__str__", [](const EquationSpec& s) { return to_spec_text(s); })
      .def("__repr__", [](const EquationSpec& s) { return "EquationSpec('" + s.name + "')"; });

  m.def("parse_spec", [](const std::string& s) { return parse_spec(s); });
  m.def("camassa_holm", &camassa_holm);
  m.def("novikov", &novikov);
  m.def("bbm", &bbm);
  m.def("formal_spec", &formal_spec);
  m.def("riemann", [](const py::handle& b, const py::handle& gamma) { return riemann(P(b), P(gamma)); },
        py::arg("b"), py::arg("gamma"));
  m.def("b_equation", [](const py::handle& B) { return b_equation(P(B)); });
  m.def("unified_family", [](const py::handle& b) { return unified_family(P(b)); });
  m.def(
      "family_spec",
      [](const py::handle& eps, const py::handle& b, const py::handle& gamma, const py::handle& beta,
         const py::handle& c) { return family_spec(P(eps), P(b), P(gamma), P(beta), P(c)); },
      py::arg("eps"), py::arg("b"), py::arg("gamma"), py::arg("beta"), py::arg("c") = 0);
  m.def("table_specs", &table_specs);

  // ------------------------------------------------------------ symmetry / adjoint
  py::class_<Generator>(m, "Generator")
      .def_readonly("name", &Generator::name)
      .def_readonly("tau", &Generator::tau)
      .def_readonly("xi", &Generator::xi)
      .def_readonly("eta", &Generator::eta);
  m.def("scaling", [](const py::handle& b) { return scaling(P(b)); });
  m.def("time_translation", &time_translation);
  m.def("space_translation", &space_translation);

  m.def("invariance", [](const Generator& X, const EquationSpec& s) {
    const InvarianceResult r = invariance_residual(X, s);
    py::dict d;
    d["is_symmetry"] = r.is_symmetry();
    d["lambda"] = str_opt(r.lambda);
    d["conditions"] = condition_strings(r.conditions);
    return d;
  });

  py::class_<SsaVerdict>(m, "SsaVerdict")
      .def_readonly("is_ssa", &SsaVerdict::is_ssa)
      .def_property_readonly("lambda_", [](const SsaVerdict& v) { return str_opt(v.lambda); })
      .def_property_readonly("c", [](const SsaVerdict& v) { return str_opt(v.c_value); })
      .def_property_readonly("integrated_g", [](const SsaVerdict& v) { return str_opt(v.integrated_g); })
      .def_property_readonly("conditions", [](const SsaVerdict& v) { return condition_strings(v.conditions); });

  m.def("adjoint", [](const EquationSpec& s) { return adjoint(s); });
  m.def("formal_lagrangian", &formal_lagrangian);
  m.def("strict_self_adjointness", [](const EquationSpec& s) { return strict_self_adjointness(s); });

  // ------------------------------------------------------------ conserved currents
  py::class_<ConservedVector>(m, "ConservedVector")
      .def_readonly("density", &ConservedVector::c0)
      .def_readonly("flux", &ConservedVector::c1)
      .def_readonly("local", &ConservedVector::local);
  m.def(
      "ibragimov_vector",
      [](const Generator& X, const EquationSpec& s, bool include_lagrangian) {
        return ibragimov_vector(X, s, IbragimovOptions{include_lagrangian, {}});
      },
      py::arg("generator"), py::arg("spec"), py::arg("include_lagrangian") = true);
  m.def("strip_trivial", [](const ConservedVector& C) { return strip_trivial(C); });
  m.def("characteristic_of", [](const ConservedVector& C, const EquationSpec& s) { return characteristic_of(C, s); });

  py::class_<TableRow>(m, "TableRow")
      .def_readonly("label", &TableRow::label)
      .def_readonly("spec", &TableRow::spec)
      .def_readonly("density", &TableRow::density)
      .def_readonly("flux", &TableRow::flux)
      .def_readonly("characteristic", &TableRow::characteristic);
  m.def("table_row", [](const EquationSpec& s) { return table_row(s); });

  // ------------------------------------------------------------ reports
  m.def("classify_report", [](const EquationSpec& s, const std::string& fmt) {
    return emit_report(classify_report(s), format_of(fmt));
  }, py::arg("spec"), py::arg("format") = "machine");
  m.def("adjoint_report", [](const EquationSpec& s, const std::string& fmt) {
    return emit_report(adjoint_report(s), format_of(fmt));
  }, py::arg("spec"), py::arg("format") = "machine");
  m.def(
      "conserve_report",
      [](const EquationSpec& s, bool raw, const std::string& gen, const std::string& fmt) {
        return emit_report(conserve_report(s, raw, generator_of(gen)), format_of(fmt));
      },
      py::arg("spec"), py::arg("raw") = false, py::arg("generator") = "scaling", py::arg("format") = "machine");
  m.def("table_report", [](const std::string& fmt) { return emit_report(table_report(), format_of(fmt)); },
        py::arg("format") = "machine");
  m.def("parse_fields", [](const std::string& s) { return parse_fields(s); });

  // ------------------------------------------------------------ numerics
  py::enum_<Scheme>(m, "Scheme")
      .value("spectral_u_form", Scheme::spectral_u_form)
      .value("upwind_m_form", Scheme::upwind_m_form);

  py::class_<Grid>(m, "Grid")
      .def(py::init(&make_grid), py::arg("length"), py::arg("n"))
      .def_readonly("length", &Grid::length)
      .def_readonly("n", &Grid::n)
      .def_property_readonly("dx", &Grid::dx)
      .def("nodes", &Grid::nodes);

  py::class_<InitParams>(m, "InitParams")
      .def(py::init<>())
      .def_readwrite("amplitude", &InitParams::amplitude)
      .def_readwrite("width", &InitParams::width)
      .def_readwrite("smoothing", &InitParams::smoothing)
      .def_readwrite("wavenumber", &InitParams::wavenumber)
      .def_readwrite("offset", &InitParams::offset)
      .def_readwrite("center", &InitParams::center);

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("dt", &SolverConfig::dt)
      .def_readwrite("scheme", &SolverConfig::scheme)
      .def_readwrite("dealias", &SolverConfig::dealias)
      .def_readwrite("q_tolerance", &SolverConfig::q_tolerance)
      .def_readwrite("u_floor", &SolverConfig::u_floor)
      .def_readwrite("cfl", &SolverConfig::cfl)
      .def_readwrite("momentum_order", &SolverConfig::momentum_order);

  py::class_<QSample>(m, "QSample")
      .def_readonly("t", &QSample::t)
      .def_readonly("q", &QSample::q)
      .def_readonly("relative_drift", &QSample::relative_drift)
      .def_readonly("mass", &QSample::mass)
      .def_readonly("max_abs_u", &QSample::max_abs_u);

  py::class_<SolverState>(m, "SolverState")
      .def_readonly("grid", &SolverState::grid)
      .def_readwrite("u", &SolverState::u)
      .def_readonly("t", &SolverState::t)
      .def_readonly("spec", &SolverState::spec)
      .def_readonly("q_log", &SolverState::q_log);

  m.def(
      "initial_data",
      [](const std::string& kind, const InitParams& params, const Grid& grid, const EquationSpec& s, double floor) {
        return initial_data(init_of(kind), params, grid, s, floor);
      },
      py::arg("kind"), py::arg("params"), py::arg("grid"), py::arg("spec"), py::arg("u_floor") = 1e-6);

  py::class_<Integrator>(m, "Integrator")
      .def(py::init<const EquationSpec&, const Grid&, const SolverConfig&>(), py::arg("spec"), py::arg("grid"),
           py::arg("config"))
      .def("step", &Integrator::step, py::call_guard<py::gil_scoped_release>())
      .def("step_momentum", &Integrator::step_momentum, py::call_guard<py::gil_scoped_release>())
      .def("run", &Integrator::run, py::arg("state"), py::arg("t_end"), py::call_guard<py::gil_scoped_release>())
      .def("conserved_quantity", &Integrator::conserved_quantity)
      .def_property_readonly("cutoff", &Integrator::cutoff);

  m.def("conserved_quantity", py::overload_cast<const SolverState&>(&conserved_quantity));
  m.def(
      "riemann_oracle",
      [](double gamma, double b, double amplitude, double offset, const Grid& grid, double t) {
        return riemann_oracle(sine_profile(amplitude, 1.0, grid.length, offset), gamma, b, grid, t);
      },
      py::arg("gamma"), py::arg("b"), py::arg("amplitude"), py::arg("offset"), py::arg("grid"), py::arg("t"));
  m.def(
      "breaking_time",
      [](double gamma, double b, double amplitude, double offset, const Grid& grid) {
        return breaking_time(sine_profile(amplitude, 1.0, grid.length, offset), gamma, b, grid);
      },
      py::arg("gamma"), py::arg("b"), py::arg("amplitude"), py::arg("offset"), py::arg("grid"));
  m.def("total_variation", &total_variation);
  m.def("crest_position", &crest_position);
}
