#include "sal/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sal/adjoint.hpp"
#include "sal/conserved.hpp"
#include "sal/format.hpp"

namespace sal {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string conditions_field(const std::vector<Condition>& conditions) {
  std::string out;
  for (const auto& c : conditions) {
    if (!out.empty()) out += ", ";
    out += to_string(JetExpr::term(c.monomial, c.coefficient));
  }
  return out;
}

/// Shortest-denominator rational within rounding of v.
Rational nearest_rational(double v) {
  for (long d = 1; d <= 1000000; ++d) {
    const double num = std::round(v * d);
    if (std::abs(v * d - num) <= 1e-12 * d * std::max(1.0, std::abs(v))) return Rational(static_cast<long>(num), d);
  }
  return Rational(v);
}

const char* boolean(bool v) { return v ? "true" : "false"; }

void add_spec(Fields& f, const EquationSpec& spec) {
  f.emplace_back("spec.name", spec.name);
  f.emplace_back("spec.epsilon", to_string(spec.epsilon));
  f.emplace_back("spec.f", to_string(spec.f));
  f.emplace_back("spec.g", to_string(spec.g));
  f.emplace_back("spec.h", to_string(spec.h));
}

Generator pick(GeneratorKind kind, const EquationSpec& spec) {
  switch (kind) {
    case GeneratorKind::time_translation: return time_translation();
    case GeneratorKind::space_translation: return space_translation();
    case GeneratorKind::scaling: break;
  }
  if (!spec.power_law) throw UnsupportedSpecError(spec.name + " has no power-law scaling generator");
  Generator X = scaling(spec.power_law->b);
  X.name = "X_" + to_string(spec.power_law->b);
  return X;
}

const char* init_name(InitKind k) {
  switch (k) {
    case InitKind::gaussian: return "gaussian";
    case InitKind::smoothed_peakon: return "smoothed_peakon";
    case InitKind::sine: return "sine";
    case InitKind::constant: return "constant";
  }
  return "";
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string emit_report(const Report& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::machine) {
    out << "command: " << report.command << '\n';
    for (const auto& [k, v] : report.inputs) out << k << ": " << v << '\n';
    for (const auto& [k, v] : report.results) out << k << ": " << v << '\n';
    out << "exit_status: " << report.exit_status << '\n';
    return out.str();
  }
  std::size_t width = 0;
  for (const auto* fields : {&report.inputs, &report.results}) {
    for (const auto& [k, v] : *fields) width = std::max(width, k.size());
  }
  auto block = [&](const char* title, const Fields& fields) {
    if (fields.empty()) return;
    out << title << '\n';
    for (const auto& [k, v] : fields) {
      out << "  " << k << std::string(width - k.size() + 2, ' ') << (v.empty() ? "(none)" : v) << '\n';
    }
  };
  out << report.command << '\n';
  block("inputs", report.inputs);
  block("results", report.results);
  return out.str();
}

Fields parse_fields(std::string_view text) {
  Fields out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", SourceSpan{0, 0, line_no, 1});
    out.emplace_back(trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
  }
  return out;
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    const std::size_t comma = value.find(',', pos);
    const std::string item = trim(value.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Report classify_report(const EquationSpec& spec, const JetLimits& limits) {
  Report r{"classify", {}, {}, 0};
  add_spec(r.inputs, spec);
  const SsaVerdict v = strict_self_adjointness(spec, limits);
  r.results.emplace_back("is_ssa", boolean(v.is_ssa));
  r.results.emplace_back("lambda", v.lambda ? to_string(*v.lambda) : "");
  r.results.emplace_back("c", v.c_value ? to_string(*v.c_value) : "");
  r.results.emplace_back("conditions", conditions_field(v.conditions));
  if (v.integrated_g) r.results.emplace_back("integrated_g", to_string(*v.integrated_g));

  const ParamExpr b = spec.power_law ? spec.power_law->b : ParamExpr::param(Param::b);
  Generator X = scaling(b);
  X.name = "X_" + to_string(b);
  const InvarianceResult inv = invariance_residual(X, spec, limits);
  r.results.emplace_back("scaling.generator", X.name);
  r.results.emplace_back("scaling.admitted", boolean(inv.is_symmetry()));
  r.results.emplace_back("scaling.lambda", inv.lambda ? to_string(*inv.lambda) : "");
  r.results.emplace_back("scaling.conditions", conditions_field(inv.conditions));
  return r;
}

Report adjoint_report(const EquationSpec& spec, const JetLimits& limits) {
  Report r{"adjoint", {}, {}, 0};
  add_spec(r.inputs, spec);
  const JetExpr adj = adjoint(spec, limits);
  r.results.emplace_back("equation", to_string(equation_expr(spec)));
  r.results.emplace_back("adjoint", to_string(adj));
  r.results.emplace_back("adjoint_at_v_eq_u", to_string(substitute_dependent(adj)));
  const SsaVerdict v = strict_self_adjointness(spec, limits);
  r.results.emplace_back("lambda", v.lambda ? to_string(*v.lambda) : "");
  r.results.emplace_back("conditions", conditions_field(v.conditions));
  return r;
}

Report conserve_report(const EquationSpec& spec, bool raw, GeneratorKind generator, const JetLimits& limits) {
  Report r{raw ? "conserve --raw" : "conserve", {}, {}, 0};
  add_spec(r.inputs, spec);
  if (!strict_self_adjointness(spec, limits).is_ssa) {
    throw UnsupportedSpecError(spec.name + " is not strictly self-adjoint; the conserved vector stays nonlocal");
  }
  const Generator X = pick(generator, spec);
  r.inputs.emplace_back("generator", X.name);
  IbragimovOptions options;
  options.limits = limits;
  ConservedVector C = ibragimov_vector(X, spec, options);
  if (!raw) C = strip_trivial(C, limits);
  r.results.emplace_back("density", to_string(C.c0));
  r.results.emplace_back("flux", to_string(C.c1));
  r.results.emplace_back("characteristic", to_string(characteristic_of(C, spec, limits)));
  return r;
}

Report table_report(const JetLimits& limits) {
  Report r{"table", {}, {}, 0};
  for (const EquationSpec& spec : table_specs()) {
    const TableRow row = table_row(spec, limits);
    r.results.emplace_back(row.label + ".density", to_string(row.density));
    r.results.emplace_back(row.label + ".flux", to_string(row.flux));
    r.results.emplace_back(row.label + ".characteristic", to_string(row.characteristic));
  }
  return r;
}

Report simulate_report(const EquationSpec& spec, const SimulationRequest& req, SolverState* final_state) {
  Report r{"simulate", {}, {}, 0};
  add_spec(r.inputs, spec);
  r.inputs.emplace_back("init", init_name(req.init));
  r.inputs.emplace_back("L", format_real(req.length));
  r.inputs.emplace_back("n", std::to_string(req.n));
  r.inputs.emplace_back("dt", format_real(req.config.dt));
  r.inputs.emplace_back("t_end", format_real(req.t_end));
  r.inputs.emplace_back("scheme", req.config.scheme == Scheme::upwind_m_form ? "upwind_m_form" : "spectral_u_form");

  const Grid grid = make_grid(req.length, req.n);
  SolverState state = initial_data(req.init, req.params, grid, spec, req.config.u_floor);
  Integrator(spec, grid, req.config).run(state, req.t_end);
  double worst = 0;
  for (const auto& s : state.q_log) worst = std::max(worst, s.relative_drift);
  const QSample& last = state.q_log.back();
  r.results.emplace_back("steps", std::to_string(state.q_log.size() - 1));
  r.results.emplace_back("t", format_real(state.t));
  r.results.emplace_back("Q_initial", format_real(state.q_log.front().q));
  r.results.emplace_back("Q_final", format_real(last.q));
  r.results.emplace_back("relative_drift", format_real(last.relative_drift));
  r.results.emplace_back("max_relative_drift", format_real(worst));
  r.results.emplace_back("within_tolerance", boolean(worst <= req.config.q_tolerance));
  if (final_state) *final_state = std::move(state);
  return r;
}

Report oracle_report(const OracleRequest& req) {
  Report r{"oracle", {}, {}, 0};
  const EquationSpec riemann_spec = riemann(nearest_rational(req.b), nearest_rational(req.gamma));
  add_spec(r.inputs, riemann_spec);
  r.inputs.emplace_back("amplitude", format_real(req.amplitude));
  r.inputs.emplace_back("offset", format_real(req.offset));
  r.inputs.emplace_back("L", format_real(req.length));
  r.inputs.emplace_back("n", std::to_string(req.n));
  r.inputs.emplace_back("dt", format_real(req.dt));
  r.inputs.emplace_back("t", format_real(req.t));

  const Grid grid = make_grid(req.length, req.n);
  const Profile u0 = sine_profile(req.amplitude, 1, req.length, req.offset);
  const std::vector<double> exact = riemann_oracle(u0, req.gamma, req.b, grid, req.t);

  InitParams p;
  p.amplitude = req.amplitude;
  p.offset = req.offset;
  SolverConfig config;
  config.dt = req.dt;
  SolverState state = initial_data(InitKind::sine, p, grid, riemann_spec, config.u_floor);
  Integrator(riemann_spec, grid, config).run(state, req.t);
  double err = 0;
  for (int j = 0; j < grid.n; ++j) err = std::max(err, std::abs(state.u[j] - exact[j]));
  r.results.emplace_back("t_star", format_real(breaking_time(u0, req.gamma, req.b, grid)));
  r.results.emplace_back("linf_error", format_real(err));
  r.results.emplace_back("within_tolerance", boolean(err <= req.tolerance));
  return r;
}

}  // namespace sal
