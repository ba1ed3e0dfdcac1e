#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "sal/report.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

sal::EquationSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read spec file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return sal::parse_spec(text.str());
}

sal::JetLimits limits_from_env() {
  sal::JetLimits limits;
  if (const char* v = std::getenv("SAL_MAX_JET_ORDER")) {
    char* end = nullptr;
    const long order = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || order < 1 || order > 64) {
      throw UsageError(std::string("SAL_MAX_JET_ORDER must be an integer in [1, 64], got '") + v + "'");
    }
    limits.max_order = static_cast<int>(order);
  }
  return limits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strict self-adjointness, conservation laws and simulation for u_t + eps*u_txx + f u_x + g u_x u_xx + h u_xxx = 0"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));

  std::string spec_path;
  auto add_spec = [&](CLI::App* sub) { sub->add_option("--spec", spec_path, "Spec file")->required(); };

  auto* classify = app.add_subcommand("classify", "Strict self-adjointness verdict and scaling-symmetry check");
  add_spec(classify);
  auto* adjoint = app.add_subcommand("adjoint", "Adjoint equation and its v = u reduction");
  add_spec(adjoint);

  auto* conserve = app.add_subcommand("conserve", "Conserved vector from a point symmetry");
  add_spec(conserve);
  bool raw = false;
  std::string generator = "scaling";
  conserve->add_flag("--raw", raw, "Skip the trivial-part reduction");
  conserve->add_option("--generator", generator, "Point symmetry")->check(CLI::IsMember({"scaling", "t", "x"}));

  auto* table = app.add_subcommand("table", "Densities and fluxes of the six standard equations");

  auto* simulate = app.add_subcommand("simulate", "Integrate a numeric spec and monitor Q");
  add_spec(simulate);
  sal::SimulationRequest req;
  std::string init = "gaussian";
  std::string scheme = "spectral_u_form";
  std::string out_path;
  std::string profile_path;
  int stride = 1;
  bool no_dealias = false;
  simulate->add_option("--init", init, "Initial data")
      ->check(CLI::IsMember({"gaussian", "smoothed_peakon", "sine", "constant"}));
  simulate->add_option("--L", req.length, "Domain length")->check(CLI::PositiveNumber);
  simulate->add_option("--n", req.n, "Grid size (power of two)");
  simulate->add_option("--dt", req.config.dt, "Time step")->check(CLI::PositiveNumber);
  simulate->add_option("--t-end", req.t_end, "Final time")->check(CLI::NonNegativeNumber);
  simulate->add_option("--scheme", scheme, "Scheme")->check(CLI::IsMember({"spectral_u_form", "upwind_m_form"}));
  simulate->add_option("--out", out_path, "CSV log (t, Q, relative_drift, mass, max|u|)");
  simulate->add_option("--profile", profile_path, "CSV of the final profile (x, u)");
  simulate->add_option("--stride", stride, "Write every stride-th log row")->check(CLI::PositiveNumber);
  simulate->add_option("--amplitude", req.params.amplitude, "Gaussian/sine amplitude, peakon speed, constant value");
  simulate->add_option("--width", req.params.width, "Gaussian width");
  simulate->add_option("--smoothing", req.params.smoothing, "Peakon smoothing");
  simulate->add_option("--wavenumber", req.params.wavenumber, "Sine wavenumber");
  simulate->add_option("--offset", req.params.offset, "Sine offset");
  simulate->add_option("--center", req.params.center, "Bump center (default L/2)");
  simulate->add_option("--momentum-order", req.config.momentum_order, "1 or 2")->check(CLI::IsMember({1, 2}));
  simulate->add_option("--cfl", req.config.cfl, "CFL number of the momentum scheme")->check(CLI::PositiveNumber);
  simulate->add_option("--q-tolerance", req.config.q_tolerance, "Relative drift bound");
  simulate->add_option("--u-floor", req.config.u_floor, "Positivity floor");
  simulate->add_flag("--no-dealias", no_dealias, "Disable truncation of aliased modes");

  auto* oracle = app.add_subcommand("oracle", "Compare the spectral solver with the characteristics solution");
  sal::OracleRequest oreq;
  oracle->add_option("--gamma", oreq.gamma, "gamma");
  oracle->add_option("--b", oreq.b, "b");
  oracle->add_option("--amplitude", oreq.amplitude, "Sine amplitude");
  oracle->add_option("--offset", oreq.offset, "Sine offset");
  oracle->add_option("--L", oreq.length, "Domain length")->check(CLI::PositiveNumber);
  oracle->add_option("--n", oreq.n, "Grid size");
  oracle->add_option("--dt", oreq.dt, "Time step")->check(CLI::PositiveNumber);
  oracle->add_option("--t", oreq.t, "Comparison time")->check(CLI::NonNegativeNumber);
  oracle->add_option("--tolerance", oreq.tolerance, "L-infinity bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const sal::JetLimits limits = limits_from_env();
    const auto fmt = format == "machine" ? sal::ReportFormat::machine : sal::ReportFormat::text;
    sal::Report report;
    if (*classify) {
      report = sal::classify_report(load_spec(spec_path), limits);
    } else if (*adjoint) {
      report = sal::adjoint_report(load_spec(spec_path), limits);
    } else if (*conserve) {
      static const std::map<std::string, sal::GeneratorKind> kinds = {
          {"scaling", sal::GeneratorKind::scaling},
          {"t", sal::GeneratorKind::time_translation},
          {"x", sal::GeneratorKind::space_translation}};
      report = sal::conserve_report(load_spec(spec_path), raw, kinds.at(generator), limits);
    } else if (*table) {
      report = sal::table_report(limits);
    } else if (*simulate) {
      static const std::map<std::string, sal::InitKind> inits = {{"gaussian", sal::InitKind::gaussian},
                                                                 {"smoothed_peakon", sal::InitKind::smoothed_peakon},
                                                                 {"sine", sal::InitKind::sine},
                                                                 {"constant", sal::InitKind::constant}};
      req.init = inits.at(init);
      req.config.scheme = scheme == "upwind_m_form" ? sal::Scheme::upwind_m_form : sal::Scheme::spectral_u_form;
      req.config.dealias = !no_dealias;
      sal::SolverState state;
      report = sal::simulate_report(load_spec(spec_path), req, &state);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write " + out_path);
        sal::write_log_csv(out, state, stride);
      }
      if (!profile_path.empty()) {
        std::ofstream out(profile_path);
        if (!out) throw UsageError("cannot write " + profile_path);
        sal::write_profile_csv(out, state);
      }
    } else if (*oracle) {
      report = sal::oracle_report(oreq);
    }
    std::cout << sal::emit_report(report, fmt);
    return report.exit_status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const sal::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const sal::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
