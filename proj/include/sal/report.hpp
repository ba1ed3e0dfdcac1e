#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sal/solver.hpp"

namespace sal {

using Fields = std::vector<std::pair<std::string, std::string>>;

/// Outcome of one command. Expression-valued fields are printed in the
/// expression grammar; lists are comma-separated (',' is not a grammar token).
struct Report {
  std::string command;
  Fields inputs;
  Fields results;
  int exit_status{0};
};

enum class ReportFormat { text, machine };

/// Machine format is a flat "key: value" document in report order, so it is
/// byte-identical across runs and readable by parse_fields.
std::string emit_report(const Report& report, ReportFormat format);

/// Reads the "key: value" line syntax shared with spec files.
Fields parse_fields(std::string_view text);

/// Splits a comma-separated list field.
std::vector<std::string> split_list(std::string_view value);

/// 17 significant digits.
std::string format_real(double v);

Report classify_report(const EquationSpec& spec, const JetLimits& limits = {});
Report adjoint_report(const EquationSpec& spec, const JetLimits& limits = {});

enum class GeneratorKind { scaling, time_translation, space_translation };
/// Throws UnsupportedSpecError for specs that are not strictly self-adjoint.
Report conserve_report(const EquationSpec& spec, bool raw, GeneratorKind generator = GeneratorKind::scaling,
                       const JetLimits& limits = {});
Report table_report(const JetLimits& limits = {});

struct SimulationRequest {
  InitKind init{InitKind::gaussian};
  InitParams params;
  double length{40};
  int n{512};
  double t_end{1};
  SolverConfig config;
};
Report simulate_report(const EquationSpec& spec, const SimulationRequest& request, SolverState* final_state = nullptr);

struct OracleRequest {
  double gamma{1};
  double b{1};
  double amplitude{1};
  double offset{0};
  double length{6.283185307179586};
  int n{256};
  double dt{1e-3};
  double t{0.5};
  double tolerance{1e-6};
};
/// Runs the spectral solver on u_t + gamma u^b u_x = 0 with sine data and
/// compares against the characteristics solution.
Report oracle_report(const OracleRequest& request);

}  // namespace sal
