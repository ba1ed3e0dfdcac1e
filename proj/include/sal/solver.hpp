#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "sal/equation.hpp"

namespace sal {

class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& message, double last_valid_t) : Error(message), last_valid_t_(last_valid_t) {}
  double last_valid_t() const { return last_valid_t_; }

 private:
  double last_valid_t_;
};

/// Requested regime the scheme cannot integrate (eps > 0, wrong family).
class UnsupportedRegimeError : public UnsupportedSpecError {
 public:
  using UnsupportedSpecError::UnsupportedSpecError;
};

/// u dropped below the positivity floor where u^(negative) is evaluated.
class FloorViolationError : public Error {
 public:
  using Error::Error;
};

class WaveBreakingError : public Error {
 public:
  WaveBreakingError(const std::string& message, double t_star) : Error(message), t_star_(t_star) {}
  double t_star() const { return t_star_; }

 private:
  double t_star_;
};

/// Periodic grid on [0, L) with n = 2^k >= 16 nodes.
struct Grid {
  double length{0};
  int n{0};
  double dx() const { return length / n; }
  std::vector<double> nodes() const;
};

Grid make_grid(double length, int n);

enum class InitKind { gaussian, smoothed_peakon, sine, constant };

struct InitParams {
  double amplitude = 1.0;  // gaussian a, peakon c, sine a, constant k
  double width = 2.0;      // gaussian w
  double smoothing = 0.1;  // peakon s
  double wavenumber = 1.0; // sine k
  double offset = 0.0;     // sine offset
  double center = -1.0;    // x0; negative means L/2
};

enum class Scheme { spectral_u_form, upwind_m_form };

struct SolverConfig {
  double dt = 1e-3;
  Scheme scheme = Scheme::spectral_u_form;
  bool dealias = true;
  double q_tolerance = 1e-6;
  double u_floor = 1e-6;
  /// Fraction of the stability limit used for internal substeps.
  double cfl = 0.4;
  /// 1: first-order upwind; 2: MUSCL with van Leer limiter.
  int momentum_order = 2;
};

struct QSample {
  double t;
  double q;
  double relative_drift;
  double mass;
  double max_abs_u;
};

struct SolverState {
  Grid grid;
  std::vector<double> u;
  double t{0};
  EquationSpec spec;
  std::vector<QSample> q_log;
};

SolverState initial_data(InitKind kind, const InitParams& params, const Grid& grid, const EquationSpec& spec,
                         double u_floor = 1e-6);

/// Owns the transforms for one grid; not shareable between threads, but
/// independent instances may run concurrently.
class Integrator {
 public:
  Integrator(const EquationSpec& spec, const Grid& grid, const SolverConfig& config);
  ~Integrator();
  Integrator(const Integrator&) = delete;
  Integrator& operator=(const Integrator&) = delete;

  /// One configured dt of classical RK4 on
  /// u_t = -(1 + eps d_xx)^-1 [f u_x + g u_x u_xx + h u_xxx].
  void step(SolverState& state);
  /// One configured dt of SSP-RK3 on the momentum transport form
  /// m_t = -beta u^b m_x - beta (b+1) u^(b-1) u_x m, m = u - u_xx.
  void step_momentum(SolverState& state);
  /// Steps with the configured scheme until t_end (last step shortened).
  void run(SolverState& state, double t_end);

  double conserved_quantity(const std::vector<double>& u) const;
  /// Highest retained mode index under dealiasing.
  int cutoff() const { return cutoff_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int cutoff_;
};

/// Convenience wrappers that build a fresh Integrator per call.
SolverState step(SolverState state, const SolverConfig& config);
SolverState step_momentum(SolverState state, const SolverConfig& config);

/// Q = sum (u^2 - eps u_x^2) dx with spectral u_x.
double conserved_quantity(const SolverState& state);

/// Appends a log entry for the current state.
void record(SolverState& state, double q);

struct Profile {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};
Profile sine_profile(double amplitude, double wavenumber, double length, double offset = 0.0);
Profile constant_profile(double k);

/// Breaking time 1/max(-d/dx[gamma u0^b]); infinity when never breaking.
double breaking_time(const Profile& u0, double gamma, double b, const Grid& grid);

/// Solution of u_t + gamma u^b u_x = 0 by characteristics x = xi + gamma u0(xi)^b t.
std::vector<double> riemann_oracle(const Profile& u0, double gamma, double b, const Grid& grid, double t);

void write_log_csv(std::ostream& out, const SolverState& state, int stride = 1);
void write_profile_csv(std::ostream& out, const SolverState& state);

/// Diagnostics used by the peakon checks.
double total_variation(const std::vector<double>& u);
/// Parabolic-refined position of max u.
double crest_position(const std::vector<double>& u, const Grid& grid);
/// u shifted by a distance along the periodic grid (spectral interpolation).
std::vector<double> periodic_shift(const std::vector<double>& u, const Grid& grid, double distance);

}  // namespace sal
