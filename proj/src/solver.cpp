#include "sal/solver.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>

namespace sal {

namespace {

constexpr double kPi = std::numbers::pi;

// The FFTW planner is not re-entrant; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double to_double(const ParamExpr& e, const std::string& what) {
  auto r = e.as_rational();
  if (!r) throw UnsupportedSpecError(what + " must be numeric for simulation");
  return r->get_d();
}

/// c * u^e * (ln u)^k, compiled from a numeric UCoeff.
struct PowerTerm {
  double c;
  double e;
  int log_power;
  bool integer_exponent;
};

struct NumericCoeff {
  std::vector<PowerTerm> terms;
  bool needs_floor{false};
  /// Polynomial degree in u, or -1 when not a polynomial.
  int degree{0};

  double operator()(double u) const {
    double s = 0.0;
    for (const auto& t : terms) {
      double v = t.integer_exponent ? std::pow(u, static_cast<int>(t.e)) : std::pow(u, t.e);
      if (t.log_power > 0) v *= std::pow(std::log(u), t.log_power);
      s += t.c * v;
    }
    return s;
  }
};

NumericCoeff compile(const UCoeff& c, const std::string& what) {
  if (c.has_formal()) throw UnsupportedSpecError(what + " is formal; simulation needs concrete coefficients");
  if (c.has_explicit_coordinates()) throw UnsupportedSpecError(what + " depends on t or x explicitly");
  NumericCoeff out;
  for (const auto& [key, coeff] : c.terms()) {
    if (!key.exponent.is_constant()) throw UnsupportedSpecError(what + " has a symbolic exponent");
    const double e = key.exponent.q.get_d();
    const bool integer = key.exponent.q.get_den() == 1;
    out.terms.push_back({to_double(coeff, what), e, key.log_power, integer});
    if (!integer || e < 0 || key.log_power > 0) {
      out.needs_floor = true;
      out.degree = -1;
    } else if (out.degree >= 0) {
      out.degree = std::max(out.degree, static_cast<int>(e));
    }
  }
  return out;
}

struct Buffers {
  int n;
  double* real;
  fftw_complex* spec;
  fftw_plan forward;
  fftw_plan backward;

  explicit Buffers(int n_) : n(n_) {
    std::lock_guard lock(planner_mutex());
    real = fftw_alloc_real(n);
    spec = fftw_alloc_complex(n / 2 + 1);
    forward = fftw_plan_dft_r2c_1d(n, real, spec, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(n, spec, real, FFTW_ESTIMATE);
  }
  ~Buffers() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
    fftw_free(real);
    fftw_free(spec);
  }
  Buffers(const Buffers&) = delete;
  Buffers& operator=(const Buffers&) = delete;
};

using Spectrum = std::vector<std::complex<double>>;

}  // namespace

// ---------------------------------------------------------------- grid

std::vector<double> Grid::nodes() const {
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = j * dx();
  return x;
}

Grid make_grid(double length, int n) {
  if (!(length > 0) || !std::isfinite(length)) throw Error("grid length must be positive");
  if (n < 16 || !is_power_of_two(n)) throw Error("grid size must be a power of two >= 16, got " + std::to_string(n));
  return {length, n};
}

// ---------------------------------------------------------------- integrator

struct Integrator::Impl {
  EquationSpec spec;
  Grid grid;
  SolverConfig config;
  double eps;
  NumericCoeff f, g, h;
  bool needs_floor;
  Buffers fft;
  std::vector<double> k;  // angular wavenumbers per rfft index
  int cutoff;

  // momentum form
  bool momentum_ok{false};
  std::string momentum_reason;
  double beta{0}, b{0};

  Impl(const EquationSpec& s, const Grid& gr, const SolverConfig& c)
      : spec(s),
        grid(gr),
        config(c),
        eps(to_double(s.epsilon, "epsilon")),
        f(compile(s.f, "f")),
        g(compile(s.g, "g")),
        h(compile(s.h, "h")),
        needs_floor(f.needs_floor || g.needs_floor || h.needs_floor),
        fft(gr.n),
        k(gr.n / 2 + 1) {
    if (!(c.dt > 0)) throw Error("dt must be positive");
    for (int j = 0; j <= gr.n / 2; ++j) k[j] = 2 * kPi * j / gr.length;
    cutoff = gr.n / 2;
    if (c.dealias) {
      // a degree-p nonlinearity aliases unless modes above n/(p+1) are dropped
      int p = 2;
      if (f.degree >= 0 && g.degree >= 0 && h.degree >= 0) {
        p = 1;
        if (!f.terms.empty()) p = std::max(p, f.degree + 1);
        if (!g.terms.empty()) p = std::max(p, g.degree + 2);
        if (!h.terms.empty()) p = std::max(p, h.degree + 1);
      }
      cutoff = p <= 1 ? gr.n / 2 : gr.n / (p + 1);
    }
    check_momentum();
  }

  void check_momentum() {
    const auto& pl = spec.power_law;
    if (!(eps == -1.0)) {
      momentum_reason = "momentum form requires eps = -1";
    } else if (!pl || !pl->beta || !pl->beta->as_rational() || !pl->b.as_rational() || !pl->gamma.as_rational()) {
      momentum_reason = "momentum form requires a numeric power-law member with beta";
    } else {
      beta = pl->beta->as_rational()->get_d();
      b = pl->b.as_rational()->get_d();
      const double gamma = pl->gamma.as_rational()->get_d();
      const double c = pl->c ? to_double(*pl->c, "c") : 0.0;
      if (std::abs(gamma - beta * (b + 2)) > 1e-14 * std::max(1.0, std::abs(gamma)) || c != 0.0) {
        momentum_reason = "momentum form requires gamma = (b+2)*beta and c = 0";
      } else {
        momentum_ok = true;
      }
    }
  }

  Spectrum forward(const std::vector<double>& u) {
    std::copy(u.begin(), u.end(), fft.real);
    fftw_execute(fft.forward);
    Spectrum out(grid.n / 2 + 1);
    for (size_t j = 0; j < out.size(); ++j) out[j] = {fft.spec[j][0], fft.spec[j][1]};
    return out;
  }

  std::vector<double> backward(const Spectrum& s) {
    for (size_t j = 0; j < s.size(); ++j) {
      fft.spec[j][0] = s[j].real();
      fft.spec[j][1] = s[j].imag();
    }
    fftw_execute(fft.backward);
    std::vector<double> out(fft.real, fft.real + grid.n);
    for (double& v : out) v /= grid.n;
    return out;
  }

  /// Derivative of given order; the Nyquist mode is zeroed for odd orders.
  Spectrum derivative(const Spectrum& s, int order) const {
    Spectrum out(s.size());
    const std::complex<double> I(0, 1);
    for (size_t j = 0; j < s.size(); ++j) {
      if (order % 2 == 1 && static_cast<int>(j) == grid.n / 2) continue;
      out[j] = s[j] * std::pow(I * k[j], order);
    }
    return out;
  }

  void truncate(Spectrum& s) const {
    for (size_t j = cutoff + 1; j < s.size(); ++j) s[j] = 0;
  }

  void check_floor(const std::vector<double>& u, double t) const {
    if (!needs_floor) return;
    const double lo = *std::min_element(u.begin(), u.end());
    if (lo < config.u_floor) {
      throw FloorViolationError("min u = " + std::to_string(lo) + " fell below the floor " +
                                std::to_string(config.u_floor) + " at t = " + std::to_string(t));
    }
  }

  struct Rhs {
    std::vector<double> value;
    double lambda_max;  // spectral-radius estimate of the linearization
  };

  Rhs rhs(const std::vector<double>& u) {
    Spectrum s = forward(u);
    truncate(s);
    const std::vector<double> uf = backward(s);
    const std::vector<double> ux = backward(derivative(s, 1));
    const std::vector<double> uxx = backward(derivative(s, 2));
    const std::vector<double> uxxx = backward(derivative(s, 3));
    std::vector<double> N(grid.n);
    double F = 0, G = 0, H = 0;
    for (int j = 0; j < grid.n; ++j) {
      const double fv = f(uf[j]);
      const double gv = g.terms.empty() ? 0.0 : g(uf[j]);
      const double hv = h.terms.empty() ? 0.0 : h(uf[j]);
      N[j] = fv * ux[j] + gv * ux[j] * uxx[j] + hv * uxxx[j];
      F = std::max(F, std::abs(fv));
      G = std::max(G, std::abs(gv * ux[j]));
      H = std::max(H, std::abs(hv));
    }
    Spectrum Ns = forward(N);
    truncate(Ns);
    double lambda = 0;
    for (size_t j = 0; j < Ns.size(); ++j) {
      const double kk = k[j];
      const double symbol = 1.0 - eps * kk * kk;
      Ns[j] /= -symbol;
      if (static_cast<int>(j) <= cutoff) lambda = std::max(lambda, (F * kk + G * kk * kk + H * kk * kk * kk) / symbol);
    }
    return {backward(Ns), lambda};
  }

  void rk4(std::vector<double>& u, double dt) {
    const std::size_t n = u.size();
    std::vector<double> tmp(n);
    const Rhs k1 = rhs(u);
    // substep so that dt stays inside the RK4 stability region
    const int sub = std::max(1, static_cast<int>(std::ceil(dt * k1.lambda_max / 2.5)));
    const double hs = dt / sub;
    for (int s = 0; s < sub; ++s) {
      const std::vector<double> a = s == 0 ? k1.value : rhs(u).value;
      for (std::size_t j = 0; j < n; ++j) tmp[j] = u[j] + 0.5 * hs * a[j];
      const std::vector<double> b2 = rhs(tmp).value;
      for (std::size_t j = 0; j < n; ++j) tmp[j] = u[j] + 0.5 * hs * b2[j];
      const std::vector<double> c3 = rhs(tmp).value;
      for (std::size_t j = 0; j < n; ++j) tmp[j] = u[j] + hs * c3[j];
      const std::vector<double> d4 = rhs(tmp).value;
      for (std::size_t j = 0; j < n; ++j) u[j] += hs / 6.0 * (a[j] + 2 * b2[j] + 2 * c3[j] + d4[j]);
    }
  }

  // ---- momentum form

  std::vector<double> helmholtz(const std::vector<double>& v, bool to_momentum) {
    Spectrum s = forward(v);
    for (size_t j = 0; j < s.size(); ++j) {
      const double symbol = 1.0 + k[j] * k[j];
      s[j] = to_momentum ? s[j] * symbol : s[j] / symbol;
    }
    return backward(s);
  }

  std::vector<double> momentum_rhs(const std::vector<double>& m, double& speed) {
    const int n = grid.n;
    const double dx = grid.dx();
    const std::vector<double> u = helmholtz(m, false);
    if (b < 1) check_floor_momentum(u);
    const std::vector<double> ux = backward(derivative(forward(u), 1));
    std::vector<double> a(n);
    speed = 0;
    for (int j = 0; j < n; ++j) {
      a[j] = beta * std::pow(u[j], b);
      speed = std::max(speed, std::abs(a[j]));
    }
    std::vector<double> mb(n), mf(n);
    auto at = [n](const std::vector<double>& v, int j) { return v[(j % n + n) % n]; };
    if (config.momentum_order == 1) {
      for (int j = 0; j < n; ++j) {
        mb[j] = (m[j] - at(m, j - 1)) / dx;
        mf[j] = (at(m, j + 1) - m[j]) / dx;
      }
    } else {
      std::vector<double> mL(n), mR(n);
      for (int j = 0; j < n; ++j) {
        const double dm = m[j] - at(m, j - 1);
        const double dp = at(m, j + 1) - m[j];
        const double r = dm != 0 ? dp / dm : 0.0;
        const double slope = (r + std::abs(r)) / (1 + std::abs(r)) * dm;  // van Leer
        mL[j] = m[j] + 0.5 * slope;
        mR[j] = m[j] - 0.5 * slope;
      }
      for (int j = 0; j < n; ++j) {
        mb[j] = (mL[j] - at(mL, j - 1)) / dx;
        mf[j] = (at(mR, j + 1) - mR[j]) / dx;
      }
    }
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) {
      const double mx = a[j] > 0 ? mb[j] : mf[j];
      const double source = beta * (b + 1) * (b == 1 ? 1.0 : std::pow(u[j], b - 1)) * ux[j] * m[j];
      out[j] = -a[j] * mx - source;
    }
    return out;
  }

  void check_floor_momentum(const std::vector<double>& u) const {
    const double lo = *std::min_element(u.begin(), u.end());
    if (lo < config.u_floor) {
      throw FloorViolationError("u^(b-1) floor violated: min u = " + std::to_string(lo));
    }
  }

  void ssprk3(std::vector<double>& u, double dt) {
    const int n = grid.n;
    std::vector<double> m = helmholtz(u, true);
    double remaining = dt;
    std::vector<double> m1(n), m2(n);
    while (remaining > 0) {
      double speed = 0;
      const std::vector<double> L0 = momentum_rhs(m, speed);
      const double limit = speed > 0 ? config.cfl * grid.dx() / speed : remaining;
      const double hs = std::min(remaining, limit);
      for (int j = 0; j < n; ++j) m1[j] = m[j] + hs * L0[j];
      const std::vector<double> L1 = momentum_rhs(m1, speed);
      for (int j = 0; j < n; ++j) m2[j] = 0.75 * m[j] + 0.25 * (m1[j] + hs * L1[j]);
      const std::vector<double> L2 = momentum_rhs(m2, speed);
      for (int j = 0; j < n; ++j) m[j] = m[j] / 3.0 + 2.0 / 3.0 * (m2[j] + hs * L2[j]);
      remaining -= hs;
      if (remaining < 1e-14 * dt) remaining = 0;
    }
    u = helmholtz(m, false);
  }

  double q(const std::vector<double>& u) {
    const std::vector<double> ux = backward(derivative(forward(u), 1));
    double s = 0;
    for (int j = 0; j < grid.n; ++j) s += u[j] * u[j] - eps * ux[j] * ux[j];
    return s * grid.dx();
  }

  void finish(SolverState& state, std::vector<double> next, double dt) {
    for (double v : next) {
      if (!std::isfinite(v) || std::abs(v) > 1e150) {
        throw BlowUpError("solution blew up after t = " + std::to_string(state.t), state.t);
      }
    }
    state.u = std::move(next);
    state.t += dt;
    record(state, q(state.u));
  }

  void validate(const SolverState& state) const {
    if (state.grid.n != grid.n || state.grid.length != grid.length) throw Error("state grid does not match integrator");
  }

  void advance(SolverState& state, double dt) {
    validate(state);
    if (eps > 0) {
      throw UnsupportedRegimeError("eps > 0 is unsupported: 1 - eps*k^2 vanishes at the resonance k^2 = 1/eps = " +
                                   std::to_string(1 / eps));
    }
    check_floor(state.u, state.t);
    std::vector<double> u = state.u;
    rk4(u, dt);
    finish(state, std::move(u), dt);
    check_floor(state.u, state.t);
  }

  void advance_momentum(SolverState& state, double dt) {
    validate(state);
    if (!momentum_ok) throw UnsupportedRegimeError(momentum_reason);
    if (b < 1) check_floor_momentum(state.u);
    std::vector<double> u = state.u;
    ssprk3(u, dt);
    finish(state, std::move(u), dt);
  }
};

Integrator::Integrator(const EquationSpec& spec, const Grid& grid, const SolverConfig& config)
    : impl_(std::make_unique<Impl>(spec, grid, config)), cutoff_(impl_->cutoff) {}

Integrator::~Integrator() = default;

void Integrator::step(SolverState& state) { impl_->advance(state, impl_->config.dt); }

void Integrator::step_momentum(SolverState& state) { impl_->advance_momentum(state, impl_->config.dt); }

void Integrator::run(SolverState& state, double t_end) {
  const double dt = impl_->config.dt;
  while (state.t < t_end - 1e-12 * std::max(1.0, std::abs(t_end))) {
    const double h = std::min(dt, t_end - state.t);
    if (impl_->config.scheme == Scheme::upwind_m_form) impl_->advance_momentum(state, h);
    else impl_->advance(state, h);
  }
}

double Integrator::conserved_quantity(const std::vector<double>& u) const { return impl_->q(u); }

SolverState step(SolverState state, const SolverConfig& config) {
  if (config.scheme != Scheme::spectral_u_form) throw Error("step requires the spectral u-form scheme");
  Integrator(state.spec, state.grid, config).step(state);
  return state;
}

SolverState step_momentum(SolverState state, const SolverConfig& config) {
  if (config.scheme != Scheme::upwind_m_form) throw Error("step_momentum requires the upwind m-form scheme");
  Integrator(state.spec, state.grid, config).step_momentum(state);
  return state;
}

double conserved_quantity(const SolverState& state) {
  SolverConfig config;
  config.dealias = false;
  EquationSpec probe = state.spec;
  // only epsilon matters for Q
  probe.f = probe.g = probe.h = UCoeff();
  return Integrator(probe, state.grid, config).conserved_quantity(state.u);
}

void record(SolverState& state, double q) {
  double mass = 0;
  double top = 0;
  for (double v : state.u) {
    mass += v;
    top = std::max(top, std::abs(v));
  }
  mass *= state.grid.dx();
  const double q0 = state.q_log.empty() ? q : state.q_log.front().q;
  const double drift = q0 != 0 ? std::abs(q - q0) / std::abs(q0) : std::abs(q - q0);
  state.q_log.push_back({state.t, q, drift, mass, top});
}

// ---------------------------------------------------------------- initial data

SolverState initial_data(InitKind kind, const InitParams& p, const Grid& grid, const EquationSpec& spec,
                         double u_floor) {
  const double L = grid.length;
  const double x0 = p.center < 0 ? L / 2 : p.center;
  std::vector<double> u(grid.n);
  const std::vector<double> x = grid.nodes();
  switch (kind) {
    case InitKind::gaussian:
      if (!(p.width > 0)) throw Error("gaussian width must be positive");
      for (int j = 0; j < grid.n; ++j) u[j] = p.amplitude * std::exp(-std::pow((x[j] - x0) / p.width, 2));
      break;
    case InitKind::smoothed_peakon:
      if (p.smoothing < 0) throw Error("peakon smoothing must be nonnegative");
      for (int j = 0; j < grid.n; ++j) {
        double s = 0;
        for (int image = -3; image <= 3; ++image) {
          const double d = x[j] - x0 + image * L;
          s += std::exp(-std::sqrt(d * d + p.smoothing * p.smoothing));
        }
        u[j] = p.amplitude * s;
      }
      break;
    case InitKind::sine:
      for (int j = 0; j < grid.n; ++j) u[j] = p.amplitude * std::sin(2 * kPi * p.wavenumber * x[j] / L) + p.offset;
      break;
    case InitKind::constant:
      std::fill(u.begin(), u.end(), p.amplitude);
      break;
  }
  bool needs_floor = false;
  for (const UCoeff* c : {&spec.f, &spec.g, &spec.h}) {
    needs_floor = needs_floor || compile(*c, spec.name).needs_floor;
  }
  if (needs_floor && *std::min_element(u.begin(), u.end()) < u_floor) {
    throw FloorViolationError(spec.name + " evaluates negative or fractional powers of u; initial data must stay above " +
                              std::to_string(u_floor));
  }
  SolverState state{grid, std::move(u), 0.0, spec, {}};
  record(state, conserved_quantity(state));
  return state;
}

// ---------------------------------------------------------------- oracle

Profile sine_profile(double amplitude, double wavenumber, double length, double offset) {
  const double w = 2 * kPi * wavenumber / length;
  return {[=](double x) { return amplitude * std::sin(w * x) + offset; },
          [=](double x) { return amplitude * w * std::cos(w * x); }};
}

Profile constant_profile(double k) {
  return {[=](double) { return k; }, [](double) { return 0.0; }};
}

double breaking_time(const Profile& u0, double gamma, double b, const Grid& grid) {
  const int samples = 64 * grid.n;
  double steepest = 0;
  for (int j = 0; j < samples; ++j) {
    const double xi = grid.length * j / samples;
    const double s = -gamma * b * std::pow(u0.value(xi), b - 1) * u0.derivative(xi);
    if (std::isfinite(s)) steepest = std::max(steepest, s);
  }
  return steepest > 0 ? 1.0 / steepest : std::numeric_limits<double>::infinity();
}

std::vector<double> riemann_oracle(const Profile& u0, double gamma, double b, const Grid& grid, double t) {
  const double t_star = breaking_time(u0, gamma, b, grid);
  if (t >= t_star) throw WaveBreakingError("characteristics cross at t* = " + std::to_string(t_star), t_star);
  auto speed = [&](double xi) { return gamma * std::pow(u0.value(xi), b); };
  double cmax = 0;
  for (int j = 0; j < 8 * grid.n; ++j) cmax = std::max(cmax, std::abs(speed(grid.length * j / (8 * grid.n))));
  const double reach = std::abs(t) * cmax * 1.1 + grid.dx();
  std::vector<double> out(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const double x = j * grid.dx();
    double lo = x - reach;
    double hi = x + reach;
    // phi(xi) = xi + c(xi) t - x increases in xi before breaking
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid + speed(mid) * t - x < 0) lo = mid;
      else hi = mid;
    }
    out[j] = u0.value(0.5 * (lo + hi));
  }
  return out;
}

// ---------------------------------------------------------------- output

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_log_csv(std::ostream& out, const SolverState& state, int stride) {
  out << "t,Q,relative_drift,mass,max_abs_u\n";
  const int n = static_cast<int>(state.q_log.size());
  stride = std::max(1, stride);
  for (int i = 0; i < n; ++i) {
    if (i % stride != 0 && i != n - 1) continue;
    const QSample& s = state.q_log[i];
    out << g17(s.t) << ',' << g17(s.q) << ',' << g17(s.relative_drift) << ',' << g17(s.mass) << ','
        << g17(s.max_abs_u) << '\n';
  }
}

void write_profile_csv(std::ostream& out, const SolverState& state) {
  out << "x,u\n";
  for (int j = 0; j < state.grid.n; ++j) out << g17(j * state.grid.dx()) << ',' << g17(state.u[j]) << '\n';
}

// ---------------------------------------------------------------- diagnostics

double total_variation(const std::vector<double>& u) {
  double s = 0;
  const std::size_t n = u.size();
  for (std::size_t j = 0; j < n; ++j) s += std::abs(u[(j + 1) % n] - u[j]);
  return s;
}

double crest_position(const std::vector<double>& u, const Grid& grid) {
  const int n = grid.n;
  const int i = static_cast<int>(std::max_element(u.begin(), u.end()) - u.begin());
  const double ym = u[(i - 1 + n) % n];
  const double y0 = u[i];
  const double yp = u[(i + 1) % n];
  const double curv = ym - 2 * y0 + yp;
  const double delta = curv != 0 ? 0.5 * (ym - yp) / curv : 0.0;
  return (i + delta) * grid.dx();
}

std::vector<double> periodic_shift(const std::vector<double>& u, const Grid& grid, double distance) {
  const int n = grid.n;
  std::vector<double> real(u);
  std::vector<std::complex<double>> spec(n / 2 + 1);
  {
    std::lock_guard lock(planner_mutex());
    fftw_plan p = fftw_plan_dft_r2c_1d(n, real.data(), reinterpret_cast<fftw_complex*>(spec.data()), FFTW_ESTIMATE);
    fftw_execute(p);
    fftw_destroy_plan(p);
  }
  for (int j = 0; j <= n / 2; ++j) {
    const double k = 2 * kPi * j / grid.length;
    spec[j] *= std::polar(1.0, -k * distance);
    if (j == n / 2) spec[j] = spec[j].real();
  }
  {
    std::lock_guard lock(planner_mutex());
    fftw_plan p = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(spec.data()), real.data(), FFTW_ESTIMATE);
    fftw_execute(p);
    fftw_destroy_plan(p);
  }
  for (double& v : real) v /= n;
  return real;
}

}  // namespace sal
