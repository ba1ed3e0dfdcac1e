#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "sal/parser.hpp"
#include "sal/solver.hpp"

using namespace sal;

namespace {

constexpr double kPi = std::numbers::pi;

double max_drift(const SolverState& s) {
  double m = 0;
  for (const auto& q : s.q_log) m = std::max(m, q.relative_drift);
  return m;
}

double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SolverState gaussian(const EquationSpec& spec, double L = 40, int n = 512) {
  return initial_data(InitKind::gaussian, {}, make_grid(L, n), spec);
}

}  // namespace

TEST(Grid, Sizes) {
  EXPECT_DOUBLE_EQ(make_grid(40, 512).dx(), 0.078125);
  EXPECT_DOUBLE_EQ(make_grid(2 * kPi, 256).dx(), 2 * kPi / 256);
  EXPECT_THROW(make_grid(40, 100), Error);
  EXPECT_THROW(make_grid(40, 8), Error);
  EXPECT_THROW(make_grid(-1, 64), Error);
}

TEST(InitialData, Kinds) {
  const Grid g = make_grid(40, 512);
  InitParams p;
  p.amplitude = 1.5;
  for (double v : initial_data(InitKind::constant, p, g, camassa_holm()).u) EXPECT_EQ(v, 1.5);
  const SolverState s = gaussian(camassa_holm());
  EXPECT_DOUBLE_EQ(s.u[256], 1.0);
  EXPECT_DOUBLE_EQ(*std::max_element(s.u.begin(), s.u.end()), 1.0);
  p.width = -1;
  EXPECT_THROW(initial_data(InitKind::gaussian, p, g, camassa_holm()), Error);
}

TEST(InitialData, FloorForNegativePowers) {
  const EquationSpec s = family_spec(-1, -2, 1, 1);
  const Grid g = make_grid(2 * kPi, 64);
  InitParams p;
  EXPECT_THROW(initial_data(InitKind::sine, p, g, s), FloorViolationError);
  p.amplitude = 0.1;
  p.offset = 1;
  EXPECT_NO_THROW(initial_data(InitKind::sine, p, g, s));
}

TEST(ConservedQuantity, ExactValues) {
  InitParams p;
  SolverState c = initial_data(InitKind::constant, p, make_grid(40, 64), bbm());
  EXPECT_NEAR(conserved_quantity(c), 40, 1e-12);
  SolverState s = initial_data(InitKind::sine, p, make_grid(7, 64), riemann(1, 1));
  EXPECT_NEAR(conserved_quantity(s), 3.5, 1e-12);
  SolverState h = initial_data(InitKind::sine, p, make_grid(2 * kPi, 64), camassa_holm());
  EXPECT_NEAR(conserved_quantity(h), 2 * kPi, 1e-12);
}

TEST(Step, ConstantStateIsStationary) {
  InitParams p;
  p.amplitude = 1.3;
  SolverState s = initial_data(InitKind::constant, p, make_grid(40, 64), novikov());
  const std::vector<double> u0 = s.u;
  SolverConfig c;
  Integrator(novikov(), s.grid, c).run(s, 0.2);
  EXPECT_LE(linf(s.u, u0), 1e-15);
  EXPECT_EQ(max_drift(s), 0.0);
}

TEST(Step, FreeFunctionMatchesIntegrator) {
  SolverState a = gaussian(camassa_holm(), 40, 64);
  SolverState b = a;
  SolverConfig c;
  a = step(a, c);
  Integrator(camassa_holm(), b.grid, c).step(b);
  EXPECT_EQ(a.u, b.u);
  EXPECT_DOUBLE_EQ(a.t, 1e-3);
  EXPECT_EQ(a.q_log.size(), 2U);
}

TEST(Step, CamassaHolmConservesQ) {
  SolverState s = gaussian(camassa_holm());
  Integrator(camassa_holm(), s.grid, {}).run(s, 1.0);
  EXPECT_LE(max_drift(s), 1e-8);
}

TEST(Step, DegasperisProcesiShapeDrifts) {
  SolverState s = gaussian(b_equation(3));
  Integrator(b_equation(3), s.grid, {}).run(s, 1.0);
  EXPECT_GT(max_drift(s), 1e-3);
}

TEST(Step, DealiasCutoffFollowsDegree) {
  const Grid g = make_grid(40, 512);
  EXPECT_EQ(Integrator(camassa_holm(), g, {}).cutoff(), 170);
  EXPECT_EQ(Integrator(novikov(), g, {}).cutoff(), 128);
  SolverConfig off;
  off.dealias = false;
  EXPECT_EQ(Integrator(novikov(), g, off).cutoff(), 256);
}

TEST(Step, TimeErrorIsFourthOrder) {
  auto drift = [](double dt) {
    SolverState s = gaussian(camassa_holm(), 40, 256);
    SolverConfig c;
    c.dt = dt;
    c.dealias = false;
    Integrator(camassa_holm(), s.grid, c).run(s, 2.0);
    return std::abs(s.q_log.back().q - s.q_log.front().q);
  };
  const double ratio = drift(0.1) / drift(0.05);
  EXPECT_GT(ratio, 10);
  EXPECT_LT(ratio, 40);
}

TEST(Step, ShiftEquivariance) {
  const Grid g = make_grid(40, 256);
  SolverState a = gaussian(camassa_holm(), 40, 256);
  InitParams p;
  p.center = 20 + 16 * g.dx();
  SolverState b = initial_data(InitKind::gaussian, p, g, camassa_holm());
  Integrator I(camassa_holm(), g, {});
  I.run(a, 0.5);
  I.run(b, 0.5);
  std::vector<double> shifted(g.n);
  for (int j = 0; j < g.n; ++j) shifted[(j + 16) % g.n] = a.u[j];
  EXPECT_LE(linf(shifted, b.u), 1e-12);
}

TEST(Step, RejectsPositiveEpsilon) {
  const EquationSpec s = family_spec(1, 1, 3, 1);
  SolverState st = gaussian(s, 40, 64);
  Integrator I(s, st.grid, {});
  EXPECT_THROW(I.step(st), UnsupportedRegimeError);
}

TEST(Step, BackwardDiffusionBlowsUp) {
  // u_t = -u_x u_xx is anti-diffusive wherever u_x < 0.
  EquationSpec s;
  s.name = "ill-posed";
  s.epsilon = 0;
  s.g = UCoeff(1);
  InitParams p;
  SolverState st = initial_data(InitKind::sine, p, make_grid(2 * kPi, 64), s);
  SolverConfig c;
  c.dt = 0.01;
  try {
    Integrator(s, st.grid, c).run(st, 20.0);
    FAIL() << "no blow-up";
  } catch (const BlowUpError& e) {
    EXPECT_GT(e.last_valid_t(), 0);
    EXPECT_EQ(e.last_valid_t(), st.t);
  }
}

TEST(Step, FormalSpecsCannotBeSimulated) {
  EXPECT_THROW(Integrator(formal_spec(), make_grid(40, 64), {}), UnsupportedSpecError);
}

TEST(Riemann, MatchesCharacteristicsAtEightTenthsOfBreaking) {
  // gradients reach 5x their initial size, so the grid is finer than for t = 0.5
  const Grid g = make_grid(2 * kPi, 512);
  SolverState s = initial_data(InitKind::sine, {}, g, riemann(1, 1));
  Integrator(riemann(1, 1), g, {}).run(s, 0.8);
  EXPECT_LE(linf(s.u, riemann_oracle(sine_profile(1, 1, 2 * kPi), 1, 1, g, 0.8)), 1e-6);
}

TEST(Riemann, BreakingTime) {
  const Grid g = make_grid(2 * kPi, 256);
  EXPECT_NEAR(breaking_time(sine_profile(1, 1, 2 * kPi), 1, 1, g), 1.0, 1e-9);
  // d/dxi (1 + 0.1 sin)^2 = 0.2 (1 + 0.1 sin) cos, maximized numerically
  double steepest = 0;
  for (int i = 0; i < 200000; ++i) {
    const double xi = 2 * kPi * i / 200000;
    steepest = std::max(steepest, -0.2 * (1 + 0.1 * std::sin(xi)) * std::cos(xi));
  }
  const Profile shifted = sine_profile(0.1, 1, 2 * kPi, 1.0);
  EXPECT_NEAR(breaking_time(shifted, 1, 2, g), 1 / steepest, 1e-6);
  EXPECT_NO_THROW(riemann_oracle(shifted, 1, 2, g, 0.9 / steepest));
  try {
    riemann_oracle(sine_profile(1, 1, 2 * kPi), 1, 1, g, 1.5);
    FAIL();
  } catch (const WaveBreakingError& e) {
    EXPECT_NEAR(e.t_star(), 1.0, 1e-9);
  }
}

TEST(Riemann, ConstantProfile) {
  const Grid g = make_grid(10, 32);
  for (double v : riemann_oracle(constant_profile(0.7), 2, 1, g, 100.0)) EXPECT_DOUBLE_EQ(v, 0.7);
}

TEST(Momentum, ConstantStateAndPreconditions) {
  InitParams p;
  p.amplitude = 0.8;
  SolverConfig c;
  c.scheme = Scheme::upwind_m_form;
  SolverState s = initial_data(InitKind::constant, p, make_grid(40, 64), camassa_holm());
  s = step_momentum(s, c);
  for (double v : s.u) EXPECT_NEAR(v, 0.8, 1e-15);
  SolverState b = initial_data(InitKind::constant, p, make_grid(40, 64), bbm());
  EXPECT_THROW(step_momentum(b, c), UnsupportedRegimeError);
}

TEST(Momentum, AgreesWithSpectralOnSmoothData) {
  const Grid g = make_grid(40, 2048);
  SolverState a = gaussian(camassa_holm(), 40, 2048);
  SolverState b = a;
  Integrator(camassa_holm(), g, {}).run(a, 1.0);
  SolverConfig c;
  c.scheme = Scheme::upwind_m_form;
  c.dt = 0.01;
  Integrator(camassa_holm(), g, c).run(b, 1.0);
  EXPECT_LE(linf(a.u, b.u), 1e-4);
}

TEST(Momentum, FirstOrderIsMoreDiffusive) {
  const Grid g = make_grid(5, 512);
  InitParams p;
  SolverState first = initial_data(InitKind::smoothed_peakon, p, g, camassa_holm());
  SolverState second = first;
  SolverConfig c;
  c.scheme = Scheme::upwind_m_form;
  c.dt = 0.05;
  c.momentum_order = 1;
  Integrator(camassa_holm(), g, c).run(first, 1.0);
  c.momentum_order = 2;
  Integrator(camassa_holm(), g, c).run(second, 1.0);
  const auto peak = [](const SolverState& s) { return *std::max_element(s.u.begin(), s.u.end()); };
  EXPECT_LT(peak(first), peak(second));
}

TEST(Diagnostics, ShiftAndCrest) {
  const Grid g = make_grid(10, 256);
  InitParams p;
  p.center = 4;
  const SolverState s = initial_data(InitKind::gaussian, p, g, camassa_holm());
  EXPECT_NEAR(crest_position(s.u, g), 4.0, 1e-3);
  const std::vector<double> moved = periodic_shift(s.u, g, 1.25);
  EXPECT_NEAR(crest_position(moved, g), 5.25, 1e-3);
  EXPECT_LE(linf(periodic_shift(moved, g, -1.25), s.u), 1e-12);
  const auto [lo, hi] = std::minmax_element(s.u.begin(), s.u.end());
  EXPECT_NEAR(total_variation(s.u), 2 * (*hi - *lo), 1e-12);
}

TEST(Output, CsvFormat) {
  SolverState s = gaussian(camassa_holm(), 40, 64);
  Integrator I(camassa_holm(), s.grid, {});
  for (int i = 0; i < 4; ++i) I.step(s);
  std::ostringstream log;
  write_log_csv(log, s, 2);
  std::istringstream in(log.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,Q,relative_drift,mass,max_abs_u");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3);
  std::ostringstream prof;
  write_profile_csv(prof, s);
  EXPECT_NE(prof.str().find("x,u\n0,"), std::string::npos);
  // 17 significant digits: every logged value survives the text round trip
  std::istringstream again(log.str());
  std::getline(again, line);
  std::getline(again, line);
  const std::string q_text = line.substr(line.find(',') + 1, line.find(',', line.find(',') + 1) - line.find(',') - 1);
  EXPECT_EQ(std::stod(q_text), s.q_log.front().q);
}

TEST(Concurrency, IndependentRunsAgree) {
  auto run = [] {
    SolverState s = gaussian(novikov(), 40, 256);
    Integrator(novikov(), s.grid, {}).run(s, 0.2);
    return s.u;
  };
  const std::vector<double> serial = run();
  std::vector<std::vector<double>> results(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { results[i] = run(); });
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, serial);
}
