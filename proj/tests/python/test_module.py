import math

import pytest

import sal


def fields(text):
    return dict(sal.parse_fields(text))


def test_parse_and_canonical_print():
    e = sal.parse_jet("2*u*u_x + u*u_x")
    assert str(e) == "3*u*u_x"
    assert sal.parse_jet(str(e)) == e


def test_parse_error_is_typed():
    with pytest.raises(sal.ParseError):
        sal.parse_jet("3*")
    assert issubclass(sal.ParseError, sal.Error)


def test_calculus():
    assert sal.total_derivative(sal.parse_jet("u^2"), "x") == sal.parse_jet("2*u*u_x")
    assert sal.variational_derivative(sal.parse_jet("1/2*u_x^2")) == sal.parse_jet("-u_xx")


def test_camassa_holm_is_strictly_self_adjoint():
    v = sal.strict_self_adjointness(sal.camassa_holm())
    assert v.is_ssa
    assert v.lambda_ == "-1"
    assert v.conditions == []


def test_b_equation_only_at_two():
    assert sal.strict_self_adjointness(sal.b_equation(2)).is_ssa
    assert not sal.strict_self_adjointness(sal.b_equation(3)).is_ssa


def test_table_row_is_conserved():
    row = sal.table_row(sal.novikov())
    assert str(row.density) == "u^2 + u_x^2"
    assert str(row.characteristic) == "2*u"


def test_raw_vector_reduces():
    spec = sal.family_spec("eps", "b", "gamma", "beta")
    C = sal.strip_trivial(sal.ibragimov_vector(sal.scaling("b"), spec))
    assert str(C.density) == "u^2 - eps*u_x^2"
    assert str(sal.characteristic_of(C, spec)) == "2*u"


def test_reports_are_machine_readable():
    f = fields(sal.classify_report(sal.camassa_holm()))
    assert f["is_ssa"] == "true"
    assert f["scaling.lambda"] == "2"
    with pytest.raises(sal.UnsupportedSpecError):
        sal.conserve_report(sal.b_equation(3))


def test_camassa_holm_conserves_q():
    grid = sal.Grid(40.0, 256)
    cfg = sal.SolverConfig()
    cfg.dt = 1e-2
    state = sal.initial_data("gaussian", sal.InitParams(), grid, sal.camassa_holm())
    q0 = sal.conserved_quantity(state)
    sal.Integrator(sal.camassa_holm(), grid, cfg).run(state, 0.5)
    assert abs(state.t - 0.5) < 1e-12
    assert abs(sal.conserved_quantity(state) - q0) <= 1e-6 * q0


def test_riemann_oracle_matches_solver():
    grid = sal.Grid(2 * math.pi, 256)
    spec = sal.riemann(1, 1)
    params = sal.InitParams()
    state = sal.initial_data("sine", params, grid, spec)
    cfg = sal.SolverConfig()
    sal.Integrator(spec, grid, cfg).run(state, 0.5)
    exact = sal.riemann_oracle(1.0, 1.0, 1.0, 0.0, grid, 0.5)
    assert max(abs(a - b) for a, b in zip(state.u, exact)) < 1e-6
    assert sal.breaking_time(1.0, 1.0, 1.0, 0.0, grid) == pytest.approx(1.0)


def test_positive_eps_is_rejected():
    spec = sal.family_spec(1, 1, 3, 1)
    grid = sal.Grid(40.0, 64)
    state = sal.initial_data("gaussian", sal.InitParams(), grid, spec)
    with pytest.raises(sal.UnsupportedRegimeError):
        sal.Integrator(spec, grid, sal.SolverConfig()).step(state)
    assert issubclass(sal.UnsupportedRegimeError, sal.UnsupportedSpecError)
