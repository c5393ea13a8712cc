import math

import numpy as np
import pytest

from smallpoly import NewtonFailed, NoInteriorMax
from smallpoly.numerics import maximize_scalar, maximize_simplex, newton_solve
from smallpoly.thin_model import one_variable_area


class TestMaximizeScalar:
    def test_parabola(self):
        res = maximize_scalar(lambda x: -((x - 2.0) ** 2), 0.0, 5.0)
        assert res.x_star == pytest.approx(2.0, abs=1e-12)
        assert res.bracket[0] <= res.x_star <= res.bracket[1]

    def test_sine(self):
        res = maximize_scalar(math.sin, 0.0, math.pi)
        assert res.x_star == pytest.approx(math.pi / 2, abs=1e-12)
        assert res.f_star == pytest.approx(1.0, abs=1e-15)

    def test_one_variable_area_n6(self):
        res = maximize_scalar(
            lambda a: one_variable_area(6, a), math.pi / 10, math.pi / 6 - 1e-3
        )
        assert res.x_star == pytest.approx(0.3509301889, abs=1e-9)

    def test_endpoint_maximum_rejected(self):
        with pytest.raises(NoInteriorMax):
            maximize_scalar(lambda x: x, 0.0, 1.0)

    def test_affine_reparametrization(self):
        # the derivative-noise floor (~eps/h / f'') caps the achievable
        # agreement well above 2*xtol
        res1 = maximize_scalar(lambda x: math.cos(x - 1.2), 0.0, 3.0)
        res2 = maximize_scalar(lambda x: math.cos(2.0 * x - 1.2), 0.0, 1.5)
        assert res2.x_star == pytest.approx(res1.x_star / 2.0, abs=5e-12)


class TestNewtonSolve:
    def test_linear_system(self):
        sol = newton_solve(
            lambda v: (v[0] + v[1] - 1.0, v[0] - v[1]), (0.0, 0.0)
        )
        assert sol == pytest.approx([0.5, 0.5], abs=1e-6)

    def test_nonlinear_system(self):
        sol = newton_solve(
            lambda v: (v[0] ** 2 + v[1] ** 2 - 1.0, v[1] - v[0]), (1.0, 0.5)
        )
        assert sol == pytest.approx([math.sqrt(0.5)] * 2, abs=1e-12)

    def test_mossinghoff_tail_system(self):
        # tail solve drives the printed n=8 area
        from smallpoly.constructions import construct_mn

        assert construct_mn(8).area == pytest.approx(0.7259763468, abs=5e-10)

    def test_singular_jacobian(self):
        with pytest.raises(NewtonFailed):
            newton_solve(lambda v: (v[0] + v[1], v[0] + v[1] - 1.0), (0.0, 0.0))

    def test_iteration_cap(self):
        with pytest.raises(NewtonFailed):
            newton_solve(lambda v: (math.exp(v[0]),), (0.0,), max_iter=10)


class TestMaximizeSimplex:
    def test_quadratic_bowl(self):
        res = maximize_simplex(lambda v: -float(np.sum(v * v)), (1.0, 1.0, 1.0))
        assert res.value == pytest.approx(0.0, abs=1e-10)
        assert np.all(np.abs(res.x) < 1e-5)
        assert res.converged

    def test_deterministic(self):
        f = lambda v: -float((v[0] - 0.3) ** 2 + 2.0 * (v[1] + 0.1) ** 2)
        r1 = maximize_simplex(f, (1.0, 1.0))
        r2 = maximize_simplex(f, (1.0, 1.0))
        assert np.array_equal(r1.x, r2.x)
        assert r1.value == r2.value

    def test_sentinel_objective(self):
        def f(v):
            if v[0] < 0.0:
                return -math.inf
            return -((v[0] - 0.5) ** 2)

        res = maximize_simplex(f, (0.2,))
        assert res.x[0] == pytest.approx(0.5, abs=1e-5)
