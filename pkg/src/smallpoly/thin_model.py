"""Reduced three-parameter model for symmetric small n-gons.

The half angles are restricted to the pattern (alpha, beta+gamma,
beta-gamma, beta, ..., beta).  The angle-sum constraint fixes beta from
alpha, and the middle-edge closure fixes gamma, so the polygon area
becomes a one-variable function of alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfeasibleAlpha
from .geometry import AngleSequence, Polygon, vertices_from_angles

_RESIDUAL_TOL = 1e-12


@dataclass(frozen=True)
class ThinParams:
    """(n, alpha, beta, gamma) satisfying the angle-sum and closure constraints."""

    n: int
    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        if self.n < 6 or self.n % 2 != 0:
            raise ValueError(f"vertex count must be even and >= 6, got {self.n}")
        if self.alpha <= 0.0 or self.beta <= 0.0:
            raise ValueError("alpha and beta must be positive")
        if abs(self.angle_sum_residual()) > _RESIDUAL_TOL:
            raise ValueError("angle-sum constraint violated")
        if abs(self.closure_residual()) > _RESIDUAL_TOL:
            raise ValueError("closure constraint violated")

    def angle_sum_residual(self) -> float:
        return self.alpha + (self.n / 2 - 1) * self.beta - math.pi / 2

    def closure_residual(self) -> float:
        a, b, g = self.alpha, self.beta, self.gamma
        return math.sin(a + b + g) - math.sin(a) - math.sin(a + 1.5 * b) / (
            2.0 * math.cos(b / 2)
        )

    @property
    def strictly_feasible(self) -> bool:
        """Whether the perturbed angles beta +/- gamma are both positive."""
        return abs(self.gamma) < self.beta


@dataclass(frozen=True)
class TriangleAreas:
    """Fan-triangle areas A_1 .. A_{n/2-1}; twice their sum is the polygon area."""

    values: tuple[float, ...]

    def total_area(self) -> float:
        return 2.0 * math.fsum(self.values)


def beta_from_alpha(n: int, alpha: float) -> float:
    """Uniform tail angle fixed by the angle-sum constraint."""
    return (math.pi / 2 - alpha) / (n / 2 - 1)


def gamma_from_alpha_beta(alpha: float, beta: float) -> float:
    """Perturbation angle closing the middle edge, via the principal arcsin.

    Raises InfeasibleAlpha when no gamma closes the polygon.
    """
    s = math.sin(alpha) + math.sin(alpha + 1.5 * beta) / (2.0 * math.cos(beta / 2))
    if not -1.0 <= s <= 1.0:
        raise InfeasibleAlpha(f"closure target {s:.6f} outside arcsin domain")
    return math.asin(s) - alpha - beta


def params_from_alpha(n: int, alpha: float) -> ThinParams:
    beta = beta_from_alpha(n, alpha)
    gamma = gamma_from_alpha_beta(alpha, beta)
    return ThinParams(n, alpha, beta, gamma)


def angle_sequence(params: ThinParams) -> AngleSequence:
    """Half angles (alpha, beta+gamma, beta-gamma, beta, ..., beta)."""
    m = params.n // 2
    a, b, g = params.alpha, params.beta, params.gamma
    return AngleSequence(params.n, (a, b + g, b - g) + (b,) * (m - 3))


def thin_polygon(params: ThinParams) -> Polygon:
    return vertices_from_angles(angle_sequence(params))


def thin_area(params: ThinParams) -> float:
    """Closed-form polygon area of the reduced model.

    For n = 6 the uniform-tail block is absent and the area reduces to the
    first three terms; the tan(beta/2) group must not be applied there.
    """
    n, a, b, g = params.n, params.alpha, params.beta, params.gamma
    head = math.sin(a) + math.sin(2 * b) - math.sin(b + g)
    if n == 6:
        return head
    tail = (n / 2 - 3) * (math.sin(b) - math.tan(b / 2))
    corr = (math.cos(b - g) - math.cos(2 * b) - 0.5) * math.tan(b / 2)
    return head + tail + corr


def triangle_areas(params: ThinParams) -> TriangleAreas:
    """Individual fan-triangle areas under the reduced parametrization."""
    n, a, b, g = params.n, params.alpha, params.beta, params.gamma
    m = n // 2
    doubled = [math.sin(a), math.sin(2 * b) - math.sin(b + g)]
    half_b = math.sin(b / 2)
    for k in range(3, m):
        osc = 2.0 * math.sin((b + g) / 2) * math.sin((k - 1) * b - g / 2)
        osc -= math.cos((k - 2) * b) / (2.0 * math.cos(b / 2))
        doubled.append(
            math.sin(b) - math.tan(b / 2) + 2.0 * (-1.0) ** (k - 1) * osc * half_b
        )
    return TriangleAreas(tuple(v / 2.0 for v in doubled))


def one_variable_area(n: int, alpha: float) -> float:
    """Area as a function of alpha alone (beta and gamma eliminated)."""
    return thin_area(params_from_alpha(n, alpha))
