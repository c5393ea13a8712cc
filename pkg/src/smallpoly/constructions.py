"""Named small-polygon families and their areas.

Families: the regular n-gon, the regular (n-1)-gon with an added apex
vertex, Mossinghoff's polygon and its one-variable variant, and the
polygon maximizing the one-variable reduced-model area.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .constants import A_COEF, t_coefficient
from .errors import InfeasibleAlpha, MaximizerFailed, NewtonFailed, NoInteriorMax
from .geometry import AngleSequence, Polygon, closure_x, shoelace_area, vertices_from_angles
from .numerics import maximize_scalar, newton_solve
from .thin_model import (
    ThinParams,
    one_variable_area,
    params_from_alpha,
    thin_polygon,
)

#: sample count used to pre-bracket the one-variable maximum
_BRACKET_SAMPLES = 64


class Family(str, enum.Enum):
    REGULAR = "regular"
    REGULAR_PLUS = "regular-plus"
    MOSSINGHOFF = "mossinghoff"
    MOSSINGHOFF_PRIME = "mossinghoff-prime"
    BN = "bn"


@dataclass(frozen=True)
class ConstructionResult:
    family: Family
    n: int
    polygon: Polygon
    area: float
    alpha: float | None = None
    beta: float | None = None
    gamma: float | None = None
    alpha_star: float | None = None
    residuals: dict = field(default_factory=dict)
    iterations: int = 0


def area_regular(n: int) -> float:
    """Closed-form area of the regular small n-gon (any n >= 3)."""
    if n < 3:
        raise ValueError("need n >= 3")
    if n % 2 == 1:
        return n / 2 * math.sin(math.pi / n) - n / 2 * math.tan(math.pi / (2 * n))
    return n / 8 * math.sin(2 * math.pi / n)


def area_regular_plus(n: int) -> float:
    """Area of the regular (n-1)-gon with an apex added along a mediatrix."""
    _require_even(n)
    return (
        area_regular(n - 1)
        + math.sin(math.pi / (2 * n - 2))
        - 0.5 * math.sin(math.pi / (n - 1))
    )


def upper_bound(n: int) -> float:
    """Even-n upper bound on the maximal small-polygon area."""
    _require_even(n)
    return n / 2 * math.sin(math.pi / n) - (n - 1) / 2 * math.tan(
        math.pi / (2 * n - 2)
    )


def _require_even(n: int, minimum: int = 6):
    if n < minimum or n % 2 != 0:
        raise ValueError(f"need even n >= {minimum}, got {n}")


def regular_polygon(n: int) -> Polygon:
    """Regular small n-gon (even n) in the interleaved symmetric labeling."""
    if n < 4 or n % 2 != 0:
        raise ValueError(f"need even n >= 4, got {n}")
    m = n // 2
    radius = 0.5
    phi = -math.pi / 2 + 2 * math.pi * np.arange(1, m) / n
    x = radius * np.cos(phi)
    y = 0.5 + radius * np.sin(phi)
    verts = np.zeros((n, 2))
    verts[1:m, 0] = x
    verts[1:m, 1] = y
    verts[n - 1] = (0.0, 1.0)
    mirror = n - 1 - np.arange(1, m)
    verts[mirror, 0] = -x
    verts[mirror, 1] = y
    return Polygon(n, tuple(map(tuple, verts)))


def regular_plus_params(n: int) -> ThinParams:
    """The augmented regular polygon is the reduced model at gamma = 0."""
    _require_even(n)
    return ThinParams(n, math.pi / (2 * n - 2), math.pi / (n - 1), 0.0)


@lru_cache(maxsize=None)
def construct_bn(n: int) -> ConstructionResult:
    """Maximize the one-variable area over the search interval.

    The maximum is pre-bracketed by equispaced sampling (unimodality is not
    assumed), then refined by the scalar maximizer.
    """
    _require_even(n)
    lo = math.pi / (2 * n - 2)
    hi = math.pi / n

    def objective(alpha: float) -> float:
        try:
            return one_variable_area(n, alpha)
        except InfeasibleAlpha:
            return -math.inf

    alphas = np.linspace(lo, hi, _BRACKET_SAMPLES)
    values = np.array([objective(a) for a in alphas])
    best = int(np.argmax(values))
    if best in (0, _BRACKET_SAMPLES - 1):
        raise MaximizerFailed("bracketing: no interior maximum among samples")
    try:
        res = maximize_scalar(
            objective, float(alphas[best - 1]), float(alphas[best + 1]), xtol=1e-14
        )
    except NoInteriorMax as exc:
        raise MaximizerFailed(f"scalar maximizer: {exc}") from exc
    params = params_from_alpha(n, res.x_star)
    h = 1e-6 * max(1.0, res.x_star)
    slope = (objective(res.x_star + h) - objective(res.x_star - h)) / (2.0 * h)
    return ConstructionResult(
        family=Family.BN,
        n=n,
        polygon=thin_polygon(params),
        area=res.f_star,
        alpha=params.alpha,
        beta=params.beta,
        gamma=params.gamma,
        alpha_star=res.x_star,
        residuals={
            "derivative": abs(slope),
            "angle_sum": abs(params.angle_sum_residual()),
            "closure": abs(params.closure_residual()),
        },
        iterations=res.iterations,
    )


def _mossinghoff_series(n: int) -> tuple[float, float, float]:
    a = A_COEF
    t = t_coefficient(n)
    alpha = a * math.pi / n + t * math.pi / n**2
    beta = math.pi / n + 2.0 * (1.0 - a) * math.pi / n**2
    gamma = (2.0 * a - 1.0) * math.pi / (4.0 * n) + (a + t - 1.0) * math.pi / (
        2.0 * n**2
    )
    return alpha, beta, gamma


@lru_cache(maxsize=None)
def construct_mn(n: int) -> ConstructionResult:
    """Mossinghoff's polygon: printed angle series plus a solved tail.

    The last two half angles are not pinned to beta; they are solved so the
    angle sum and the middle-edge closure hold exactly.
    """
    _require_even(n)
    m = n // 2
    alpha, beta, gamma = _mossinghoff_series(n)
    head = [alpha, beta + gamma, beta - gamma] + [beta] * (m - 3)
    head = head[: m - 2]
    target = 0.5 * (-1.0) ** m

    def system(tail: np.ndarray):
        angles = head + [float(tail[0]), float(tail[1])]
        return (
            math.fsum(angles) - math.pi / 2,
            closure_x(angles) - target,
        )

    try:
        tail = newton_solve(system, (beta, beta), tol=1e-14, max_iter=50)
    except NewtonFailed as exc:
        raise NewtonFailed(f"tail-angle solve for n={n}: {exc}") from exc
    seq = AngleSequence(n, tuple(head) + (float(tail[0]), float(tail[1])))
    poly = vertices_from_angles(seq)
    residual = system(tail)
    return ConstructionResult(
        family=Family.MOSSINGHOFF,
        n=n,
        polygon=poly,
        area=shoelace_area(poly),
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        residuals={"angle_sum": abs(residual[0]), "closure": abs(residual[1])},
    )


@lru_cache(maxsize=None)
def construct_mn_prime(n: int) -> ConstructionResult:
    """One-variable variant: the Mossinghoff opening angle in the reduced model."""
    _require_even(n, minimum=8)
    alpha, _, _ = _mossinghoff_series(n)
    params = params_from_alpha(n, alpha)
    return ConstructionResult(
        family=Family.MOSSINGHOFF_PRIME,
        n=n,
        polygon=thin_polygon(params),
        area=one_variable_area(n, alpha),
        alpha=params.alpha,
        beta=params.beta,
        gamma=params.gamma,
        residuals={
            "angle_sum": abs(params.angle_sum_residual()),
            "closure": abs(params.closure_residual()),
        },
    )


def construct(family: Family, n: int) -> ConstructionResult:
    """Build any family member, polygon included."""
    family = Family(family)
    if family is Family.BN:
        return construct_bn(n)
    if family is Family.MOSSINGHOFF:
        return construct_mn(n)
    if family is Family.MOSSINGHOFF_PRIME:
        return construct_mn_prime(n)
    if family is Family.REGULAR_PLUS:
        params = regular_plus_params(n)
        return ConstructionResult(
            family=family,
            n=n,
            polygon=thin_polygon(params),
            area=area_regular_plus(n),
            alpha=params.alpha,
            beta=params.beta,
            gamma=params.gamma,
        )
    return ConstructionResult(
        family=family,
        n=n,
        polygon=regular_polygon(n),
        area=area_regular(n),
    )
