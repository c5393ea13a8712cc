"""Brute-force optimizer over the full symmetric half-angle model.

Treats all but the last two half angles as free variables, closes the
polygon by solving the angle-sum and middle-edge constraints, and ascends
the coordinate-level fan-area objective.  Used to validate that the
one-variable construction is (near-)optimal within the symmetric class.
"""

from __future__ import annotations

import math

import numpy as np

from .constructions import construct_bn
from .errors import NewtonFailed
from .geometry import Polygon, closure_x, fan_double_areas, symmetric_vertices
from .numerics import maximize_simplex, newton_solve
from .thin_model import angle_sequence, params_from_alpha

#: published maximal areas (6 decimals) for the solved even cases
KNOWN_OPTIMA = {
    6: 0.674981,
    8: 0.726868,
    10: 0.749137,
    12: 0.760729,
}

_RESTART_SEED = 987654321


def _solve_tail(n: int, free_angles) -> np.ndarray | None:
    """Close the polygon: solve the last two angles, or None if infeasible."""
    free = [float(a) for a in free_angles]
    if any(a <= 0.0 for a in free):
        return None
    remaining = math.pi / 2 - math.fsum(free)
    if remaining <= 0.0:
        return None
    m = n // 2
    target = 0.5 * (-1.0) ** m

    def system(tail: np.ndarray):
        angles = free + [float(tail[0]), float(tail[1])]
        return (
            math.fsum(angles) - math.pi / 2,
            closure_x(angles) - target,
        )

    try:
        tail = newton_solve(system, (remaining / 2, remaining / 2), tol=1e-13)
    except NewtonFailed:
        return None
    angles = np.array(free + [float(tail[0]), float(tail[1])])
    if np.any(angles <= 0.0) or np.any(angles >= math.pi / 2):
        return None
    return angles


def full_area(n: int, free_angles) -> float:
    """Fan-triangle area of the closed polygon, or -inf if it cannot close.

    The sentinel lets the simplex probe freely outside the feasible set.
    """
    if len(free_angles) != n // 2 - 2:
        raise ValueError(f"expected {n // 2 - 2} free angles")
    angles = _solve_tail(n, free_angles)
    if angles is None:
        return -math.inf
    verts = symmetric_vertices(angles)
    poly = Polygon(n, tuple(map(tuple, verts)))
    return float(np.sum(fan_double_areas(poly)))


def solve_optimal(n: int) -> tuple[np.ndarray, float]:
    """Best symmetric polygon found by simplex ascent with restarts.

    Starts from the one-variable optimum plus eight perturbed restarts with
    a fixed seed; returns (half angles, area) of the best point.
    """
    if n not in KNOWN_OPTIMA:
        raise ValueError(f"oracle runs are limited to n in {sorted(KNOWN_OPTIMA)}")
    m = n // 2
    bn = construct_bn(n)
    seq = angle_sequence(params_from_alpha(n, bn.alpha_star))
    free0 = np.array(seq.angles[: m - 2])

    def objective(free: np.ndarray) -> float:
        return full_area(n, free)

    best_free = free0
    best_area = objective(free0)
    result = maximize_simplex(objective, free0)
    if result.value > best_area:
        best_free, best_area = result.x, result.value
    rng = np.random.default_rng(_RESTART_SEED)
    for _ in range(8):
        start = free0 * (1.0 + 0.02 * rng.standard_normal(free0.size))
        res = maximize_simplex(objective, start)
        if res.value > best_area:
            best_free, best_area = res.x, res.value
    angles = _solve_tail(n, best_free)
    return angles, best_area
