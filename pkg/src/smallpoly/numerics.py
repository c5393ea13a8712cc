"""Numerical kernels: scalar maximization, Newton systems, simplex ascent.

All kernels are deterministic: the simplex restarts draw from a fixed seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import NewtonFailed, NoInteriorMax

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_SIMPLEX_SEED = 20210612


@dataclass(frozen=True)
class ScalarOptResult:
    x_star: float
    f_star: float
    iterations: int
    bracket: tuple[float, float]


@dataclass(frozen=True)
class SimplexResult:
    x: np.ndarray
    value: float
    converged: bool


def maximize_scalar(
    objective: Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float = 1e-14,
) -> ScalarOptResult:
    """Locate the interior maximum of a smooth unimodal objective on [lo, hi].

    Golden-section refinement narrows the bracket, then bisection on a
    Richardson-extrapolated central-difference derivative polishes the
    maximizer down to xtol.  Function comparisons alone cannot resolve the
    argmax of a flat maximum below ~sqrt(eps), which is why the polish
    stage works on the derivative sign instead.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    a, b = float(lo), float(hi)
    f_lo, f_hi = objective(a), objective(b)
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = objective(c), objective(d)
    best_x, best_f = (c, fc) if fc >= fd else (d, fd)
    iterations = 0

    # stop golden before comparisons drown in roundoff; the polish takes over
    golden_stop = max(1e-6, 100.0 * xtol)
    while (b - a) > golden_stop and iterations < 200:
        iterations += 1
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = objective(c)
            if fc > best_f:
                best_x, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = objective(d)
            if fd > best_f:
                best_x, best_f = d, fd

    if best_f <= max(f_lo, f_hi):
        raise NoInteriorMax("maximum sits at a bracket endpoint")

    h = min(1e-4, 0.05 * (hi - lo))

    def deriv(x: float) -> float:
        return (
            8.0 * (objective(x + h) - objective(x - h))
            - (objective(x + 2 * h) - objective(x - 2 * h))
        ) / (12.0 * h)

    p, q = a, b
    dp, dq = deriv(p), deriv(q)
    # widen once if the golden bracket drifted off the root of f'
    if not dp > 0.0 > dq:
        w = max(b - a, 4 * h)
        p, q = max(lo, best_x - w), min(hi, best_x + w)
        dp, dq = deriv(p), deriv(q)
    if dp > 0.0 > dq:
        while q - p > xtol and iterations < 500:
            iterations += 1
            mid = 0.5 * (p + q)
            dm = deriv(mid)
            if dm > 0.0:
                p = mid
            elif dm < 0.0:
                q = mid
            else:
                p = q = mid
        x_star = 0.5 * (p + q)
        f_star = objective(x_star)
        if f_star < best_f:
            x_star, f_star = best_x, best_f
    else:
        x_star, f_star = best_x, best_f
    return ScalarOptResult(x_star, f_star, iterations, (min(a, x_star), max(b, x_star)))


def newton_solve(
    system: Callable[[np.ndarray], Sequence[float]],
    guess: Sequence[float],
    tol: float = 1e-14,
    max_iter: int = 50,
    fd_step: float = 1e-7,
) -> np.ndarray:
    """Solve system(x) = 0 with a forward-difference Jacobian.

    Raises NewtonFailed on the iteration cap or an ill-conditioned Jacobian.
    """
    x = np.asarray(guess, dtype=float).copy()
    k = x.size
    f = np.asarray(system(x), dtype=float)
    if float(np.max(np.abs(f))) <= tol:
        return x
    for _ in range(max_iter):
        jac = np.empty((k, k))
        for j in range(k):
            xp = x.copy()
            xp[j] += fd_step
            jac[:, j] = (np.asarray(system(xp), dtype=float) - f) / fd_step
        if not np.all(np.isfinite(jac)) or np.linalg.cond(jac) > 1e12:
            raise NewtonFailed("singular or ill-conditioned Jacobian")
        x = x - np.linalg.solve(jac, f)
        f = np.asarray(system(x), dtype=float)
        if not np.all(np.isfinite(f)):
            raise NewtonFailed("system returned non-finite residual")
        if float(np.max(np.abs(f))) <= tol:
            return x
    raise NewtonFailed(f"no convergence in {max_iter} iterations")


def _nelder_mead(func, x0: np.ndarray, ftol: float, max_iter: int):
    """One Nelder-Mead minimization run; returns (x, value, converged)."""
    k = x0.size
    simplex = np.tile(x0, (k + 1, 1))
    for i in range(k):
        if simplex[i + 1, i] != 0.0:
            simplex[i + 1, i] *= 1.05
        else:
            simplex[i + 1, i] = 0.00025
    values = np.array([func(p) for p in simplex])
    converged = False
    for _ in range(max_iter):
        order = np.argsort(values)
        simplex, values = simplex[order], values[order]
        if np.isfinite(values[-1]) and values[-1] - values[0] <= ftol:
            converged = True
            break
        centroid = np.mean(simplex[:-1], axis=0)
        worst = simplex[-1]
        reflected = centroid + (centroid - worst)
        fr = func(reflected)
        if fr < values[0]:
            expanded = centroid + 2.0 * (centroid - worst)
            fe = func(expanded)
            if fe < fr:
                simplex[-1], values[-1] = expanded, fe
            else:
                simplex[-1], values[-1] = reflected, fr
        elif fr < values[-2]:
            simplex[-1], values[-1] = reflected, fr
        else:
            contracted = centroid + 0.5 * (worst - centroid)
            fcon = func(contracted)
            if fcon < values[-1]:
                simplex[-1], values[-1] = contracted, fcon
            else:
                simplex[1:] = simplex[0] + 0.5 * (simplex[1:] - simplex[0])
                values[1:] = [func(p) for p in simplex[1:]]
    order = np.argsort(values)
    return simplex[order[0]], values[order[0]], converged


def maximize_simplex(
    objective: Callable[[np.ndarray], float],
    guess: Sequence[float],
    ftol: float = 1e-12,
    restarts: int = 3,
) -> SimplexResult:
    """Nelder-Mead ascent with fixed-seed perturbed restarts.

    Never raises; the best point found is returned with a convergence flag.
    """
    x0 = np.asarray(guess, dtype=float)

    def neg(p: np.ndarray) -> float:
        v = objective(p)
        return math.inf if v == -math.inf else -v

    max_iter = 400 * max(x0.size, 1)
    best_x, best_neg, converged = _nelder_mead(neg, x0.copy(), ftol, max_iter)
    rng = np.random.default_rng(_SIMPLEX_SEED)
    for _ in range(restarts):
        start = best_x * (1.0 + 0.05 * rng.standard_normal(x0.size))
        if not np.isfinite(neg(start)):
            continue
        x, v, conv = _nelder_mead(neg, start, ftol, max_iter)
        if v < best_neg:
            best_x, best_neg, converged = x, v, conv
    return SimplexResult(best_x, -best_neg, converged)
