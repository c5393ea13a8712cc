"""Asymptotic series, gap diagnostics, and the per-n comparison table."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import constants
from .constants import A_COEF, B_COEF, C_COEF, K1, d_coefficient, t_coefficient
from .constructions import (
    area_regular,
    area_regular_plus,
    construct_bn,
    construct_mn,
    construct_mn_prime,
    upper_bound,
)
from .thin_model import one_variable_area


@dataclass(frozen=True)
class AsymptoticConstants:
    a: float
    b: float
    c: float
    t_mod2: float
    t_mod0: float
    d_mod2: float
    d_mod0: float


CONSTANTS = AsymptoticConstants(
    a=A_COEF,
    b=B_COEF,
    c=C_COEF,
    t_mod2=t_coefficient(2),
    t_mod0=t_coefficient(4),
    d_mod2=d_coefficient(2),
    d_mod0=d_coefficient(4),
)


@dataclass(frozen=True)
class GapReport:
    """One table row: areas, bound, and scaled asymptotic gaps."""

    n: int
    alpha_hat: float
    area_regular: float
    area_regular_plus: float
    area_mossinghoff: float
    area_mossinghoff_prime: float
    area_bn: float
    upper_bound: float
    scaled_gap_ub: float
    scaled_gap_mn: float


def alpha_hat_series(n: int) -> float:
    """Three-term series approximation of the optimal opening angle."""
    return A_COEF * math.pi / n + B_COEF * math.pi / n**2 - C_COEF * math.pi / n**3


def table_row(n: int) -> GapReport:
    bn = construct_bn(n)
    mn = construct_mn(n)
    mn_prime_area = construct_mn_prime(n).area if n >= 8 else mn.area
    ub = upper_bound(n)
    return GapReport(
        n=n,
        alpha_hat=bn.alpha_star,
        area_regular=area_regular(n),
        area_regular_plus=area_regular_plus(n),
        area_mossinghoff=mn.area,
        area_mossinghoff_prime=mn_prime_area,
        area_bn=bn.area,
        upper_bound=ub,
        scaled_gap_ub=n**3 * (ub - bn.area),
        scaled_gap_mn=n**5 * (bn.area - mn.area) / (3.0 * math.pi**3),
    )


def table1(n_max: int) -> list[GapReport]:
    """Comparison rows for n = 6, 8, ..., n_max."""
    if n_max < 6:
        raise ValueError("need n_max >= 6")
    return [table_row(n) for n in range(6, n_max + 1, 2)]


def gap_vs_bound(n: int) -> float:
    """n^3 times the gap to the upper bound; approaches K1 for large n."""
    return n**3 * (upper_bound(n) - construct_bn(n).area)


def gap_vs_mossinghoff(n: int) -> float:
    """Scaled fifth-order gap to the Mossinghoff polygon; approaches d(n mod 4)."""
    return n**5 * (construct_bn(n).area - construct_mn(n).area) / (3.0 * math.pi**3)


def perturbation_penalty(n: int, u: float) -> float:
    """Scaled area loss for a second-order perturbed opening angle.

    Approaches (u - b)^2 * pi^3 * sqrt(114) / 8 for u != b.
    """
    alpha = A_COEF * math.pi / n + u * math.pi / n**2
    return n**5 * (construct_bn(n).area - one_variable_area(n, alpha))


def penalty_limit(u: float) -> float:
    """Limit constant matching perturbation_penalty for u != b."""
    return (u - B_COEF) ** 2 * constants.PENALTY_COEF


def secondary_gap_regular(n: int) -> float:
    """n^2 times the bound-to-regular gap; approaches pi^3/16."""
    return n**2 * (upper_bound(n) - area_regular(n))


def secondary_gap_regular_plus(n: int) -> float:
    """n^3 times the bound-to-augmented-regular gap; approaches 5*pi^3/48."""
    return n**3 * (upper_bound(n) - area_regular_plus(n))
