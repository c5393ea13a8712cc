"""Maximal-area small polygons with an even number of vertices.

Constructs the comparison families (regular, augmented regular,
Mossinghoff, and the one-variable optimum), verifies their geometric
invariants, and evaluates the asymptotic gap predictions.
"""

from .constructions import (
    ConstructionResult,
    Family,
    area_regular,
    area_regular_plus,
    construct,
    construct_bn,
    construct_mn,
    construct_mn_prime,
    upper_bound,
)
from .errors import (
    InfeasibleAlpha,
    MalformedSequence,
    MaximizerFailed,
    NewtonFailed,
    NoInteriorMax,
    NotConvexPosition,
    NotSmall,
    SmallPolyError,
)
from .geometry import (
    AngleSequence,
    DiameterGraph,
    Polygon,
    boundary_order,
    diameter,
    diameter_graph,
    is_convex,
    is_mirror_symmetric,
    shoelace_area,
    vertices_from_angles,
)
from .report import GapReport, alpha_hat_series, gap_vs_bound, gap_vs_mossinghoff, table1
from .thin_model import (
    ThinParams,
    beta_from_alpha,
    gamma_from_alpha_beta,
    one_variable_area,
    params_from_alpha,
    thin_area,
    thin_polygon,
    triangle_areas,
)

__version__ = "0.1.0"

__all__ = [
    "AngleSequence",
    "ConstructionResult",
    "DiameterGraph",
    "Family",
    "GapReport",
    "InfeasibleAlpha",
    "MalformedSequence",
    "MaximizerFailed",
    "NewtonFailed",
    "NoInteriorMax",
    "NotConvexPosition",
    "NotSmall",
    "Polygon",
    "SmallPolyError",
    "ThinParams",
    "alpha_hat_series",
    "area_regular",
    "area_regular_plus",
    "beta_from_alpha",
    "boundary_order",
    "construct",
    "construct_bn",
    "construct_mn",
    "construct_mn_prime",
    "diameter",
    "diameter_graph",
    "gamma_from_alpha_beta",
    "gap_vs_bound",
    "gap_vs_mossinghoff",
    "is_convex",
    "is_mirror_symmetric",
    "one_variable_area",
    "params_from_alpha",
    "shoelace_area",
    "table1",
    "thin_area",
    "thin_polygon",
    "triangle_areas",
    "upper_bound",
    "vertices_from_angles",
]
