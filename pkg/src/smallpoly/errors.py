"""Exception types shared across the package."""


class SmallPolyError(Exception):
    """Base class for all smallpoly errors."""


class MalformedSequence(SmallPolyError):
    """An angle sequence violates its invariants (count, sign, or sum)."""


class NotConvexPosition(SmallPolyError):
    """A vertex lies inside the convex hull of the others."""


class NotSmall(SmallPolyError):
    """Polygon diameter exceeds one beyond the allowed tolerance."""


class InfeasibleAlpha(SmallPolyError):
    """No closing angle exists for the requested opening angle."""


class NoInteriorMax(SmallPolyError):
    """The maximum of a scalar objective sits at a bracket endpoint."""


class MaximizerFailed(SmallPolyError):
    """Bracketing or convergence failure in a construction maximizer."""


class NewtonFailed(SmallPolyError):
    """Newton iteration hit its cap or a near-singular Jacobian."""
