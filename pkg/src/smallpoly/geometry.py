"""Planar geometry for mirror-symmetric small polygons.

Polygons are described by the half-boundary turning angles: the right half
of the unit-length boundary cycle is generated from the angles, the left
half is its mirror image across the axis x = 0.  Vertex 0 sits at the
origin, vertex n-1 at the apex (0, 1), and the remaining vertices keep the
interleaved labeling where vertex k and vertex n-k-1 are mirror partners.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MalformedSequence, NotConvexPosition, NotSmall

#: tolerance for exact geometric identities carried in double precision
GEOMETRIC_TOL = 1e-12
#: user-facing verification tolerance (polygon checks, diameter graphs)
VERIFY_TOL = 1e-9


@dataclass(frozen=True)
class AngleSequence:
    """Half-polygon turning angles for an even n-gon.

    ``angles[k]`` is the turning angle at step k of the right half; there
    are n/2 of them, each in (0, pi/2), summing to pi/2.
    """

    n: int
    angles: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))
        if self.n < 6 or self.n % 2 != 0:
            raise MalformedSequence(f"vertex count must be even and >= 6, got {self.n}")
        if len(self.angles) != self.n // 2:
            raise MalformedSequence(
                f"expected {self.n // 2} angles, got {len(self.angles)}"
            )
        if any(a <= 0.0 or a >= math.pi / 2 for a in self.angles):
            raise MalformedSequence("all angles must lie strictly in (0, pi/2)")
        if abs(math.fsum(self.angles) - math.pi / 2) > GEOMETRIC_TOL:
            raise MalformedSequence("angles must sum to pi/2")


@dataclass(frozen=True)
class Polygon:
    """Vertex list in the interleaved labeling described above.

    The container itself does not enforce the labeling invariants; use the
    check functions in this module (they are also what ``verify`` runs on
    third-party files).
    """

    n: int
    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "vertices",
            tuple((float(x), float(y)) for x, y in self.vertices),
        )
        if len(self.vertices) != self.n:
            raise ValueError(f"expected {self.n} vertices, got {len(self.vertices)}")

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)


@dataclass(frozen=True)
class DiameterGraph:
    """Unit-distance pairs of a small polygon."""

    edges: tuple[tuple[int, int], ...]
    has_optimal_structure: bool


def half_coordinates(angles) -> tuple[np.ndarray, np.ndarray]:
    """Right-half coordinates (x_k, y_k) for k = 0..m-1.

    Alternating-sign partial sums of the unit steps; no validation, so the
    tail-angle solvers can probe infeasible intermediate iterates.
    """
    angles = np.asarray(angles, dtype=float)
    cum = np.cumsum(angles)
    sign = (-1.0) ** np.arange(angles.size)
    x = np.concatenate(([0.0], np.cumsum(sign * np.sin(cum))))[:-1]
    y = np.concatenate(([0.0], np.cumsum(sign * np.cos(cum))))[:-1]
    return x, y


def closure_x(angles) -> float:
    """Abscissa x_{m-1} of the last right-half vertex (middle-edge closure)."""
    x, _ = half_coordinates(angles)
    return float(x[-1])


def symmetric_vertices(angles) -> np.ndarray:
    """Assemble all n vertices from m = n/2 half angles (no validation)."""
    x, y = half_coordinates(angles)
    m = len(x)
    n = 2 * m
    verts = np.zeros((n, 2))
    verts[1:m, 0] = x[1:]
    verts[1:m, 1] = y[1:]
    verts[n - 1] = (0.0, 1.0)
    mirror = n - 1 - np.arange(1, m)
    verts[mirror, 0] = -x[1:]
    verts[mirror, 1] = y[1:]
    return verts


def vertices_from_angles(seq: AngleSequence) -> Polygon:
    """Build the symmetric polygon of an angle sequence."""
    verts = symmetric_vertices(seq.angles)
    return Polygon(seq.n, tuple(map(tuple, verts)))


def fan_double_areas(poly: Polygon) -> np.ndarray:
    """Doubled fan-triangle areas 2*A_1 .. 2*A_{m-1}.

    2*A_1 = x_1 and 2*A_k = x_{k+1} y_{k-1} - y_{k+1} x_{k-1}; their sum is
    the polygon area.  Serves as a coordinate-level cross-check of the
    closed-form area expressions.
    """
    m = poly.n // 2
    v = poly.as_array()
    x, y = v[:, 0], v[:, 1]
    out = np.empty(m - 1)
    out[0] = x[1]
    k = np.arange(2, m)
    out[1:] = x[k + 1] * y[k - 1] - y[k + 1] * x[k - 1]
    return out


def _polar_order(poly: Polygon) -> np.ndarray:
    """Vertex indices sorted by polar angle about (0, 1/2), v_0 first."""
    pts = poly.as_array()
    ang = np.arctan2(pts[:, 1] - 0.5, pts[:, 0])
    key = np.mod(ang + math.pi / 2, 2 * math.pi)
    return np.argsort(key, kind="stable")


def _cycle_crosses(pts: np.ndarray, order: np.ndarray) -> np.ndarray:
    p = pts[order]
    prev = np.roll(p, 1, axis=0)
    nxt = np.roll(p, -1, axis=0)
    e1 = p - prev
    e2 = nxt - p
    return e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0]


def boundary_order(poly: Polygon) -> list[int]:
    """Convex boundary cycle, counterclockwise, starting at vertex 0.

    Raises NotConvexPosition if some vertex lies inside the hull of the
    others (the polar-angle cycle then has a reflex turn).
    """
    order = _polar_order(poly)
    crosses = _cycle_crosses(poly.as_array(), order)
    if np.any(crosses < -GEOMETRIC_TOL):
        raise NotConvexPosition("vertices are not in convex position")
    return [int(i) for i in order]


def is_convex(poly: Polygon) -> bool:
    """True iff all boundary turns share one sign (straight turns allowed)."""
    crosses = _cycle_crosses(poly.as_array(), _polar_order(poly))
    return bool(np.all(crosses >= -GEOMETRIC_TOL))


def shoelace_area(poly: Polygon) -> float:
    """Polygon area from the ordered boundary (positive)."""
    order = boundary_order(poly)
    p = poly.as_array()[order]
    x, y = p[:, 0], p[:, 1]
    return float(0.5 * np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _distance_matrix(pts: np.ndarray) -> np.ndarray:
    diff = pts[:, None, :] - pts[None, :, :]
    return np.sqrt(np.sum(diff * diff, axis=-1))


def diameter(poly: Polygon) -> tuple[float, tuple[int, int]]:
    """Largest pairwise vertex distance and one attaining pair (O(n^2))."""
    dist = _distance_matrix(poly.as_array())
    i, j = np.unravel_index(np.argmax(dist), dist.shape)
    return float(dist[i, j]), (int(min(i, j)), int(max(i, j)))


def diameter_graph(poly: Polygon, tol: float = VERIFY_TOL) -> DiameterGraph:
    """All vertex pairs at unit distance within tol.

    The structure flag is set when the edges form a cycle through n-1
    vertices plus a single pendant edge from the remaining vertex.
    """
    dist = _distance_matrix(poly.as_array())
    if float(np.max(dist)) > 1.0 + tol:
        raise NotSmall(f"diameter {np.max(dist):.6f} exceeds 1 + tol")
    ii, jj = np.nonzero(np.triu(np.abs(dist - 1.0) <= tol, k=1))
    edges = tuple((int(i), int(j)) for i, j in zip(ii, jj))
    return DiameterGraph(edges, _is_cycle_plus_pendant(poly.n, edges))


def _is_cycle_plus_pendant(n: int, edges) -> bool:
    if len(edges) != n:
        return False
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    pendants = [v for v in range(n) if len(adj[v]) == 1]
    if len(pendants) != 1:
        return False
    pendant = pendants[0]
    anchor = adj[pendant][0]
    cycle = {v for v in range(n) if v != pendant}
    if any(len(adj[v]) - (v == anchor) != 2 for v in cycle):
        return False
    # walk the cycle from the anchor and require it closes through all n-1
    prev, cur = pendant, anchor
    seen = 0
    while True:
        seen += 1
        nbrs = [w for w in adj[cur] if w != prev and w != pendant]
        if not nbrs or (len(nbrs) != 1 and seen > 1):
            return False
        nxt = nbrs[0]
        prev, cur = cur, nxt
        if cur == anchor:
            return seen == n - 1
        if seen > n:
            return False


def is_mirror_symmetric(poly: Polygon, tol: float = VERIFY_TOL) -> bool:
    """True iff reflecting across x = 0 permutes the vertex set."""
    pts = poly.as_array()
    reflected = pts * np.array([-1.0, 1.0])
    diff = reflected[:, None, :] - pts[None, :, :]
    dist = np.sqrt(np.sum(diff * diff, axis=-1))
    return bool(np.all(np.min(dist, axis=1) <= tol))
