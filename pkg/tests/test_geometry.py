import math

import numpy as np
import pytest

from smallpoly import (
    AngleSequence,
    MalformedSequence,
    NotConvexPosition,
    Polygon,
    boundary_order,
    construct_bn,
    diameter,
    diameter_graph,
    is_convex,
    is_mirror_symmetric,
    params_from_alpha,
    shoelace_area,
    thin_area,
    vertices_from_angles,
)
from smallpoly.constructions import regular_polygon
from smallpoly.geometry import fan_double_areas
from smallpoly.thin_model import angle_sequence


def bn_polygon(n):
    return construct_bn(n).polygon


def random_thin_sequence(rng, n):
    lo, hi = math.pi / (2 * n - 2), math.pi / n
    alpha = rng.uniform(lo, lo + 0.98 * (hi - lo))
    return angle_sequence(params_from_alpha(n, alpha))


class TestVerticesFromAngles:
    def test_bn8_matches_drawn_coordinates(self):
        poly = bn_polygon(8)
        assert poly.vertices[1] == pytest.approx((0.2619, 0.9651), abs=6e-5)
        assert poly.vertices[3] == pytest.approx((0.5000, 0.6432), abs=6e-5)

    def test_regular_plus_first_vertex(self):
        seq = AngleSequence(6, (math.pi / 10, math.pi / 5, math.pi / 5))
        poly = vertices_from_angles(seq)
        assert poly.vertices[1] == pytest.approx(
            (math.sin(math.pi / 10), math.cos(math.pi / 10)), abs=1e-15
        )

    def test_mirror_is_exact_by_construction(self):
        rng = np.random.default_rng(7)
        for n in (6, 10, 16):
            poly = vertices_from_angles(random_thin_sequence(rng, n))
            v = poly.as_array()
            for k in range(1, n // 2):
                assert v[k, 0] == -v[n - 1 - k, 0]
                assert v[k, 1] == v[n - 1 - k, 1]

    def test_anchor_vertices(self):
        poly = bn_polygon(12)
        assert poly.vertices[0] == (0.0, 0.0)
        assert poly.vertices[11] == (0.0, 1.0)

    @pytest.mark.parametrize(
        "n,angles",
        [
            (6, (0.1, 0.1, 0.1)),  # sum != pi/2
            (6, (-0.1, 0.8, math.pi / 2 - 0.7)),  # negative angle
            (8, (0.3, 0.3, 0.3)),  # wrong count
            (7, (0.5, 0.5, 0.5707963267948966)),  # odd n
        ],
    )
    def test_malformed_sequences_rejected(self, n, angles):
        with pytest.raises(MalformedSequence):
            AngleSequence(n, angles)

    def test_unit_cycle_edges(self):
        # closure plus angle sum force every diameter-cycle step to length 1
        rng = np.random.default_rng(11)
        for n in (6, 8, 14, 24):
            poly = vertices_from_angles(random_thin_sequence(rng, n))
            v = poly.as_array()
            steps = [np.linalg.norm(v[k + 1] - v[k]) for k in range(n - 2)]
            steps.append(np.linalg.norm(v[0] - v[n - 2]))
            steps.append(np.linalg.norm(v[n - 1] - v[0]))
            assert np.allclose(steps, 1.0, atol=1e-12)


class TestBoundaryOrder:
    def test_bn8_interleaving(self):
        assert boundary_order(bn_polygon(8)) == [0, 5, 3, 1, 7, 6, 4, 2]

    def test_square(self):
        poly = regular_polygon(4)
        assert boundary_order(poly) == [0, 1, 3, 2]

    def test_bn10_matches_drawn_cycle(self):
        assert boundary_order(bn_polygon(10)) == [0, 7, 5, 3, 1, 9, 8, 6, 4, 2]

    def test_interior_vertex_rejected(self):
        poly = Polygon(
            6,
            ((0.0, 0.0), (0.5, 0.4), (-0.5, 0.4), (0.3, 0.93), (-0.3, 0.93), (0.0, 0.5)),
        )
        with pytest.raises(NotConvexPosition):
            boundary_order(poly)


class TestShoelace:
    def test_square(self):
        assert shoelace_area(regular_polygon(4)) == pytest.approx(0.5, abs=1e-15)

    def test_regular_hexagon(self):
        assert shoelace_area(regular_polygon(6)) == pytest.approx(
            0.6495190528, abs=5e-10
        )

    def test_matches_thin_area_for_bn8(self):
        bn = construct_bn(8)
        params = params_from_alpha(8, bn.alpha_star)
        assert shoelace_area(bn.polygon) == pytest.approx(
            thin_area(params), abs=1e-12
        )

    def test_matches_fan_triangles_at_random_angles(self):
        rng = np.random.default_rng(23)
        for n in range(6, 26, 2):
            poly = vertices_from_angles(random_thin_sequence(rng, n))
            assert shoelace_area(poly) == pytest.approx(
                float(np.sum(fan_double_areas(poly))), abs=1e-12
            )


class TestDiameter:
    def test_square_diagonal(self):
        value, pair = diameter(regular_polygon(4))
        assert value == pytest.approx(1.0, abs=1e-15)
        assert pair in ((0, 3), (1, 2))

    def test_bn_family_is_small(self):
        for n in range(6, 26, 2):
            value, _ = diameter(bn_polygon(n))
            assert abs(value - 1.0) < 1e-12

    def test_collinear_points(self):
        poly = Polygon(3, ((0.0, 0.0), (0.0, 0.5), (0.0, 1.0)))
        value, pair = diameter(poly)
        assert value == 1.0
        assert pair == (0, 2)

    def test_rigid_motion_invariance(self):
        rng = np.random.default_rng(5)
        poly = bn_polygon(10)
        base, _ = diameter(poly)
        for _ in range(5):
            theta = rng.uniform(0, 2 * math.pi)
            rot = np.array(
                [[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]]
            )
            shifted = poly.as_array() @ rot.T + rng.uniform(-2, 2, size=2)
            moved = Polygon(poly.n, tuple(map(tuple, shifted)))
            value, _ = diameter(moved)
            assert value == pytest.approx(base, abs=1e-12)


class TestDiameterGraph:
    def test_regular_hexagon_has_three_diagonals(self):
        graph = diameter_graph(regular_polygon(6))
        assert len(graph.edges) == 3
        assert not graph.has_optimal_structure

    def test_bn8_cycle_plus_pendant(self):
        graph = diameter_graph(bn_polygon(8))
        assert len(graph.edges) == 8
        assert graph.has_optimal_structure

    def test_square_has_two_diagonals(self):
        graph = diameter_graph(regular_polygon(4))
        assert len(graph.edges) == 2
        assert not graph.has_optimal_structure


class TestConvexity:
    def test_constructed_families_convex(self):
        for n in range(6, 26, 2):
            assert is_convex(bn_polygon(n))
            assert is_convex(regular_polygon(n))

    def test_reflex_vertex_detected(self):
        poly = Polygon(
            6,
            ((0.0, 0.0), (0.45, 0.3), (0.1, 0.5), (0.45, 0.7), (0.0, 1.0), (-0.45, 0.5)),
        )
        assert not is_convex(poly)


def test_mirror_symmetry_check():
    assert is_mirror_symmetric(bn_polygon(8))
    skewed = Polygon(4, ((0.0, 0.0), (0.5, 0.5), (-0.4, 0.5), (0.0, 1.0)))
    assert not is_mirror_symmetric(skewed)
