import math

import pytest

from hitset.errors import DegeneratePairError
from hitset.geometry import (PlacedObject, Point, Shape, boundary_components,
                             contains, convex_distance, polygon_params,
                             reflect, support_radius)
from hitset.rng import SplitMix64

from conftest import angle_at


ALL_SHAPES = [Shape.disk()] + [Shape.kgon(k) for k in (4, 5, 6, 7, 8)]


class TestPolygonParams:
    def test_square(self):
        r_out, side, verts = polygon_params(4)
        assert r_out == pytest.approx(math.sqrt(2), abs=1e-12)
        assert side == pytest.approx(2.0, abs=1e-12)
        assert sorted((round(v.x, 9), round(v.y, 9)) for v in verts) == \
            [(-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 1.0)]

    def test_hexagon(self):
        r_out, side, _ = polygon_params(6)
        assert r_out == pytest.approx(2 / math.sqrt(3), abs=1e-12)
        assert side == pytest.approx(2 / math.sqrt(3), abs=1e-12)

    def test_pentagon(self):
        r_out, side, _ = polygon_params(5)
        assert r_out == pytest.approx(1 / math.cos(math.radians(36)), abs=1e-12)
        assert side == pytest.approx(1.4530850560107, abs=1e-9)

    @pytest.mark.parametrize("k", range(4, 13))
    def test_closed_forms(self, k):
        r_out, side, verts = polygon_params(k)
        assert abs(r_out - 1 / math.cos(math.pi / k)) <= 1e-12
        assert abs(side - 2 * r_out * math.sin(math.pi / k)) <= 1e-12
        # vertices on the circumcircle, equally spaced, flat bottom
        for v in verts:
            assert math.hypot(v.x, v.y) == pytest.approx(r_out, abs=1e-12)
        lowest = min(v.y for v in verts)
        assert sum(1 for v in verts if abs(v.y - lowest) < 1e-9) == 2

    @pytest.mark.parametrize("k", [3, 2, 0, -1])
    def test_rejects_small_k(self, k):
        with pytest.raises(ValueError):
            polygon_params(k)
        with pytest.raises(ValueError):
            Shape.kgon(k)


class TestSupportRadius:
    def test_disk_any_direction(self):
        assert support_radius(Shape.disk(), Point(0.6, 0.8)) == 1.0

    def test_square_edge_midpoint(self):
        assert support_radius(Shape.kgon(4), Point(1.0, 0.0)) == \
            pytest.approx(1.0, abs=1e-12)

    def test_square_corner(self):
        d = 1 / math.sqrt(2)
        assert support_radius(Shape.kgon(4), Point(d, d)) == \
            pytest.approx(math.sqrt(2), abs=1e-12)

    def test_zero_direction(self):
        with pytest.raises(ValueError):
            support_radius(Shape.disk(), Point(0.0, 0.0))


class TestConvexDistance:
    def test_disk_euclidean(self):
        assert convex_distance(Shape.disk(), Point(0, 0), Point(3, 4)) == 5.0

    def test_square_chebyshev(self):
        assert convex_distance(Shape.kgon(4), Point(0, 0), Point(2, 0.5)) == \
            pytest.approx(2.0, abs=1e-12)

    @pytest.mark.parametrize("shape", ALL_SHAPES, ids=lambda s: f"{s.kind}{s.k or ''}")
    def test_identity(self, shape):
        assert convex_distance(shape, Point(0.3, -0.7), Point(0.3, -0.7)) == 0.0

    def test_zero_iff_equal_and_scaling(self):
        rng = SplitMix64(11)
        for shape in ALL_SHAPES:
            for _ in range(200):
                x = Point(rng.uniform(-2, 2), rng.uniform(-2, 2))
                v = Point(rng.uniform(-1, 1), rng.uniform(-1, 1))
                if v == (0.0, 0.0):
                    continue
                base = convex_distance(shape, x, Point(x.x + v.x, x.y + v.y))
                assert base > 0.0
                t = rng.uniform(0.1, 5.0)
                scaled = convex_distance(
                    shape, x, Point(x.x + t * v.x, x.y + t * v.y))
                assert scaled == pytest.approx(t * base, rel=1e-12)

    def test_reflection_symmetry(self):
        # full 1e5-triple sweep lives in the acceptance suite
        rng = SplitMix64(12)
        for shape in ALL_SHAPES:
            mirrored = reflect(shape)
            for _ in range(2000):
                x = Point(rng.uniform(-3, 3), rng.uniform(-3, 3))
                y = Point(rng.uniform(-3, 3), rng.uniform(-3, 3))
                assert abs(convex_distance(shape, x, y)
                           - convex_distance(mirrored, y, x)) <= 1e-9


class TestReflect:
    def test_disk_self(self):
        d = Shape.disk()
        assert reflect(d) is d

    def test_square_same_vertex_set(self):
        sq = Shape.kgon(4)
        orig = sorted((round(v.x, 9), round(v.y, 9)) for v in sq.vertices)
        refl = sorted((round(v.x, 9), round(v.y, 9)) for v in reflect(sq).vertices)
        assert orig == refl

    def test_pentagon_flips(self):
        p = Shape.kgon(5)
        # canonical: apex up (unique topmost vertex), flat bottom
        assert max(v.y for v in p.vertices) == pytest.approx(p.r_out, abs=1e-12)
        r = reflect(p)
        assert min(v.y for v in r.vertices) == pytest.approx(-p.r_out, abs=1e-12)
        assert r.reflected and not p.reflected
        assert reflect(r) == p


class TestContains:
    def test_disk_boundary(self):
        obj = PlacedObject(Shape.disk(), Point(0, 0))
        assert contains(obj, Point(0.6, 0.8), tol=0.0)

    def test_disk_outside(self):
        obj = PlacedObject(Shape.disk(), Point(0, 0))
        assert not contains(obj, Point(1.01, 0.0), tol=0.0)

    def test_square_near_corner(self):
        obj = PlacedObject(Shape.kgon(4), Point(0, 0))
        assert contains(obj, Point(0.999, -0.999), tol=0.0)


class TestBoundaryComponents:
    def test_disks_two_points(self):
        d = Shape.disk()
        reps = boundary_components(PlacedObject(d, Point(0, 0)),
                                   PlacedObject(d, Point(1, 0)))
        assert len(reps) == 2
        got = sorted((round(p.x, 9), round(p.y, 9)) for p in reps)
        h = round(math.sqrt(3) / 2, 9)
        assert got == [(0.5, -h), (0.5, h)]

    def test_disks_disjoint(self):
        d = Shape.disk()
        assert boundary_components(PlacedObject(d, Point(0, 0)),
                                   PlacedObject(d, Point(3, 0))) == []

    def test_disks_tangent(self):
        d = Shape.disk()
        reps = boundary_components(PlacedObject(d, Point(0, 0)),
                                   PlacedObject(d, Point(2, 0)))
        assert len(reps) == 1
        assert reps[0] == pytest.approx((1.0, 0.0))

    def test_squares_offset_diagonally(self):
        sq = Shape.kgon(4)
        reps = boundary_components(PlacedObject(sq, Point(0, 0)),
                                   PlacedObject(sq, Point(1, 1)))
        assert len(reps) == 2

    def test_squares_shared_edge(self):
        sq = Shape.kgon(4)
        reps = boundary_components(PlacedObject(sq, Point(0, 0)),
                                   PlacedObject(sq, Point(2, 0)))
        assert len(reps) == 1
        assert reps[0] == pytest.approx((1.0, 0.0))

    def test_identical_centers_rejected(self):
        d = Shape.disk()
        with pytest.raises(DegeneratePairError):
            boundary_components(PlacedObject(d, Point(0.5, 0.5)),
                                PlacedObject(d, Point(0.5, 0.5)))

    def test_mixed_shapes_rejected(self):
        with pytest.raises(ValueError):
            boundary_components(PlacedObject(Shape.disk(), Point(0, 0)),
                                PlacedObject(Shape.kgon(4), Point(1, 0)))


def _random_intersecting_pair(rng, shape):
    a = PlacedObject(shape, Point(rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)))
    while True:
        b = PlacedObject(shape, Point(rng.uniform(-2.2, 2.2), rng.uniform(-2.2, 2.2)))
        if b.center == a.center:
            continue
        reps = boundary_components(a, b)
        if reps:
            return a, b, reps


def _random_point_in_intersection(rng, a, b, lo_x, hi_x, lo_y, hi_y):
    for _ in range(500):
        p = Point(rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y))
        if contains(a, p, tol=0.0) and contains(b, p, tol=0.0):
            return p
    return None


class TestSeparationAngles:
    """Any point of the overlap sees the two boundary-crossing components
    at a wide angle: at least pi/4 for k-gons, pi/2 for disks."""

    def test_kgon_angle_bound(self, rng):
        trials_per_k = 2000
        for k in (4, 5, 6, 7, 8):
            shape = Shape.kgon(k)
            done = 0
            while done < trials_per_k:
                a, b, reps = _random_intersecting_pair(rng, shape)
                assert len(reps) <= 2
                if len(reps) != 2:
                    continue
                lo_x = max(a.center.x, b.center.x) - shape.r_out
                hi_x = min(a.center.x, b.center.x) + shape.r_out
                lo_y = max(a.center.y, b.center.y) - shape.r_out
                hi_y = min(a.center.y, b.center.y) + shape.r_out
                p = _random_point_in_intersection(rng, a, b, lo_x, hi_x, lo_y, hi_y)
                if p is None or min(math.hypot(p.x - r.x, p.y - r.y)
                                    for r in reps) < 1e-9:
                    continue
                assert angle_at(p, reps[0], reps[1]) >= math.pi / 4 - 1e-6
                done += 1

    def test_disk_angle_bound(self, rng):
        shape = Shape.disk()
        done = 0
        while done < 5000:
            a, b, reps = _random_intersecting_pair(rng, shape)
            assert len(reps) <= 2
            if len(reps) != 2:
                continue
            lo_x = max(a.center.x, b.center.x) - 1.0
            hi_x = min(a.center.x, b.center.x) + 1.0
            lo_y = max(a.center.y, b.center.y) - 1.0
            hi_y = min(a.center.y, b.center.y) + 1.0
            p = _random_point_in_intersection(rng, a, b, lo_x, hi_x, lo_y, hi_y)
            if p is None or min(math.hypot(p.x - r.x, p.y - r.y)
                                for r in reps) < 1e-9:
                continue
            assert angle_at(p, reps[0], reps[1]) >= math.pi / 2 - 1e-6
            done += 1
