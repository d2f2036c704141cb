"""Unit shapes in the plane and their convex distance function.

A shape is either the closed unit disk or a regular k-gon (k >= 4) whose
largest inscribed ball has radius 1.  Only translates of one shape appear
in an instance; the k-gon orientation is fixed once and for all: the
bottommost edge is horizontal ("flat bottom"), which for k = 4 gives the
axis-aligned square of side 2.

The convex distance induced by a shape S centered at x is the smallest
scale factor at which a copy of S grown about x reaches y.  For the unit
shapes here every polygon edge lies at distance exactly 1 from the
center, so the distance is simply the maximum of the outward edge-normal
dot products (Chebyshev for the square, Euclidean for the disk).
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass, field
from typing import NamedTuple

from . import _kernels as K
from .errors import DegeneratePairError

DEFAULT_TOL = 1e-9
_MERGE_TOL = 1e-9


class Point(NamedTuple):
    x: float
    y: float


class PlacedObject(NamedTuple):
    """A translate of a shape, given by its center."""

    shape: "Shape"
    center: Point


def polygon_params(k: int) -> tuple[float, float, tuple[Point, ...]]:
    """Circumradius, side length and canonical vertices of the regular
    unit k-gon (inscribed ball radius 1, flat bottom, counterclockwise).

    Raises ValueError for k < 4.
    """
    if not isinstance(k, int) or k < 4:
        raise ValueError(f"regular unit k-gon requires integer k >= 4, got {k!r}")
    r_out = 1.0 / math.cos(math.pi / k)
    side = 2.0 * r_out * math.sin(math.pi / k)
    if k == 4:
        # The canonical square is exactly the axis-aligned [-1, 1]^2;
        # spelling the vertices out keeps grid-aligned placements exact.
        return r_out, side, (Point(1.0, -1.0), Point(1.0, 1.0),
                             Point(-1.0, 1.0), Point(-1.0, -1.0))
    verts = []
    for j in range(k):
        phi = -math.pi / 2.0 + math.pi / k + 2.0 * math.pi * j / k
        verts.append(Point(r_out * _snap(math.cos(phi)),
                           r_out * _snap(math.sin(phi))))
    return r_out, side, tuple(verts)


def _snap(v: float) -> float:
    # Trig values that should be exactly 0 or +-1 (axis-aligned edges)
    # come back from libm with ~1e-16 noise; snap them so grid-aligned
    # configurations stay exact.
    if abs(v) < 1e-15:
        return 0.0
    if abs(abs(v) - 1.0) < 1e-15:
        return math.copysign(1.0, v)
    return v


def _polygon_normals(k: int, reflected: bool) -> array:
    # Outward unit normals of the k edges; every edge is at distance 1
    # from the center, so the gauge is max over normals of n . v.
    flat = array("d")
    sign = -1.0 if reflected else 1.0
    for j in range(k):
        psi = -math.pi / 2.0 + 2.0 * math.pi * j / k
        flat.append(sign * _snap(math.cos(psi)))
        flat.append(sign * _snap(math.sin(psi)))
    return flat


@dataclass(frozen=True, eq=False)
class Shape:
    """The generator shape: unit disk or regular unit k-gon.

    Also owns the grid constants the tiling machinery needs: tile side,
    super-square side and the worst-case number of tiles one translate
    can meet.
    """

    kind: str
    k: int | None = None
    r_out: float = 1.0
    side: float | None = None
    vertices: tuple[Point, ...] | None = None
    reflected: bool = False
    normals: array = field(default_factory=lambda: array("d"), repr=False)

    r_in = 1.0

    @staticmethod
    def disk() -> "Shape":
        return Shape(kind="disk")

    @staticmethod
    def kgon(k: int) -> "Shape":
        r_out, side, verts = polygon_params(k)
        return Shape(kind="kgon", k=k, r_out=r_out, side=side,
                     vertices=verts, normals=_polygon_normals(k, False))

    @property
    def is_disk(self) -> bool:
        return self.kind == "disk"

    @property
    def kernel_kind(self) -> int:
        return K.KIND_DISK if self.is_disk else K.KIND_KGON

    @property
    def tile_side(self) -> float:
        if self.is_disk:
            return 0.75
        if self.k in (5, 6):
            return 0.25
        return 0.5

    @property
    def super_side(self) -> float:
        if self.is_disk:
            return 2.75
        if self.k == 4:
            return 2.5
        if self.k in (5, 6):
            return 9.0 / (4.0 * math.cos(math.pi / self.k))
        return 5.0 / (2.0 * math.cos(math.pi / self.k))

    @property
    def max_tiles(self) -> int:
        if self.is_disk:
            return 14
        if self.k == 4:
            return 25
        if self.k in (5, 6):
            return 119
        return 34

    def __eq__(self, other):
        if not isinstance(other, Shape):
            return NotImplemented
        return (self.kind, self.k, self.reflected) == \
            (other.kind, other.k, other.reflected)

    def __hash__(self):
        return hash((self.kind, self.k, self.reflected))


def reflect(shape: Shape) -> Shape:
    """Point reflection of the shape through its center.

    The disk is its own reflection; a k-gon gets its vertex set negated
    (for even k the vertex set is unchanged as a set, for odd k the flat
    edge flips to the top).
    """
    if shape.is_disk:
        return shape
    verts = tuple(Point(-v.x, -v.y) for v in shape.vertices)
    return Shape(kind="kgon", k=shape.k, r_out=shape.r_out, side=shape.side,
                 vertices=verts, reflected=not shape.reflected,
                 normals=_polygon_normals(shape.k, not shape.reflected))


def gauge_distance(shape: Shape, dx: float, dy: float) -> float:
    """Scale at which the shape grown about the origin reaches (dx, dy)."""
    return K.gauge(shape.kernel_kind, shape.normals, dx, dy)


def convex_distance(shape: Shape, frm: Point, to: Point) -> float:
    """Smallest lambda >= 0 with `to` in the lambda-scaled shape at `frm`."""
    return gauge_distance(shape, to[0] - frm[0], to[1] - frm[1])


def support_radius(shape: Shape, direction: Point) -> float:
    """Distance from the center to the boundary along a direction."""
    n = math.hypot(direction[0], direction[1])
    if n == 0.0:
        raise ValueError("direction must be a nonzero vector")
    if shape.is_disk:
        return 1.0
    return n / gauge_distance(shape, direction[0], direction[1])


def contains(obj: PlacedObject, p: Point, tol: float = DEFAULT_TOL) -> bool:
    """Closed membership test with a small tolerance so boundary points
    (extreme points sit on the boundary) stay inside under floating point."""
    return convex_distance(obj.shape, obj.center, p) <= 1.0 + tol


def bounding_box(obj: PlacedObject) -> tuple[float, float, float, float]:
    """(minx, maxx, miny, maxy) of the placed object."""
    cx, cy = obj.center
    if obj.shape.is_disk:
        return cx - 1.0, cx + 1.0, cy - 1.0, cy + 1.0
    xs = [cx + v.x for v in obj.shape.vertices]
    ys = [cy + v.y for v in obj.shape.vertices]
    return min(xs), max(xs), min(ys), max(ys)


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _segment_features(p1, p2, q1, q2):
    """Intersection of two closed segments: [] | [point] | [segment],
    each feature given as an endpoint pair."""
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    wx, wy = q1[0] - p1[0], q1[1] - p1[1]
    denom = _cross(rx, ry, sx, sy)
    scale = max(abs(rx), abs(ry), abs(sx), abs(sy), 1e-30)
    if abs(denom) > 1e-12 * scale * scale:
        t = _cross(wx, wy, sx, sy) / denom
        u = _cross(wx, wy, rx, ry) / denom
        if -1e-12 <= t <= 1.0 + 1e-12 and -1e-12 <= u <= 1.0 + 1e-12:
            pt = Point(p1[0] + t * rx, p1[1] + t * ry)
            return [(pt, pt)]
        return []
    # Parallel; collinear only if q1 sits on the carrier line of p1-p2.
    if abs(_cross(wx, wy, rx, ry)) > 1e-9 * max(scale, 1.0):
        return []
    rr = rx * rx + ry * ry
    if rr == 0.0:
        return []
    t0 = (wx * rx + wy * ry) / rr
    t1 = ((q2[0] - p1[0]) * rx + (q2[1] - p1[1]) * ry) / rr
    lo, hi = (t0, t1) if t0 <= t1 else (t1, t0)
    lo = max(lo, 0.0)
    hi = min(hi, 1.0)
    if hi < lo - 1e-12:
        return []
    a = Point(p1[0] + lo * rx, p1[1] + lo * ry)
    b = Point(p1[0] + hi * rx, p1[1] + hi * ry)
    return [(a, b)]


def _feature_dist(f, g):
    best = math.inf
    for a in f:
        for b in g:
            d = math.hypot(a[0] - b[0], a[1] - b[1])
            if d < best:
                best = d
    return best


def boundary_components(a: PlacedObject, b: PlacedObject,
                        tol: float = _MERGE_TOL) -> list[Point]:
    """Connected components of the two translates' boundary intersection.

    Returns one representative point per component (the midpoint for a
    shared-edge component).  Translates of one convex shape never produce
    more than two components.
    """
    if a.shape != b.shape:
        raise ValueError("boundary_components requires translates of one shape")
    dx = b.center[0] - a.center[0]
    dy = b.center[1] - a.center[1]
    d = math.hypot(dx, dy)
    if d < 1e-15:
        raise DegeneratePairError("translates share a center")

    if a.shape.is_disk:
        if d > 2.0 + tol:
            return []
        mx = a.center[0] + dx / 2.0
        my = a.center[1] + dy / 2.0
        if d >= 2.0 - tol:
            return [Point(mx, my)]
        h = math.sqrt(max(1.0 - (d / 2.0) ** 2, 0.0))
        ux, uy = -dy / d, dx / d
        return [Point(mx + h * ux, my + h * uy),
                Point(mx - h * ux, my - h * uy)]

    va = [Point(a.center[0] + v.x, a.center[1] + v.y) for v in a.shape.vertices]
    vb = [Point(b.center[0] + v.x, b.center[1] + v.y) for v in b.shape.vertices]
    k = len(va)
    features = []
    for i in range(k):
        for j in range(k):
            features.extend(
                _segment_features(va[i], va[(i + 1) % k], vb[j], vb[(j + 1) % k]))
    if not features:
        return []

    # Merge features whose endpoints coincide within tol.
    parent = list(range(len(features)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(features)):
        for j in range(i + 1, len(features)):
            if _feature_dist(features[i], features[j]) <= tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    groups: dict[int, list[Point]] = {}
    for i, f in enumerate(features):
        groups.setdefault(find(i), []).extend(f)

    reps = []
    for pts in groups.values():
        far = max(
            ((p, q) for p in pts for q in pts),
            key=lambda pq: (pq[0][0] - pq[1][0]) ** 2 + (pq[0][1] - pq[1][1]) ** 2,
        )
        if math.hypot(far[0][0] - far[1][0], far[0][1] - far[1][1]) <= tol:
            reps.append(pts[0])
        else:
            reps.append(Point((far[0][0] + far[1][0]) / 2.0,
                              (far[0][1] + far[1][1]) / 2.0))
    reps.sort()
    return reps
