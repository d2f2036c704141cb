"""Square-tile partition of the plane, super-squares and quadrant cones.

Tiles are half-open squares [x0, x0+L) x [y0, y0+L) with L the shape's
tile side, addressed by integer pairs.  The grid offset is chosen so that
every input point is strictly interior to its tile.  Each tile carries a
concentric super-square (large enough to hold the center of any translate
meeting the tile) split into four quadrants; the quadrant centers are the
anchor points the online algorithm types objects by.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels as K
from .errors import BrokenInvariantError
from .geometry import DEFAULT_TOL, PlacedObject, Point, Shape, bounding_box, contains

Tile = tuple[int, int]

# Quadrant order: 1 upper-left, 2 upper-right, 3 lower-left, 4 lower-right.
_QUAD_SIGNS = ((-1.0, 1.0), (1.0, 1.0), (-1.0, -1.0), (1.0, -1.0))


@dataclass(frozen=True)
class Grid:
    tile_side: float
    offset: Point


@dataclass(frozen=True)
class SuperSquare:
    tile: Tile
    side: float
    quadrant_centers: tuple[Point, Point, Point, Point]


@dataclass(frozen=True)
class Cone:
    """Wedge with apex at a quadrant center spanned by the tile."""

    apex: Point
    ray1: Point
    ray2: Point
    opening: float


def _axis_offset(coords: list[float], side: float) -> float:
    # Residues of the coordinates modulo the tile side form points on a
    # circle of circumference `side`; a grid line placed in the middle of
    # the largest empty arc maximizes clearance.  Deterministic.
    residues = sorted({c % side for c in coords})
    if not residues:
        return 0.0
    best_gap = residues[0] + side - residues[-1]
    best_at = (residues[-1] + best_gap / 2.0) % side
    for a, b in zip(residues, residues[1:]):
        gap = b - a
        if gap > best_gap:
            best_gap = gap
            best_at = a + gap / 2.0
    return best_at % side


def build_grid(points: list[Point], shape: Shape) -> Grid:
    """Tile partition with every point strictly inside a tile."""
    side = shape.tile_side
    for p in points:
        if not (math.isfinite(p[0]) and math.isfinite(p[1])):
            raise ValueError(f"non-finite point coordinate: {p}")
    ox = _axis_offset([p[0] for p in points], side)
    oy = _axis_offset([p[1] for p in points], side)
    return Grid(tile_side=side, offset=Point(ox, oy))


def tile_of(grid: Grid, p: Point) -> Tile:
    """Address of the half-open tile containing p."""
    return (math.floor((p[0] - grid.offset[0]) / grid.tile_side),
            math.floor((p[1] - grid.offset[1]) / grid.tile_side))


def tile_bounds(grid: Grid, tile: Tile) -> tuple[float, float, float, float]:
    """(x0, y0, x1, y1) of the tile square."""
    x0 = grid.offset[0] + tile[0] * grid.tile_side
    y0 = grid.offset[1] + tile[1] * grid.tile_side
    return x0, y0, x0 + grid.tile_side, y0 + grid.tile_side


def tile_center(grid: Grid, tile: Tile) -> Point:
    x0, y0, x1, y1 = tile_bounds(grid, tile)
    return Point((x0 + x1) / 2.0, (y0 + y1) / 2.0)


def line_clearance(grid: Grid, p: Point) -> float:
    """Distance from p to the nearest grid line."""
    best = math.inf
    for c, o in ((p[0], grid.offset[0]), (p[1], grid.offset[1])):
        r = (c - o) % grid.tile_side
        best = min(best, r, grid.tile_side - r)
    return best


def tiles_intersected(grid: Grid, obj: PlacedObject) -> set[Tile]:
    """All tiles the closed object meets.

    Tiles are taken half-open, matching `tile_of`; this is what makes the
    worst-case per-shape tile counts tight (a square of side 2 centered on
    a grid corner meets exactly a 5x5 block, not 6x6).
    """
    side = grid.tile_side
    ox, oy = grid.offset
    minx, maxx, miny, maxy = bounding_box(obj)
    i0 = math.floor((minx - ox) / side)
    i1 = math.floor((maxx - ox) / side)
    j0 = math.floor((miny - oy) / side)
    j1 = math.floor((maxy - oy) / side)
    cx, cy = obj.center
    out = set()
    if obj.shape.is_disk:
        for i in range(i0, i1 + 1):
            x0 = ox + i * side
            for j in range(j0, j1 + 1):
                y0 = oy + j * side
                if K.disk_box_overlap(cx, cy, x0, y0, x0 + side, y0 + side):
                    out.add((i, j))
    else:
        normals = obj.shape.normals
        for i in range(i0, i1 + 1):
            x0 = ox + i * side
            for j in range(j0, j1 + 1):
                y0 = oy + j * side
                if K.poly_box_overlap(normals, cx, cy, minx, maxx, miny, maxy,
                                      x0, y0, x0 + side, y0 + side):
                    out.add((i, j))
    return out


def object_meets_tile(grid: Grid, tile: Tile, obj: PlacedObject) -> bool:
    """Overlap test against one half-open tile."""
    x0, y0, x1, y1 = tile_bounds(grid, tile)
    if obj.shape.is_disk:
        return bool(K.disk_box_overlap(obj.center[0], obj.center[1],
                                       x0, y0, x1, y1))
    minx, maxx, miny, maxy = bounding_box(obj)
    return bool(K.poly_box_overlap(obj.shape.normals, obj.center[0],
                                   obj.center[1], minx, maxx, miny, maxy,
                                   x0, y0, x1, y1))


def quadrant_centers(grid: Grid, tile: Tile, shape: Shape) -> tuple[Point, ...]:
    """The four quadrant centers of the tile's super-square."""
    c = tile_center(grid, tile)
    d = shape.super_side / 4.0
    return tuple(Point(c[0] + sx * d, c[1] + sy * d) for sx, sy in _QUAD_SIGNS)


def super_square(grid: Grid, tile: Tile, shape: Shape) -> SuperSquare:
    return SuperSquare(tile=tile, side=shape.super_side,
                       quadrant_centers=quadrant_centers(grid, tile, shape))


def quad_of(grid: Grid, tile: Tile, obj: PlacedObject,
            tol: float = DEFAULT_TOL) -> int:
    """Smallest quadrant index (1..4) whose center lies in the object.

    Every translate meeting the tile covers at least one quadrant center
    (its center sits in some quadrant, all of which fit inside a unit
    inscribed ball around their own center)."""
    for idx, o in enumerate(quadrant_centers(grid, tile, obj.shape)):
        if contains(obj, o, tol):
            return idx + 1
    raise BrokenInvariantError(
        f"object at {obj.center} meets tile {tile} but contains no quadrant center")


def cone_of(grid: Grid, tile: Tile, quad: int, shape: Shape) -> Cone:
    """Wedge with apex at the quadrant center spanned by the tile.

    The two bounding rays pass through the tile corners extremal in angle
    as seen from the apex; the opening stays below pi/2 (below pi/4 for
    k-gons, whose super-squares are relatively larger)."""
    apex = quadrant_centers(grid, tile, shape)[quad - 1]
    x0, y0, x1, y1 = tile_bounds(grid, tile)
    corners = [Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)]
    dirs = []
    for c in corners:
        dx, dy = c[0] - apex[0], c[1] - apex[1]
        n = math.hypot(dx, dy)
        dirs.append((math.atan2(dy, dx) % (2.0 * math.pi), Point(dx / n, dy / n)))
    dirs.sort(key=lambda t: t[0])
    # The cone spans the complement of the largest angular gap between
    # consecutive corner directions.
    best_gap = dirs[0][0] + 2.0 * math.pi - dirs[-1][0]
    lo, hi = dirs[0], dirs[-1]
    for a, b in zip(dirs, dirs[1:]):
        gap = b[0] - a[0]
        if gap > best_gap:
            best_gap = gap
            lo, hi = b, a
    u, v = lo[1], hi[1]
    opening = math.acos(max(-1.0, min(1.0, u[0] * v[0] + u[1] * v[1])))
    return Cone(apex=apex, ray1=u, ray2=v, opening=opening)


def cone_contains(cone: Cone, p: Point, tol: float = 0.0) -> bool:
    """Membership in the closed wedge (opening < pi assumed)."""
    dx, dy = p[0] - cone.apex[0], p[1] - cone.apex[1]
    c1 = cone.ray1[0] * dy - cone.ray1[1] * dx   # left of ray1
    c2 = cone.ray2[0] * dy - cone.ray2[1] * dx   # right of ray2
    return c1 >= -tol and c2 <= tol


def segment_meets_cone(cone: Cone, a: Point, b: Point, tol: float = 0.0) -> bool:
    """Clip the segment against the wedge's two half-planes."""
    ax, ay = a[0] - cone.apex[0], a[1] - cone.apex[1]
    bx, by = b[0] - cone.apex[0], b[1] - cone.apex[1]
    lo, hi = 0.0, 1.0
    for (rx, ry), keep_left in ((cone.ray1, True), (cone.ray2, False)):
        fa = rx * ay - ry * ax
        fb = rx * by - ry * bx
        if not keep_left:
            fa, fb = -fa, -fb
        # keep f >= -tol
        if fa < -tol and fb < -tol:
            return False
        if fa != fb:
            t = (fa + tol) / (fa - fb)
            if fa < -tol:
                lo = max(lo, t)
            elif fb < -tol:
                hi = min(hi, t)
    return lo <= hi
