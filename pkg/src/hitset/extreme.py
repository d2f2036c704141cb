"""Extreme points of a tile with respect to a quadrant center.

A tile point p is extreme for quadrant anchor o when some unit translate
touches p on its boundary, contains o, and contains no other point of the
tile.  Centers of translates touching p form the boundary of the
reflected shape placed at p; centers of translates containing o form the
reflected shape placed at o.  The decision therefore reduces to searching
a 1-D curve (one circular arc for disks, up to k clipped edge segments
for k-gons) for a spot where p is the strict nearest tile point under the
shape's convex distance.

The search is the one approximate step in the package: uniform sampling
along each sub-curve (default 4096 samples) plus golden-section
refinement of local maxima down to parameter tolerance 1e-12.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass

from . import _kernels as K
from .errors import DegenerateConfigurationError
from .geometry import Point, Shape, convex_distance
from .tiling import Grid, Tile, quadrant_centers, tile_of

DEFAULT_SAMPLES = 4096
CELL_EPS = 1e-9
_REFINE_TOL = 1e-12
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ExtremeStructure:
    """Extreme points of one (tile, quadrant), sorted by the angle of the
    ray from the quadrant center."""

    tile: Tile
    quad: int
    points: tuple[Point, ...]
    angles: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.points)


def direction_angle(o: Point, p: Point) -> float:
    """Polar angle of the ray from o through p, in [0, 2*pi)."""
    dx, dy = p[0] - o[0], p[1] - o[1]
    if dx == 0.0 and dy == 0.0:
        raise ValueError("direction_angle requires two distinct points")
    return math.atan2(dy, dx) % _TWO_PI


def in_strict_cell(c: Point, p: Point, others: list[Point], shape: Shape,
                   eps: float = CELL_EPS) -> bool:
    """True iff p is strictly nearer to c than every other point, by more
    than eps, under the shape's convex distance."""
    dp = convex_distance(shape, c, p)
    for q in others:
        if convex_distance(shape, c, q) - eps <= dp:
            return False
    return True


def candidate_subcurves(shape: Shape, p: Point, o: Point) -> list[tuple]:
    """Pieces of {centers c : p on the unit boundary at c} that also keep
    o covered.  Disk: [("arc", phi0, phi1)]; k-gon: [("seg", A, B), ...].
    Empty when no unit translate can reach both p and o."""
    if shape.is_disk:
        ux, uy = o[0] - p[0], o[1] - p[1]
        d = math.hypot(ux, uy)
        if d > 2.0:
            return []
        if d < 1e-12:
            return [("arc", 0.0, _TWO_PI)]
        alpha = math.acos(min(1.0, d / 2.0))
        phi = math.atan2(uy, ux)
        return [("arc", phi - alpha, phi + alpha)]

    # Vertices of the reflected shape placed at p.
    verts = [Point(p[0] - v.x, p[1] - v.y) for v in shape.vertices]
    normals = shape.normals
    k = len(verts)
    out = []
    for i in range(k):
        a = verts[i]
        b = verts[(i + 1) % k]
        lo, hi = 0.0, 1.0
        # Keep gauge(o - c) <= 1: for each outward normal n of the shape,
        # n . (o - c) <= 1.
        for j in range(0, len(normals), 2):
            nx, ny = normals[j], normals[j + 1]
            fa = nx * (o[0] - a[0]) + ny * (o[1] - a[1]) - 1.0
            fb = nx * (o[0] - b[0]) + ny * (o[1] - b[1]) - 1.0
            if fa > 0.0 and fb > 0.0:
                lo, hi = 1.0, 0.0
                break
            if fa > 0.0:
                lo = max(lo, fa / (fa - fb))
            elif fb > 0.0:
                hi = min(hi, fa / (fa - fb))
        if lo <= hi:
            out.append(("seg",
                        Point(a[0] + lo * (b[0] - a[0]), a[1] + lo * (b[1] - a[1])),
                        Point(a[0] + hi * (b[0] - a[0]), a[1] + hi * (b[1] - a[1]))))
    return out


def _others_flat(p: Point, tile_points: list[Point]) -> array:
    flat = array("d")
    for q in tile_points:
        if q != p:
            flat.append(q[0])
            flat.append(q[1])
    return flat


def _scan_curves(shape: Shape, p: Point, o: Point, others: array,
                 eps: float, early_exit: int, samples: int) -> tuple[bool, float]:
    best = -math.inf
    for curve in candidate_subcurves(shape, p, o):
        if curve[0] == "arc":
            found, g = K.arc_scan(p[0], p[1], curve[1], curve[2], others,
                                  eps, early_exit, samples, _REFINE_TOL)
        else:
            a, b = curve[1], curve[2]
            found, g = K.segment_scan(shape.normals, a[0], a[1], b[0], b[1],
                                      p[0], p[1], others,
                                      eps, early_exit, samples, _REFINE_TOL)
        if g > best:
            best = g
        if found:
            return True, best
    return False, best


def is_extreme(p: Point, tile: Tile, quad: int, tile_points: list[Point],
               shape: Shape, grid: Grid, samples: int = DEFAULT_SAMPLES,
               eps: float = CELL_EPS) -> bool:
    """Whether p is an extreme point of its tile for the given quadrant."""
    if tile_of(grid, p) != tile:
        raise ValueError(f"point {p} lies outside tile {tile}")
    o = quadrant_centers(grid, tile, shape)[quad - 1]
    others = _others_flat(p, tile_points)
    found, _ = _scan_curves(shape, p, o, others, eps, 1, samples)
    return found


def extreme_margin(p: Point, tile: Tile, quad: int, tile_points: list[Point],
                   shape: Shape, grid: Grid, samples: int = DEFAULT_SAMPLES,
                   eps: float = CELL_EPS) -> float:
    """Best strict-cell margin over the candidate curve (full scan).

    Positive above eps means extreme; values within ~1e-6 of eps flag a
    near-tangent configuration that tests should regenerate.  -inf when no
    unit translate reaches both p and the quadrant center."""
    if tile_of(grid, p) != tile:
        raise ValueError(f"point {p} lies outside tile {tile}")
    o = quadrant_centers(grid, tile, shape)[quad - 1]
    others = _others_flat(p, tile_points)
    _, best = _scan_curves(shape, p, o, others, eps, 0, samples)
    return best


def extreme_decision(p: Point, tile: Tile, quad: int, tile_points: list[Point],
                     shape: Shape, grid: Grid, samples: int = DEFAULT_SAMPLES,
                     eps: float = CELL_EPS,
                     safe_band: float = 1e-6) -> tuple[bool, bool]:
    """(is_extreme, near_tangent) in one pass.

    Exits early only when a candidate clears eps by more than safe_band,
    so a True answer with near_tangent False never hides a margin inside
    the band; otherwise the full scan yields the true maximum margin.
    """
    if tile_of(grid, p) != tile:
        raise ValueError(f"point {p} lies outside tile {tile}")
    o = quadrant_centers(grid, tile, shape)[quad - 1]
    others = _others_flat(p, tile_points)
    found, best = _scan_curves(shape, p, o, others, eps + safe_band, 1, samples)
    if found:
        return True, False
    return best > eps, abs(best - eps) <= safe_band


def build_extreme_structure(tile: Tile, quad: int, tile_points: list[Point],
                            shape: Shape, grid: Grid,
                            samples: int = DEFAULT_SAMPLES,
                            eps: float = CELL_EPS) -> ExtremeStructure:
    """Filter the tile's points down to the extreme ones and sort them by
    angle from the quadrant center."""
    o = quadrant_centers(grid, tile, shape)[quad - 1]
    chosen = []
    for p in tile_points:
        if is_extreme(p, tile, quad, tile_points, shape, grid, samples, eps):
            chosen.append((direction_angle(o, p), p))
    chosen.sort()
    for (a1, p1), (a2, p2) in zip(chosen, chosen[1:]):
        if a2 - a1 <= 1e-12:
            raise DegenerateConfigurationError(
                f"points {p1} and {p2} are collinear with the quadrant "
                f"center of tile {tile}; perturb the input")
    return ExtremeStructure(tile=tile, quad=quad,
                            points=tuple(p for _, p in chosen),
                            angles=tuple(a for a, _ in chosen))
