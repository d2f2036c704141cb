"""Dense-grid brute force for the extreme-point decision.

Independent second route for checking the curve sampler in `extreme`:
enumerate candidate centers on a dense grid covering the feasible region,
normalize each candidate radially so the touched point lands exactly on
the unit boundary, then test the three membership conditions directly
(point on boundary, quadrant center covered, every other tile point
strictly outside).  Vectorized with numpy; shares no code with the
sampler beyond the shape definition.
"""

from __future__ import annotations

import math

import numpy as np

from .geometry import Point, Shape

DEFAULT_RESOLUTION = 400
_EPS = 1e-9


def _normals_array(shape: Shape) -> np.ndarray:
    return np.asarray(shape.normals, dtype=float).reshape(-1, 2)


def _gauge_np(shape: Shape, normals: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Convex distance gauge of row vectors d (N, 2)."""
    if shape.is_disk:
        return np.hypot(d[:, 0], d[:, 1])
    return (d @ normals.T).max(axis=1)


def _mirror_bbox(shape: Shape) -> tuple[float, float, float, float]:
    if shape.is_disk:
        return -1.0, 1.0, -1.0, 1.0
    xs = [-v.x for v in shape.vertices]
    ys = [-v.y for v in shape.vertices]
    return min(xs), max(xs), min(ys), max(ys)


def brute_force_margin(p: Point, o: Point, tile_points: list[Point],
                       shape: Shape,
                       resolution: int = DEFAULT_RESOLUTION) -> float:
    """Best strict-separation margin found by the dense-grid search.

    Margin above eps means p is extreme; -inf when no candidate center
    covers the quadrant anchor at all.
    """
    bx0, bx1, by0, by1 = _mirror_bbox(shape)
    x0 = max(p[0] + bx0, o[0] + bx0)
    x1 = min(p[0] + bx1, o[0] + bx1)
    y0 = max(p[1] + by0, o[1] + by0)
    y1 = min(p[1] + by1, o[1] + by1)
    if x0 > x1 or y0 > y1:
        return -math.inf

    normals = _normals_array(shape)
    xs = np.linspace(x0, x1, resolution)
    ys = np.linspace(y0, y1, resolution)
    gx, gy = np.meshgrid(xs, ys)
    c = np.column_stack([gx.ravel(), gy.ravel()])

    pv = np.array([p[0], p[1]])
    ov = np.array([o[0], o[1]])

    # Radial normalization: scale each candidate about p so the unit copy
    # centered there touches p exactly.  Candidates far from the touching
    # locus are dropped first: every locus point inside the search box has
    # its own grid cell within a step of it, so the band loses no angular
    # coverage.  A Euclidean annulus prefilter avoids evaluating the exact
    # gauge on the whole grid (gauge(v) is between |v|/r_out and |v|).
    step = math.hypot((x1 - x0) / max(resolution - 1, 1),
                      (y1 - y0) / max(resolution - 1, 1))
    band = max(4.0 * step, 0.01)
    d = pv[None, :] - c
    norms = np.hypot(d[:, 0], d[:, 1])
    rough = (norms >= 1.0 - band) & (norms <= (1.0 + band) * shape.r_out)
    if not rough.any():
        return -math.inf
    c = c[rough]
    if shape.is_disk:
        lam = norms[rough]
    else:
        lam = _gauge_np(shape, normals, pv[None, :] - c)
    keep = np.abs(lam - 1.0) <= band
    if not keep.any():
        return -math.inf
    c = pv[None, :] + (c[keep] - pv[None, :]) / lam[keep, None]

    inside_o = _gauge_np(shape, normals, ov[None, :] - c) <= 1.0
    if not inside_o.any():
        return -math.inf
    c = c[inside_o]

    touch = _gauge_np(shape, normals, pv[None, :] - c)
    margin = np.full(len(c), np.inf)
    for q in tile_points:
        if q == p:
            continue
        qv = np.array([q[0], q[1]])
        margin = np.minimum(margin, _gauge_np(shape, normals, qv[None, :] - c))
    return float((margin - touch).max())


def brute_force_is_extreme(p: Point, o: Point, tile_points: list[Point],
                           shape: Shape,
                           resolution: int = DEFAULT_RESOLUTION,
                           eps: float = _EPS) -> bool:
    return brute_force_margin(p, o, tile_points, shape, resolution) > eps


def brute_force_extreme_set(tile_points: list[Point], o: Point, shape: Shape,
                            resolution: int = DEFAULT_RESOLUTION,
                            eps: float = _EPS) -> set[Point]:
    """All tile points the dense search classifies as extreme for o."""
    return {p for p in tile_points
            if brute_force_is_extreme(p, o, tile_points, shape, resolution, eps)}
