"""Shared helpers for the test suite."""

import math

import pytest

from hitset.geometry import PlacedObject, Point, Shape, contains
from hitset.rng import SplitMix64
from hitset.tiling import (Grid, build_grid, object_meets_tile, quad_of,
                           quadrant_centers, tile_bounds, tile_of)

SHAPE_CLASSES = {
    "disk": Shape.disk(),
    "k4": Shape.kgon(4),
    "k7": Shape.kgon(7),
    "k5": Shape.kgon(5),
}

GAME_SHAPES = {
    "disk": Shape.disk(),
    "k4": Shape.kgon(4),
    "k5": Shape.kgon(5),
    "k6": Shape.kgon(6),
}


@pytest.fixture
def rng():
    return SplitMix64(0xC0FFEE)


def random_tile_config(rng: SplitMix64, shape: Shape, n_points: int):
    """A grid plus one tile holding exactly n_points points.

    Points are drawn inside a fixed tile-sized window; the grid built from
    them keeps each strictly interior, but may split them between tiles,
    so draws repeat until some tile holds the requested count.
    """
    side = shape.tile_side
    while True:
        pts = [Point(rng.uniform(0.0, side), rng.uniform(0.0, side))
               for _ in range(n_points)]
        grid = build_grid(pts, shape)
        by_tile = {}
        for p in pts:
            by_tile.setdefault(tile_of(grid, p), []).append(p)
        for tile, tpts in by_tile.items():
            if len(tpts) == n_points:
                return grid, tile, tpts
        # fall back to the fullest tile once points scatter consistently
        tile, tpts = max(by_tile.items(), key=lambda kv: (len(kv[1]), kv[0]))
        if len(tpts) >= max(2, n_points - 2):
            return grid, tile, tpts


def random_object_meeting_tile(rng: SplitMix64, grid: Grid, tile,
                               shape: Shape, quad: int | None = None,
                               needs_point: list[Point] | None = None,
                               max_tries: int = 10000) -> PlacedObject:
    """Rejection-sample a translate meeting the tile, optionally of one
    quadrant type and covering at least one of the given points."""
    cx, cy = ((tile_bounds(grid, tile)[0] + tile_bounds(grid, tile)[2]) / 2.0,
              (tile_bounds(grid, tile)[1] + tile_bounds(grid, tile)[3]) / 2.0)
    half = shape.super_side / 2.0
    for _ in range(max_tries):
        obj = PlacedObject(shape, Point(rng.uniform(cx - half, cx + half),
                                        rng.uniform(cy - half, cy + half)))
        if not object_meets_tile(grid, tile, obj):
            continue
        if quad is not None and quad_of(grid, tile, obj) != quad:
            continue
        if needs_point is not None and \
                not any(contains(obj, p) for p in needs_point):
            continue
        return obj
    raise RuntimeError("rejection sampling failed to find a qualifying object")


def euclid(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def angle_at(p: Point, x: Point, y: Point) -> float:
    """Angle between the rays p->x and p->y."""
    ax, ay = x[0] - p[0], x[1] - p[1]
    bx, by = y[0] - p[0], y[1] - p[1]
    na = math.hypot(ax, ay)
    nb = math.hypot(bx, by)
    if na < 1e-12 or nb < 1e-12:
        raise ValueError("angle undefined at a coincident point")
    c = (ax * bx + ay * by) / (na * nb)
    return math.acos(max(-1.0, min(1.0, c)))
