"""Online hitting-set engine with irreversible decisions.

The point set is known up front; objects arrive one at a time.  An
arriving object already containing a chosen point costs nothing.  An
unstabbed object gets, for every tile holding one of its points, the
max-color extreme point among those it covers in that tile's structure
for its quadrant type.  Chosen points are never removed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import BrokenInvariantError
from .extreme import DEFAULT_SAMPLES, ExtremeStructure, build_extreme_structure
from .geometry import DEFAULT_TOL, PlacedObject, Point, Shape, contains
from .ranking import Ranking, max_color_in_interval, ruler_ranking
from .tiling import Grid, Tile, build_grid, quad_of, tile_of

ALREADY_STABBED = "already_stabbed"
ADDED = "added"
INFEASIBLE = "infeasible"


class Placement(NamedTuple):
    tile: Tile
    quad: int
    point: Point
    color: int


@dataclass(frozen=True)
class ProcessResult:
    status: str
    placements: tuple[Placement, ...] = ()


@dataclass(frozen=True)
class ObjectRecord:
    """Per-object decision log entry."""

    index: int
    center: Point
    status: str
    placements: tuple[Placement, ...] = ()


@dataclass
class HittingState:
    """Single-writer state of one online run."""

    shape: Shape
    grid: Grid
    points: tuple[Point, ...]
    points_by_tile: dict[Tile, list[Point]]
    tol: float = DEFAULT_TOL
    samples: int = DEFAULT_SAMPLES
    hits: list[Point] = field(default_factory=list)
    hit_set: set[Point] = field(default_factory=set)
    structures: dict[tuple[Tile, int], tuple[ExtremeStructure, Ranking]] = \
        field(default_factory=dict)
    colors_placed: dict[tuple[Tile, int], set[int]] = field(default_factory=dict)
    log: list[ObjectRecord] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def new_state(points: list[Point], shape: Shape,
              tol: float = DEFAULT_TOL,
              samples: int = DEFAULT_SAMPLES) -> HittingState:
    """Build the grid and an empty hitting set; extreme structures are
    computed lazily per (tile, quadrant) on first touch."""
    if not points:
        raise ValueError("the point set must be nonempty")
    unique = []
    seen = set()
    dupes = 0
    for p in points:
        p = Point(p[0], p[1])
        if p in seen:
            dupes += 1
            continue
        seen.add(p)
        unique.append(p)
    grid = build_grid(unique, shape)
    by_tile: dict[Tile, list[Point]] = {}
    for p in unique:
        by_tile.setdefault(tile_of(grid, p), []).append(p)
    state = HittingState(shape=shape, grid=grid, points=tuple(unique),
                         points_by_tile=by_tile, tol=tol, samples=samples)
    if dupes:
        state.warnings.append(f"deduplicated {dupes} duplicate point(s)")
    return state


def is_stabbed(state: HittingState, obj: PlacedObject) -> bool:
    return any(contains(obj, h, state.tol) for h in state.hits)


def _structure_for(state: HittingState, tile: Tile,
                   quad: int) -> tuple[ExtremeStructure, Ranking]:
    key = (tile, quad)
    cached = state.structures.get(key)
    if cached is None:
        structure = build_extreme_structure(
            tile, quad, state.points_by_tile[tile], state.shape, state.grid,
            samples=state.samples)
        cached = (structure, ruler_ranking(len(structure)))
        state.structures[key] = cached
    return cached


def process(state: HittingState, obj: PlacedObject) -> ProcessResult:
    """Handle one arriving object; irreversible."""
    if obj.shape != state.shape:
        raise ValueError("object is not a translate of the state's shape")

    covered = [p for p in state.points if contains(obj, p, state.tol)]
    if not covered:
        result = ProcessResult(status=INFEASIBLE)
        state.log.append(ObjectRecord(index=len(state.log), center=obj.center,
                                      status=INFEASIBLE))
        return result
    if is_stabbed(state, obj):
        result = ProcessResult(status=ALREADY_STABBED)
        state.log.append(ObjectRecord(index=len(state.log), center=obj.center,
                                      status=ALREADY_STABBED))
        return result

    by_tile: dict[Tile, list[Point]] = {}
    for p in covered:
        by_tile.setdefault(tile_of(state.grid, p), []).append(p)

    placements = []
    for tile in sorted(by_tile):
        quad = quad_of(state.grid, tile, obj, state.tol)
        structure, ranking = _structure_for(state, tile, quad)
        member = [contains(obj, q, state.tol) for q in structure.points]
        if not any(member):
            raise BrokenInvariantError(
                f"object at {obj.center} has points in tile {tile} but covers "
                f"no extreme point for quadrant {quad}")
        lo = member.index(True)
        hi = len(member) - 1 - member[::-1].index(True)
        if not all(member[lo:hi + 1]):
            raise BrokenInvariantError(
                f"object at {obj.center} covers a non-contiguous angular set "
                f"of extreme points in tile {tile}, quadrant {quad}")
        vertex, color = max_color_in_interval(structure, ranking, lo, hi)
        if vertex in state.hit_set:
            raise BrokenInvariantError(
                f"chosen point {vertex} is already in the hitting set, yet "
                f"the object at {obj.center} was reported unstabbed")
        state.hits.append(vertex)
        state.hit_set.add(vertex)
        state.colors_placed.setdefault((tile, quad), set()).add(color)
        placements.append(Placement(tile=tile, quad=quad, point=vertex,
                                    color=color))

    result = ProcessResult(status=ADDED, placements=tuple(placements))
    state.log.append(ObjectRecord(index=len(state.log), center=obj.center,
                                  status=ADDED, placements=tuple(placements)))
    return result


def solution(state: HittingState) -> list[Point]:
    """Current hitting set in insertion order."""
    return list(state.hits)
