"""Exact minimum hitting set at desk scale, plus the greedy baseline.

Objects become id-subsets of the point universe; duplicates collapse.
The exact solver is branch and bound: branch on a smallest unhit set,
prune with the greedy upper bound and a max-degree lower bound.  A scale
guard keeps it honest (<= 64 distinct sets, <= 128 points).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import TooLargeError
from .geometry import DEFAULT_TOL, PlacedObject, Point, contains

MAX_DISTINCT_SETS = 64
MAX_UNIVERSE = 128


@dataclass(frozen=True)
class SetSystem:
    universe: tuple[int, ...]
    sets: tuple[frozenset[int], ...]          # one per feasible object
    multiplicity: dict[frozenset[int], int] = field(default_factory=dict)
    infeasible: tuple[int, ...] = ()          # indices of empty-object inputs

    @property
    def distinct(self) -> tuple[frozenset[int], ...]:
        return tuple(self.multiplicity)


def to_set_system(points: list[Point], objects: list[PlacedObject],
                  tol: float = DEFAULT_TOL) -> SetSystem:
    """Evaluate geometric containment into an abstract set system."""
    sets = []
    infeasible = []
    multiplicity: dict[frozenset[int], int] = {}
    for idx, obj in enumerate(objects):
        members = frozenset(i for i, p in enumerate(points)
                            if contains(obj, p, tol))
        if not members:
            infeasible.append(idx)
            continue
        sets.append(members)
        multiplicity[members] = multiplicity.get(members, 0) + 1
    return SetSystem(universe=tuple(range(len(points))), sets=tuple(sets),
                     multiplicity=multiplicity, infeasible=tuple(infeasible))


def greedy_hitting_set(sys: SetSystem) -> list[int]:
    """Repeatedly take the point hitting the most unhit sets (lowest id on
    ties)."""
    for s in sys.sets:
        if not s:
            raise ValueError("set system contains an empty (unhittable) set")
    unhit = list(sys.multiplicity)
    chosen = []
    while unhit:
        degree: dict[int, int] = {}
        for s in unhit:
            for p in s:
                degree[p] = degree.get(p, 0) + 1
        pick = min(degree, key=lambda p: (-degree[p], p))
        chosen.append(pick)
        unhit = [s for s in unhit if pick not in s]
    return chosen


def exact_min_hitting_set(sys: SetSystem) -> list[int]:
    """Minimum-cardinality hitting set by branch and bound."""
    distinct = list(sys.multiplicity)
    for s in distinct:
        if not s:
            raise ValueError("set system contains an empty (unhittable) set")
    if len(distinct) > MAX_DISTINCT_SETS or len(sys.universe) > MAX_UNIVERSE:
        raise TooLargeError(
            f"{len(distinct)} distinct sets over {len(sys.universe)} points "
            f"exceeds the exact-solver guard "
            f"({MAX_DISTINCT_SETS} sets / {MAX_UNIVERSE} points)")
    if not distinct:
        return []

    best = sorted(greedy_hitting_set(sys))

    def lower_bound(remaining) -> int:
        degree: dict[int, int] = {}
        for s in remaining:
            for p in s:
                degree[p] = degree.get(p, 0) + 1
        return math.ceil(len(remaining) / max(degree.values()))

    def search(chosen: list[int], remaining: list[frozenset[int]]):
        nonlocal best
        if not remaining:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        if len(chosen) + lower_bound(remaining) >= len(best):
            return
        pivot = min(remaining, key=lambda s: (len(s), sorted(s)))
        for p in sorted(pivot):
            search(chosen + [p], [s for s in remaining if p not in s])

    search([], distinct)
    return best
