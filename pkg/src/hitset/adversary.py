"""Adaptive lower-bound game: nested-interval instances and the referee.

The instance puts n = 2^m collinear points on a short carrier segment and
builds, for every level i <= m and every index j, a translate containing
exactly the j-th block of 2^(m-i) consecutive points.  The referee
presents the level-0 object first and then always descends into the child
block that avoids every point the responder has placed, forcing one fresh
point per round from any single-point-per-round responder while a single
point hits everything presented.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Protocol

from .errors import BrokenInvariantError, ProtocolViolationError
from .geometry import DEFAULT_TOL, PlacedObject, Point, Shape, contains
from .offline import exact_min_hitting_set, to_set_system
from .online import INFEASIBLE, new_state, process

DEFAULT_SPAN = 0.2
_DEFAULT_ORIGIN = Point(0.0137, 0.0473)   # keeps the carrier off symmetry axes
_MAX_RETRIES = 20


@dataclass(frozen=True)
class AdversaryInstance:
    shape: Shape
    m: int
    n: int
    spacing: float
    origin: Point
    direction: Point
    points: tuple[Point, ...]
    objects: dict[tuple[int, int], PlacedObject]

    def interval_indices(self, level: int, index: int) -> tuple[int, int]:
        """1-based first/last point indices of block (level, index)."""
        width = 2 ** (self.m - level)
        return (index - 1) * width + 1, index * width


class GameRound(NamedTuple):
    level: int
    index: int
    center: Point
    new_points: tuple[Point, ...]


@dataclass(frozen=True)
class GameTranscript:
    shape: Shape
    levels: int              # m
    rounds_played: int       # m + 1 unless terminated early
    rounds: tuple[GameRound, ...]
    forced: int              # rounds where the responder placed >= 1 new point
    placed: tuple[Point, ...]
    opt_size: int


class Responder(Protocol):
    def receive(self, obj: PlacedObject) -> list[Point]: ...


def carrier_direction(shape: Shape) -> Point:
    """Unit carrier direction: the x-axis for disks, the chord from the
    first canonical vertex to the third for k-gons."""
    if shape.is_disk:
        return Point(1.0, 0.0)
    a0 = shape.vertices[0]
    a2 = shape.vertices[2]
    dx, dy = a2.x - a0.x, a2.y - a0.y
    n = math.hypot(dx, dy)
    return Point(dx / n, dy / n)


def _disk_center(origin: Point, u: Point, t_lo: float, t_hi: float,
                 delta: float) -> Point:
    # Center dropped below the carrier so the unit circle crosses it
    # delta/2 beyond each end of the covered block.
    rho = (t_hi - t_lo) / 2.0 + delta / 2.0
    drop = math.sqrt(1.0 - rho * rho)
    mid = (t_lo + t_hi) / 2.0
    return Point(origin[0] + mid * u[0] - drop * (-u[1]),
                 origin[1] + mid * u[1] - drop * u[0])


def _window(shape: Shape, u: Point, b: float) -> tuple[float, float] | None:
    """Carrier window {s : gauge(s*u - b*w) <= 1} of a k-gon centered at
    perpendicular offset b; None when empty."""
    lo, hi = -math.inf, math.inf
    wx, wy = -u[1], u[0]
    normals = shape.normals
    for j in range(0, len(normals), 2):
        nx, ny = normals[j], normals[j + 1]
        cu = nx * u[0] + ny * u[1]
        rhs = 1.0 + b * (nx * wx + ny * wy)
        if abs(cu) < 1e-14:
            if rhs < 0.0:
                return None
            continue
        bound = rhs / cu
        if cu > 0.0:
            hi = min(hi, bound)
        else:
            lo = max(lo, bound)
    if lo > hi:
        return None
    return lo, hi


def _kgon_center(shape: Shape, origin: Point, u: Point, t_lo: float,
                 t_hi: float, delta: float) -> Point | None:
    """Slide a translate along the carrier and push it sideways until its
    carrier window is exactly the block plus a delta/2 margin each side."""
    target = (t_hi - t_lo) + delta
    b_limit = shape.r_out + 0.1

    def width(b: float) -> float:
        win = _window(shape, u, b)
        return win[1] - win[0] if win else 0.0

    for sign in (1.0, -1.0):
        lo_b, hi_b = 0.0, sign * b_limit
        if not width(lo_b) > target:
            continue
        for _ in range(200):
            mid = (lo_b + hi_b) / 2.0
            if width(mid) > target:
                lo_b = mid
            else:
                hi_b = mid
        b = (lo_b + hi_b) / 2.0
        win = _window(shape, u, b)
        if win is None or abs((win[1] - win[0]) - target) > 1e-9:
            continue   # hit a slide direction parallel to an edge; flip side
        a = (t_lo - delta / 2.0) - win[0]
        wx, wy = -u[1], u[0]
        return Point(origin[0] + a * u[0] + b * wx,
                     origin[1] + a * u[1] + b * wy)
    return None


def build_instance(shape: Shape, m: int, spacing: float | None = None,
                   origin: Point = _DEFAULT_ORIGIN) -> AdversaryInstance:
    """Instance with 2^m carrier points and one object per interval block,
    each containing exactly its block's points (verified; the spacing is
    halved and the build retried if verification ever fails)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    n = 2 ** m
    u = carrier_direction(shape)
    delta = spacing if spacing is not None else DEFAULT_SPAN / (n - 1)

    for _ in range(_MAX_RETRIES):
        points = tuple(Point(origin[0] + (i * delta) * u[0],
                             origin[1] + (i * delta) * u[1])
                       for i in range(n))
        objects: dict[tuple[int, int], PlacedObject] = {}
        ok = True
        for level in range(m + 1):
            width = 2 ** (m - level)
            for index in range(1, 2 ** level + 1):
                first = (index - 1) * width     # 0-based
                last = index * width - 1
                t_lo, t_hi = first * delta, last * delta
                if shape.is_disk:
                    center = _disk_center(origin, u, t_lo, t_hi, delta)
                else:
                    center = _kgon_center(shape, origin, u, t_lo, t_hi, delta)
                if center is None:
                    ok = False
                    break
                obj = PlacedObject(shape=shape, center=center)
                inside = [contains(obj, p, DEFAULT_TOL) for p in points]
                if inside != [first <= i <= last for i in range(n)]:
                    ok = False
                    break
                objects[(level, index)] = obj
            if not ok:
                break
        if ok:
            return AdversaryInstance(shape=shape, m=m, n=n, spacing=delta,
                                     origin=origin, direction=u,
                                     points=points, objects=objects)
        delta /= 2.0
    raise BrokenInvariantError(
        f"could not realize exact interval containment for shape {shape.kind} "
        f"k={shape.k} after {_MAX_RETRIES} spacing halvings")


class FirstPointResponder:
    """Places the first (leftmost along the carrier) uncovered point of
    each unstabbed object; irreversible."""

    def __init__(self, instance: AdversaryInstance):
        self._points = instance.points
        self._placed: set[Point] = set()

    def receive(self, obj: PlacedObject) -> list[Point]:
        if any(contains(obj, h, DEFAULT_TOL) for h in self._placed):
            return []
        for p in self._points:
            if contains(obj, p, DEFAULT_TOL):
                self._placed.add(p)
                return [p]
        raise BrokenInvariantError("presented object contains no instance point")


class EngineResponder:
    """Adapter running the online engine as the responder."""

    def __init__(self, instance: AdversaryInstance):
        self.state = new_state(list(instance.points), instance.shape)

    def receive(self, obj: PlacedObject) -> list[Point]:
        result = process(self.state, obj)
        if result.status == INFEASIBLE:
            raise BrokenInvariantError("presented object contains no instance point")
        return [pl.point for pl in result.placements]


def play(instance: AdversaryInstance, responder: Responder) -> GameTranscript:
    """Run the adaptive game; m+1 rounds unless the responder floods both
    child blocks in some round (possible only with multi-point responders)."""
    m = instance.m
    point_set = set(instance.points)
    placed: list[Point] = []
    placed_set: set[Point] = set()
    rounds: list[GameRound] = []
    presented: list[PlacedObject] = []
    forced = 0
    index = 1

    for level in range(m + 1):
        obj = instance.objects[(level, index)]
        if any(contains(obj, h, DEFAULT_TOL) for h in placed):
            raise BrokenInvariantError(
                "descent chose an object already containing a placed point")
        presented.append(obj)

        new_points = list(responder.receive(obj))
        for p in new_points:
            if p not in point_set:
                raise ProtocolViolationError(
                    f"responder placed {p}, which is not an instance point")
        fresh = tuple(p for p in new_points if p not in placed_set)
        placed.extend(fresh)
        placed_set.update(fresh)
        if fresh:
            forced += 1
        if not any(contains(obj, h, DEFAULT_TOL) for h in placed):
            raise ProtocolViolationError(
                "responder left the presented object unstabbed")
        rounds.append(GameRound(level=level, index=index, center=obj.center,
                                new_points=fresh))

        running = sum(1 for p in instance.points
                      if all(contains(o, p, DEFAULT_TOL) for o in presented))
        if running != 2 ** (m - level):
            raise BrokenInvariantError(
                f"intersection of presented objects holds {running} points "
                f"after level {level}, expected {2 ** (m - level)}")

        if level == m:
            break
        left, right = 2 * index - 1, 2 * index
        left_clean = not any(contains(instance.objects[(level + 1, left)], h,
                                      DEFAULT_TOL) for h in placed)
        right_clean = not any(contains(instance.objects[(level + 1, right)], h,
                                       DEFAULT_TOL) for h in placed)
        if left_clean:
            index = left
        elif right_clean:
            index = right
        else:
            break   # both children contaminated: early termination

    system = to_set_system(list(instance.points), presented)
    opt = len(exact_min_hitting_set(system))
    return GameTranscript(shape=instance.shape, levels=m,
                          rounds_played=len(rounds), rounds=tuple(rounds),
                          forced=forced, placed=tuple(placed), opt_size=opt)
