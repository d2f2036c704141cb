"""Hitting-set / set-cover dualization.

The dual instance swaps roles: dual points are the primal object centers,
and dual objects are reflected copies of the shape centered at the primal
points.  Membership transposes exactly: a primal point lies in a primal
object iff the object's center (as a dual point) lies in the reflected
copy at that point.  Covering the primal points with objects is the same
problem as hitting the dual objects with dual points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import DEFAULT_TOL, PlacedObject, Point, Shape, contains, reflect


@dataclass(frozen=True)
class DualInstance:
    shape: Shape                       # the reflected generator
    points: tuple[Point, ...]          # one per primal object
    objects: tuple[PlacedObject, ...]  # one per primal point


def dualize(points: list[Point], objects: list[PlacedObject],
            shape: Shape) -> DualInstance:
    """Transform (points, objects) into the equivalent dual instance."""
    for obj in objects:
        if obj.shape != shape:
            raise ValueError("all objects must be translates of the given shape")
    mirrored = reflect(shape)
    return DualInstance(
        shape=mirrored,
        points=tuple(obj.center for obj in objects),
        objects=tuple(PlacedObject(shape=mirrored, center=Point(p[0], p[1]))
                      for p in points),
    )


def incidence_matrix(points: list[Point], objects: list[PlacedObject],
                     tol: float = DEFAULT_TOL) -> list[list[bool]]:
    """rows = points, columns = objects."""
    return [[contains(obj, p, tol) for obj in objects] for p in points]
