"""Vertex ranking of a path and max-color queries.

A valid ranking colors the path so that between any two equal-colored
vertices some vertex carries a strictly larger color; consequently the
maximum color inside any contiguous interval is unique.  The ruler
sequence (1 + number of trailing zero bits of the position) achieves the
optimal floor(log2 n) + 1 colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .extreme import ExtremeStructure
from .geometry import Point


@dataclass(frozen=True)
class Ranking:
    colors: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def max_color(self) -> int:
        return max(self.colors) if self.colors else 0


def ruler_ranking(n: int) -> Ranking:
    """Ruler-sequence ranking of an n-vertex path."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    colors = tuple(((i + 1) & -(i + 1)).bit_length() for i in range(n))
    return Ranking(colors=colors)


def verify_ranking(colors: Sequence[int] | Ranking) -> bool:
    """Check the path vertex-ranking condition for every equal-color pair.

    Linear-time sweep: for each color, track the largest color seen since
    its previous occurrence; a repeat is legal only if that maximum
    exceeds the color itself.
    """
    if isinstance(colors, Ranking):
        colors = colors.colors
    max_since: dict[int, int] = {}
    for c in colors:
        if c in max_since and max_since[c] <= c:
            return False
        for seen in max_since:
            if max_since[seen] < c:
                max_since[seen] = c
        max_since[c] = 0
    return True


def max_color_in_interval(structure: ExtremeStructure, ranking: Ranking,
                          lo: int, hi: int) -> tuple[Point, int]:
    """Unique maximum-color vertex in positions [lo, hi] of the structure.

    Uniqueness inside any interval is what a valid ranking guarantees.
    """
    if not (0 <= lo <= hi < len(structure.points)):
        raise ValueError(f"invalid interval [{lo}, {hi}] for structure of "
                         f"size {len(structure.points)}")
    if len(ranking.colors) != len(structure.points):
        raise ValueError("ranking size does not match structure size")
    best = lo
    for i in range(lo + 1, hi + 1):
        if ranking.colors[i] > ranking.colors[best]:
            best = i
    return structure.points[best], ranking.colors[best]
