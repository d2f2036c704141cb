"""Deterministic SVG rendering of instances, streams and runs.

Layers are opt-in: the tile grid with super-squares, quadrant cones,
extreme points, and the chosen hitting points.  Output is plain SVG 1.1
with fixed number formatting so identical inputs give identical bytes.
"""

from __future__ import annotations

import math

from .extreme import build_extreme_structure
from .geometry import PlacedObject, Point, Shape
from .online import HittingState
from .tiling import Grid, cone_of, super_square, tile_of

_QUAD_COLORS = ("#c0392b", "#2980b9", "#27ae60", "#8e44ad")


def _fmt(v: float) -> str:
    return f"{v:.6f}"


class _Svg:
    def __init__(self):
        self.rows: list[str] = []

    def line(self, x1, y1, x2, y2, stroke, width, dash=None, opacity=None):
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        if opacity is not None:
            extra += f' stroke-opacity="{_fmt(opacity)}"'
        self.rows.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="{_fmt(width)}"{extra}/>')

    def circle(self, cx, cy, r, stroke, width, fill="none"):
        self.rows.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" '
            f'stroke="{stroke}" stroke-width="{_fmt(width)}" fill="{fill}"/>')

    def polygon(self, pts, stroke, width, fill="none"):
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        self.rows.append(
            f'<polygon points="{coords}" stroke="{stroke}" '
            f'stroke-width="{_fmt(width)}" fill="{fill}"/>')

    def rect(self, x, y, w, h, stroke, width, dash=None):
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.rows.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" height="{_fmt(h)}" '
            f'stroke="{stroke}" stroke-width="{_fmt(width)}" fill="none"{extra}/>')


def render_scene(shape: Shape, points: list[Point], objects: list[PlacedObject],
                 state: HittingState | None = None,
                 show_tiles: bool = False, show_cones: bool = False,
                 show_extreme: bool = False, show_hits: bool = False) -> str:
    """Render an instance plus stream; layers needing the grid or the run
    use the given state (already processed) when provided."""
    grid: Grid | None = state.grid if state is not None else None

    minx = min((p[0] for p in points), default=0.0)
    maxx = max((p[0] for p in points), default=1.0)
    miny = min((p[1] for p in points), default=0.0)
    maxy = max((p[1] for p in points), default=1.0)
    for obj in objects:
        minx = min(minx, obj.center[0] - shape.r_out)
        maxx = max(maxx, obj.center[0] + shape.r_out)
        miny = min(miny, obj.center[1] - shape.r_out)
        maxy = max(maxy, obj.center[1] + shape.r_out)
    pad = 0.5
    minx, maxx, miny, maxy = minx - pad, maxx + pad, miny - pad, maxy + pad
    scale = max(maxx - minx, maxy - miny)
    thin = scale / 600.0
    dot = scale / 150.0

    svg = _Svg()
    occupied = sorted({tile_of(grid, p) for p in points}) if grid else []

    if show_tiles and grid is not None:
        side = grid.tile_side
        i0 = math.floor((minx - grid.offset[0]) / side)
        i1 = math.ceil((maxx - grid.offset[0]) / side)
        for i in range(i0, i1 + 1):
            x = grid.offset[0] + i * side
            svg.line(x, miny, x, maxy, "#cccccc", thin)
        j0 = math.floor((miny - grid.offset[1]) / side)
        j1 = math.ceil((maxy - grid.offset[1]) / side)
        for j in range(j0, j1 + 1):
            y = grid.offset[1] + j * side
            svg.line(minx, y, maxx, y, "#cccccc", thin)
        for tile in occupied:
            sq = super_square(grid, tile, shape)
            # super-square outline plus its quadrant centers
            tcx = (sq.quadrant_centers[0][0] + sq.quadrant_centers[3][0]) / 2.0
            tcy = (sq.quadrant_centers[0][1] + sq.quadrant_centers[3][1]) / 2.0
            svg.rect(tcx - sq.side / 2.0, tcy - sq.side / 2.0, sq.side, sq.side,
                     "#999999", thin, dash=_fmt(4 * thin))
            for q, (qx, qy) in enumerate(sq.quadrant_centers, start=1):
                svg.circle(qx, qy, dot / 2.0, _QUAD_COLORS[q - 1], thin,
                           fill=_QUAD_COLORS[q - 1])

    if show_cones and grid is not None:
        reach = shape.super_side
        for tile in occupied:
            for q in (1, 2, 3, 4):
                cone = cone_of(grid, tile, q, shape)
                for ray in (cone.ray1, cone.ray2):
                    svg.line(cone.apex[0], cone.apex[1],
                             cone.apex[0] + reach * ray[0],
                             cone.apex[1] + reach * ray[1],
                             _QUAD_COLORS[q - 1], thin, opacity=0.6)

    for obj in objects:
        if shape.is_disk:
            svg.circle(obj.center[0], obj.center[1], 1.0, "#4a78b0", thin * 2)
        else:
            svg.polygon([(obj.center[0] + v.x, obj.center[1] + v.y)
                         for v in shape.vertices], "#4a78b0", thin * 2)

    if show_extreme and state is not None:
        for tile in occupied:
            for q in (1, 2, 3, 4):
                structure = build_extreme_structure(
                    tile, q, state.points_by_tile[tile], shape, state.grid,
                    samples=state.samples)
                for p in structure.points:
                    svg.circle(p[0], p[1], dot * 1.1, _QUAD_COLORS[q - 1], thin)

    for p in points:
        svg.circle(p[0], p[1], dot / 2.0, "#000000", thin, fill="#000000")

    if show_hits and state is not None:
        for h in state.hits:
            svg.line(h[0] - dot, h[1] - dot, h[0] + dot, h[1] + dot,
                     "#e01b1b", thin * 2.5)
            svg.line(h[0] - dot, h[1] + dot, h[0] + dot, h[1] - dot,
                     "#e01b1b", thin * 2.5)

    body = "\n".join(svg.rows)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(minx)} {_fmt(miny)} {_fmt(maxx - minx)} {_fmt(maxy - miny)}" '
        'width="800" height="800">\n'
        f'<g transform="translate(0,{_fmt(maxy + miny)}) scale(1,-1)">\n'
        f"{body}\n"
        "</g>\n</svg>\n"
    )
