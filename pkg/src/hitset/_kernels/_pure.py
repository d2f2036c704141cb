"""Pure-Python kernel twin.

Same functions and the same arithmetic, in the same order, as the
compiled `_fast` extension.  Used when the extension is unavailable and
as the reference side of the backend-parity tests.
"""

import math

BACKEND = "pure"

KIND_DISK = 0
KIND_KGON = 1

_BIG = 1e300
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def gauge(kind: int, normals, dx: float, dy: float) -> float:
    """Minkowski functional of the shape at offset (dx, dy).

    `normals` is the flat [nx0, ny0, nx1, ny1, ...] list of outward unit
    edge normals (every edge of a unit shape is at distance 1 from its
    center), ignored for disks.
    """
    if kind == KIND_DISK:
        return math.sqrt(dx * dx + dy * dy)
    best = -_BIG
    for i in range(0, len(normals), 2):
        d = normals[i] * dx + normals[i + 1] * dy
        if d > best:
            best = d
    return best


def disk_box_overlap(cx: float, cy: float,
                     x0: float, y0: float, x1: float, y1: float) -> int:
    """Closed unit disk vs half-open box [x0,x1) x [y0,y1)."""
    qx = cx
    if qx < x0:
        qx = x0
    elif qx > x1:
        qx = x1
    qy = cy
    if qy < y0:
        qy = y0
    elif qy > y1:
        qy = y1
    d2 = (cx - qx) * (cx - qx) + (cy - qy) * (cy - qy)
    if d2 > 1.0:
        return 0
    if d2 < 1.0:
        return 1
    # Touching exactly: the unique nearest box point must be owned by the
    # half-open tile.
    return 1 if (qx < x1 and qy < y1) else 0


def poly_box_overlap(normals, cx: float, cy: float,
                     minx: float, maxx: float, miny: float, maxy: float,
                     x0: float, y0: float, x1: float, y1: float) -> int:
    """Closed unit polygon (center cx,cy, bbox given) vs half-open box.

    Separating-axis test over the box axes and the polygon edge normals.
    Half-openness is enforced exactly on the axis-aligned directions;
    zero-measure slanted touching counts as overlap.
    """
    if maxx < x0 or minx >= x1 or maxy < y0 or miny >= y1:
        return 0
    for i in range(0, len(normals), 2):
        nx = normals[i]
        ny = normals[i + 1]
        bx = x0 if nx > 0.0 else x1
        by = y0 if ny > 0.0 else y1
        if nx * (bx - cx) + ny * (by - cy) > 1.0:
            return 0
    return 1


def _strict_margin(kind, normals, cx, cy, px, py, others):
    a = gauge(kind, normals, px - cx, py - cy)
    best = _BIG
    for i in range(0, len(others), 2):
        g = gauge(kind, normals, others[i] - cx, others[i + 1] - cy)
        if g < best:
            best = g
    return best - a


def _refine(eval_at, lo, hi, tol):
    """Golden-section maximization of the strict margin over [lo, hi]."""
    a = lo
    b = hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    gc = eval_at(c)
    gd = eval_at(d)
    while b - a > tol:
        if gc > gd:
            b = d
            d = c
            gd = gc
            c = b - _INV_PHI * (b - a)
            gc = eval_at(c)
        else:
            a = c
            c = d
            gc = gd
            d = a + _INV_PHI * (b - a)
            gd = eval_at(d)
    return gc if gc > gd else gd


def _scan(kind, normals, px, py, others, eps, early_exit, samples, refine_tol,
          param_lo, param_hi, candidate):
    """Scan a 1-D candidate curve; returns (found, best_margin).

    `candidate(t)` maps a parameter in [param_lo, param_hi] to a center.
    found means some candidate has every competitor strictly farther (by
    more than eps) than the touched point (px, py).
    """
    def eval_at(t):
        cx, cy = candidate(t)
        return _strict_margin(kind, normals, cx, cy, px, py, others)

    if samples < 2 or param_hi <= param_lo:
        g = eval_at(param_lo)
        return (1 if g > eps else 0), g

    step = (param_hi - param_lo) / (samples - 1)
    gs = [0.0] * samples
    best = -_BIG
    for i in range(samples):
        g = eval_at(param_lo + step * i)
        gs[i] = g
        if g > best:
            best = g
        if early_exit and g > eps:
            return 1, g

    span = refine_tol if refine_tol > 0.0 else 1e-12
    for i in range(samples):
        left = gs[i - 1] if i > 0 else -_BIG
        right = gs[i + 1] if i + 1 < samples else -_BIG
        if gs[i] > left and gs[i] >= right:
            lo = param_lo + step * (i - 1) if i > 0 else param_lo
            hi = param_lo + step * (i + 1) if i + 1 < samples else param_hi
            g = _refine(eval_at, lo, hi, span)
            if g > best:
                best = g
            if early_exit and g > eps:
                return 1, g
    return (1 if best > eps else 0), best


def segment_scan(normals, ax, ay, bx, by, px, py, others,
                 eps, early_exit, samples, refine_tol):
    """Scan candidate centers on the segment A-B (polygon shapes)."""
    dx = bx - ax
    dy = by - ay

    def candidate(t):
        return ax + t * dx, ay + t * dy

    return _scan(KIND_KGON, normals, px, py, others, eps, early_exit,
                 samples, refine_tol, 0.0, 1.0, candidate)


def arc_scan(px, py, phi0, phi1, others, eps, early_exit, samples, refine_tol):
    """Scan candidate centers on the unit circle around (px, py) between
    angles phi0..phi1 (disk shapes)."""

    def candidate(t):
        return px + math.cos(t), py + math.sin(t)

    return _scan(KIND_DISK, None, px, py, others, eps, early_exit,
                 samples, refine_tol, phi0, phi1, candidate)
