# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: same contract and arithmetic as `_pure`."""

from libc.math cimport cos, sin, sqrt
from libc.stdlib cimport malloc, free

BACKEND = "compiled"

KIND_DISK = 0
KIND_KGON = 1

cdef int _DISK = 0
cdef int _KGON = 1

cdef double _BIG = 1e300
cdef double _INV_PHI = (sqrt(5.0) - 1.0) / 2.0


cdef inline double _gauge(int kind, const double* normals, int n2,
                          double dx, double dy) nogil:
    cdef double best, d
    cdef int i
    if kind == _DISK:
        return sqrt(dx * dx + dy * dy)
    best = -_BIG
    for i in range(0, n2, 2):
        d = normals[i] * dx + normals[i + 1] * dy
        if d > best:
            best = d
    return best


def gauge(int kind, normals, double dx, double dy):
    """Minkowski functional of the shape at offset (dx, dy)."""
    cdef double[::1] nv
    if kind == _DISK:
        return sqrt(dx * dx + dy * dy)
    nv = normals
    return _gauge(kind, &nv[0], nv.shape[0], dx, dy)


def disk_box_overlap(double cx, double cy,
                     double x0, double y0, double x1, double y1):
    """Closed unit disk vs half-open box [x0,x1) x [y0,y1)."""
    cdef double qx = cx
    cdef double qy = cy
    cdef double d2
    if qx < x0:
        qx = x0
    elif qx > x1:
        qx = x1
    if qy < y0:
        qy = y0
    elif qy > y1:
        qy = y1
    d2 = (cx - qx) * (cx - qx) + (cy - qy) * (cy - qy)
    if d2 > 1.0:
        return 0
    if d2 < 1.0:
        return 1
    return 1 if (qx < x1 and qy < y1) else 0


def poly_box_overlap(normals, double cx, double cy,
                     double minx, double maxx, double miny, double maxy,
                     double x0, double y0, double x1, double y1):
    """Closed unit polygon vs half-open box (separating-axis test)."""
    cdef double[::1] nv = normals
    cdef int i, n2 = nv.shape[0]
    cdef double nx, ny, bx, by
    if maxx < x0 or minx >= x1 or maxy < y0 or miny >= y1:
        return 0
    for i in range(0, n2, 2):
        nx = nv[i]
        ny = nv[i + 1]
        bx = x0 if nx > 0.0 else x1
        by = y0 if ny > 0.0 else y1
        if nx * (bx - cx) + ny * (by - cy) > 1.0:
            return 0
    return 1


cdef inline double _strict_margin(int kind, const double* normals, int n2,
                                  double cx, double cy, double px, double py,
                                  const double* others, int m2) nogil:
    cdef double a = _gauge(kind, normals, n2, px - cx, py - cy)
    cdef double best = _BIG
    cdef double g
    cdef int i
    for i in range(0, m2, 2):
        g = _gauge(kind, normals, n2, others[i] - cx, others[i + 1] - cy)
        if g < best:
            best = g
    return best - a


cdef inline double _eval_seg(int kind, const double* normals, int n2,
                             double ax, double ay, double dx, double dy,
                             double px, double py,
                             const double* others, int m2, double t) nogil:
    return _strict_margin(kind, normals, n2, ax + t * dx, ay + t * dy,
                          px, py, others, m2)


cdef inline double _eval_arc(double px, double py,
                             const double* others, int m2, double t) nogil:
    return _strict_margin(_DISK, NULL, 0, px + cos(t), py + sin(t),
                          px, py, others, m2)


cdef double _refine(int curve, int kind, const double* normals, int n2,
                    double ax, double ay, double dx, double dy,
                    double px, double py, const double* others, int m2,
                    double lo, double hi, double tol) nogil:
    cdef double a = lo
    cdef double b = hi
    cdef double c = b - _INV_PHI * (b - a)
    cdef double d = a + _INV_PHI * (b - a)
    cdef double gc, gd
    if curve == 0:
        gc = _eval_seg(kind, normals, n2, ax, ay, dx, dy, px, py, others, m2, c)
        gd = _eval_seg(kind, normals, n2, ax, ay, dx, dy, px, py, others, m2, d)
    else:
        gc = _eval_arc(px, py, others, m2, c)
        gd = _eval_arc(px, py, others, m2, d)
    while b - a > tol:
        if gc > gd:
            b = d
            d = c
            gd = gc
            c = b - _INV_PHI * (b - a)
            if curve == 0:
                gc = _eval_seg(kind, normals, n2, ax, ay, dx, dy, px, py, others, m2, c)
            else:
                gc = _eval_arc(px, py, others, m2, c)
        else:
            a = c
            c = d
            gc = gd
            d = a + _INV_PHI * (b - a)
            if curve == 0:
                gd = _eval_seg(kind, normals, n2, ax, ay, dx, dy, px, py, others, m2, d)
            else:
                gd = _eval_arc(px, py, others, m2, d)
    return gc if gc > gd else gd


cdef _scan(int curve, int kind, const double* normals, int n2,
           double ax, double ay, double dx, double dy,
           double px, double py, const double* others, int m2,
           double eps, int early_exit, int samples, double refine_tol,
           double param_lo, double param_hi):
    cdef double g, best, step, lo, hi, left, right, span
    cdef double* gs
    cdef int i, found

    if samples < 2 or param_hi <= param_lo:
        if curve == 0:
            g = _eval_seg(kind, normals, n2, ax, ay, dx, dy, px, py, others, m2, param_lo)
        else:
            g = _eval_arc(px, py, others, m2, param_lo)
        return (1 if g > eps else 0), g

    step = (param_hi - param_lo) / (samples - 1)
    gs = <double*> malloc(samples * sizeof(double))
    if gs == NULL:
        raise MemoryError()
    best = -_BIG
    try:
        for i in range(samples):
            if curve == 0:
                g = _eval_seg(kind, normals, n2, ax, ay, dx, dy, px, py,
                              others, m2, param_lo + step * i)
            else:
                g = _eval_arc(px, py, others, m2, param_lo + step * i)
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
                g = _refine(curve, kind, normals, n2, ax, ay, dx, dy, px, py,
                            others, m2, lo, hi, span)
                if g > best:
                    best = g
                if early_exit and g > eps:
                    return 1, g
        found = 1 if best > eps else 0
        return found, best
    finally:
        free(gs)


def segment_scan(normals, double ax, double ay, double bx, double by,
                 double px, double py, others,
                 double eps, int early_exit, int samples, double refine_tol):
    """Scan candidate centers on the segment A-B (polygon shapes)."""
    cdef double[::1] nv = normals
    cdef double[::1] ov = others
    cdef const double* op = NULL
    if ov.shape[0] > 0:
        op = &ov[0]
    return _scan(0, _KGON, &nv[0], nv.shape[0],
                 ax, ay, bx - ax, by - ay, px, py, op, ov.shape[0],
                 eps, early_exit, samples, refine_tol, 0.0, 1.0)


def arc_scan(double px, double py, double phi0, double phi1, others,
             double eps, int early_exit, int samples, double refine_tol):
    """Scan candidate centers on the unit circle around (px, py)."""
    cdef double[::1] ov = others
    cdef const double* op = NULL
    if ov.shape[0] > 0:
        op = &ov[0]
    return _scan(1, _DISK, NULL, 0,
                 0.0, 0.0, 0.0, 0.0, px, py, op, ov.shape[0],
                 eps, early_exit, samples, refine_tol, phi0, phi1)
