"""Numeric kernel backend selection.

The hot inner loops (convex-distance gauge, candidate-curve scans, tile
overlap predicates) live in a small Cython extension.  When the extension
is not built, a pure-Python twin with identical semantics is used.
"""

try:
    from . import _fast as impl
except ImportError:  # extension not built; fall back
    from . import _pure as impl

from . import _pure as pure_impl

BACKEND = impl.BACKEND
KIND_DISK = impl.KIND_DISK
KIND_KGON = impl.KIND_KGON

gauge = impl.gauge
disk_box_overlap = impl.disk_box_overlap
poly_box_overlap = impl.poly_box_overlap
segment_scan = impl.segment_scan
arc_scan = impl.arc_scan


def available_backends() -> dict:
    """Map of importable backend name -> module (for parity tests and the
    backend benchmark)."""
    out = {"pure": pure_impl}
    if impl.BACKEND == "compiled":
        out["compiled"] = impl
    return out
