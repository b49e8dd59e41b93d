"""Backend selection for the hot kernels.

The compiled extension (Cython, int64 arithmetic) is used when it imported
successfully, the input provably fits in int64, and NEWTONSING_PURE is not
set.  Anything else runs the pure-Python big-integer reference path, so
results are exact in every configuration.
"""

import os

from . import _kernels_py

_speedups = None
if os.environ.get("NEWTONSING_PURE") != "1":
    try:
        from . import _speedups
    except ImportError:
        _speedups = None

backend_name = "compiled" if _speedups is not None else "pure"

_I64_SAFE = 2**62


def _box_fits_i64(rows, bounds, lo, hi):
    big = max((abs(lo[j]) + abs(hi[j]) for j in range(3)), default=0) + 1
    for row, m in zip(rows, bounds):
        if abs(m) >= _I64_SAFE:
            return False
        if sum(abs(a) for a in row) * big >= _I64_SAFE:
            return False
    return True


def count_violating(rows, bounds, lo, hi):
    """Count p in [lo, hi]^3 with rows[i].p < bounds[i] for some i."""
    if any(h < l for l, h in zip(lo, hi)):
        return 0
    if _speedups is not None and rows and _box_fits_i64(rows, bounds, lo, hi):
        return _speedups.count_violating(rows, bounds, lo, hi)
    return _kernels_py.count_violating(rows, bounds, lo, hi)


def collect_violating(rows, bounds, lo, hi):
    """The points counted by count_violating, in lexicographic order."""
    if any(h < l for l, h in zip(lo, hi)):
        return []
    if _speedups is not None and rows and _box_fits_i64(rows, bounds, lo, hi):
        return _speedups.collect_violating(rows, bounds, lo, hi)
    return _kernels_py.collect_violating(rows, bounds, lo, hi)


def laufer_complete(b, neighbors, is_node, m):
    """Complete the cycle `m` (a list, modified in place) to its Laufer fixpoint."""
    if _speedups is not None:
        cap = _I64_SAFE // (max(b, default=1) + max((len(n) for n in neighbors), default=0) + 2)
        if all(abs(x) < cap for x in m):
            steps = _speedups.laufer_complete(b, neighbors, is_node, m, cap)
            if steps >= 0:
                return steps
    return _kernels_py.laufer_complete(b, neighbors, is_node, m)
