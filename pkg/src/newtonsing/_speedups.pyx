# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: int64 box scans and the Laufer completion loop.

The wrappers in `kernels` only dispatch here when the input provably fits
in int64, so no overflow can occur in the scans; the Laufer loop checks its
growing coefficients against a cap and reports -1 to request the big-int
fallback.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def count_violating(rows, bounds, lo, hi):
    cdef cnp.ndarray[cnp.int64_t, ndim=2] a = np.asarray(rows, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] m = np.asarray(bounds, dtype=np.int64)
    cdef long long l0 = lo[0], l1 = lo[1], l2 = lo[2]
    cdef long long h0 = hi[0], h1 = hi[1], h2 = hi[2]
    cdef Py_ssize_t k = a.shape[0], i
    cdef long long p0, p1, p2, count = 0
    for p0 in range(l0, h0 + 1):
        for p1 in range(l1, h1 + 1):
            for p2 in range(l2, h2 + 1):
                for i in range(k):
                    if a[i, 0] * p0 + a[i, 1] * p1 + a[i, 2] * p2 < m[i]:
                        count += 1
                        break
    return int(count)


def collect_violating(rows, bounds, lo, hi):
    cdef cnp.ndarray[cnp.int64_t, ndim=2] a = np.asarray(rows, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] m = np.asarray(bounds, dtype=np.int64)
    cdef long long l0 = lo[0], l1 = lo[1], l2 = lo[2]
    cdef long long h0 = hi[0], h1 = hi[1], h2 = hi[2]
    cdef Py_ssize_t k = a.shape[0], i
    cdef long long p0, p1, p2
    out = []
    for p0 in range(l0, h0 + 1):
        for p1 in range(l1, h1 + 1):
            for p2 in range(l2, h2 + 1):
                for i in range(k):
                    if a[i, 0] * p0 + a[i, 1] * p1 + a[i, 2] * p2 < m[i]:
                        out.append((p0, p1, p2))
                        break
    return out


def laufer_complete(b, neighbors, is_node, m, cap):
    """Increment non-node coefficients while their pairing is positive.

    Returns the number of increments, or -1 when a coefficient would pass
    `cap` (caller falls back to exact big-int arithmetic).
    """
    cdef Py_ssize_t nv = len(b)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] bb = np.asarray(b, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] mm = np.asarray(m, dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] node = np.asarray(is_node, dtype=np.uint8)
    # flatten the neighbour lists
    offs = [0]
    flat = []
    for lst in neighbors:
        flat.extend(lst)
        offs.append(len(flat))
    cdef cnp.ndarray[cnp.int64_t, ndim=1] nbr = np.asarray(flat, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] off = np.asarray(offs, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] s = np.zeros(nv, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] stack = np.empty(max(4 * nv, 64), dtype=np.int64)
    cdef long long limit = cap
    cdef Py_ssize_t v, u, j, top = 0
    cdef long long t, steps = 0

    for v in range(nv):
        t = -bb[v] * mm[v]
        for j in range(off[v], off[v + 1]):
            t += mm[nbr[j]]
        s[v] = t
        if not node[v] and t > 0:
            stack[top] = v
            top += 1
    while top > 0:
        top -= 1
        v = stack[top]
        if s[v] <= 0:
            continue
        mm[v] += 1
        if mm[v] >= limit:
            return -1
        steps += 1
        s[v] -= bb[v]
        if top + off[v + 1] - off[v] + 1 >= stack.shape[0]:
            stack = np.concatenate([stack, np.empty(stack.shape[0], dtype=np.int64)])
        if not node[v] and s[v] > 0:
            stack[top] = v
            top += 1
        for j in range(off[v], off[v + 1]):
            u = nbr[j]
            s[u] += 1
            if not node[u] and s[u] > 0:
                stack[top] = u
                top += 1
    for v in range(nv):
        m[v] = mm[v]
    return int(steps)
