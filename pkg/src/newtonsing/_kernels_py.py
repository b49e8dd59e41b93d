"""Pure-Python reference implementations of the hot kernels.

`kernels` selects these when the compiled extension is unavailable (or
forced off via NEWTONSING_PURE=1).  Both backends must return identical
values on identical input; `tests/test_kernels.py` enforces this.
"""


def count_violating(rows, bounds, lo, hi):
    """Count p in the integer box [lo, hi]^3 with rows[i].p < bounds[i] for some i.

    `rows` is a list of integer 3-vectors, `bounds` a parallel list of ints.
    """
    count = 0
    for p0 in range(lo[0], hi[0] + 1):
        for p1 in range(lo[1], hi[1] + 1):
            for p2 in range(lo[2], hi[2] + 1):
                for (a0, a1, a2), m in zip(rows, bounds):
                    if a0 * p0 + a1 * p1 + a2 * p2 < m:
                        count += 1
                        break
    return count


def collect_violating(rows, bounds, lo, hi):
    """Like count_violating but returns the list of points."""
    points = []
    for p0 in range(lo[0], hi[0] + 1):
        for p1 in range(lo[1], hi[1] + 1):
            for p2 in range(lo[2], hi[2] + 1):
                for (a0, a1, a2), m in zip(rows, bounds):
                    if a0 * p0 + a1 * p1 + a2 * p2 < m:
                        points.append((p0, p1, p2))
                        break
    return points


def laufer_complete(b, neighbors, is_node, m):
    """Run the generalized Laufer sequence from the cycle `m` in place.

    While some non-node vertex v has (Z, E_v) = -b_v m_v + sum of neighbour
    coefficients > 0, increment m_v.  Terminates on negative definite graphs;
    returns the number of increments.  `neighbors` lists neighbour ids with
    multiplicity.
    """
    nv = len(b)
    s = [0] * nv
    for v in range(nv):
        t = -b[v] * m[v]
        for u in neighbors[v]:
            t += m[u]
        s[v] = t
    active = [v for v in range(nv) if not is_node[v] and s[v] > 0]
    steps = 0
    while active:
        v = active.pop()
        if s[v] <= 0:
            continue
        m[v] += 1
        steps += 1
        s[v] -= b[v]
        if not is_node[v] and s[v] > 0:
            active.append(v)
        for u in neighbors[v]:
            s[u] += 1
            if not is_node[u] and s[u] > 0:
                active.append(u)
    return steps
