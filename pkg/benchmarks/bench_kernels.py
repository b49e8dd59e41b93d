#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot loops on representative workloads: box scans coming from
the lattice-point oracles, and Laufer completions as driven by the
computation sequences.  Run after building the extension:

    python benchmarks/bench_kernels.py
"""

import random
import time

from newtonsing import _kernels_py, kernels
from newtonsing.graph import oka_graph
from newtonsing.newton import Support, brieskorn

FRONT_PAGE = [(4, 0, 0), (3, 2, 0), (0, 10, 0), (2, 0, 3), (0, 3, 4), (0, 0, 8)]


def bench(label, compiled_fn, pure_fn, repeat=3):
    best_c = best_p = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        rc = compiled_fn()
        best_c = min(best_c, time.perf_counter() - t0)
        t0 = time.perf_counter()
        rp = pure_fn()
        best_p = min(best_p, time.perf_counter() - t0)
        assert rc == rp, f"{label}: backend results differ"
    speedup = best_p / best_c if best_c > 0 else float("inf")
    print(f"{label:<36} compiled {best_c*1e3:9.2f} ms   pure {best_p*1e3:9.2f} ms   x{speedup:,.1f}")


def scan_workload():
    og = oka_graph(Support(FRONT_PAGE))
    rows = list(og.ell)
    bounds = [40 * sum(f) for f in og.ell]
    hi = [120, 120, 120]
    return rows, bounds, hi


def laufer_workload():
    og = oka_graph(brieskorn(3, 5, 7))
    g = og.graph
    rng = random.Random(1)
    starts = []
    for _ in range(400):
        z = [0] * g.nv
        for n in g.nodes:
            z[n] = rng.randint(0, 60)
        starts.append(z)
    return g, [g.degree[v] >= 3 for v in range(g.nv)], starts


def main():
    print(f"active backend: {kernels.backend_name}")
    if kernels.backend_name != "compiled":
        print("extension not built; both columns use the pure path")

    rows, bounds, hi = scan_workload()
    bench(
        "box scan: count (121^3 points)",
        lambda: kernels.count_violating(rows, bounds, [0, 0, 0], hi),
        lambda: _kernels_py.count_violating(rows, bounds, [0, 0, 0], hi),
    )
    bench(
        "box scan: collect (121^3 points)",
        lambda: len(kernels.collect_violating(rows, bounds, [0, 0, 0], hi)),
        lambda: len(_kernels_py.collect_violating(rows, bounds, [0, 0, 0], hi)),
    )

    g, is_node, starts = laufer_workload()

    def run(fn):
        total = 0
        out = []
        for z in starts:
            m = list(z)
            total += fn(list(g.b), g.neighbors, is_node, m)
            out.append(tuple(m))
        return total, out

    bench(
        "Laufer completion (400 cycles)",
        lambda: run(kernels.laufer_complete),
        lambda: run(_kernels_py.laufer_complete),
    )


if __name__ == "__main__":
    main()
