"""Benchmark the compiled search kernel against the pure-Python fallback.

Runs the same workloads through both backends by swapping the kernel
module the oracle dispatches to, and reports per-workload timings and
the speedup.  Usage::

    python3 benchmarks/bench_search.py [--repeat N]
"""

import argparse
import time

import vcew._backend as backend
import vcew._kernel_py as kernel_py
from vcew.families import clique_graph, cycle_graph, hypercube_graph, theta_graph
from vcew.graph import cartesian_product, vertex_connectivity
from vcew.oracle import find_weighting, mu_exact

try:
    import vcew._kernel as kernel_c
except ImportError:
    kernel_c = None


SEARCH_WORKLOADS = [
    ("mu(C12)", lambda: mu_exact(cycle_graph(12))),
    ("mu(K6)", lambda: mu_exact(clique_graph(6))),
    ("mu(theta(1,5,5))", lambda: mu_exact(theta_graph([1, 5, 5]))),
    ("mu(theta(4,4,4,4))", lambda: mu_exact(theta_graph([4, 4, 4, 4]))),
    ("mu(Q3)", lambda: mu_exact(hypercube_graph(3))),
    ("witness(Q3, 2)", lambda: find_weighting(hypercube_graph(3), 2)),
    (
        "witness(C4 x C4, 2)",
        lambda: find_weighting(
            cartesian_product(cycle_graph(4), cycle_graph(4)), 2, force=True
        ),
    ),
    (
        "kappa(Q3 x K4)",
        lambda: vertex_connectivity(
            cartesian_product(hypercube_graph(3), clique_graph(4))
        ),
    ),
    (
        "kappa(K6 x K6)",
        lambda: vertex_connectivity(
            cartesian_product(clique_graph(6), clique_graph(6))
        ),
    ),
]


def run_backend(kernel, repeat):
    saved = backend.kernel
    backend.kernel = kernel
    timings = {}
    try:
        for name, fn in SEARCH_WORKLOADS:
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                fn()
                best = min(best, time.perf_counter() - t0)
            timings[name] = best
    finally:
        backend.kernel = saved
    return timings


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best of N runs")
    args = parser.parse_args()

    if kernel_c is None:
        print("compiled kernel unavailable; benchmarking pure python only")
        kernels = [("python", kernel_py)]
    else:
        kernels = [("python", kernel_py), ("cython", kernel_c)]

    results = {name: run_backend(k, args.repeat) for name, k in kernels}

    width = max(len(name) for name, _ in SEARCH_WORKLOADS)
    header = f"{'workload':<{width}}  " + "  ".join(
        f"{name:>10}" for name, _ in kernels
    )
    if len(kernels) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, _ in SEARCH_WORKLOADS:
        row = f"{name:<{width}}  " + "  ".join(
            f"{results[bname][name] * 1000:>8.2f}ms" for bname, _ in kernels
        )
        if len(kernels) == 2:
            py, cy = results["python"][name], results["cython"][name]
            row += f"  {py / cy:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
