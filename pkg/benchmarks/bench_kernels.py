"""Benchmark the compiled kernels against the pure-Python fallback.

Run from the repository root:

    python benchmarks/bench_kernels.py

Workloads mirror what the verification suites actually do: Warshall
closures on small relations, full pre-order enumeration, and the pruned
two-copy enumeration behind the co-relation suites.
"""

from __future__ import annotations

import random
import time

from poscat import _purekernels

try:
    from poscat import _kernels
except ImportError:
    _kernels = None

from poscat.constructions import double
from poscat.core import Relation, check_poset, default_carrier
from poscat.enumeration import _coproduct_envelope_forbidden


def closure_workload(kernel):
    rng = random.Random(7)
    n = 12
    cases = [
        tuple(rng.getrandbits(n) for _ in range(n)) for _ in range(2000)
    ]

    def run():
        for rows in cases:
            kernel.rtclosure(rows, n)

    return run


def preorders5_workload(kernel):
    def run():
        assert len(kernel.closed_extensions((0,) * 5, 5)) == 6942

    return run


def preorders6_workload(kernel):
    def run():
        assert len(kernel.closed_extensions((0,) * 6, 6)) == 209527

    return run


def corelation_workload(kernel):
    p = check_poset(Relation.diagonal(default_carrier(3)))
    dbl = double(p)
    forb = _coproduct_envelope_forbidden(p)

    def run():
        assert len(kernel.closed_extensions(dbl.rel.rows, 6, forb)) == 64

    return run


WORKLOADS = [
    ("rtclosure 12pt x2000", closure_workload),
    ("pre-orders on 5 points", preorders5_workload),
    ("pre-orders on 6 points", preorders6_workload),
    ("pruned 2-copy extensions", corelation_workload),
]


def best_of(run, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        run()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    backends = [("pure", _purekernels)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    else:
        print("compiled extension not available; timing the fallback only")
    print(f"{'workload':<28}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, factory in WORKLOADS:
        row = []
        for _, kernel in backends:
            row.append(best_of(factory(kernel)))
        speedup = row[0] / row[-1] if len(row) > 1 else 1.0
        cells = "".join(f"{t * 1000:>10.1f}ms" for t in row)
        print(f"{label:<28}{cells}{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
