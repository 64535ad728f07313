#!/usr/bin/env python3
"""Benchmark the compiled row-reduction kernel against the pure-Python
reference.

Two workloads: random dense rational matrices, and the actual boundary
matrices of the staircase product of the torus model with a circle (the
largest complex the fixture library produces).  Run:

    python3 benchmarks/bench_kernel.py
"""

import random
import time
from fractions import Fraction

from lefcon import _rowreduce_py

try:
    from lefcon import _rowreduce
except ImportError:
    _rowreduce = None


def random_matrix(rng, nrows, ncols, span=9):
    return [
        [Fraction(rng.randint(-span, span), rng.randint(1, 7)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def boundary_workload():
    from lefcon import fixtures
    from lefcon.complexes import ChainComplexData
    from lefcon.products import product_pair

    prod = product_pair(fixtures.torus_product_pair(), fixtures.circle_pair())
    chain = ChainComplexData(prod.pair)
    return [
        [list(row) for row in chain.boundary_matrix(k).entries]
        for k in range(1, chain.dimension + 1)
    ]


def timeit(fn, *args, repeat=3):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def bench(label, rows):
    t_py, ref = timeit(_rowreduce_py.rref, rows)
    line = "%-38s python %8.4fs" % (label, t_py)
    if _rowreduce is not None:
        t_cy, got = timeit(_rowreduce.rref, rows)
        assert got == ref, "backends disagree on %s" % label
        line += "   compiled %8.4fs   speedup %5.2fx" % (t_cy, t_py / t_cy)
    print(line)


def main():
    print("row reduction: pure python vs compiled (best of 3, exact match checked)")
    rng = random.Random(12345)
    for n in (20, 40, 60):
        bench("random dense %dx%d" % (n, n), random_matrix(rng, n, n))
    for i, rows in enumerate(boundary_workload(), start=1):
        shape = "%dx%d" % (len(rows), len(rows[0]) if rows else 0)
        bench("torus-times-circle boundary d%d %s" % (i, shape), rows)
    if _rowreduce is None:
        print("compiled kernel not built; only the reference ran")


if __name__ == "__main__":
    main()
