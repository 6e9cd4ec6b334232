#!/usr/bin/env python3
"""Compare the compiled scan kernel against the pure-Python twin.

Usage:  python benchmarks/bench_scan.py [--quick]

Workloads are the searches the library actually runs: full abelian-ideal
scans of one dimension stratum, and batched RREF over GF(p).  Both backends
execute identical work; results are cross-checked before timing is reported.
"""

import argparse
import random
import time

from leibniz_algebras._kernel import MODE_ABELIAN, MODE_IDEAL, implementations
from leibniz_algebras.algebra import direct_sum
from leibniz_algebras.families import abelian_algebra, oscillator
from leibniz_algebras.catalog import heisenberg_rotation_extension
from leibniz_algebras.fields import GF
from leibniz_algebras.search import table_flat


def scan_workloads(quick: bool):
    F3, F5 = GF(3), GF(5)
    yield ("rotation extension, GF(3)^4, dim 2, abelian",
           table_flat(heisenberg_rotation_extension(F3)), 4, 3, 2, MODE_ABELIAN)
    L5 = direct_sum(oscillator(F3), abelian_algebra(1, F3))
    yield ("oscillator (+) F, GF(3)^5, dim 3, abelian ideal",
           table_flat(L5), 5, 3, 3, MODE_ABELIAN | MODE_IDEAL)
    M5 = direct_sum(oscillator(F5), abelian_algebra(1, F5))
    yield ("oscillator (+) F, GF(5)^5, dim 2, abelian ideal",
           table_flat(M5), 5, 5, 2, MODE_ABELIAN | MODE_IDEAL)
    if not quick:
        yield ("oscillator (+) F, GF(5)^5, dim 3, abelian",
               table_flat(M5), 5, 5, 3, MODE_ABELIAN)
        L6 = direct_sum(oscillator(F3), abelian_algebra(2, F3))
        yield ("oscillator (+) F^2, GF(3)^6, dim 3, abelian ideal",
               table_flat(L6), 6, 3, 3, MODE_ABELIAN | MODE_IDEAL)


def bench_scans(impls, quick: bool):
    print("== subspace scans ==")
    print("%-52s %12s %10s %10s %8s" % ("workload", "subspaces", "python", "c", "speedup"))
    for name, flat, n, p, d, mode in scan_workloads(quick):
        results = {}
        times = {}
        for label, impl in impls.items():
            t0 = time.perf_counter()
            results[label] = impl.scan_subspaces(flat, n, p, d, mode, -1, -1)
            times[label] = time.perf_counter() - t0
        ref = results["python"]
        for label, res in results.items():
            assert res == ref, "backend disagreement on %s" % name
        scanned = ref[0]
        tp = times.get("python", float("nan"))
        tc = times.get("c")
        if tc is not None:
            print("%-52s %12d %9.4fs %9.4fs %7.1fx" % (name, scanned, tp, tc, tp / tc))
        else:
            print("%-52s %12d %9.4fs %10s" % (name, scanned, tp, "n/a"))


def bench_rref(impls, quick: bool):
    print("== batched rref over GF(p) ==")
    rng = random.Random(0)
    count = 2000 if quick else 10000
    mats = []
    for _ in range(count):
        r, c, p = rng.randint(2, 6), rng.randint(2, 6), rng.choice([2, 3, 5])
        mats.append((tuple(rng.randrange(p) for _ in range(r * c)), r, c, p))
    times = {}
    results = {}
    for label, impl in impls.items():
        t0 = time.perf_counter()
        results[label] = [impl.rref_mod(*m) for m in mats]
        times[label] = time.perf_counter() - t0
    for label in results:
        assert results[label] == results["python"]
    tp = times["python"]
    line = "%d matrices: python %.4fs" % (count, tp)
    if "c" in times:
        line += ", c %.4fs (%.1fx)" % (times["c"], tp / times["c"])
    print(line)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    impls = implementations()
    print("available backends: %s" % ", ".join(impls))
    if "c" not in impls:
        print("compiled kernel not built; timing the fallback only")
    bench_scans(impls, args.quick)
    bench_rref(impls, args.quick)


if __name__ == "__main__":
    main()
