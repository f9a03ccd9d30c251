#!/usr/bin/env python3
"""Benchmark the compiled rank kernel against the pure-Python fallback.

The workload is the real one: boundary matrices of independence complexes,
a large batch of small ones (the survey regime) and the big sparse ones
from the girth4-planar family.  Run from the repository root:

    python3 benchmarks/bench_rank.py
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tfgor import RATIONALS, boundary_matrix, girth4_planar, independence_complex, parse_graph6
from tfgor import _purerank

try:
    from tfgor import _fastrank
except ImportError:
    _fastrank = None

FIXTURE = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "connected_trifree_2to9.g6"


def corpus_matrices(limit=400):
    mats = []
    with open(FIXTURE) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    for ln in lines[:: max(1, len(lines) // limit)]:
        c = independence_complex(parse_graph6(ln))
        for i in range(1, c.dim + 1):
            m = boundary_matrix(c, i, RATIONALS)
            if m.nrows and m.ncols:
                mats.append(m)
    return mats


def family_matrices(n):
    c = independence_complex(girth4_planar(n))
    return [
        boundary_matrix(c, i, RATIONALS)
        for i in range(1, c.dim + 1)
    ]


def run(kernel_int, kernel_mod, mats, repeats=3):
    best = None
    results = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        got = []
        for m in mats:
            triples = list(m.entries)
            r = kernel_int(m.nrows, m.ncols, triples)
            if r < 0:  # compiled kernel bailed; replay on the pure path
                r = _purerank.rank_int(m.nrows, m.ncols, triples)
            got.append((r, kernel_mod(m.nrows, m.ncols, triples, 2)))
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
        results = got
    return best, results


def main():
    workloads = [
        ("corpus boundaries (small, many)", corpus_matrices()),
        ("girth4-planar(5) boundaries", family_matrices(5)),
        ("girth4-planar(6) boundaries", family_matrices(6)),
    ]
    print(f"{'workload':<34} {'matrices':>8} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, mats in workloads:
        pure_t, pure_res = run(_purerank.rank_int, _purerank.rank_mod_p, mats)
        if _fastrank is None:
            print(f"{name:<34} {len(mats):>8} {pure_t:>9.3f}s {'n/a':>10} {'':>8}")
            continue
        fast_t, fast_res = run(_fastrank.rank_bareiss, _fastrank.rank_mod_p, mats)
        assert pure_res == fast_res, "kernel disagreement"
        print(
            f"{name:<34} {len(mats):>8} {pure_t:>9.3f}s {fast_t:>9.3f}s "
            f"{pure_t / fast_t:>7.1f}x"
        )
    if _fastrank is None:
        print("\ncompiled kernel not built; only the pure path was timed")


if __name__ == "__main__":
    main()
