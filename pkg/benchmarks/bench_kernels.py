"""Compare the compiled LR kernel with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Workloads are the raw LR-tableau counts behind full cup-product tables plus a
set of larger skew shapes.  Both kernels must return identical counts.
"""
from __future__ import annotations

import argparse
import itertools
import time

from grassfp import Partition, enumerate_basis, kernels
from grassfp._kernels_py import lr_count as py_count
from grassfp.littlewood_richardson import _candidate_shapes


def table_queries(k, n):
    basis = enumerate_basis(k, n)
    out = []
    for lam, mu in itertools.product(basis, repeat=2):
        for nu in _candidate_shapes(lam, mu, k) or ():
            inner = tuple(lam) + (0,) * (len(nu) - len(lam))
            out.append((tuple(nu), inner, tuple(mu)))
    return out


def large_queries():
    lam = mu = Partition((5, 4, 3, 2, 1))
    out = []
    for nu in _candidate_shapes(lam, mu, 8):
        inner = tuple(lam) + (0,) * (len(nu) - len(lam))
        out.append((tuple(nu), inner, tuple(mu)))
    return out


def best_of(fn, queries, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = [fn(*q) for q in queries]
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    workloads = {
        "Gr(3,8) table": table_queries(3, 8),
        "Gr(4,9) table": table_queries(4, 9),
        "s_54321^2, <= 8 rows": large_queries(),
    }
    if kernels.BACKEND != "cython":
        print("compiled kernel not available; timing the Python fallback only")
    print(f"{'workload':24s} {'queries':>8s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for name, queries in workloads.items():
        t_py, r_py = best_of(py_count, queries, args.repeat)
        if kernels.BACKEND == "cython":
            t_c, r_c = best_of(kernels.lr_count, queries, args.repeat)
            if r_c != r_py:
                raise SystemExit(f"{name}: kernels disagree")
            print(f"{name:24s} {len(queries):8d} {t_py:11.4f} {t_c:11.4f} {t_py / t_c:7.1f}x")
        else:
            print(f"{name:24s} {len(queries):8d} {t_py:11.4f} {'-':>11s} {'-':>8s}")


if __name__ == "__main__":
    main()
