"""Compiled kernels against their pure-Python fallbacks.

    python benchmarks/bench_kernels.py            # kernel micro-benchmarks
    python benchmarks/bench_kernels.py --full     # plus end-to-end runs per backend
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time
from itertools import permutations

from gorcodes import _fallback
from gorcodes.codes import code_to_group, enumerate_escc
from gorcodes.ehrhart import _box, facet_inequalities
from gorcodes.tables import ALL_ROWS

try:
    from gorcodes import _kernels
except ImportError:
    _kernels = None


def timed(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def point_count_workload():
    jobs = []
    for row in ALL_ROWS:
        s = row.simplex()
        for k in range(1, s.dim + 2):
            A, b = facet_inequalities(s, k)
            lo, hi = _box(s, k)
            jobs.append((A, b, lo, hi))
    return jobs


def lexmin_workload():
    # every group of length 6 under a single 6-column block (720 orders each)
    jobs = []
    for code in enumerate_escc(6):
        rows = list(code_to_group(code).vectors)
        jobs.append((rows, 2, [list(range(6))]))
    return jobs


def run_kernels(impl, count_jobs, lex_jobs, repeat):
    t_count = timed(lambda: [impl.count_points(*j, 10**9) for j in count_jobs], repeat)
    t_lex = timed(lambda: [impl.lexmin_permutation(*j) for j in lex_jobs], repeat)
    return t_count, t_lex


def end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["GORCODES_PURE"] = "1"
    start = time.perf_counter()
    subprocess.run(
        [sys.executable, "-m", "gorcodes.cli", "classify", "--s", "4", "--route", "both"],
        env=env, check=True, capture_output=True,
    )
    return time.perf_counter() - start


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--full", action="store_true", help="also time 'classify --s 4' per backend")
    ap.add_argument("--repeat", type=int, default=1, help="best of N timings per kernel")
    args = ap.parse_args()

    count_jobs, lex_jobs = point_count_workload(), lexmin_workload()
    print(f"workload: {len(count_jobs)} point counts (table simplices, all dilates), "
          f"{len(lex_jobs)} full lex-min searches over {len(list(permutations(range(6))))} orders")
    py = run_kernels(_fallback, count_jobs, lex_jobs, args.repeat)
    print(f"{'kernel':<22}{'python':>10}{'compiled':>10}{'speed-up':>10}")
    if _kernels is None:
        print("compiled extension not built; python times only")
        print(f"{'count_points':<22}{py[0]:>10.3f}\n{'lexmin_permutation':<22}{py[1]:>10.3f}")
    else:
        cy = run_kernels(_kernels, count_jobs, lex_jobs, args.repeat)
        for name, a, b in (("count_points", py[0], cy[0]), ("lexmin_permutation", py[1], cy[1])):
            print(f"{name:<22}{a:>10.3f}{b:>10.3f}{a / b:>9.1f}x")
    if args.full:
        print(f"classify --s 4 --route both: python {end_to_end(True):.1f}s, "
              f"default backend {end_to_end(False):.1f}s")


if __name__ == "__main__":
    main()
