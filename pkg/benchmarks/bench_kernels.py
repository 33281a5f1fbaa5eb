"""Timing comparison of the compiled and pure linear-algebra kernels.

The backend is chosen once at import (FLAGBOUND_PURE=1 forces the
pure-Python kernel), so this script runs the same workloads in two
subprocesses, one per backend, and prints the times side by side.

    python3 benchmarks/bench_kernels.py
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time


def run_workloads(repeat):
    import numpy as np

    from flagbound import linalg
    from flagbound.distvec import full_type
    from flagbound.flagalg import enumerate_flag_variety, enumerate_grassmannian, variety_pair_census

    rng = random.Random(2024)
    results = {}

    mats = [
        tuple(tuple(rng.randrange(5) for _ in range(12)) for _ in range(8))
        for _ in range(300)
    ]
    start = time.perf_counter()
    for _ in range(repeat):
        for m in mats:
            linalg.rref_rows(m, 5)
    results[f"rref, {300 * repeat} matrices 8x12 over F_5"] = time.perf_counter() - start

    subs = list(enumerate_grassmannian(2, 6, 2))
    bases = np.array([[list(r) for r in s.rows] for s in subs], dtype=np.int64)
    start = time.perf_counter()
    for _ in range(repeat):
        linalg.pairwise_distance_table(bases, 2)
    results[f"pairwise distances, G_2(2,6) ({len(subs)} subspaces), x{repeat}"] = (
        time.perf_counter() - start
    )

    start = time.perf_counter()
    for _ in range(repeat):
        count = sum(1 for _ in enumerate_flag_variety(3, full_type(4)))
    results[f"enumerate full flag variety n=4 over F_3 ({count} flags), x{repeat}"] = (
        time.perf_counter() - start
    )

    start = time.perf_counter()
    variety_pair_census(full_type(4), 2)
    results["pair census, full flag variety n=4 over F_2"] = time.perf_counter() - start

    return results


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args(argv)

    if args.child:
        from flagbound import linalg

        print(json.dumps({"backend": linalg.backend(), "results": run_workloads(args.repeat)}))
        return 0

    timings = {}
    for pure in ("0", "1"):
        env = dict(os.environ, FLAGBOUND_PURE=pure)
        proc = subprocess.run(
            [sys.executable, __file__, "--child", "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True, check=True,
        )
        payload = json.loads(proc.stdout)
        timings[payload["backend"]] = payload["results"]

    if set(timings) != {"compiled", "pure"}:
        print("note: compiled kernel unavailable, both runs used the pure backend")
    names = list(next(iter(timings.values())))
    width = max(len(n) for n in names)
    print(f"{'workload'.ljust(width)}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}")
    for name in names:
        compiled = timings.get("compiled", {}).get(name)
        pure = timings.get("pure", {}).get(name)
        if compiled is None or pure is None:
            continue
        ratio = pure / compiled if compiled > 0 else float("inf")
        print(f"{name.ljust(width)}  {compiled:>9.3f}s  {pure:>9.3f}s  {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
