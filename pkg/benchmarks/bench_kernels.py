"""Benchmark the JIT-compiled kernels against the pure Python fallback.

Runs the same seeded grid-model solves in two subprocesses, one with
FLIPSEARCH_DISABLE_NUMBA=1, and reports wall time per solve. A warm-up
solve in each process keeps JIT compilation out of the measurements.

Usage: python3 benchmarks/bench_kernels.py [--size HxW] [--depth N]
"""

import argparse
import os
import subprocess
import sys

CHILD = """
import time
import flipsearch as fs
from flipsearch import kernels

size = {size!r}
depth = {depth}
warm = fs.generate_ising(fs.IsingSpec(5, 5, alpha=0.5, seed=0))
fs.flip_search(warm, fs.initial_configuration(warm, "unary_min"),
               fs.SolveParams(max_depth=depth, record_trace=False))
times = []
for seed in range(3):
    g = fs.generate_ising(fs.IsingSpec(size[0], size[1], alpha=0.5, seed=seed))
    c = fs.initial_configuration(g, "unary_min")
    t0 = time.perf_counter()
    r = fs.flip_search(g, c, fs.SolveParams(max_depth=depth, record_trace=False))
    times.append(time.perf_counter() - t0)
label = "numba" if kernels.USING_NUMBA else "pure-python"
print(f"{{label:12s}} best {{min(times):8.3f}}s  "
      f"mean {{sum(times) / len(times):8.3f}}s  "
      f"(final energy {{r.recomputed_energy:.6f}})")
"""


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", default="30x30", metavar="HxW")
    parser.add_argument("--depth", type=int, default=3)
    args = parser.parse_args()
    h, w = (int(x) for x in args.size.lower().split("x"))
    script = CHILD.format(size=(h, w), depth=args.depth)
    print(f"grid {h}x{w}, search depth {args.depth}, 3 seeds", flush=True)
    for disable in ("0", "1"):
        env = dict(os.environ, FLIPSEARCH_DISABLE_NUMBA=disable)
        subprocess.run([sys.executable, "-c", script], env=env, check=True)


if __name__ == "__main__":
    main()
