"""Benchmark the compiled search kernel against the pure-Python reference.

Runs the same minimum-hitting-set searches through both implementations
and prints wall times plus the speedup.  Usage:

    python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from tensordim import _bb_py
from tensordim.graphs import CliqueFactors, tensor_clique_distances
from tensordim.solver import _factor_groups, build_pair_table

try:
    from tensordim import _bb
except ImportError:
    _bb = None


def product_instance(sizes):
    f = CliqueFactors(sizes)
    table = build_pair_table(tensor_clique_distances(f))
    gm, go = _factor_groups(f)
    n = f.vertex_count
    return f"product {'x'.join(map(str, sizes))}", [int(m) for m in table.masks], n, gm, go


def random_instance(seed, nbits, nmasks):
    rng = random.Random(seed)
    masks = []
    for _ in range(nmasks):
        m = 0
        for b in range(nbits):
            if rng.random() < 0.25:
                m |= 1 << b
        masks.append(m or 1 << rng.randrange(nbits))
    return f"random {nbits}b/{nmasks}m seed {seed}", masks, nbits, (), (0,)


def run_search(kernel, masks, nbits, gm, go):
    cand = (1 << nbits) - 1
    size = kernel.min_hitting_size(masks, cand, 0, 0, nbits + 1, gm, go)
    sol = kernel.lex_min_hitting_set(masks, cand, 0, size, gm, go)
    return size, sol


def best_time(kernel, args, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = run_search(kernel, *args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    opts = parser.parse_args()

    if _bb is None:
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1

    instances = [
        product_instance((4, 4)),
        product_instance((5, 5)),
        product_instance((6, 6)),
        product_instance((3, 3, 4)),
        random_instance(1, 20, 60),
        random_instance(2, 24, 80),
        random_instance(3, 28, 100),
    ]

    width = max(len(name) for name, *_ in instances)
    print(f"{'instance':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, masks, nbits, gm, go in instances:
        args = (masks, nbits, gm, go)
        t_py, r_py = best_time(_bb_py, args, opts.repeats)
        t_c, r_c = best_time(_bb, args, opts.repeats)
        if r_py != r_c:
            print(f"{name}: KERNEL MISMATCH {r_py} vs {r_c}", file=sys.stderr)
            return 1
        print(f"{name:<{width}}  {t_py:>9.4f}s  {t_c:>9.4f}s  {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
