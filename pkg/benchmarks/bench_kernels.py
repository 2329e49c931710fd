#!/usr/bin/env python3
"""Benchmark the compiled counting kernel against the pure-Python fallback.

Both kernels enumerate independent sets over adjacency bitmasks, so the work
grows with the number of independent sets, not 2^V.  Chain cacti make good
benchmark subjects: the count is known exactly and scales geometrically with
the number of cycles.

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --specs 6^5/1,1,1 8^4/2,2 --repeats 5
"""

from __future__ import annotations

import argparse
import time

from chaincacti.chain_model import build, parse_spec
from chaincacti.kernels import _pure

try:
    from chaincacti.kernels import _speedups
except ImportError:
    _speedups = None

DEFAULT_SPECS = ["6,6,6/2", "6^4/2,3", "7^4/2,3", "8^4/2,2"]


def best_of(fn, masks, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        fn(masks)
        best = min(best, time.perf_counter() - started)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--specs", nargs="+", default=DEFAULT_SPECS)
    parser.add_argument("--repeats", type=int, default=3, help="best-of repeats")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernel not built; timing the pure kernel only\n")

    header = f"{'spec':<14} {'|V|':>4} {'sets':>12} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for text in args.specs:
        g = build(parse_spec(text))
        masks = g.adjacency_masks()
        counts = _pure.count_by_size(masks)
        if _speedups is not None:
            assert _speedups.count_by_size(masks) == counts, "kernels disagree"
        total = sum(counts)
        t_pure = best_of(_pure.count_by_size, masks, args.repeats)
        if _speedups is None:
            print(f"{text:<14} {g.num_vertices:>4} {total:>12} {t_pure:>9.3f}s {'-':>10} {'-':>8}")
        else:
            t_fast = best_of(_speedups.count_by_size, masks, args.repeats)
            ratio = t_pure / t_fast if t_fast > 0 else float("inf")
            print(
                f"{text:<14} {g.num_vertices:>4} {total:>12} "
                f"{t_pure:>9.3f}s {t_fast:>9.4f}s {ratio:>7.1f}x"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
