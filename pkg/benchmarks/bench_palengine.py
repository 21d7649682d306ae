#!/usr/bin/env python3
"""Benchmark the palindromic-length kernels against each other.

Runs both the compiled extension and the pure-Python twin on
characteristic-word prefixes of growing length and prints a timing table;
also times raw prefix materialization.

    python benchmarks/bench_palengine.py
    python benchmarks/bench_palengine.py --directive "(2,3,1,4)" --lengths 10000,100000
"""

import argparse
import time

from sturmian import DirectiveSequence, WordFamily
from sturmian.pal_length import available_kernels, pal_length_fast


def time_once(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--directive", default="fib")
    ap.add_argument(
        "--lengths",
        default="10000,100000,1000000",
        help="comma-separated prefix lengths",
    )
    ap.add_argument(
        "--python-cap",
        type=int,
        default=1_000_000,
        help="skip the pure-Python kernel above this length",
    )
    ap.add_argument("--prefix-length", type=int, default=10_000_000,
                    help="length for the materialization timing")
    args = ap.parse_args()

    lengths = [int(t) for t in args.lengths.split(",")]
    fam = WordFamily(DirectiveSequence.parse(args.directive))
    kernels = sorted(available_kernels())
    print(f"directive: {args.directive}   kernels: {', '.join(kernels)}")
    print(f"{'length':>10}  {'kernel':>9}  {'seconds':>9}  {'pal_len':>7}  speedup")

    for length in lengths:
        word = fam.prefix(length)
        base = None
        for kernel in kernels:
            if kernel == "python" and length > args.python_cap:
                print(f"{length:>10}  {kernel:>9}  {'skipped':>9}")
                continue
            result = {}
            secs = time_once(lambda: result.setdefault("r", pal_length_fast(word, kernel=kernel)))
            pal = result["r"].pal_len
            if base is None:
                base = secs
                print(f"{length:>10}  {kernel:>9}  {secs:>9.3f}  {pal:>7}")
            else:
                print(f"{length:>10}  {kernel:>9}  {secs:>9.3f}  {pal:>7}  {secs / base:.1f}x")

    fam2 = WordFamily(DirectiveSequence.parse(args.directive))
    secs = time_once(lambda: fam2.prefix(args.prefix_length))
    print(f"\nprefix materialization: {args.prefix_length} symbols in {secs:.3f}s")


if __name__ == "__main__":
    main()
