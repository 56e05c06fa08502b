#!/usr/bin/env python3
"""Time the bounded-chain recurrence from cold caches at growing rank.

Usage: python3 scripts/benchmark_recurrence.py --p 2 --ranks 50,100,200,400
"""

import argparse
import sys
from time import perf_counter

from subchains import chains, qarith


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--ranks", default="50,100,200,400")
    args = ap.parse_args()
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    for n in [int(tok) for tok in args.ranks.split(",") if tok.strip()]:
        chains.clear_caches()
        qarith.clear_caches()
        start = perf_counter()
        bounded = chains.bounded_chains_recurrence(n, args.p)
        elapsed = perf_counter() - start
        print(f"n={n:5d}  {elapsed * 1000:10.1f} ms  rooted count has {len(str(2 * bounded))} digits")


if __name__ == "__main__":
    main()
