#!/usr/bin/env python3
"""Tabulate the rooted-chain-count polynomials and their values at small bases.

Usage: python3 scripts/first_terms.py --max-n 8 --p 2,3,5
"""

import argparse

from subchains.chains import chain_counts, rooted_chains_poly


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--p", default="2,3,5", help="comma-separated bases to evaluate at")
    args = ap.parse_args()
    bases = [int(tok) for tok in args.p.split(",") if tok.strip()]
    for n in range(args.max_n + 1):
        poly = rooted_chains_poly(n)
        values = "  ".join(f"F(p={p})={chain_counts(n, p).rooted}" for p in bases)
        print(f"n={n:2d}  F = {poly.to_text('p')}")
        print(f"      {values}")


if __name__ == "__main__":
    main()
