"""Command-line front-end: chain counts, polynomial tables, verification runs.

Results go to stdout, diagnostics and errors to stderr. Exit codes: 0 on
success, 1 when a verification run finds a mismatch, 2 on bad flags or
domain errors (the message names the violated bound).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from time import perf_counter

from . import chains, lattice, qarith
from .chains import CLOSED_FORM_CAP_ENV, DEFAULT_CLOSED_FORM_CAP
from .lattice import DEFAULT_NODE_BUDGET, NODE_BUDGET_ENV

RECORD_KEYS = ("p", "n", "F", "D", "C", "method", "elapsed_ms")
FORMATS = ("text", "json", "csv")

DEFAULT_VERIFY_PRIMES = (2, 3, 5, 7)
DEFAULT_VERIFY_MAX_N = 10
DEFAULT_VERIFY_GRID = ((2, 4), (3, 3), (5, 2), (7, 2))


def _record(p, n: int, counts: chains.ChainCounts, method: str, elapsed_ms: float) -> dict:
    # F/D/C as decimal strings: values are unbounded and must never be
    # truncated or switched to scientific notation.
    return {
        "p": p,
        "n": n,
        "F": str(counts.rooted),
        "D": str(counts.unrooted),
        "C": str(counts.total),
        "method": method,
        "elapsed_ms": round(elapsed_ms, 3),
    }


def _record_text(record: dict) -> str:
    return " ".join(f"{key}={record[key]}" for key in record)


def _json_line(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _print_records(records: list[dict], fmt: str) -> None:
    if fmt == "text":
        for record in records:
            print(_record_text(record))
    elif fmt == "json":
        for record in records:
            print(_json_line(record))
    else:
        writer = _csv_writer()
        writer.writerow(RECORD_KEYS)
        for record in records:
            writer.writerow([record[key] for key in RECORD_KEYS])


def cmd_count(args: argparse.Namespace) -> int:
    start = perf_counter()
    counts = chains.chain_counts(args.n, args.p, method=args.method)
    record = _record(args.p, args.n, counts, args.method, (perf_counter() - start) * 1000.0)
    _print_records([record], args.format)
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    poly = chains.rooted_chains_poly(args.n)
    if args.format == "text":
        print(poly.to_text("p"))
    elif args.format == "json":
        print(_json_line({"n": args.n, "coefficients": poly.coefficient_strings(), "text": poly.to_text("p")}))
    else:
        _csv_writer().writerow(poly.coefficient_strings())
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        raise ValueError(f"--max-n must be >= 0, got {args.max_n}")
    records = []
    for n in range(args.max_n + 1):
        start = perf_counter()
        counts = chains.chain_counts(n, args.p, method=args.method)
        records.append(_record(args.p, n, counts, args.method, (perf_counter() - start) * 1000.0))
    _print_records(records, args.format)
    return 0


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise ValueError(f"{flag} expects a comma-separated list of integers, got {text!r}") from None
    if not values:
        raise ValueError(f"{flag} expects at least one integer, got {text!r}")
    return values


def _parse_grid(text: str) -> list[tuple[int, int]]:
    grid = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        head, sep, tail = token.partition(":")
        if not sep:
            raise ValueError(f"bad --oracle entry {token!r}; expected p:max_n")
        try:
            grid.append((int(head), int(tail)))
        except ValueError:
            raise ValueError(f"bad --oracle entry {token!r}; expected p:max_n") from None
    if not grid:
        raise ValueError(f"--oracle expects entries like 2:4,3:3, got {text!r}")
    return grid


def cmd_verify(args: argparse.Namespace) -> int:
    default_run = args.p is None and args.max_n is None and args.oracle is None
    run_methods = default_run or args.p is not None or args.max_n is not None
    primes = _parse_int_list(args.p, "--p") if args.p else list(DEFAULT_VERIFY_PRIMES)
    max_n = args.max_n if args.max_n is not None else DEFAULT_VERIFY_MAX_N
    if args.oracle:
        grid = _parse_grid(args.oracle)
    elif default_run:
        grid = list(DEFAULT_VERIFY_GRID)
    else:
        grid = []

    passed = 0
    failed = 0

    def report(name: str, ok: bool, detail: str) -> None:
        nonlocal passed, failed
        print(f"{'PASS' if ok else 'FAIL'} {name} {detail}")
        if ok:
            passed += 1
        else:
            failed += 1

    if run_methods:
        for p in primes:
            for n in range(max_n + 1):
                a = chains.bounded_chains_recurrence(n, p)
                b = chains.bounded_chains_closed_form(n, p)
                if a == b:
                    report("methods-agree", True, f"p={p} n={n} ({2 * a if n else 1} rooted)")
                else:
                    report("methods-agree", False, f"p={p} n={n} (recurrence {a} != closed_form {b})")

    for p, n_hi in grid:
        for n in range(1, n_hi + 1):
            lat = lattice.build_lattice(p, n, budget=args.budget)
            oracle = lattice.count_chains(lat)
            formula = chains.chain_counts(n, p)
            ok = oracle.counts.rooted == formula.rooted
            report(
                "oracle-rooted",
                ok,
                f"p={p} n={n} "
                + (f"({formula.rooted})" if ok else f"(lattice {oracle.counts.rooted} != formula {formula.rooted})"),
            )
            expected = tuple(qarith.gaussian_binomial(n, k, p) for k in range(n + 1))
            ok = oracle.subgroups_by_dim == expected
            report(
                "oracle-subspace-counts",
                ok,
                f"p={p} n={n} "
                + (
                    f"({','.join(map(str, expected))})"
                    if ok
                    else f"(lattice {oracle.subgroups_by_dim} != formula {expected})"
                ),
            )
            c = oracle.counts
            ok = c.rooted == c.unrooted + 1 and c.total == 2 * c.rooted - 1
            report("oracle-identities", ok, f"p={p} n={n} (F={c.rooted} D={c.unrooted} C={c.total})")

    print(f"{passed}/{passed + failed} checks passed")
    return 0 if failed == 0 else 1


def cmd_oracle(args: argparse.Namespace) -> int:
    start = perf_counter()
    lat = lattice.build_lattice(args.p, args.n, budget=args.budget)
    oracle = lattice.count_chains(lat)
    elapsed_ms = (perf_counter() - start) * 1000.0
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as fh:
            for line in lat.dump_lines():
                fh.write(line + "\n")
        print(f"lattice dump written to {args.dump}", file=sys.stderr)
    record = _record(args.p, args.n, oracle.counts, "oracle", elapsed_ms)
    dims = [str(c) for c in oracle.subgroups_by_dim]
    if args.format == "text":
        print(f"subgroups_by_dim: {','.join(dims)}")
        print(f"total_subgroups: {oracle.total_subgroups}")
        print(_record_text(record))
    elif args.format == "json":
        record["subgroups_by_dim"] = dims
        record["total_subgroups"] = str(oracle.total_subgroups)
        print(_json_line(record))
    else:
        writer = _csv_writer()
        writer.writerow(RECORD_KEYS + ("subgroups_by_dim", "total_subgroups"))
        writer.writerow([record[key] for key in RECORD_KEYS] + [";".join(dims), oracle.total_subgroups])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subchains",
        description=(
            "Exact counts of chains of subgroups of the elementary abelian group Z_p^n: "
            "rooted chains (F), unrooted chains (D), and all chains (C), as integers or "
            "as polynomials in p, with a brute-force subgroup-lattice verifier."
        ),
        epilog=(
            f"Environment: {CLOSED_FORM_CAP_ENV} overrides the closed-form enumeration cap "
            f"(default {DEFAULT_CLOSED_FORM_CAP}); {NODE_BUDGET_ENV} overrides the lattice "
            f"node budget (default {DEFAULT_NODE_BUDGET}). "
            "Exit codes: 0 ok, 1 verification mismatch, 2 usage or domain error."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="chain counts for one (p, n)")
    count.add_argument("--p", type=int, required=True, help="base of the group, any integer >= 2")
    count.add_argument("--n", type=int, required=True, help="rank of the group, >= 0")
    count.add_argument("--method", choices=chains.METHODS, default="recurrence", help="how to compute the count")
    count.add_argument("--format", choices=FORMATS, default="text")
    count.set_defaults(func=cmd_count)

    poly = sub.add_parser("poly", help="rooted-chain count as a polynomial in p")
    poly.add_argument("--n", type=int, required=True, help="rank of the group, >= 0")
    poly.add_argument(
        "--format",
        choices=FORMATS,
        default="text",
        help="text: human form; json/csv: ascending coefficients as decimal strings",
    )
    poly.set_defaults(func=cmd_poly)

    table = sub.add_parser("table", help="chain counts for n = 0..max-n at fixed p")
    table.add_argument("--p", type=int, required=True, help="base of the group, any integer >= 2")
    table.add_argument("--max-n", type=int, required=True, help="largest rank to tabulate")
    table.add_argument("--method", choices=chains.METHODS, default="recurrence")
    table.add_argument("--format", choices=FORMATS, default="text", help="json emits one record per line")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser(
        "verify",
        help="cross-check recurrence vs closed form and formulas vs the lattice",
        description=(
            "Runs recurrence/closed-form equality for every base listed and every rank up to "
            "--max-n, and compares the formulas against brute-force lattice counts on the "
            "--oracle grid. With no flags, runs both with defaults: --p "
            + ",".join(str(p) for p in DEFAULT_VERIFY_PRIMES)
            + f" --max-n {DEFAULT_VERIFY_MAX_N} --oracle "
            + ",".join(f"{p}:{n}" for p, n in DEFAULT_VERIFY_GRID)
        ),
    )
    verify.add_argument("--p", help="comma-separated bases for the method-equivalence check")
    verify.add_argument("--max-n", type=int, help="largest rank for the method-equivalence check")
    verify.add_argument("--oracle", help="lattice comparison grid, e.g. 2:4,3:3 (p:max_n)")
    verify.add_argument("--budget", type=int, help="lattice node budget override")
    verify.set_defaults(func=cmd_verify)

    oracle = sub.add_parser("oracle", help="brute-force lattice counts for one (p, n)")
    oracle.add_argument("--p", type=int, required=True, help="prime base of the group")
    oracle.add_argument("--n", type=int, required=True, help="rank of the group, >= 0")
    oracle.add_argument("--dump", metavar="PATH", help="write the full lattice (nodes and edges) to a file")
    oracle.add_argument("--budget", type=int, help="lattice node budget override")
    oracle.add_argument("--format", choices=FORMATS, default="text")
    oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    # Counts grow past the interpreter's default int-to-str digit limit, and
    # output must be exact decimal, never truncated.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
