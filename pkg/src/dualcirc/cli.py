"""Command-line entry points.

Subcommands: verify (prove one code), dist (print a weight
distribution), search (scan a constraint-length range), tables (table
regression against the shipped fixture).

Exit codes: 0 success, 2 parse/config error, 3 not self-dual,
4 enumerator template inconsistent, 5 table regression mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import search, tables
from .analyze import (
    EnumeratorMismatchError,
    NotSelfDualError,
    set_thread_count,
    verify_code,
    weight_distribution,
)
from .construct import identity_pair

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NOT_SELF_DUAL = 3
EXIT_ENUMERATOR = 4
EXIT_TABLE_MISMATCH = 5

log = logging.getLogger(__name__)


def _heartbeat(label: str):
    state = {"start": time.perf_counter(), "last": 0.0}

    def report(done: int, total: int) -> None:
        now = time.perf_counter()
        if now - state["last"] < 2 and done != total:
            return
        state["last"] = now
        rate = done / (now - state["start"]) / 1e6
        print(
            f"  {label}: {done}/{total} messages ({100 * done / total:.0f}%), "
            f"{rate:.0f}M msg/s",
            file=sys.stderr,
        )

    return report


def _cmd_verify(args) -> int:
    set_thread_count(args.threads)
    record = verify_code(
        args.family,
        args.hex,
        args.k,
        mode=args.mode,
        progress=_heartbeat(f"{args.hex}/{args.k}") if args.progress else None,
    )
    print(json.dumps(record.to_json_dict()))
    return EXIT_OK


def _cmd_dist(args) -> int:
    set_thread_count(args.threads)
    if args.raw is not None:
        g = identity_pair(args.raw)
    else:
        if args.family is None or args.hex is None or args.k is None:
            raise ValueError("dist needs --family/--hex/--k (or --raw SIZE)")
        from .construct import build_doubly_even_a3, build_singly_even
        from .gf2 import poly_from_hex

        p = poly_from_hex(args.hex, args.k)
        build = build_singly_even if args.family == "singly" else build_doubly_even_a3
        g = build(p, args.k)
    dist = weight_distribution(
        g,
        args.mode,
        progress=_heartbeat("distribution") if args.progress else None,
    )
    print(json.dumps(dist.to_json_strings()))
    return EXIT_OK


def _cmd_rows(args) -> int:
    from .construct import build_doubly_even_a3, build_singly_even
    from .gf2 import poly_from_hex

    p = poly_from_hex(args.hex, args.k)
    build = build_singly_even if args.family == "singly" else build_doubly_even_a3
    for line in build(p, args.k).row_strings():
        print(line)
    return EXIT_OK


def _cmd_search(args) -> int:
    set_thread_count(args.threads)
    k_min = args.k if args.k is not None else args.k_min
    k_max = args.k if args.k is not None else args.k_max
    if k_min is None or k_max is None:
        raise ValueError("search needs --k or both --k-min and --k-max")
    cfg = search.SearchConfig(
        family=args.family,
        k_min=k_min,
        k_max=k_max,
        dedup=args.dedup,
        gcd_filter=not args.no_gcd_filter,
        early_exit=not args.no_early_exit,
        distance_target=args.distance,
    )

    def progress(examined, hex_str, taps):
        log.info("candidate %d: %s/%d", examined, hex_str, taps)

    report = search.run_search(cfg, progress=progress if args.progress else None)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            for record in report.records:
                fh.write(json.dumps(record.to_json_dict()) + "\n")
    print(report.summary())
    return EXIT_OK


def _cmd_tables(args) -> int:
    set_thread_count(args.threads)
    rows = tables.load_fixture(args.fixture)
    if args.sample is not None:
        rows = tables.sample_fixture(rows, args.sample, args.seed)
    out_fh = open(args.out, "w", encoding="ascii") if args.out else None

    def on_result(result: tables.RowResult) -> None:
        status = "ok" if result.ok else "MISMATCH"
        print(f"{result.row.label()}: {status}")
        for problem in result.mismatches:
            print(f"  {problem}")
        if out_fh is not None and result.record is not None:
            out_fh.write(json.dumps(result.record.to_json_dict()) + "\n")
            out_fh.flush()

    try:
        results = tables.check_rows(rows, on_result=on_result)
    finally:
        if out_fh is not None:
            out_fh.close()
    bad = [r for r in results if not r.ok]
    print(f"{len(results) - len(bad)}/{len(results)} rows match")
    return EXIT_TABLE_MISMATCH if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualcirc",
        description="Construct, prove and search double-circulant self-dual codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--threads", type=int, default=None, help="kernel worker count")
        p.add_argument(
            "--no-progress", dest="progress", action="store_false",
            help="suppress heartbeat output on stderr",
        )

    p = sub.add_parser("verify", help="prove one code and print its record")
    p.add_argument("--family", required=True, choices=["singly", "doubly"])
    p.add_argument("--hex", required=True, help="polynomial, hexadecimal")
    p.add_argument("--k", required=True, type=int, help="constraint length")
    p.add_argument("--mode", default="full", choices=["full", "orbit"])
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dist", help="print the full weight distribution")
    p.add_argument("--family", choices=["singly", "doubly"])
    p.add_argument("--hex")
    p.add_argument("--k", type=int)
    p.add_argument("--mode", default="full", choices=["full", "orbit"])
    p.add_argument(
        "--raw", type=int, metavar="SIZE",
        help="debug: duplicated-halves identity code [I|I] of this size",
    )
    common(p)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("rows", help="print generator rows as 0/1 strings (debug)")
    p.add_argument("--family", required=True, choices=["singly", "doubly"])
    p.add_argument("--hex", required=True)
    p.add_argument("--k", required=True, type=int)
    common(p)
    p.set_defaults(func=_cmd_rows)

    p = sub.add_parser("search", help="exhaustive polynomial search")
    p.add_argument("--family", required=True, choices=["singly", "doubly"])
    p.add_argument("--k", type=int, help="single constraint length")
    p.add_argument("--k-min", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--out", help="write accepted records as JSONL")
    p.add_argument("--dedup", default="params", choices=["params", "poly"])
    p.add_argument("--distance", type=int, default=12)
    p.add_argument("--no-gcd-filter", action="store_true")
    p.add_argument("--no-early-exit", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("tables", help="regress fixture rows against fresh proofs")
    p.add_argument("--fixture", help="fixture CSV (default: embedded tables)")
    p.add_argument("--sample", type=int, help="verify a seeded subset of this size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write recomputed records as JSONL")
    common(p)
    p.set_defaults(func=_cmd_tables)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    mode = getattr(args, "mode", None)
    if mode == "orbit":
        args.mode = "orbit_reduced"
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NotSelfDualError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_SELF_DUAL
    except EnumeratorMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENUMERATOR


if __name__ == "__main__":
    sys.exit(main())
