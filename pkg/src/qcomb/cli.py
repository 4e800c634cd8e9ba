"""Command-line front end: family tables, identity verification, oracle diffs.

Exit codes: 0 success / all checks pass, 1 a verification found a
counterexample, 2 usage or capacity error.  All results go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import structures
from .families import FAMILIES, bell_q, hsu_shiue, lah_q, stirling1_q, \
    stirling2_q, table_rows
from .identities import REGISTRY, check, identity_names, serialize_value
from .oracles import oracle_table
from .polyring import MPoly, QPoly
from .structures import CellCapError

DIFF_FAMILIES = ("stirling2_q", "stirling1_q", "lah_q", "bell_q", "ext_lah")

_ORACLE_FOR_DIFF = {
    "stirling2_q": "partitions",
    "stirling1_q": "perms",
    "lah_q": "lah",
    "bell_q": "partitions",
    "ext_lah": "ext_lah",
}


def parse_range(text: str) -> tuple[int, int]:
    """Inclusive range 'a..b' or a single value 'a'."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if lo < 0 or hi < lo:
        raise ValueError(f"invalid range {text!r}")
    return lo, hi


def _value_text(v: QPoly | MPoly) -> str:
    return str(v)


def _value_csv(v: QPoly | MPoly) -> str:
    if isinstance(v, QPoly):
        return ";".join(v.to_json())
    return str(v)


def _emit_table(args) -> int:
    if args.family not in FAMILIES:
        print(f"error: unknown family {args.family!r}; choose from {FAMILIES}",
              file=sys.stderr)
        return 2
    n_range = range(args.n[0], args.n[1] + 1)
    k_range = range(args.k[0], args.k[1] + 1) if args.k else None
    r_range = range(args.r[0], args.r[1] + 1) if args.r else None
    rows = list(table_rows(args.family, n_range, k_range, r_range))
    if args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["family", "n", "k", "r", "value"])
        for row in rows:
            writer.writerow([row.family, row.n,
                             "" if row.k is None else row.k,
                             "" if row.r is None else row.r,
                             _value_csv(row.value)])
        sys.stdout.write(out.getvalue())
    elif args.format == "json":
        obj = [{"family": row.family, "n": row.n, "k": row.k, "r": row.r,
                "provenance": row.provenance,
                "value": serialize_value(row.value)} for row in rows]
        json.dump(obj, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for row in rows:
            params = [f"n={row.n}"]
            if row.k is not None:
                params.append(f"k={row.k}")
            if row.r is not None:
                params.append(f"r={row.r}")
            print(f"{row.family}({', '.join(params)}) = {_value_text(row.value)}")
    return 0


def _run_verify(args) -> int:
    overrides = {}
    for name in ("m", "n", "k", "r"):
        rng = getattr(args, name)
        if rng is not None:
            overrides[name] = tuple(rng)
    if args.default_grids and overrides:
        print("error: --default-grids cannot be combined with explicit ranges",
              file=sys.stderr)
        return 2
    if args.all:
        names = identity_names()
        if overrides:
            print("error: range overrides apply to a single --identity",
                  file=sys.stderr)
            return 2
    else:
        if not args.identity:
            print("error: provide --identity NAME or --all", file=sys.stderr)
            return 2
        if args.identity not in REGISTRY:
            print(f"error: unknown identity {args.identity!r}", file=sys.stderr)
            return 2
        names = [args.identity]

    reports = []
    for name in names:
        reports.append(check(name, overrides or None, jobs=args.jobs))
    if args.format == "json":
        json.dump([r.to_json_obj() for r in reports], sys.stdout,
                  indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for r in reports:
            print(r.summary_line())
    return 0 if all(r.status == "pass" for r in reports) else 1


def _diff_cells(args) -> list[tuple[int, int]]:
    n_lo, n_hi = args.n
    r_lo, r_hi = args.r if args.r else (0, 0)
    return [(n, r) for n in range(n_lo, n_hi + 1) for r in range(r_lo, r_hi + 1)]


def _diff_one(family: str, n: int, r: int, k_range) -> list[dict]:
    oracle_family = _ORACLE_FOR_DIFF[family]
    table = oracle_table(oracle_family, n, r)
    mism = []
    if family == "bell_q":
        got = QPoly()
        for v in table.values():
            got = got + v
        want = bell_q(n, r)
        if got != want:
            mism.append({"params": {"n": n, "r": r},
                         "engine": serialize_value(want),
                         "oracle": serialize_value(got)})
        return mism
    engine = {"stirling2_q": stirling2_q, "stirling1_q": stirling1_q,
              "lah_q": lah_q, "ext_lah": hsu_shiue}[family]
    zero = MPoly() if family == "ext_lah" else QPoly()
    ks = range(n + 1) if k_range is None else range(k_range[0], k_range[1] + 1)
    for k in ks:
        want = engine(n, k, r) if family != "ext_lah" else engine(n, k)
        got = table.get(k, zero)
        if got != want:
            mism.append({"params": {"n": n, "k": k, "r": r},
                         "engine": serialize_value(want),
                         "oracle": serialize_value(got)})
    return mism


def _run_oracle_diff(args) -> int:
    if args.family not in DIFF_FAMILIES:
        print(f"error: unknown family {args.family!r}; choose from {DIFF_FAMILIES}",
              file=sys.stderr)
        return 2
    if args.family == "ext_lah" and args.r and args.r != (0, 0):
        print("error: ext_lah oracle requires r = 0", file=sys.stderr)
        return 2
    cells = _diff_cells(args)

    def work(cell):
        n, r = cell
        return _diff_one(args.family, n, r, args.k)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(work, cells))
    else:
        chunks = [work(c) for c in cells]
    mismatches = [m for chunk in chunks for m in chunk]
    if args.format == "json":
        json.dump(mismatches, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for m in mismatches:
            print(f"MISMATCH {args.family} {m['params']}: "
                  f"engine={m['engine']} oracle={m['oracle']}")
        print(f"{len(mismatches)} mismatching cell(s) over {len(cells)} "
              f"(n, r) cell(s) of {args.family}")
    return 0 if not mismatches else 1


def _range_arg(text: str) -> tuple[int, int]:
    try:
        return parse_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcomb",
        description="Exact q-analogue tables and identity verification.")
    cap_help = ("max structures per enumeration cell "
                f"(overrides ${structures.CELL_CAP_ENV}; "
                f"default {structures.DEFAULT_CELL_CAP})")
    parser.add_argument("--cell-cap", type=int, default=None, help=cap_help)
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit one family table")
    # accepted after the subcommand too; SUPPRESS keeps the global value
    p_table.add_argument("--cell-cap", type=int, default=argparse.SUPPRESS,
                         help=cap_help)
    p_table.add_argument("--family", required=True,
                         help=f"one of {', '.join(FAMILIES)}")
    p_table.add_argument("--n", type=_range_arg, required=True,
                         help="inclusive range a..b or single value")
    p_table.add_argument("--k", type=_range_arg, default=None,
                         help="defaults to 0..n per row")
    p_table.add_argument("--r", type=_range_arg, default=None,
                         help="defaults to 0")
    p_table.add_argument("--format", choices=("json", "csv", "text"),
                         default="text")

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("--cell-cap", type=int, default=argparse.SUPPRESS,
                          help=cap_help)
    p_verify.add_argument("--identity", default=None,
                          help="registered identity name")
    p_verify.add_argument("--all", action="store_true",
                          help="run every registered identity")
    p_verify.add_argument("--default-grids", action="store_true",
                          help="use the registered default grids")
    for name in ("m", "n", "k", "r"):
        p_verify.add_argument(f"--{name}", type=_range_arg, default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", choices=("json", "text"), default="text")

    p_diff = sub.add_parser("oracle-diff",
                            help="compare an engine against its enumeration oracle")
    p_diff.add_argument("--cell-cap", type=int, default=argparse.SUPPRESS,
                        help=cap_help)
    p_diff.add_argument("--family", required=True,
                        help=f"one of {', '.join(DIFF_FAMILIES)}")
    p_diff.add_argument("--n", type=_range_arg, required=True)
    p_diff.add_argument("--k", type=_range_arg, default=None)
    p_diff.add_argument("--r", type=_range_arg, default=None)
    p_diff.add_argument("--jobs", type=int, default=1)
    p_diff.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cell_cap is not None:
        structures.set_default_cap(args.cell_cap)
    try:
        if args.command == "table":
            return _emit_table(args)
        if args.command == "verify":
            return _run_verify(args)
        return _run_oracle_diff(args)
    except CellCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        structures.set_default_cap(None)


if __name__ == "__main__":
    sys.exit(main())
