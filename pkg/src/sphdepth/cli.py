"""Command-line front end.

Exit codes: 0 success, 1 duplicates found by ``unique``, 2 usage or input
errors. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import geometry
from .experiment import ExperimentConfig, run_bench, run_experiment
from .reduction import check_uniqueness
from .simplicial import simplicial_depth, simplicial_depth_fast2d, simplicial_depth_naive
from .spherical import DataSet, spherical_depth_fast2d, spherical_depth_naive


class InputError(Exception):
    pass


def parse_row(text: str, where: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise InputError(f"{where}: cannot parse {text.strip()!r} as comma-separated numbers") from None
    if not all(math.isfinite(v) for v in vals):
        raise InputError(f"{where}: non-finite value")
    return vals


def read_points(path: str) -> list[tuple[float, ...]]:
    """Read a point file: comma-separated coordinates, '#' comments and blank lines skipped."""
    rows = []
    dim = None
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    with fh:
        for lineno, line in enumerate(fh, 1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            p = parse_row(s, f"{path}:{lineno}")
            if dim is None:
                dim = len(p)
            elif len(p) != dim:
                raise InputError(f"{path}:{lineno}: expected {dim} coordinates, got {len(p)}")
            rows.append(p)
    return rows


def format_row(p: Sequence[float]) -> str:
    # repr gives the shortest string that round-trips
    return ",".join(repr(float(c)) for c in p)


def write_points(path: str, points) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for p in points:
            fh.write(format_row(p) + "\n")


def read_values(path: str) -> list[float]:
    rows = read_points(path)
    if rows and len(rows[0]) != 1:
        raise InputError(f"{path}: expected one value per line")
    return [r[0] for r in rows]


def _depth_record(kind: str, method: str, q, data: DataSet) -> dict:
    if kind == "spherical":
        if method == "auto":
            method = "fast2d" if data.dim == 2 else "naive"
        res = spherical_depth_fast2d(q, data) if method == "fast2d" else spherical_depth_naive(q, data)
    else:
        if method == "naive":
            res = simplicial_depth_naive(q, data)
        elif method == "fast2d":
            res = simplicial_depth_fast2d(q, data)
            if res is None:
                print(f"note: query {list(q)} is not in generic position; using the closed-triangle fallback",
                      file=sys.stderr)
                res, method = simplicial_depth(q, data)
        else:
            res, method = simplicial_depth(q, data)
    return {"query": list(q), "count": res.count, "total": res.total, "depth": res.depth, "method": method}


def cmd_depth(args) -> int:
    data = DataSet.of(read_points(args.data))
    if data.n == 0:
        raise InputError(f"{args.data}: no data rows")
    if args.query is not None:
        queries = [parse_row(args.query, "--query")]
    else:
        queries = read_points(args.queries)
    needs_plane = args.kind == "simplicial" or args.method == "fast2d"
    if needs_plane and data.dim != 2:
        raise InputError(f"{args.kind} depth with method {args.method} needs 2-d data, got dimension {data.dim}")
    for q in queries:
        if len(q) != data.dim:
            raise InputError(f"query {list(q)} has dimension {len(q)}, data has {data.dim}")
    for q in queries:
        print(json.dumps(_depth_record(args.kind, args.method, q, data)))
    return 0


def cmd_unique(args) -> int:
    verdict = check_uniqueness(read_values(args.values))
    print(json.dumps(verdict.to_dict()))
    return 0 if verdict.unique else 1


def _config(args) -> ExperimentConfig:
    try:
        return ExperimentConfig(args.n_data, args.n_queries, args.seed, tuple(args.bounds))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_experiment(args) -> int:
    summary = run_experiment(_config(args))
    sys.stdout.write(summary.to_json() + "\n" if args.format == "json" else summary.to_table())
    return 0


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"--sizes: cannot parse {text!r}") from None
    if not sizes or any(n < 2 for n in sizes):
        raise InputError("--sizes needs a nonempty list of integers >= 2")
    return sizes


def cmd_bench(args) -> int:
    sizes = _sizes(args.sizes)
    cfg = ExperimentConfig(seed=args.seed)
    sys.stdout.write(run_bench(sizes, cfg, args.naive_cutoff, args.repeats).to_table())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sphdepth", description="Spherical and simplicial data depth.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("depth", help="depth of query points with respect to a data file")
    p.add_argument("--kind", choices=["spherical", "simplicial"], default="spherical")
    p.add_argument("--data", required=True, help="point file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--query", help='inline query point, e.g. "0,0"')
    g.add_argument("--queries", help="point file of queries")
    p.add_argument("--method", choices=["auto", "naive", "fast2d"], default="auto")
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("unique", help="decide element uniqueness through the depth reduction")
    p.add_argument("values", help="file with one decimal value per line")
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("experiment", help="min/max of SD, SphD and SphD/SD over random queries")
    p.add_argument("--n-data", type=int, default=750)
    p.add_argument("--n-queries", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--bounds", type=float, nargs=2, default=[-10.0, 10.0], metavar=("LOW", "HIGH"))
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("bench", help="time naive and fast planar spherical depth")
    p.add_argument("--sizes", required=True, help="comma-separated sizes")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--naive-cutoff", type=int, default=2000)
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, geometry.InvalidInputError, geometry.InsufficientDataError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
