"""Command-line front end.

Subcommands: ``count`` (region tiling counts by any route), ``correlate``
(the gap-corner correlation, exact and asymptotic), ``sweep`` (CSV/JSON
convergence sweeps over (q, R) grids), ``verify`` (named identity suites).

Exit codes: 0 success, 1 mathematical disagreement or failed verification,
2 usage error.  Exact rationals print as ``num/den``; floats print with 12
significant digits, so output is byte-identical across runs and job counts.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .correlation import (
    CorrelationParams,
    asymptotic_prediction,
    correlation_double_sum,
    correlation_via_moments,
    finite_n_correlation,
)
from .errors import LozgapError
from .exactcount import lgv_pfaffian_count, product_formula_count
from .oracle import count_tilings
from .regions import RegionSpec, build_region
from .verify import SUITES, run_suite

ENV_MAX_CELLS = "LOZGAP_ORACLE_MAX_CELLS"


def fmt_rat(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def fmt_float(v: float) -> str:
    return f"{v:.12g}"


def _parse_kept(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


def _parse_int_list(text: str) -> list[int]:
    """Comma lists and start:stop[:step] ranges, e.g. '20,40' or '20:100:20'."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            pieces = [int(p) for p in part.split(":")]
            if len(pieces) == 2:
                start, stop, step = pieces[0], pieces[1], 1
            elif len(pieces) == 3:
                start, stop, step = pieces
            else:
                raise ValueError(f"bad range {part!r}")
            out.extend(range(start, stop + 1, step))
        else:
            out.append(int(part))
    return sorted(set(out))


# ---------------------------------------------------------------------------
# count

def _spec_from_args(args) -> RegionSpec:
    if args.spec is not None:
        with open(args.spec, "r", encoding="utf-8") as fh:
            return RegionSpec.from_json_dict(json.load(fh))
    if args.n is None or args.x is None or args.y is None:
        raise LozgapError("need --spec or all of --n, --x, --y")
    gap = None
    if args.gap:
        a, b = (int(t) for t in args.gap.split(","))
        gap = (a, b)
    kept = _parse_kept(args.kept) if args.kept is not None else tuple(range(1, args.n + 1))
    return RegionSpec(n=args.n, x=args.x, y=args.y, kept_bumps=kept, gap=gap)


def _count_routes(spec: RegionSpec, max_cells: int) -> dict[str, int]:
    """Every counting route applicable to the spec."""
    values: dict[str, int] = {}
    if spec.gap is None:
        values["product"] = product_formula_count(spec.n, spec.x, spec.y, spec.kept_bumps)
        values["pfaffian"] = lgv_pfaffian_count(spec.n, spec.x, spec.y, spec.kept_bumps)
        values["oracle"] = count_tilings(build_region(spec), max_cells=max_cells)
    else:
        values["oracle"] = count_tilings(build_region(spec), max_cells=max_cells)
        full = tuple(range(1, spec.n + 1))
        alpha, beta = spec.gap
        if (
            spec.x == spec.n
            and spec.y == 0
            and spec.kept_bumps == full
            and (alpha + beta) % 2 == 0
            and alpha + beta <= spec.n
        ):
            from .correlation import finite_n_numerator

            values["finite-n"] = finite_n_numerator(spec.n, alpha, beta)
    return values


def cmd_count(args) -> int:
    spec = _spec_from_args(args)
    max_cells = int(os.environ.get(ENV_MAX_CELLS, "2000"))
    if args.check:
        values = _count_routes(spec, max_cells)
        distinct = set(values.values())
        for route, v in sorted(values.items()):
            print(f"{route}: {v}")
        if len(distinct) > 1:
            print("ROUTE DISAGREEMENT", file=sys.stderr)
            return 1
        return 0
    route = args.route
    if route == "product":
        if spec.gap is not None:
            raise LozgapError("the product route does not cover gapped regions; use --route oracle")
        print(product_formula_count(spec.n, spec.x, spec.y, spec.kept_bumps))
    elif route == "pfaffian":
        if spec.gap is not None:
            raise LozgapError("the Pfaffian route does not cover gapped regions; use --route oracle")
        print(lgv_pfaffian_count(spec.n, spec.x, spec.y, spec.kept_bumps))
    else:
        print(count_tilings(build_region(spec), max_cells=max_cells))
    return 0


# ---------------------------------------------------------------------------
# correlate

def cmd_correlate(args) -> int:
    if args.alpha < 1 or args.beta < 1:
        raise LozgapError(f"need alpha, beta >= 1, got ({args.alpha}, {args.beta})")
    p = CorrelationParams.from_alpha_beta(args.alpha, args.beta)
    rows: list[tuple[str, Fraction]] = []
    if args.route in ("doublesum", "both"):
        rows.append(("doublesum", correlation_double_sum(p)))
    if args.route in ("moments", "both"):
        rows.append(("moments", correlation_via_moments(p)))
    if args.route == "finite-n":
        if args.n is None:
            raise LozgapError("--route finite-n needs --n")
        rows.append((f"finite-n n={args.n}", finite_n_correlation(args.n, args.alpha, args.beta)))
    status = 0
    if len({v for _, v in rows}) > 1:
        status = 1
    for label, v in rows:
        line = f"omega_c = {fmt_rat(v)} = {fmt_float(float(v))}  (route {label})"
        if args.compare_prediction:
            pred = asymptotic_prediction(p.q, p.R)
            line += f"  prediction = {fmt_float(pred)}  ratio = {fmt_float(float(v) / pred)}"
        print(line)
    return status


# ---------------------------------------------------------------------------
# sweep

@dataclass(frozen=True)
class SweepGrid:
    """A (q, R) evaluation grid with output destination and format."""

    q_values: tuple[Fraction, ...]
    r_values: tuple[int, ...]
    out_path: str
    fmt: str = "csv"
    jobs: int = 1

    def validate(self) -> None:
        if not self.q_values or not self.r_values:
            raise LozgapError("sweep grid must have at least one q and one R value")
        if any(r < 1 for r in self.r_values):
            raise LozgapError("R values must be positive")
        if any(q <= 0 for q in self.q_values):
            raise LozgapError("q values must be positive")
        if self.fmt not in ("csv", "json"):
            raise LozgapError(f"format must be csv or json, got {self.fmt!r}")
        for q in self.q_values:
            for r in self.r_values:
                if (q * r).denominator != 1 or q * r < 1:
                    raise LozgapError(f"q*R must be a positive integer; q={q}, R={r}")


def _sweep_point(item: tuple[str, int]) -> tuple[str, int, str, str, float, float]:
    q_text, r = item
    q = Fraction(q_text)
    vprime = int(q * r) - 1
    omega = correlation_via_moments(CorrelationParams(r, vprime))
    pred = asymptotic_prediction(q, r)
    return (q_text, r, str(omega.numerator), str(omega.denominator), pred, float(omega) / pred)


def run_sweep(grid: SweepGrid) -> list[dict]:
    grid.validate()
    items = [(str(q), r) for q in grid.q_values for r in grid.r_values]
    if grid.jobs > 1:
        with ProcessPoolExecutor(max_workers=grid.jobs) as pool:
            results = list(pool.map(_sweep_point, items))
    else:
        results = [_sweep_point(it) for it in items]
    rows = []
    for q_text, r, num, den, pred, ratio in results:
        q = Fraction(q_text)
        rows.append(
            {
                "R": r,
                "q_num": q.numerator,
                "q_den": q.denominator,
                "omega_num": num,
                "omega_den": den,
                "prediction": pred,
                "ratio": ratio,
            }
        )
    rows.sort(key=lambda row: (Fraction(row["q_num"], row["q_den"]), row["R"]))
    return rows


def write_sweep(rows: list[dict], out_path: str, fmt: str) -> None:
    fields = ["R", "q_num", "q_den", "omega_num", "omega_den", "prediction", "ratio"]
    out = sys.stdout if out_path == "-" else open(out_path, "w", encoding="utf-8", newline="")
    try:
        if fmt == "csv":
            writer = csv.writer(out)
            writer.writerow(fields)
            for row in rows:
                writer.writerow(
                    [
                        row["R"],
                        row["q_num"],
                        row["q_den"],
                        row["omega_num"],
                        row["omega_den"],
                        fmt_float(row["prediction"]),
                        fmt_float(row["ratio"]),
                    ]
                )
        else:
            json.dump(rows, out, indent=2)
            out.write("\n")
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_sweep(args) -> int:
    grid = SweepGrid(
        q_values=tuple(_parse_fraction(t) for t in args.q.split(",") if t.strip()),
        r_values=tuple(_parse_int_list(args.R)),
        out_path=args.out,
        fmt=args.format,
        jobs=args.jobs,
    )
    rows = run_sweep(grid)
    write_sweep(rows, grid.out_path, grid.fmt)
    return 0


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failures = 0
    for res in results:
        if res.ok:
            print(f"PASS {res.name}" + (f"  [{res.detail}]" if res.detail else ""))
        else:
            failures += 1
            print(f"FAIL {res.name}: {res.detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 1 if failures else 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lozgap",
        description="Exact lozenge-tiling counts and gap-corner correlations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("count", help="count tilings of a dented trapezoid")
    pc.add_argument("--spec", help="path to a RegionSpec JSON file")
    pc.add_argument("--n", type=int)
    pc.add_argument("--x", type=int)
    pc.add_argument("--y", type=int)
    pc.add_argument("--kept", help="comma list of kept bump labels (empty string for none)")
    pc.add_argument("--gap", help="gap as 'alpha,beta'")
    pc.add_argument("--route", choices=["product", "pfaffian", "oracle"], default="product")
    pc.add_argument("--check", action="store_true", help="run all routes and compare")
    pc.set_defaults(fn=cmd_count)

    pr = sub.add_parser("correlate", help="gap-corner correlation at (alpha, beta)")
    pr.add_argument("--alpha", type=int, required=True)
    pr.add_argument("--beta", type=int, required=True)
    pr.add_argument(
        "--route",
        choices=["doublesum", "moments", "both", "finite-n"],
        default="doublesum",
    )
    pr.add_argument("--n", type=int, help="region size for --route finite-n")
    pr.add_argument("--compare-prediction", action="store_true")
    pr.set_defaults(fn=cmd_correlate)

    ps = sub.add_parser("sweep", help="evaluate omega_c against the prediction on a grid")
    ps.add_argument("--q", required=True, help="comma list of rationals, e.g. '1,2,1/2'")
    ps.add_argument("--R", required=True, help="comma list and/or start:stop:step ranges")
    ps.add_argument("--out", required=True, help="output path ('-' for stdout)")
    ps.add_argument("--format", choices=["csv", "json"], default="csv")
    ps.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ps.set_defaults(fn=cmd_sweep)

    pv = sub.add_parser("verify", help="run a named identity suite")
    pv.add_argument("suite", choices=sorted(SUITES))
    pv.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except LozgapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())
