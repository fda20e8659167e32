"""Command-line front end.

Every subcommand prints data on stdout and diagnostics on stderr. Exit status
is 0 on success, 1 when the numbers are at fault (a non-regular reciprocal,
a bad sexagesimal literal) and 2 for usage errors.

Golden files are read from ``--data DIR`` or ``$PLIMPTON_DATA``; defaults for
``format``, ``style``, ``leading_one`` and ``data`` may be given as
``key=value`` lines in ``--config FILE`` or ``$PLIMPTON_CONFIG``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import errors as err
from .problems import CaneProblem, solve_cane
from .procedures import (
    PROCEDURE_NAMES,
    build_table,
    derive_bounds,
    enumerate_ratios,
    gap_analysis,
    named_procedure,
    pool_statistics,
)
from .sexagesimal import (
    SQRT2_VARIANTS,
    Sexagesimal,
    approximate_reciprocal,
    format_sexagesimal,
    is_regular,
    parse_sexagesimal,
    reciprocal,
    standard_reciprocal_table,
)
from .tablet import DATA_ENV, attested_tablet, corrected_tablet, diff_tablets, tablet_from_rows
from .triples import column_one

CONFIG_ENV = "PLIMPTON_CONFIG"
FORMATS = ("pretty", "json", "tsv")
STYLES = ("canonical", "tablet")


class DomainError(Exception):
    """Raised for bad numbers rather than bad syntax."""


@dataclass(frozen=True)
class OutputFormat:
    kind: str = "pretty"
    sexagesimal_style: str = "canonical"
    column_one_leading_one: bool = True

    def __post_init__(self) -> None:
        if self.kind not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}, not {self.kind!r}")
        if self.sexagesimal_style not in STYLES:
            raise DomainError(f"style must be one of {STYLES}, not {self.sexagesimal_style!r}")

    def sx(self, v) -> str:
        if not isinstance(v, Sexagesimal):
            v = Sexagesimal.from_fraction(Fraction(v))
        return format_sexagesimal(v, self.sexagesimal_style)


def read_config(path: Optional[str]) -> dict[str, str]:
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    out = {}
    for num, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise DomainError(f"{path}:{num}: expected key=value")
        out[key.strip()] = value.strip()
    return out


def _truthy(text: str) -> bool:
    return text.lower() in ("1", "true", "yes", "on")


# -- emitting ----------------------------------------------------------------------


def emit(records: list[dict], fmt: OutputFormat, out=None) -> None:
    out = out or sys.stdout
    if fmt.kind == "json":
        json.dump(records, out, indent=2)
        out.write("\n")
        return
    if not records:
        return
    keys = list(records[0])
    if fmt.kind == "tsv":
        out.write("\t".join(keys) + "\n")
        for rec in records:
            out.write("\t".join(_cell(rec[k]) for k in keys) + "\n")
        return
    cells = [[_cell(rec[k]) for k in keys] for rec in records]
    widths = [max(len(k), *(len(row[i]) for row in cells)) for i, k in enumerate(keys)]
    out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return "" if v is None else str(v)


def row_record(row, fmt: OutputFormat) -> dict:
    col1 = row.column_one
    if not fmt.column_one_leading_one:
        col1 = column_one(row.primitive, leading_one=False)
    return {
        "n": row.n,
        "p": fmt.sx(row.p),
        "q": fmt.sx(row.q),
        "r": fmt.sx(row.r),
        "l": fmt.sx(row.l),
        "col1": fmt.sx(col1),
        "w": fmt.sx(row.w),
        "d": fmt.sx(row.d),
        "p_dec": row.p,
        "q_dec": row.q,
        "r_frac": str(row.r),
        "l_dec": row.l,
        "w_dec": row.w,
        "d_dec": row.d,
    }


# -- subcommands -------------------------------------------------------------------


def cmd_gen(args, fmt: OutputFormat) -> None:
    spec = named_procedure(args.procedure)
    rows = build_table(enumerate_ratios(spec), args.method, args.line4)
    if args.rows is not None:
        rows = rows[: args.rows]
    emit([row_record(r, fmt) for r in rows], fmt)


def _int_arg(text: str, as_sexagesimal: bool) -> Fraction:
    if as_sexagesimal:
        return parse_sexagesimal(text).value
    try:
        return Fraction(int(text))
    except ValueError:
        raise DomainError(f"{text!r} is not a decimal integer (use --sexagesimal for base 60)")


def cmd_recip(args, fmt: OutputFormat) -> None:
    n = _int_arg(args.n, args.sexagesimal)
    if n <= 0:
        raise DomainError("n must be positive")
    if is_regular(n):
        rec = {"n": fmt.sx(n), "n_dec": str(n), "reciprocal": fmt.sx(reciprocal(n))}
        if fmt.kind == "pretty":
            print(rec["reciprocal"])
            return
    else:
        if args.digits is None or n.denominator != 1:
            raise DomainError(f"{n} is not regular; 1/{n} has no finite expansion (try --digits)")
        lo, hi = approximate_reciprocal(int(n), args.digits)
        rec = {"n": fmt.sx(n), "n_dec": str(n), "lower": fmt.sx(lo), "upper": fmt.sx(hi)}
        if fmt.kind == "pretty":
            print(f"{rec['lower']} < 1/{n} < {rec['upper']}")
            return
    emit([rec], fmt)


def cmd_table(args, fmt: OutputFormat) -> None:
    emit(
        [{"n": fmt.sx(e.n), "n_dec": e.n, "nbar": fmt.sx(e.nbar)} for e in standard_reciprocal_table()],
        fmt,
    )


def cmd_stats(args, fmt: OutputFormat) -> None:
    s = pool_statistics(named_procedure(args.procedure))
    emit(
        [
            {
                "procedure": args.procedure,
                "total_pairs": s.total_pairs,
                "distinct": s.distinct,
                "distinct_in_1_3": s.distinct_in_1_3,
                "admissible": s.admissible,
            }
        ],
        fmt,
    )


def cmd_gaps(args, fmt: OutputFormat) -> None:
    rows = build_table(enumerate_ratios(named_procedure(args.procedure)), "r", args.line4)
    report = gap_analysis(rows)
    top_r, top_c = report.max_dr, report.max_dcol
    emit(
        [
            {
                "upper": g.upper,
                "lower": g.lower,
                "dr": fmt.sx(g.dr),
                "dcol1": fmt.sx(g.dcol),
                "max_dr": g is top_r,
                "max_dcol1": g is top_c,
            }
            for g in report.gaps
        ],
        fmt,
    )


def cmd_diff(args, fmt: OutputFormat) -> None:
    data = args.data
    if args.source == "corrected":
        generated = corrected_tablet("r", data)
    elif args.source == "corrected-pq":
        generated = corrected_tablet("pq", data)
    else:
        generated = tablet_from_rows(build_table(enumerate_ratios(named_procedure("price"))))
    other = attested_tablet(data) if args.against == "attested" else corrected_tablet("r", data)
    records = diff_tablets(generated, other, gap_as_zero=args.lenient)
    out = []
    for r in records:
        d = r.to_json()
        d["inscribed"] = fmt.sx(r.inscribed)
        d["correct"] = fmt.sx(r.correct)
        out.append(d)
    emit(out, fmt)
    if fmt.kind == "pretty":
        print(f"{len(records)} discrepancies", file=sys.stderr)


def cmd_errors(args, fmt: OutputFormat) -> None:
    if args.action == "list":
        emit(
            [
                {"model": m.name, "kind": m.kind, "line": m.line,
                 "params": ",".join(f"{k}={v}" for k, v in m.params.items())}
                for m in err.CATALOG
            ],
            fmt,
        )
        return
    if not args.model:
        raise DomainError("errors simulate needs --model")
    sim = err.simulate_error(err.model_by_name(args.model), args.data)
    if fmt.kind == "json":
        payload = sim.to_json()
        payload["cells"] = {c: fmt.sx(v) for c, v in sim.cells.items()}
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return
    if fmt.kind == "pretty":
        for line in sim.trace:
            print(line)
    emit(
        [
            {"model": sim.model.name, "line": sim.model.line, "column": c,
             "value": fmt.sx(v), "matches_attested": sim.matches_attested[c]}
            for c, v in sim.cells.items()
        ],
        fmt,
    )


def cmd_bounds(args, fmt: OutputFormat) -> None:
    variants = SQRT2_VARIANTS if args.sqrt2 == "all" else (args.sqrt2,)
    recs = []
    for v in variants:
        b = derive_bounds(v)
        recs.append(
            {
                "variant": v,
                "alpha0": fmt.sx(b.alpha0),
                "r_max": fmt.sx(b.r_max),
                "p_max": fmt.sx(b.p_max),
                "q_max": fmt.sx(b.q_max),
                "ratios": len(enumerate_ratios(named_procedure(v))),
            }
        )
    emit(recs, fmt)


def cmd_cane(args, fmt: OutputFormat) -> None:
    d = parse_sexagesimal(args.d).value
    b = parse_sexagesimal(args.b).value
    s = solve_cane(CaneProblem(d, b))
    if fmt.kind == "pretty":
        print(f"l={fmt.sx(s.l)} h={fmt.sx(s.h)}")
        return
    emit([{"d": fmt.sx(d), "b": fmt.sx(b), "l": fmt.sx(s.l), "h": fmt.sx(s.h),
           "h_squared": fmt.sx(s.h_squared)}], fmt)


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--style", choices=STYLES, default=argparse.SUPPRESS,
                        help="canonical (with ';') or tablet (floating)")
    common.add_argument("--no-leading-one", dest="leading_one", action="store_false",
                        default=argparse.SUPPRESS, help="Column I as w^2/l^2")
    common.add_argument("--data", default=argparse.SUPPRESS,
                        help=f"directory holding the golden files (env {DATA_ENV})")
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help=f"key=value defaults file (env {CONFIG_ENV})")

    parser = argparse.ArgumentParser(
        prog="plimpton",
        description="Exact reconstruction of the Plimpton 322 tablet.",
        epilog=f"Golden files: --data DIR or ${DATA_ENV}. Defaults file: ${CONFIG_ENV}.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a table of triples")
    p.add_argument("--procedure", choices=PROCEDURE_NAMES, default="price")
    p.add_argument("--method", choices=("r", "pq"), default="r")
    p.add_argument("--rows", type=int, default=None)
    p.add_argument("--line4", choices=("insert", "omit"), default="insert")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("recip", parents=[common], help="reciprocal of a number")
    p.add_argument("n")
    p.add_argument("--sexagesimal", action="store_true", help="read N in base 60")
    p.add_argument("--digits", type=int, default=None,
                   help="bracket 1/N to this many places when N is not regular")
    p.set_defaults(func=cmd_recip)

    p = sub.add_parser("table", parents=[common], help="print a standard table")
    p.add_argument("which", choices=("reciprocals",))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("stats", parents=[common], help="pool statistics of a procedure")
    p.add_argument("--procedure", choices=PROCEDURE_NAMES, required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("gaps", parents=[common], help="successive differences")
    p.add_argument("--procedure", choices=PROCEDURE_NAMES, required=True)
    p.add_argument("--line4", choices=("insert", "omit"), default="omit")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("diff", parents=[common], help="compare tablets cell by cell")
    p.add_argument("--against", choices=("attested", "corrected"), default="attested")
    p.add_argument("--source", choices=("corrected", "corrected-pq", "generated"),
                   default="corrected")
    p.add_argument("--lenient", action="store_true",
                   help="read blank spaces as 00 instead of nothing")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("errors", parents=[common], help="scribal error models")
    p.add_argument("action", choices=("list", "simulate"))
    p.add_argument("--model", default=None)
    p.set_defaults(func=cmd_errors)

    p = sub.add_parser("bounds", parents=[common], help="bounds from a root-two estimate")
    p.add_argument("--sqrt2", choices=SQRT2_VARIANTS + ("all",), default="all")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cane", parents=[common], help="cane-against-the-wall problem")
    p.add_argument("--d", required=True, help="drop (sexagesimal literal)")
    p.add_argument("--b", required=True, help="distance out (sexagesimal literal)")
    p.set_defaults(func=cmd_cane)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("format", "style", "leading_one", "data", "config"):
        if not hasattr(args, name):
            setattr(args, name, None)
    try:
        cfg = read_config(args.config)
        if args.data is None:
            args.data = cfg.get("data") or None
        fmt = OutputFormat(
            kind=args.format or cfg.get("format", "pretty"),
            sexagesimal_style=args.style or cfg.get("style", "canonical"),
            column_one_leading_one=(
                args.leading_one if args.leading_one is not None
                else _truthy(cfg.get("leading_one", "true"))
            ),
        )
        args.func(args, fmt)
    except (DomainError, ValueError, ArithmeticError, OSError) as exc:
        print(f"plimpton: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
