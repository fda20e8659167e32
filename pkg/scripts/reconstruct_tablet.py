"""Rebuild the obverse from a selection procedure and diff it against the tablet.

    python scripts/reconstruct_tablet.py --procedure price --out tablet.tsv
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from plimpton.procedures import build_table, enumerate_ratios, named_procedure
from plimpton.tablet import attested_tablet, diff_tablets, tablet_from_rows


@dataclass(frozen=True)
class Config:
    procedure: str = "price"
    method: str = "r"
    lenient: bool = False
    out: str = "-"


def run(cfg: Config) -> int:
    rows = build_table(enumerate_ratios(named_procedure(cfg.procedure)), cfg.method)
    fh = sys.stdout if cfg.out == "-" else open(cfg.out, "w", newline="")
    w = csv.writer(fh, delimiter="\t", lineterminator="\n")
    w.writerow(["n", "col1", "w", "d", "l"])
    for r in rows[:15]:
        w.writerow([r.n, r.column_one, r.w, r.d, r.l])
    if fh is not sys.stdout:
        fh.close()
    records = diff_tablets(tablet_from_rows(rows), attested_tablet(), gap_as_zero=cfg.lenient)
    for rec in records:
        print(f"line {rec.line:2d} {rec.column:>3}  {rec.inscribed}  ->  {rec.correct}"
              f"  ({rec.category})", file=sys.stderr)
    print(f"{len(records)} cells differ from the tablet", file=sys.stderr)
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--procedure", default=Config.procedure)
    ap.add_argument("--method", choices=("r", "pq"), default=Config.method)
    ap.add_argument("--lenient", action="store_true")
    ap.add_argument("--out", default=Config.out)
    sys.exit(run(Config(**vars(ap.parse_args()))))
