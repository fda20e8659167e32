"""Successive differences of r and of Column I, as TSV for plotting.

    python scripts/gap_chart.py --procedure standard > gaps.tsv
"""

import argparse
import sys
from dataclasses import dataclass

from plimpton.procedures import build_table, enumerate_ratios, gap_analysis, named_procedure
from plimpton.sexagesimal import Sexagesimal


@dataclass(frozen=True)
class Config:
    procedure: str = "standard"
    line4: str = "omit"


def run(cfg: Config) -> int:
    rows = build_table(enumerate_ratios(named_procedure(cfg.procedure)), "r", cfg.line4)
    report = gap_analysis(rows)
    print("upper\tlower\tdr\tdcol1\tdr_float\tdcol1_float")
    for g in report.gaps:
        sx = Sexagesimal.from_fraction
        print(f"{g.upper}\t{g.lower}\t{sx(g.dr)}\t{sx(g.dcol)}\t{float(g.dr):.6f}\t{float(g.dcol):.6f}")
    top = report.max_dr
    print(f"largest step in r: lines {top.upper}-{top.lower}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--procedure", default=Config.procedure)
    ap.add_argument("--line4", choices=("insert", "omit"), default=Config.line4)
    sys.exit(run(Config(**vars(ap.parse_args()))))
