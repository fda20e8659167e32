"""p/q, d^2/l^2 and w/l for every row of a procedure, as TSV for plotting.

    python scripts/ratio_figure.py --procedure price > ratios.tsv
"""

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from plimpton.procedures import build_table, enumerate_ratios, named_procedure, shape_value


@dataclass(frozen=True)
class Config:
    procedure: str = "price"
    line4: str = "insert"


def run(cfg: Config) -> int:
    rows = build_table(enumerate_ratios(named_procedure(cfg.procedure)), "r", cfg.line4)
    print("n\tr\tcol1\tw_over_l\tw_over_d\tl_over_w")
    for r in rows:
        vals = (r.r, r.column_one.value, Fraction(r.w, r.l),
                shape_value(r, "w_over_d"), shape_value(r, "l_over_w"))
        print(str(r.n) + "".join(f"\t{float(v):.6f}" for v in vals))
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--procedure", default=Config.procedure)
    ap.add_argument("--line4", choices=("insert", "omit"), default=Config.line4)
    sys.exit(run(Config(**vars(ap.parse_args()))))
