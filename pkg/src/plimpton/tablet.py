"""The attested and corrected obverse, and cell-level diffing between tablets."""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

from .procedures import TableRow
from .sexagesimal import Sexagesimal, parse_sexagesimal
from .triples import GeneratingPair, pq_triple

DATA_ENV = "PLIMPTON_DATA"
GOLDEN_VERSION = "plimpton-golden/1"
COLUMNS = ("I", "II", "III")


@dataclass(frozen=True)
class TabletRow:
    n: int
    column_one: Sexagesimal
    col2: Sexagesimal
    col3: Sexagesimal
    n_extrapolated: bool = False
    p: Optional[int] = None
    q: Optional[int] = None
    l: Optional[int] = None

    def cell(self, column: str) -> Sexagesimal:
        return {"I": self.column_one, "II": self.col2, "III": self.col3}[column]


@dataclass(frozen=True)
class Tablet:
    rows: tuple[TabletRow, ...]
    source: str = ""

    def __post_init__(self) -> None:
        if len(self.rows) != 15:
            raise ValueError(f"a tablet has 15 rows, got {len(self.rows)}")
        if [r.n for r in self.rows] != list(range(1, 16)):
            raise ValueError("tablet rows must be numbered 1 to 15 in order")

    def row(self, n: int) -> TabletRow:
        return self.rows[n - 1]


# -- golden files -----------------------------------------------------------------


def data_path(name: str, data: Union[str, Path, None] = None) -> Path:
    """Locate a golden file: explicit directory, then $PLIMPTON_DATA, then the package."""
    base = data if data is not None else os.environ.get(DATA_ENV)
    if base:
        return Path(base) / name
    return Path(str(resources.files("plimpton") / "data" / name))


def _read_golden(path: Path) -> list[dict[str, str]]:
    with open(path, newline="", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].startswith("#") or GOLDEN_VERSION not in lines[0]:
        raise ValueError(f"{path}: missing '# {GOLDEN_VERSION}' header")
    body = [ln for ln in lines[1:] if ln.strip() and not ln.startswith("#")]
    return list(csv.DictReader(body, delimiter="\t"))


def _line_number(text: str) -> tuple[int, bool]:
    restored = "[" in text
    return int(text.strip("[] ")), restored


def _sexagesimal_int(text: str) -> int:
    v = parse_sexagesimal(text).value
    if v.denominator != 1:
        raise ValueError(f"expected a whole number, got {text!r}")
    return int(v)


def load_tablet(path: Union[str, Path]) -> Tablet:
    rows = []
    for rec in _read_golden(Path(path)):
        n, restored = _line_number(rec["n"])
        rows.append(
            TabletRow(
                n=n,
                column_one=parse_sexagesimal(rec["col1"]),
                col2=parse_sexagesimal(rec["col2"]),
                col3=parse_sexagesimal(rec["col3"]),
                n_extrapolated=restored,
                p=_sexagesimal_int(rec["p"]) if rec.get("p") else None,
                q=_sexagesimal_int(rec["q"]) if rec.get("q") else None,
                l=_sexagesimal_int(rec["l"]) if rec.get("l") else None,
            )
        )
    return Tablet(tuple(rows), source=str(path))


def attested_tablet(data: Union[str, Path, None] = None) -> Tablet:
    return load_tablet(data_path("attested.tsv", data))


def corrected_tablet(reading: str = "r", data: Union[str, Path, None] = None) -> Tablet:
    """The intended values.

    ``reading='r'`` is the reciprocal-method reading stored in the golden
    file (line 11 unreduced, line 15 as 28 / 53). ``reading='pq'`` recomputes
    columns II and III as ``p^2 - q^2`` and ``p^2 + q^2``.
    """
    tab = load_tablet(data_path("corrected.tsv", data))
    if reading == "r":
        return tab
    if reading != "pq":
        raise ValueError(f"reading must be 'r' or 'pq', not {reading!r}")
    rows = []
    for row in tab.rows:
        t = pq_triple(GeneratingPair(row.p, row.q))
        rows.append(
            TabletRow(
                row.n,
                row.column_one,
                Sexagesimal.from_int(t.w),
                Sexagesimal.from_int(t.d),
                p=row.p,
                q=row.q,
                l=t.l,
            )
        )
    return Tablet(tuple(rows), source=tab.source + "#pq")


def tablet_from_rows(rows: Sequence[TableRow], source: str = "generated") -> Tablet:
    """First 15 generated rows as a tablet."""
    if len(rows) < 15:
        raise ValueError("need at least 15 rows to fill the obverse")
    return Tablet(
        tuple(
            TabletRow(
                r.n,
                r.column_one,
                Sexagesimal.from_int(r.w),
                Sexagesimal.from_int(r.d),
                p=r.p,
                q=r.q,
                l=r.l,
            )
            for r in rows[:15]
        ),
        source=source,
    )


# -- diffing -------------------------------------------------------------------------


@dataclass(frozen=True)
class ErrorRecord:
    line: int
    column: str
    inscribed: Sexagesimal
    correct: Sexagesimal
    category: str  # "typographical" | "computational"
    note: str = ""

    def __post_init__(self) -> None:
        if self.inscribed.floating() == self.correct.floating():
            raise ValueError("an error record needs differing values")

    def to_json(self) -> dict:
        return {
            "line": self.line,
            "column": self.column,
            "inscribed": str(self.inscribed),
            "correct": str(self.correct),
            "category": self.category,
            "note": self.note,
        }


def is_gap(v: Sexagesimal, i: int) -> bool:
    """A restored zero after preserved digits: a blank space on the tablet."""
    return (
        v.digits[i] == 0
        and v.extrapolated[i]
        and any(not f for f in v.extrapolated[:i])
    )


def inscribed_reading(v: Sexagesimal) -> Sexagesimal:
    """What is physically written: restored gap zeros removed, restorations
    of the broken edge kept."""
    keep = [i for i in range(len(v.digits)) if not is_gap(v, i)]
    if len(keep) == len(v.digits):
        return v
    frac = sum(1 for i in keep if i >= len(v.digits) - v.frac_point)
    return Sexagesimal(
        tuple(v.digits[i] for i in keep),
        frac,
        v.negative,
        tuple(v.extrapolated[i] for i in keep),
    )


def diff_tablets(
    generated: Tablet, attested: Tablet, *, gap_as_zero: bool = False
) -> list[ErrorRecord]:
    """One record per differing cell, compared in floating notation.

    Blank spaces on the tablet are read as nothing unless ``gap_as_zero``,
    in which case a restored gap zero counts as written.
    """
    # imported here: the error catalogue depends on this module
    from .errors import classify, pq_reading_note

    records = []
    for grow, arow in zip(generated.rows, attested.rows):
        for column in COLUMNS:
            g, a = grow.cell(column), arow.cell(column)
            if not gap_as_zero:
                g, a = inscribed_reading(g), inscribed_reading(a)
            if g.floating() == a.floating():
                continue
            category = classify(arow.n, column, a)
            note = pq_reading_note(grow, arow, column)
            if category == "typographical" and any(
                is_gap(arow.cell(column), i) for i in range(len(arow.cell(column).digits))
            ):
                note = "blank space read as nothing; transliterating it as 00 removes the error"
            records.append(ErrorRecord(arow.n, column, a, g, category, note))
    return records
