"""Ratio-selection procedures, table building and the gap / shape analyses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .sexagesimal import (
    BASE,
    Sexagesimal,
    is_regular,
    regular_numbers,
    sqrt2_constant,
)
from .triples import (
    GeneratingPair,
    Triple,
    column_one,
    is_admissible,
    pq_triple,
    r_method,
)

LINE4_RATIO = Fraction(125, 54)
# the tablet keeps (45, 1 00, 1 15) for ratio 2 instead of (3, 4, 5)
UNREDUCED_RATIOS = frozenset({Fraction(2)})

KINDS = ("price", "p125", "robson_digits", "standard_table")


@dataclass(frozen=True)
class ProcedureSpec:
    """How generating ratios are drawn.

    ``price``/``p125`` bound ``p`` and ``q`` directly (plus an optional
    ``r_max``); ``robson_digits`` limits the base-60 places of ``r`` and its
    reciprocal inside ``[r_min, r_max]``; ``standard_table`` takes ``p`` and
    ``q`` from the standard reciprocal table.
    """

    kind: str
    p_max: Optional[int] = None
    q_max: Optional[int] = None
    p_min: int = 2
    q_min: int = 2
    r_max: Optional[Fraction] = None
    r_min: Optional[Fraction] = None
    max_places_each: Optional[int] = None
    max_places_total: Optional[int] = None
    include_one: bool = False

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown procedure kind {self.kind!r}; expected one of {KINDS}")
        if self.kind in ("price", "p125") and (self.p_max is None or self.q_max is None):
            raise ValueError(f"{self.kind} needs p_max and q_max")
        if self.kind == "robson_digits" and (
            self.max_places_each is None or self.max_places_total is None
        ):
            raise ValueError("robson_digits needs max_places_each and max_places_total")

    @classmethod
    def price(cls) -> "ProcedureSpec":
        return cls("price", p_max=128, q_max=54)

    @classmethod
    def p125(cls) -> "ProcedureSpec":
        return cls("p125", p_max=125, q_max=125)

    @classmethod
    def robson_digits(cls) -> "ProcedureSpec":
        # first and fifteenth tablet ratios taken as the preselected bounds
        return cls(
            "robson_digits",
            r_min=Fraction(9, 5),
            r_max=Fraction(12, 5),
            max_places_each=4,
            max_places_total=7,
        )

    @classmethod
    def standard_table(cls, include_one: bool = False) -> "ProcedureSpec":
        return cls("standard_table", include_one=include_one)

    @classmethod
    def from_bounds(cls, variant: str) -> "ProcedureSpec":
        b = derive_bounds(variant)
        return cls("price", p_max=b.p_max, q_max=b.q_max, r_max=b.r_max)


def named_procedure(name: str) -> ProcedureSpec:
    """Look up a procedure by its command-line name."""
    factories = {
        "price": ProcedureSpec.price,
        "p125": ProcedureSpec.p125,
        "robson": ProcedureSpec.robson_digits,
        "robson_digits": ProcedureSpec.robson_digits,
        "standard": ProcedureSpec.standard_table,
        "standard_table": ProcedureSpec.standard_table,
    }
    if name in factories:
        return factories[name]()
    if name in ("rough", "coarse", "fine"):
        return ProcedureSpec.from_bounds(name)
    raise ValueError(f"unknown procedure {name!r}")


PROCEDURE_NAMES = ("price", "p125", "robson", "standard", "rough", "coarse", "fine")


def places(r: Fraction) -> int:
    """Number of base-60 places of ``r`` in floating notation."""
    r = Fraction(r)
    if r <= 0 or not is_regular(r.denominator):
        raise ValueError(f"{r} has no finite floating form")
    s = Sexagesimal.from_fraction(r)
    return len(s.floating())


# -- enumeration ---------------------------------------------------------------


def _pair_pool(spec: ProcedureSpec) -> tuple[list[int], list[int]]:
    if spec.kind == "standard_table":
        table = regular_numbers(81, 2)
        if spec.include_one:
            table = [1] + table
        return table, table
    return (
        regular_numbers(spec.p_max, spec.p_min),
        regular_numbers(spec.q_max, spec.q_min),
    )


def _robson_candidates(spec: ProcedureSpec) -> list[Fraction]:
    # every regular ratio in (1, 3) with at most four places is k / 60**3
    scale = BASE ** (spec.max_places_each - 1)
    return [Fraction(k, scale) for k in regular_numbers(3 * scale - 1, scale + 1)]


def _in_window(r: Fraction, spec: ProcedureSpec) -> bool:
    if spec.r_max is not None and r > spec.r_max:
        return False
    if spec.r_min is not None and r < spec.r_min:
        return False
    return True


def _robson_ok(r: Fraction, spec: ProcedureSpec) -> bool:
    a, b = places(r), places(1 / r)
    return (
        a <= spec.max_places_each
        and b <= spec.max_places_each
        and a + b <= spec.max_places_total
    )


def enumerate_ratios(spec: ProcedureSpec) -> list[Fraction]:
    """Distinct admissible ratios of a procedure, largest first."""
    if spec.kind == "robson_digits":
        pool = _robson_candidates(spec)
        chosen = {
            r for r in pool if is_admissible(r) and _in_window(r, spec) and _robson_ok(r, spec)
        }
    else:
        ps, qs = _pair_pool(spec)
        chosen = {
            r
            for r in (Fraction(p, q) for p in ps for q in qs)
            if is_admissible(r) and _in_window(r, spec)
        }
    return sorted(chosen, reverse=True)


@dataclass(frozen=True)
class PoolStatistics:
    total_pairs: int
    distinct: int
    distinct_in_1_3: int
    admissible: int


def pool_statistics(spec: ProcedureSpec) -> PoolStatistics:
    """Counts behind a procedure.

    For ``robson_digits`` there are no pairs; the pool is the candidate
    ratios in (1, 3) with at most ``max_places_each`` places.
    """
    if spec.kind == "robson_digits":
        pool = _robson_candidates(spec)
        total, distinct = len(pool), set(pool)
    else:
        ps, qs = _pair_pool(spec)
        total = len(ps) * len(qs)
        distinct = {Fraction(p, q) for p in ps for q in qs}
    return PoolStatistics(
        total_pairs=total,
        distinct=len(distinct),
        distinct_in_1_3=sum(1 for r in distinct if 1 < r < 3),
        admissible=len(enumerate_ratios(spec)),
    )


@dataclass(frozen=True)
class Bounds:
    variant: str
    alpha0: Fraction  # estimate of 1 + sqrt 2
    r_max: Fraction
    p_max: int
    q_max: int


def derive_bounds(variant: str) -> Bounds:
    """Upper bounds for ``r``, ``p`` and ``q`` from an estimate of root two.

    ``r_max`` is ``1 + sqrt2`` cut to one fractional place; read as a whole
    number over 1 00 it gives ``p_max`` over ``q_max = 60``.
    """
    alpha0 = 1 + sqrt2_constant(variant).value
    r_max = Fraction(int(alpha0 * BASE), BASE)
    p_max = r_max * BASE
    assert p_max.denominator == 1
    return Bounds(variant, alpha0, r_max, int(p_max), BASE)


# -- tables ----------------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    n: int
    p: int
    q: int
    r: Fraction
    l: int
    column_one: Sexagesimal
    w: int
    d: int
    method: str = "r"
    pq_deviates: bool = False
    primitive: Optional[Triple] = field(default=None, compare=False)

    @property
    def triple(self) -> Triple:
        return Triple(self.w, self.l, self.d)


def _check_ratios(ratios: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(r) for r in ratios]
    for r in out:
        if not is_regular(r) or not is_admissible(r):
            raise ValueError(f"ratio {r} is not an admissible regular ratio")
    for a, b in zip(out, out[1:]):
        if not a > b:
            raise ValueError(f"ratios must be strictly descending ({a} then {b})")
    return out


def apply_line4_policy(ratios: Sequence[Fraction], policy: str) -> list[Fraction]:
    out = list(ratios)
    if policy == "insert":
        if LINE4_RATIO not in out:
            out.append(LINE4_RATIO)
            out.sort(reverse=True)
    elif policy == "omit":
        out = [r for r in out if r != LINE4_RATIO]
    else:
        raise ValueError(f"line4 policy must be 'insert' or 'omit', not {policy!r}")
    return out


def make_row(
    n: int, r: Fraction, method: str = "r", unreduced: frozenset = UNREDUCED_RATIOS
) -> TableRow:
    pair = GeneratingPair.from_ratio(r)
    pq = pq_triple(pair)
    trace = r_method(r)
    prim = trace.result
    if method == "r":
        shown = trace.tablet_form if (r in unreduced and trace.tablet_form) else prim
    elif method == "pq":
        shown = pq
    else:
        raise ValueError(f"method must be 'r' or 'pq', not {method!r}")
    r_shown = trace.tablet_form if (r in unreduced and trace.tablet_form) else prim
    return TableRow(
        n=n,
        p=pair.p,
        q=pair.q,
        r=r,
        l=shown.l,
        column_one=column_one(prim),
        w=shown.w,
        d=shown.d,
        method=method,
        pq_deviates=pq != r_shown,
        primitive=prim,
    )


def build_table(
    ratios: Iterable[Fraction],
    method: str = "r",
    line4_policy: str = "insert",
    unreduced: frozenset = UNREDUCED_RATIOS,
) -> list[TableRow]:
    """Rows numbered from 1 for descending admissible ratios.

    ``line4_policy='insert'`` adds 125/54 when the list lacks it and
    ``'omit'`` removes it. Ratios in ``unreduced`` keep the form reached at
    length 1 00 rather than the primitive triple.
    """
    rs = apply_line4_policy(_check_ratios(list(ratios)), line4_policy)
    return [make_row(i, r, method, unreduced) for i, r in enumerate(rs, start=1)]


def procedure_table(
    spec: ProcedureSpec, method: str = "r", line4_policy: str = "insert"
) -> list[TableRow]:
    return build_table(enumerate_ratios(spec), method, line4_policy)


# -- analyses ----------------------------------------------------------------------


@dataclass(frozen=True)
class Gap:
    upper: int  # line number of the larger ratio
    lower: int
    dr: Fraction
    dcol: Fraction


@dataclass(frozen=True)
class GapReport:
    gaps: tuple[Gap, ...]

    @property
    def max_dr(self) -> Gap:
        return max(self.gaps, key=lambda g: g.dr)

    @property
    def max_dcol(self) -> Gap:
        return max(self.gaps, key=lambda g: g.dcol)

    def exceeding(self, threshold: Fraction, by: str = "dr") -> list[Gap]:
        return [g for g in self.gaps if getattr(g, by) > threshold]


def gap_analysis(rows: Sequence[TableRow]) -> GapReport:
    """Differences between successive ratios and successive Column-I values."""
    if len(rows) < 2:
        raise ValueError("gap analysis needs at least two rows")
    gaps = []
    for a, b in zip(rows, rows[1:]):
        if not a.r > b.r:
            raise ValueError("rows must be in descending order of r")
        gaps.append(Gap(a.n, b.n, a.r - b.r, a.column_one.value - b.column_one.value))
    return GapReport(tuple(gaps))


SHAPES = ("w_over_d", "l_over_w")


def shape_value(row: TableRow, criterion: str) -> Fraction:
    if criterion == "w_over_d":
        return Fraction(row.w, row.d)
    if criterion == "l_over_w":
        return Fraction(row.l, row.w)
    raise ValueError(f"unknown shape criterion {criterion!r}; expected one of {SHAPES}")


def shape_filter(
    rows: Sequence[TableRow], criterion: str, lo: Fraction, hi: Fraction
) -> list[TableRow]:
    """Rows whose shape ratio lies strictly between ``lo`` and ``hi``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    return [row for row in rows if lo < shape_value(row, criterion) < hi]


def orders_agree(rows: Sequence[TableRow]) -> bool:
    """Descending ``r`` and descending Column I give the same order."""
    by_r = sorted(rows, key=lambda row: row.r, reverse=True)
    by_col = sorted(rows, key=lambda row: row.column_one.value, reverse=True)
    return [row.n for row in by_r] == [row.n for row in by_col]

