"""Simulations of the scribal mistakes that explain the computational errors.

Each :class:`ErrorModel` replays a calculation on the numbers of one line,
deviating from the correct procedure in one specific way, and reports the
cells the scribe would then have written.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Mapping, Optional

from .sexagesimal import Sexagesimal, parse_sexagesimal
from .tablet import Tablet, TabletRow, attested_tablet, corrected_tablet
from .triples import (
    GeneratingPair,
    Triple,
    integer_view,
    next_multiplier,
    pq_triple,
    r_method,
)

KINDS = (
    "gillings_line2",
    "robson_overshoot",
    "modified_multiplier",
    "wrong_y",
    "square_copy",
    "halving_skip",
)


@dataclass(frozen=True)
class ErrorModel:
    kind: str
    line: int
    params: Mapping[str, object] = field(default_factory=dict)
    name: str = ""
    # cells the mechanism is claimed to produce, as tablet strings
    expected: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown error model {self.kind!r}; expected one of {KINDS}")
        missing = [k for k in _REQUIRED[self.kind] if k not in self.params]
        if missing:
            raise ValueError(f"{self.kind} needs parameters {missing}")
        if not self.name:
            object.__setattr__(self, "name", self.kind)


_REQUIRED: dict[str, tuple[str, ...]] = {
    "gillings_line2": ("wrong_p",),
    "robson_overshoot": ("extra_steps",),
    "modified_multiplier": ("wrong_step",),
    "wrong_y": ("y",),
    "square_copy": (),
    "halving_skip": ("skip_side",),
}


CATALOG: tuple[ErrorModel, ...] = (
    ErrorModel("gillings_line2", 2, {"wrong_p": 60}, expected={"III": "3 12 01"}),
    ErrorModel("robson_overshoot", 2, {"extra_steps": 2},
               expected={"II": "2 14 40 48", "III": "3 13 00 00"}),
    ErrorModel("modified_multiplier", 2, {"wrong_step": 4},
               expected={"II": "56 07", "III": "3 13"}),
    ErrorModel("wrong_y", 2, {"y": "3;21 02 30"}, name="wrong_y_3_21_02_30",
               expected={"II": "56 07", "III": "3 13"}),
    ErrorModel("wrong_y", 2, {"y": "3;20 01 02 30"}, name="wrong_y_3_20_01_02_30",
               expected={"II": "56 07", "III": "3 12 01"}),
    ErrorModel("square_copy", 13, {}, expected={"II": "7 12 01"}),
    ErrorModel("halving_skip", 15, {"skip_side": "left"}, expected={"II": "56", "III": "53"}),
)


def model_by_name(name: str) -> ErrorModel:
    for m in CATALOG:
        if m.name == name:
            return m
    # bare kind picks its first catalogued variant
    for m in CATALOG:
        if m.kind == name:
            return m
    raise ValueError(f"no error model named {name!r}")


@dataclass(frozen=True)
class Simulation:
    model: ErrorModel
    cells: dict[str, Sexagesimal]
    trace: tuple[str, ...]
    matches_attested: dict[str, bool]
    extra: dict[str, object] = field(default_factory=dict)

    @property
    def reproduces_attested(self) -> bool:
        return all(self.matches_attested.values())

    @property
    def reproduces_expected(self) -> bool:
        """Every predicted cell equals the simulated one in floating notation."""
        return all(
            c in self.cells and self.cells[c].same_floating(parse_sexagesimal(v))
            for c, v in self.model.expected.items()
        )

    def to_json(self) -> dict:
        return {
            "model": self.model.name,
            "kind": self.model.kind,
            "line": self.model.line,
            "cells": {c: str(v) for c, v in self.cells.items()},
            "matches_attested": self.matches_attested,
            "reproduces_expected": self.reproduces_expected,
            "trace": list(self.trace),
            **{k: (str(v) if isinstance(v, (Sexagesimal, Fraction)) else v)
               for k, v in self.extra.items()},
        }


def _fmt(v) -> str:
    if isinstance(v, Sexagesimal):
        return str(v)
    return str(Sexagesimal.from_fraction(v))


def _pair_cells(a: Fraction, b: Fraction) -> dict[str, Sexagesimal]:
    A, B, _ = integer_view(a, b)
    return {"II": Sexagesimal.from_int(A), "III": Sexagesimal.from_int(B)}


def _correct_row(line: int, data=None) -> TabletRow:
    return corrected_tablet("r", data).row(line)


def _line_ratio(line: int, data=None) -> Fraction:
    row = _correct_row(line, data)
    return Fraction(row.p, row.q)


def simulate_error(model: ErrorModel, data=None) -> Simulation:
    """Replay one error mechanism and compare with the attested cells."""
    handler = _HANDLERS[model.kind]
    cells, trace, extra = handler(model, data)
    attested = attested_tablet(data).row(model.line)
    matches = {c: v.same_floating(attested.cell(c)) for c, v in cells.items()}
    return Simulation(model, cells, tuple(trace), matches, extra)


def _gillings(model: ErrorModel, data) -> tuple[dict, list, dict]:
    row = _correct_row(model.line, data)
    p, q = row.p, row.q
    if model.line != 2:
        raise ValueError("the sign-slip mechanism is specific to line 2")
    wrong_p = int(model.params["wrong_p"])
    square = (p + q) ** 2
    # sum-of-squares identity the scribe should have used
    assert square - 2 * p * q == p * p + q * q
    first = square + 2 * p * q
    value = square + 2 * wrong_p * q
    S = Sexagesimal.from_int
    trace = [
        f"(p+q)^2 = {S(p + q)}^2 = {S(square)}",
        f"(p+q)^2 + 2pq = {S(square)} + {S(2 * p * q)} = {S(first)}  (sign slip)",
        f"with p = {S(wrong_p)} instead of {S(p)}: 2pq = {S(2 * wrong_p * q)}",
        f"{S(square)} + {S(2 * wrong_p * q)} = {S(value)}",
    ]
    return {"III": S(value)}, trace, {"sign_slip_only": S(first)}


def _reduce(a: Fraction, b: Fraction, strategy: str, trace: list, limit: int = 32):
    while (m := next_multiplier(a, b, strategy)) is not None:
        if len(trace) > limit:
            raise RuntimeError("elimination did not terminate")
        a, b = a * m, b * m
        trace.append(f"x {_fmt(m)}: {_fmt_pair(a, b)}")
    return a, b


def _fmt_pair(a: Fraction, b: Fraction) -> str:
    return f"{Sexagesimal.from_fraction(a)} | {Sexagesimal.from_fraction(b)}"


def _overshoot(model: ErrorModel, data) -> tuple[dict, list, dict]:
    t = r_method(_line_ratio(model.line, data), "robson")
    a, b = t.x, t.y
    trace = [f"start: {_fmt_pair(a, b)}"]
    for m in t.steps:
        a, b = a * m, b * m
        trace.append(f"x {_fmt(m)}: {_fmt_pair(a, b)}")
    last = t.steps[-1]
    for _ in range(int(model.params["extra_steps"])):
        a, b = a * last, b * last
        trace.append(f"x {_fmt(last)} (extra): {_fmt_pair(a, b)}")
    return _pair_cells(a, b), trace, {}


def _modified(model: ErrorModel, data) -> tuple[dict, list, dict]:
    t = r_method(_line_ratio(model.line, data), "modified")
    a, b = t.x, t.y
    wrong = int(model.params["wrong_step"])
    trace = [f"start: {_fmt_pair(a, b)}"]
    step = 0
    while (m := next_multiplier(a, b, "modified")) is not None:
        step += 1
        if step == wrong:
            # left number multiplied by the inverse of the intended multiplier
            a, b = a / m, b * m
            trace.append(f"x {_fmt(1 / m)} | x {_fmt(m)}: {_fmt_pair(a, b)}  (slip)")
        else:
            a, b = a * m, b * m
            trace.append(f"x {_fmt(m)}: {_fmt_pair(a, b)}")
        if step > 32:
            raise RuntimeError("elimination did not terminate")
    if step < wrong:
        raise ValueError(f"line {model.line} needs only {step} steps; no step {wrong}")
    return _pair_cells(a, b), trace, {}


def _wrong_y(model: ErrorModel, data) -> tuple[dict, list, dict]:
    r = _line_ratio(model.line, data)
    t = r_method(r)
    y_wrong = parse_sexagesimal(str(model.params["y"])).value
    previous = _line_ratio(model.line - 1, data) if model.line > 1 else None
    trace = [f"start: {_fmt_pair(t.x, y_wrong)}  (y should be {_fmt(t.y)})"]
    a, b = _reduce(t.x, y_wrong, "robson", trace)
    extra = {
        "y_used": Sexagesimal.from_fraction(y_wrong),
        "is_previous_r_times_y": previous is not None and y_wrong == previous * t.y,
    }
    return _pair_cells(a, b), trace, extra


def _square_copy(model: ErrorModel, data) -> tuple[dict, list, dict]:
    row = _correct_row(model.line, data)
    w, d = int(row.col2.value), int(row.col3.value)
    l = row.l
    S = Sexagesimal.from_int
    trace = [
        f"w^2 = {S(w)}^2 = {S(w * w)}",
        f"d^2 = {S(d)}^2 = {S(d * d)}",
        f"d^2 - w^2 = {S(d * d - w * w)} = {S(l)}^2",
        f"copied w^2 in place of w: {S(w * w)}",
    ]
    return {"II": S(w * w)}, trace, {}


def _halving_skip(model: ErrorModel, data) -> tuple[dict, list, dict]:
    t = r_method(_line_ratio(model.line, data), "halving")
    side = model.params["skip_side"]
    if side not in ("left", "right"):
        raise ValueError("skip_side must be 'left' or 'right'")
    a, b = t.x, t.y
    trace = [f"start: {_fmt_pair(a, b)}"]
    for i, m in enumerate(t.steps):
        if i == len(t.steps) - 1:
            if side == "left":
                b = b * m
            else:
                a = a * m
            trace.append(f"x {_fmt(m)} on the {'right' if side == 'left' else 'left'} only: "
                         f"{_fmt_pair(a, b)}")
        else:
            a, b = a * m, b * m
            trace.append(f"x {_fmt(m)}: {_fmt_pair(a, b)}")
    if t.steps[-1] != 30:
        raise ValueError(f"line {model.line} does not end with a halving step")
    # each number read on its own in floating notation
    cells = {
        "II": Sexagesimal(Sexagesimal.from_fraction(a).floating()),
        "III": Sexagesimal(Sexagesimal.from_fraction(b).floating()),
    }
    pair = GeneratingPair.from_ratio(_line_ratio(model.line, data))
    pq = pq_triple(pair)
    extra = {"pq_reading": f"pq gives ({Sexagesimal.from_int(pq.w)}, "
                           f"{Sexagesimal.from_int(pq.d)}); halving d only gives "
                           f"({Sexagesimal.from_int(pq.w)}, {Sexagesimal.from_int(pq.d // 2)})"}
    return cells, trace, extra


_HANDLERS = {
    "gillings_line2": _gillings,
    "robson_overshoot": _overshoot,
    "modified_multiplier": _modified,
    "wrong_y": _wrong_y,
    "square_copy": _square_copy,
    "halving_skip": _halving_skip,
}


# -- classification used by the differ --------------------------------------------------


def classify(line: int, column: str, inscribed: Sexagesimal) -> str:
    """``computational`` when a catalogued mechanism writes ``inscribed`` in that cell."""
    for model in CATALOG:
        if model.line != line:
            continue
        try:
            sim = simulate_error(model)
        except (ValueError, RuntimeError):
            continue
        cell = sim.cells.get(column)
        if cell is not None and cell.same_floating(inscribed):
            return "computational"
    return "typographical"


def pq_reading_note(generated: TabletRow, attested: TabletRow, column: str) -> str:
    """Point out when the pq reading would put the error in another column."""
    if generated.p is None or generated.q is None or column not in ("II", "III"):
        return ""
    if generated.p % 2 == 0 or generated.q % 2 == 0:
        return ""
    t = pq_triple(GeneratingPair(generated.p, generated.q))
    alt = {"II": Sexagesimal.from_int(t.w), "III": Sexagesimal.from_int(t.d)}
    wrong = [c for c in ("II", "III") if not alt[c].same_floating(attested.cell(c))]
    if wrong and wrong != [column]:
        c = wrong[0]
        return (
            f"under the pq reading column {c} is the wrong cell "
            f"(inscribed {attested.cell(c)}, correct {alt[c]})"
        )
    return ""


# -- lines whose w or d ends in a regular digit ------------------------------------------


@dataclass(frozen=True)
class LineAnalysis:
    n: int
    x: Sexagesimal
    y: Sexagesimal
    l: int
    w: int
    d: int
    expected: Triple
    attested_w: Sexagesimal
    attested_d: Sexagesimal
    deviates: bool


def _ends_regular(v: int) -> bool:
    last = Sexagesimal.from_int(v).floating()[-1]
    return any(last % p == 0 for p in (2, 3, 5))


def regular_terminal_lines(data=None) -> list[LineAnalysis]:
    """Lines where the last digit of w or d is divisible by 2, 3 or 5."""
    corrected: Tablet = corrected_tablet("r", data)
    attested = attested_tablet(data)
    out = []
    for row in corrected.rows:
        w, d = int(row.col2.value), int(row.col3.value)
        if not (_ends_regular(w) or _ends_regular(d)):
            continue
        t = r_method(Fraction(row.p, row.q))
        arow = attested.row(row.n)
        deviates = not (
            arow.col2.same_floating(Sexagesimal.from_int(t.result.w))
            and arow.col3.same_floating(Sexagesimal.from_int(t.result.d))
        )
        out.append(
            LineAnalysis(
                row.n,
                Sexagesimal.from_fraction(t.x),
                Sexagesimal.from_fraction(t.y),
                row.l,
                w,
                d,
                t.result,
                arow.col2,
                arow.col3,
                deviates,
            )
        )
    return out


def product_from_squares(p: int, q: int) -> tuple[Fraction, Fraction]:
    """``pq`` by the two quarter/half-square rules."""
    a = Fraction((p + q) ** 2 - (p - q) ** 2, 4)
    b = Fraction((p + q) ** 2 - p * p - q * q, 2)
    return a, b


def multiplier_product(steps) -> Fraction:
    return prod(steps, start=Fraction(1))


def optional_row(tab: Tablet, n: int) -> Optional[TabletRow]:
    return tab.rows[n - 1] if 1 <= n <= len(tab.rows) else None
