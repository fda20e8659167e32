"""The cane-against-the-wall problem.

A cane of unknown length ``l`` stands upright against a wall. Its top slides
down by ``d`` while its foot moves out by ``b``. The length follows from
``l = (d^2 + b^2) / (2d)``. The height reached afterwards is then found the
way a scribe would find it: square, subtract, take the square root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .sexagesimal import Sexagesimal, fraction_sqrt_exact

Number = Union[int, Fraction, Sexagesimal]


def _exact(x: Number) -> Fraction:
    return x.value if isinstance(x, Sexagesimal) else Fraction(x)


@dataclass(frozen=True)
class CaneProblem:
    d: Fraction  # how far the top has come down
    b: Fraction  # how far the foot has gone out

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", _exact(self.d))
        object.__setattr__(self, "b", _exact(self.b))
        if self.d <= 0:
            raise ValueError("d must be positive: a cane that has not come down has no solution")
        if self.b < 0:
            raise ValueError("b must not be negative")


@dataclass(frozen=True)
class CaneSolution:
    l: Fraction
    h: Fraction
    h_squared: Fraction

    @property
    def is_integral(self) -> bool:
        return self.l.denominator == 1 and self.h.denominator == 1


def solve_cane(problem: CaneProblem) -> CaneSolution:
    d, b = problem.d, problem.b
    l = (d * d + b * b) / (2 * d)
    if l - d <= 0:
        raise ValueError(
            f"cane of length {l} is not longer than its drop {d}; the height would be {l - d}"
        )
    h2 = l * l - b * b
    h = fraction_sqrt_exact(h2)
    if h is None:  # cannot happen: h2 == (l - d)^2
        raise ArithmeticError(f"{h2} has no exact square root")
    assert h == l - d and h * h + b * b == l * l
    return CaneSolution(l, h, h2)


def solve(d: Number, b: Number) -> tuple[Fraction, Fraction]:
    s = solve_cane(CaneProblem(d, b))
    return s.l, s.h
