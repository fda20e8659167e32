"""Pythagorean triples from generating pairs and from generating ratios.

The pq construction takes regular integers ``p > q`` straight to
``(p^2 - q^2, 2pq, p^2 + q^2)``. The reciprocal construction starts from the
ratio ``r = p/q`` and its reciprocal, forms ``x = (r - 1/r)/2`` and
``y = (r + 1/r)/2`` and then clears the common regular factors of ``x`` and
``y`` by repeated multiplication, reading only the trailing base-60 digits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Callable, Optional, Union

from .sexagesimal import (
    BASE,
    Sexagesimal,
    integer_sqrt_exact,
    is_regular,
)

Ratio = Union[int, Fraction]


@dataclass(frozen=True)
class GeneratingPair:
    p: int
    q: int

    def __post_init__(self) -> None:
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("p and q must be integers")
        if not self.p > self.q >= 1:
            raise ValueError(f"need p > q >= 1, got p={self.p}, q={self.q}")
        if not (is_regular(self.p) and is_regular(self.q)):
            raise ValueError(f"p={self.p} and q={self.q} must both be regular")

    @classmethod
    def from_ratio(cls, r: Ratio) -> "GeneratingPair":
        r = Fraction(r)
        return cls(r.numerator, r.denominator)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def is_reduced(self) -> bool:
        return gcd(self.p, self.q) == 1


@dataclass(frozen=True)
class Triple:
    """Width, length and diagonal of a rectangle with integer sides."""

    w: int
    l: int
    d: int

    def __post_init__(self) -> None:
        if min(self.w, self.l, self.d) <= 0:
            raise ValueError(f"sides must be positive: {self}")
        if self.w * self.w + self.l * self.l != self.d * self.d:
            raise ValueError(f"{self} does not satisfy w^2 + l^2 = d^2")

    def scaled(self, k: int) -> "Triple":
        return Triple(self.w * k, self.l * k, self.d * k)

    @property
    def common_factor(self) -> int:
        return gcd(gcd(self.w, self.l), self.d)

    @property
    def is_primitive(self) -> bool:
        return self.common_factor == 1

    def primitive(self) -> "Triple":
        g = self.common_factor
        return Triple(self.w // g, self.l // g, self.d // g)

    def __iter__(self):
        return iter((self.w, self.l, self.d))


def greek_odd_triple(m: int) -> Triple:
    """``(m, (m^2-1)/2, (m^2+1)/2)`` for odd ``m > 1``."""
    if m <= 1 or m % 2 == 0:
        raise ValueError(f"m must be an odd integer greater than 1, got {m}")
    return Triple(m, (m * m - 1) // 2, (m * m + 1) // 2)


def pq_triple(pair: GeneratingPair) -> Triple:
    p, q = pair.p, pair.q
    return Triple(p * p - q * q, 2 * p * q, p * p + q * q)


def is_admissible(pair: Union[GeneratingPair, Ratio]) -> bool:
    """True when the generated width is shorter than the length."""
    if isinstance(pair, GeneratingPair):
        p, q = pair.p, pair.q
    else:
        r = Fraction(pair)
        p, q = r.numerator, r.denominator
    return p > q > 0 and p * p - q * q < 2 * p * q


def column_one(t: Triple, leading_one: bool = True) -> Sexagesimal:
    """``d^2/l^2`` (or ``w^2/l^2`` without the leading one) as exact digits."""
    if not is_regular(t.l):
        raise ValueError(f"l={t.l} is not regular; the expansion would not end")
    top = t.d if leading_one else t.w
    return Sexagesimal.from_fraction(Fraction(top * top, t.l * t.l))


# -- reciprocal method ---------------------------------------------------------


def integer_view(a: Fraction, b: Fraction) -> tuple[int, int, int]:
    """Scale the pair by a common power of 60 to integers not both ending in 00.

    Returns ``(A, B, k)`` with ``A = a * 60**k`` and ``B = b * 60**k``.
    """
    a, b = Fraction(a), Fraction(b)
    k = 0
    while a.denominator != 1 or b.denominator != 1:
        if not (is_regular(a.denominator) and is_regular(b.denominator)):
            raise ValueError("pair has no finite sexagesimal expansion")
        a, b, k = a * BASE, b * BASE, k + 1
    while a and b and a % BASE == 0 and b % BASE == 0:
        a, b, k = a / BASE, b / BASE, k - 1
    return int(a), int(b), k


def trailing_digits(a: Fraction, b: Fraction) -> tuple[int, int]:
    A, B, _ = integer_view(a, b)
    return A % BASE, B % BASE


def shared_factor(a: Fraction, b: Fraction) -> int:
    """Common divisor of 60 shared by both trailing digits (1 when done)."""
    ta, tb = trailing_digits(a, b)
    return gcd(gcd(ta, tb), BASE)


def _maximal(g: int) -> Fraction:
    return Fraction(BASE, g)


def _halving_first(g: int) -> Fraction:
    # shared factor made only of 2s: halve (x30) instead of x15
    if g & (g - 1) == 0:
        return Fraction(30)
    return Fraction(BASE, g)


def _robson(g: int) -> Fraction:
    if g % 30 == 0:
        return Fraction(2)
    if g % 5 == 0:
        return Fraction(12)
    return Fraction(BASE, g)


def _modified(g: int) -> Fraction:
    return Fraction(1, g)


STRATEGIES: dict[str, Callable[[int], Fraction]] = {
    "maximal": _maximal,
    "halving": _halving_first,
    "robson": _robson,
    "modified": _modified,
}


def next_multiplier(a: Fraction, b: Fraction, strategy: str = "maximal") -> Optional[Fraction]:
    """Multiplier the strategy applies next, or ``None`` once no factor is shared."""
    try:
        rule = STRATEGIES[strategy]
    except KeyError:
        raise ValueError(
            f"unknown multiplier strategy {strategy!r}; expected one of {sorted(STRATEGIES)}"
        ) from None
    g = shared_factor(a, b)
    return None if g == 1 else rule(g)


@dataclass(frozen=True)
class RMethodTrace:
    r: Fraction
    rbar: Fraction
    x: Fraction
    y: Fraction
    steps: tuple[Fraction, ...]
    pairs: tuple[tuple[Fraction, Fraction], ...]
    result: Triple
    tablet_form: Optional[Triple]
    strategy: str
    scale: int  # (M*x, M, M*y) == 60**scale * result

    @property
    def multiplier_product(self) -> Fraction:
        return prod(self.steps, start=Fraction(1))

    @property
    def final_pair(self) -> tuple[Fraction, Fraction]:
        return self.pairs[-1]


def r_method(r: Ratio, strategy: str = "maximal", max_steps: int = 64) -> RMethodTrace:
    """Run the reciprocal method on ``r`` with the given multiplier strategy."""
    r = Fraction(r)
    if not is_regular(r):
        raise ValueError(f"r={r} is not regular")
    if r <= 1:
        raise ValueError(f"r={r} must exceed 1")
    if not is_admissible(r):
        raise ValueError(f"r={r} is not admissible (width would exceed length)")
    rbar = 1 / r
    x = (r - rbar) / 2
    y = (r + rbar) / 2
    assert 1 + x * x == y * y

    a, b = x, y
    steps: list[Fraction] = []
    pairs = [(a, b)]
    while (m := next_multiplier(a, b, strategy)) is not None:
        if len(steps) >= max_steps:
            raise RuntimeError(f"strategy {strategy!r} did not terminate for r={r}")
        a, b = a * m, b * m
        steps.append(m)
        pairs.append((a, b))

    anchor = _gcd_anchor(r)
    M = prod(steps, start=Fraction(1))
    scale = _power_of_60((a, M, b), anchor)
    if scale is None:
        raise AssertionError(
            f"strategy {strategy!r} reached {(a, M, b)} which is not a power of 60 "
            f"times the primitive triple {anchor}"
        )
    tablet = None
    if (60 * x).denominator == 1 and (60 * y).denominator == 1:
        tablet = Triple(int(60 * x), 60, int(60 * y))
    return RMethodTrace(
        r, rbar, x, y, tuple(steps), tuple(pairs), anchor, tablet, strategy, scale
    )


def _gcd_anchor(r: Fraction) -> Triple:
    """Primitive triple for ``r`` by plain integer gcd reduction."""
    return pq_triple(GeneratingPair(r.numerator, r.denominator)).primitive()


def _power_of_60(values: tuple[Fraction, Fraction, Fraction], t: Triple) -> Optional[int]:
    ratio = Fraction(values[1]) / t.l
    if Fraction(values[0]) != ratio * t.w or Fraction(values[2]) != ratio * t.d:
        return None
    k = 0
    while ratio > 1 and ratio.denominator == 1 and ratio % BASE == 0:
        ratio /= BASE
        k += 1
    while ratio < 1:
        ratio *= BASE
        k -= 1
    return k if ratio == 1 else None


def l_from_squares(w: int, d: int) -> Optional[int]:
    """The uninscribed side recovered as ``sqrt(d^2 - w^2)``."""
    if d <= w:
        return None
    return integer_sqrt_exact(d * d - w * w)


class Equivalence(enum.Enum):
    IDENTICAL = "identical"
    PQ_IS_DOUBLE = "pq-is-double"


def pq_vs_r_equivalence(pair: GeneratingPair) -> Equivalence:
    """How the pq triple relates to the reciprocal-method triple for a reduced pair."""
    if not pair.is_reduced:
        raise ValueError(f"({pair.p}, {pair.q}) is not in lowest terms")
    pq = pq_triple(pair)
    r = r_method(pair.ratio).result
    if pq == r:
        return Equivalence.IDENTICAL
    if pq == r.scaled(2):
        return Equivalence.PQ_IS_DOUBLE
    raise AssertionError(f"unexpected relation between {pq} and {r}")
