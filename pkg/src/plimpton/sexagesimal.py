"""Exact base-60 numbers, regular numbers and reciprocals.

Values are held as digit sequences with an explicit fraction point; all
arithmetic goes through :class:`fractions.Fraction`, so nothing is ever
rounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, NamedTuple, Union

BASE = 60

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Sexagesimal:
    """A signed base-60 numeral.

    ``digits`` run from most to least significant and the last
    ``frac_point`` of them are fractional. ``extrapolated`` flags digits an
    editor restored (bracketed in transliterations); the flags do not take
    part in equality.
    """

    digits: tuple[int, ...]
    frac_point: int = 0
    negative: bool = False
    extrapolated: tuple[bool, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        digits = tuple(self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise ValueError("a sexagesimal number needs at least one digit")
        for d in digits:
            if not isinstance(d, int) or not 0 <= d < BASE:
                raise ValueError(f"digit {d!r} outside 0..59")
        if not 0 <= self.frac_point < len(digits):
            # at least one integer digit is always kept
            raise ValueError(
                f"fraction point {self.frac_point} needs an integer digit "
                f"in front of it ({len(digits)} digits)"
            )
        if len(digits) - self.frac_point > 1 and digits[0] == 0:
            raise ValueError("leading zero in the integer part")
        flags = tuple(bool(f) for f in self.extrapolated) or (False,) * len(digits)
        if len(flags) != len(digits):
            raise ValueError("one extrapolation flag per digit is required")
        object.__setattr__(self, "extrapolated", flags)
        if self.negative and not any(digits):
            object.__setattr__(self, "negative", False)

    @classmethod
    def from_fraction(cls, value: Number) -> "Sexagesimal":
        """Exact expansion of ``value``; the denominator must be regular."""
        value = Fraction(value)
        if not is_regular(value.denominator):
            raise ValueError(f"{value} has no finite sexagesimal expansion")
        negative = value < 0
        value = abs(value)
        whole, rest = divmod(value.numerator, value.denominator)
        int_digits = _int_digits(whole)
        frac_digits = []
        rest = Fraction(rest, value.denominator)
        while rest:
            rest *= BASE
            d = rest.numerator // rest.denominator
            frac_digits.append(d)
            rest -= d
        return cls(tuple(int_digits + frac_digits), len(frac_digits), negative)

    @classmethod
    def from_int(cls, value: int) -> "Sexagesimal":
        return cls(tuple(_int_digits(abs(value))), 0, value < 0)

    @property
    def value(self) -> Fraction:
        total = 0
        for d in self.digits:
            total = total * BASE + d
        v = Fraction(total, BASE**self.frac_point)
        return -v if self.negative else v

    @property
    def integer_digits(self) -> tuple[int, ...]:
        return self.digits[: len(self.digits) - self.frac_point]

    @property
    def fraction_digits(self) -> tuple[int, ...]:
        return self.digits[len(self.digits) - self.frac_point :]

    def floating(self) -> tuple[int, ...]:
        """Digits with leading and trailing zeros dropped (tablet reading)."""
        lo, hi = _significant_span(self.digits)
        return self.digits[lo:hi] or (0,)

    def same_floating(self, other: "Sexagesimal") -> bool:
        return self.floating() == other.floating()

    def __str__(self) -> str:
        return format_sexagesimal(self)

    def __add__(self, other: "Sexagesimal") -> "Sexagesimal":
        return Sexagesimal.from_fraction(self.value + _as_fraction(other))

    def __sub__(self, other: "Sexagesimal") -> "Sexagesimal":
        return Sexagesimal.from_fraction(self.value - _as_fraction(other))

    def __mul__(self, other: "Sexagesimal") -> "Sexagesimal":
        return Sexagesimal.from_fraction(self.value * _as_fraction(other))

    __rmul__ = __mul__

    def __truediv__(self, other: "Sexagesimal") -> "Sexagesimal":
        return Sexagesimal.from_fraction(self.value / _as_fraction(other))


def _as_fraction(x: Union[Sexagesimal, Number]) -> Fraction:
    return x.value if isinstance(x, Sexagesimal) else Fraction(x)


def _int_digits(n: int) -> list[int]:
    out = []
    while n:
        n, d = divmod(n, BASE)
        out.append(d)
    return out[::-1] or [0]


def _significant_span(digits: tuple[int, ...]) -> tuple[int, int]:
    lo = 0
    while lo < len(digits) and digits[lo] == 0:
        lo += 1
    hi = len(digits)
    while hi > lo and digits[hi - 1] == 0:
        hi -= 1
    return lo, hi


# -- text form ---------------------------------------------------------------


def parse_sexagesimal(text: str) -> Sexagesimal:
    """Parse ``[-] d d ... [; d d ...]`` with optional ``[...]`` spans.

    Digit tokens are one or two decimal characters. Any digit touched by a
    bracket span (``5[3]`` counts) is flagged as extrapolated.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty sexagesimal literal")
    negative = False
    if s[0] in "-−":
        negative = True
        s = s[1:].lstrip()

    digits: list[int] = []
    flags: list[bool] = []
    frac_at: int | None = None
    in_bracket = False
    token = ""
    token_flag = False

    def flush() -> None:
        nonlocal token, token_flag
        if not token:
            return
        if len(token) > 2:
            raise ValueError(f"digit token {token!r} longer than two characters")
        value = int(token)
        if value >= BASE:
            raise ValueError(f"digit {token!r} exceeds 59")
        digits.append(value)
        flags.append(token_flag)
        token, token_flag = "", False

    for ch in s:
        if ch.isdigit() and ch.isascii():
            token += ch
            token_flag = token_flag or in_bracket
        elif ch == "[":
            if in_bracket:
                raise ValueError("nested '[' in sexagesimal literal")
            in_bracket = True
            token_flag = token_flag or bool(token)
        elif ch == "]":
            if not in_bracket:
                raise ValueError("unbalanced ']' in sexagesimal literal")
            in_bracket = False
            token_flag = token_flag or bool(token)
        elif ch == ";":
            flush()
            if frac_at is not None:
                raise ValueError("more than one fraction mark")
            if not digits:
                raise ValueError("fraction mark needs an integer digit before it")
            frac_at = len(digits)
        elif ch.isspace():
            flush()
        else:
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    if in_bracket:
        raise ValueError("unbalanced '[' in sexagesimal literal")
    flush()
    if not digits:
        raise ValueError(f"no digits in {text!r}")
    if frac_at is None:
        frac_at = len(digits)
    frac_point = len(digits) - frac_at
    # drop redundant leading zeros of the integer part
    while frac_at > 1 and digits[0] == 0:
        digits.pop(0)
        flags.pop(0)
        frac_at -= 1
    return Sexagesimal(tuple(digits), frac_point, negative, tuple(flags))


def format_sexagesimal(
    v: Sexagesimal, style: str = "canonical", *, brackets: bool = True
) -> str:
    """Render ``v``.

    ``canonical`` keeps every digit and the ``;`` mark; ``tablet`` is the
    floating reading with no fraction mark and no leading or trailing zeros.
    Digits after the first are zero-padded to two characters.
    """
    if style == "canonical":
        digits, flags = v.digits, v.extrapolated
        split = len(digits) - v.frac_point
    elif style == "tablet":
        lo, hi = _significant_span(v.digits)
        if lo == hi:
            digits, flags = (0,), (False,)
        else:
            digits, flags = v.digits[lo:hi], v.extrapolated[lo:hi]
        split = len(digits)
    else:
        raise ValueError(f"unknown style {style!r}")
    if not brackets:
        flags = (False,) * len(digits)

    parts: list[str] = []
    open_ = False
    for i, (d, flag) in enumerate(zip(digits, flags)):
        if i == split:
            parts.append(";")
        elif i:
            parts.append(" ")
        if flag and not open_:
            # keep "[" ahead of a ";" so the span reads naturally
            parts.append("[")
            open_ = True
        if not flag and open_:
            sep = parts.pop()
            parts.extend(["]", sep])
            open_ = False
        parts.append(str(d) if i == 0 else f"{d:02d}")
    if open_:
        parts.append("]")
    text = "".join(parts)
    return ("-" + text) if v.negative else text


def sexagesimal(text_or_value: Union[str, Number, Sexagesimal]) -> Sexagesimal:
    """Coerce a literal, an int or a Fraction into a :class:`Sexagesimal`."""
    if isinstance(text_or_value, Sexagesimal):
        return text_or_value
    if isinstance(text_or_value, str):
        return parse_sexagesimal(text_or_value)
    return Sexagesimal.from_fraction(text_or_value)


# -- regular numbers -----------------------------------------------------------


@dataclass(frozen=True)
class RegularFactorization:
    """Exponents of 2, 3 and 5; negative exponents allowed for fractions."""

    alpha: int
    beta: int
    gamma: int

    @property
    def value(self) -> Fraction:
        return (
            Fraction(2) ** self.alpha
            * Fraction(3) ** self.beta
            * Fraction(5) ** self.gamma
        )

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))


def _strip_235(n: int) -> tuple[tuple[int, int, int], int]:
    exps = []
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exps.append(e)
    return (exps[0], exps[1], exps[2]), n


def regular_factorization(q: Number) -> RegularFactorization | None:
    """Return the 2-3-5 exponents of ``q``, or ``None`` if ``q`` is not regular."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"regular factorization needs a positive number, got {q}")
    (a1, b1, c1), rest_num = _strip_235(q.numerator)
    (a2, b2, c2), rest_den = _strip_235(q.denominator)
    if rest_num != 1 or rest_den != 1:
        return None
    return RegularFactorization(a1 - a2, b1 - b2, c1 - c2)


def is_regular(q: Number) -> bool:
    q = Fraction(q)
    return q > 0 and regular_factorization(q) is not None


def regular_numbers(upper: int, lower: int = 1) -> list[int]:
    """All regular integers in ``[lower, upper]``, ascending."""
    out = []
    p2 = 1
    while p2 <= upper:
        p3 = p2
        while p3 <= upper:
            p5 = p3
            while p5 <= upper:
                if p5 >= lower:
                    out.append(p5)
                p5 *= 5
            p3 *= 3
        p2 *= 2
    return sorted(out)


def regular_part(n: int) -> int:
    """Largest regular divisor of a positive integer."""
    _, rest = _strip_235(n)
    return n // rest


# -- reciprocals ---------------------------------------------------------------


@dataclass(frozen=True)
class ReciprocalEntry:
    n: int
    nbar: Sexagesimal

    def __post_init__(self) -> None:
        product = self.n * self.nbar.value
        if regular_factorization(product) is None or not _is_power_of_60(product):
            raise ValueError(f"{self.nbar} is not a reciprocal of {self.n}")


def _is_power_of_60(v: Fraction) -> bool:
    while v >= BASE:
        v /= BASE
    while v < 1:
        v *= BASE
    return v == 1


def reciprocal(n: Number) -> Sexagesimal:
    """Finite expansion of ``1/n`` for a regular ``n``."""
    n = Fraction(n)
    if n <= 0 or not is_regular(n):
        raise ValueError(f"{n} is not regular; 1/{n} does not terminate")
    return Sexagesimal.from_fraction(1 / n)


def standard_reciprocal_table() -> list[ReciprocalEntry]:
    """The regular numbers 2 .. 1 21 with their reciprocals."""
    return [ReciprocalEntry(n, reciprocal(n)) for n in regular_numbers(81, 2)]


class SexagesimalExpansion(NamedTuple):
    negative: bool
    integer_digits: tuple[int, ...]
    prefix: tuple[int, ...]
    repetend: tuple[int, ...]


def expand(value: Number) -> SexagesimalExpansion:
    """Long division in base 60, reporting the repeating block if any."""
    value = Fraction(value)
    negative = value < 0
    num, den = abs(value.numerator), value.denominator
    whole, rem = divmod(num, den)
    seen: dict[int, int] = {}
    frac: list[int] = []
    while rem and rem not in seen:
        seen[rem] = len(frac)
        d, rem = divmod(rem * BASE, den)
        frac.append(d)
    if not rem:
        return SexagesimalExpansion(negative, tuple(_int_digits(whole)), tuple(frac), ())
    start = seen[rem]
    return SexagesimalExpansion(
        negative, tuple(_int_digits(whole)), tuple(frac[:start]), tuple(frac[start:])
    )


def approximate_reciprocal(n: int, digits: int) -> tuple[Sexagesimal, Sexagesimal]:
    """Truncated lower and upper bounds for ``1/n`` at ``digits`` places."""
    if n <= 0:
        raise ValueError("n must be positive")
    if digits < 1:
        raise ValueError("at least one fractional digit is required")
    if is_regular(n):
        raise ValueError(f"{n} is regular; use reciprocal() for the exact value")
    scale = BASE**digits
    lower = Fraction(scale // n, scale)
    upper = lower + Fraction(1, scale)
    return _padded(lower, digits), _padded(upper, digits)


def _padded(value: Fraction, places: int) -> Sexagesimal:
    v = Sexagesimal.from_fraction(value)
    pad = places - v.frac_point
    return Sexagesimal(v.digits + (0,) * pad, places, v.negative)


def reciprocal_via_neighbour(n: int, multiplier: int) -> Sexagesimal:
    """Approximate ``1/n`` as ``multiplier`` times the reciprocal of the
    regular number nearest to ``multiplier * n`` (ties go to the smaller)."""
    target = multiplier * n
    lo = target
    while not is_regular(lo):
        lo -= 1
    hi = target
    while not is_regular(hi):
        hi += 1
    nearest = lo if target - lo <= hi - target else hi
    return Sexagesimal.from_fraction(multiplier * Fraction(1, nearest))


# -- squares and roots ---------------------------------------------------------


def integer_sqrt_exact(n: int) -> int | None:
    """``m`` with ``m*m == n``, or ``None`` when ``n`` is not a perfect square."""
    if n < 0:
        raise ValueError("square root of a negative number")
    m = isqrt(n)
    return m if m * m == n else None


def fraction_sqrt_exact(v: Fraction) -> Fraction | None:
    """Exact rational square root, or ``None``."""
    v = Fraction(v)
    if v < 0:
        return None
    num = integer_sqrt_exact(v.numerator)
    den = integer_sqrt_exact(v.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


_SQRT2 = {
    "rough": Sexagesimal((1, 30), 1),
    "coarse": Sexagesimal((1, 25), 1),
    "fine": Sexagesimal((1, 24, 51, 10), 3),
}

SQRT2_VARIANTS = tuple(_SQRT2)


def sqrt2_constant(variant: str = "fine") -> Sexagesimal:
    """The attested approximations of the square root of two."""
    try:
        return _SQRT2[variant]
    except KeyError:
        raise ValueError(
            f"unknown sqrt2 variant {variant!r}; expected one of {SQRT2_VARIANTS}"
        ) from None


def diagonal_of_square(side: Union[Sexagesimal, Number, str]) -> Sexagesimal:
    side = sexagesimal(side)
    if side.value <= 0:
        raise ValueError("side must be positive")
    return Sexagesimal.from_fraction(side.value * sqrt2_constant("fine").value)


def common_gcd(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
