"""Exact arithmetic on Q ∪ {∞}.

``∞`` is stored as ``1/0`` so that ``-1/0`` reduces to the same value and
``-∞ == ∞`` holds structurally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = ["ExtRational", "normalize", "add_int", "reciprocal", "negate", "INF", "ZERO", "parse_fraction"]


@dataclass(frozen=True, slots=True)
class ExtRational:
    num: int
    den: int

    def __post_init__(self):
        # Only reduced pairs may exist; go through normalize() to build one.
        if self.den < 0 or gcd(self.num, self.den) != 1 or (self.den == 0 and self.num != 1):
            raise ValueError(f"unreduced pair {self.num}/{self.den}; use normalize()")

    @property
    def is_inf(self) -> bool:
        return self.den == 0

    def to_fraction(self) -> Fraction:
        if self.is_inf:
            raise ZeroDivisionError("∞ has no Fraction value")
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        if self.is_inf:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExtRational({self})"

    def __neg__(self) -> "ExtRational":
        return negate(self)

    def __add__(self, k):
        if isinstance(k, int):
            return add_int(self, k)
        return NotImplemented

    __radd__ = __add__


def normalize(num: int, den: int) -> ExtRational:
    """Reduce ``num/den``; any ``a/0`` with ``a != 0`` becomes ``∞ = 1/0``."""
    if num == 0 and den == 0:
        raise ZeroDivisionError("0/0 is not a fraction")
    if den == 0:
        return ExtRational(1, 0)
    g = gcd(num, den)
    if den < 0:
        g = -g
    return ExtRational(num // g, den // g)


INF = ExtRational(1, 0)
ZERO = ExtRational(0, 1)


def add_int(x: ExtRational, k: int) -> ExtRational:
    if x.is_inf:
        return x
    # gcd(num + k*den, den) == gcd(num, den) == 1, so no reduction needed
    return ExtRational(x.num + k * x.den, x.den)


def reciprocal(x: ExtRational) -> ExtRational:
    return normalize(x.den, x.num)


def negate(x: ExtRational) -> ExtRational:
    if x.is_inf:
        return x
    return ExtRational(-x.num, x.den)


_FRACTION_RE = re.compile(r"^\s*(?:(inf|∞)|([+-]?\d+)(?:\s*/\s*([+-]?\d+))?)\s*$", re.IGNORECASE)


def parse_fraction(text: str) -> ExtRational:
    """Parse ``"p/q"``, ``"p"`` or ``"inf"``."""
    m = _FRACTION_RE.match(text)
    if m is None:
        raise ValueError(f"not a fraction: {text!r} (expected 'p/q', 'p' or 'inf')")
    if m.group(1):
        return INF
    num = int(m.group(2))
    den = int(m.group(3)) if m.group(3) is not None else 1
    return normalize(num, den)
