"""Rational tangles, Krebes pairs and closure determinants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .conway import ConwaySeq, tangle_fraction
from .extfrac import ExtRational

__all__ = [
    "RationalTangle",
    "KrebesPair",
    "krebes_of_sequence",
    "krebes_extend",
    "krebes_sum",
    "closure_determinant",
    "is_trivial_tangle",
]


@dataclass(frozen=True)
class RationalTangle:
    fraction: ExtRational
    witness: Optional[ConwaySeq] = None

    def __post_init__(self):
        if self.witness is not None and tangle_fraction(self.witness) != self.fraction:
            raise ValueError(f"witness {self.witness} has fraction {tangle_fraction(self.witness)}, not {self.fraction}")

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "RationalTangle":
        seq = tuple(seq)
        return cls(tangle_fraction(seq), seq)

    def is_trivial(self) -> bool:
        return self.fraction.num == 0


@dataclass(frozen=True)
class KrebesPair:
    """Unreduced pair ``(a, b)`` modulo ``(a, b) ~ (-a, -b)``.

    Stored in canonical sign: ``a > 0``, or ``a == 0 and b > 0``.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("(0, 0) is not a Krebes pair")
        if self.a < 0 or (self.a == 0 and self.b < 0):
            object.__setattr__(self, "a", -self.a)
            object.__setattr__(self, "b", -self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def krebes_extend(x: KrebesPair, m: int) -> KrebesPair:
    """Pair of the sequence with ``m`` appended: ``(a, b) -> (m*a + b, a)``."""
    return KrebesPair(m * x.a + x.b, x.a)


def krebes_of_sequence(w: Sequence[int]) -> KrebesPair:
    if not w:
        raise ValueError("empty sequence")
    a, b = w[0], 1
    for m in w[1:]:
        a, b = m * a + b, a
    return KrebesPair(a, b)


def krebes_sum(x: KrebesPair, y: KrebesPair) -> KrebesPair:
    """Tangle-sum of pairs, kept unreduced: ``(a*d + b*c, b*d)``."""
    a, b = x.a * y.b + x.b * y.a, x.b * y.b
    if a == 0 and b == 0:
        raise ValueError(f"sum {x} + {y} degenerates to (0, 0)")
    return KrebesPair(a, b)


def closure_determinant(x: KrebesPair) -> int:
    """Determinant of the numerator closure; ``abs(x.b)`` is that of the flipped one."""
    return abs(x.a)


def is_trivial_tangle(a: Sequence[int]) -> bool:
    return tangle_fraction(a).num == 0
