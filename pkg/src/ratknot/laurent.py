"""Sparse Laurent polynomials with exact integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

__all__ = ["LaurentPoly"]


class LaurentPoly:
    """Map ``exponent -> coefficient`` with no zero coefficients stored.

    Coefficients are ints; instances are immutable and hashable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        c: dict[int, int] = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, v in items:
                e = int(e)
                c[e] = c.get(e, 0) + int(v)
        self._c = {e: v for e, v in c.items() if v != 0}
        self._hash = None

    @classmethod
    def _wrap(cls, c: dict) -> "LaurentPoly":
        # trusted fast path: int keys and values, zeros dropped here
        obj = object.__new__(cls)
        obj._c = {e: v for e, v in c.items() if v}
        obj._hash = None
        return obj

    @classmethod
    def from_coeff_list(cls, coeffs: list, low: int = 0) -> "LaurentPoly":
        """``sum coeffs[i] x^(low + i)``."""
        return cls._wrap({low + i: int(v) for i, v in enumerate(coeffs)})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    # --- container protocol -------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # --- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly._wrap(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly._wrap({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly._wrap(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._c) == 1:
                (e, v), = self._c.items()
                if v in (1, -1):
                    return LaurentPoly({e * k: v ** (-k)})
            raise ValueError("only unit monomials have negative powers")
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``x**k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """``P(x**k)``; ``k = -1`` is the bar involution ``x -> 1/x``."""
        return LaurentPoly({e * k: v for e, v in self._c.items()})

    def rescale_exponents(self, divisor: int) -> "LaurentPoly":
        """``P`` written in ``y = x**divisor``; every exponent must be divisible."""
        bad = [e for e in self._c if e % divisor]
        if bad:
            raise ValueError(f"exponents {sorted(bad)} not divisible by {divisor}")
        return LaurentPoly({e // divisor: v for e, v in self._c.items()})

    # --- queries ------------------------------------------------------------

    def min_degree(self) -> int:
        return min(self._c) if self._c else 0

    def max_degree(self) -> int:
        return max(self._c) if self._c else 0

    def span(self) -> int:
        return self.max_degree() - self.min_degree() if self._c else 0

    def __call__(self, x):
        """Evaluate at an int or Fraction (exact)."""
        x = Fraction(x)
        total = sum((v * x ** e for e, v in self._c.items()), Fraction(0))
        return int(total) if total.denominator == 1 else total

    def derivative_at_one(self, k: int) -> int:
        """k-th derivative at x = 1: sum of c_e * e(e-1)...(e-k+1)."""
        total = 0
        for e, v in self._c.items():
            falling = 1
            for j in range(k):
                falling *= e - j
            total += v * falling
        return total

    def taylor_exp(self, order: int) -> list[Fraction]:
        """Coefficients u_0..u_order of ``P(exp(x))`` about ``x = 0``."""
        # P(e^x) = sum_e c_e e^{ex}; coefficient of x^k is sum_e c_e e^k / k!
        out = []
        for k in range(order + 1):
            s = sum(v * e ** k for e, v in self._c.items())
            out.append(Fraction(s, factorial(k)))
        return out

    def is_symmetric(self) -> bool:
        return all(self._c.get(-e, 0) == v for e, v in self._c.items())

    # --- text / json --------------------------------------------------------

    def to_pairs(self) -> list[list[int]]:
        return [[e, v] for e, v in self.items()]

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls((e, v) for e, v in pairs)

    def format(self, var: str = "t") -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append(sign + body)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"

