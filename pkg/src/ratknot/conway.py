"""Conway notation sequences and the iterated fraction.

A sequence is a plain tuple of ints.  Zeros are allowed anywhere: they stand
for the 0-tangle slots that get substituted into the n-trivial construction.

``if_eval`` folds left to right::

    IF(a1) = a1,   IF(a1, ..., an) = 1 / IF(a1, ..., a(n-1)) + an

and the tangle written ``C(a1, ..., an)`` has fraction ``IF(an, ..., a1)``.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .extfrac import ExtRational, normalize, add_int, reciprocal

__all__ = [
    "ConwaySeq",
    "ConwaySyntaxError",
    "as_seq",
    "if_eval",
    "tangle_fraction",
    "reverse",
    "negate",
    "concat",
    "to_positive_form",
    "to_even_form",
    "parse",
    "format_seq",
]

ConwaySeq = tuple  # tuple[int, ...], length >= 1


class ConwaySyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def as_seq(entries: Iterable[int]) -> ConwaySeq:
    seq = tuple(int(x) for x in entries)
    if not seq:
        raise ValueError("a Conway sequence needs at least one entry")
    return seq


def if_eval(a: Sequence[int]) -> ExtRational:
    if not a:
        raise ValueError("IF of an empty sequence is undefined")
    # numerator/denominator recursion (a, b) -> (m*a + b, a); it stays reduced
    # because each step is unimodular, so normalize only fixes the sign
    num, den = a[0], 1
    for m in a[1:]:
        num, den = m * num + den, num
    return normalize(num, den)


def if_eval_stepwise(a: Sequence[int]) -> ExtRational:
    """The same value computed through extended-rational reciprocal and shift."""
    x = normalize(a[0], 1)
    for m in a[1:]:
        x = add_int(reciprocal(x), m)
    return x


def tangle_fraction(a: Sequence[int]) -> ExtRational:
    return if_eval(a[::-1])


def reverse(a: Sequence[int]) -> ConwaySeq:
    return tuple(a[::-1])


def negate(a: Sequence[int]) -> ConwaySeq:
    return tuple(-x for x in a)


def concat(*parts: Sequence[int]) -> ConwaySeq:
    out: list[int] = []
    for part in parts:
        out.extend(part)
    return tuple(out)


def to_positive_form(f: ExtRational) -> ConwaySeq:
    """Same-sign sequence ``c`` with ``if_eval(c) == f``.

    For ``|f| > 1`` all entries share the sign of ``f`` and ``sum(|c_i|)`` is
    the crossing number of the closure.  Every value of a same-sign sequence
    has ``|IF| >= 1``, so for ``|f| < 1`` a trailing 0 is appended (the
    crossing-number reading does not apply there).
    """
    if f.is_inf or f.num == 0:
        raise ValueError(f"{f} has no same-sign Conway form")
    sign = 1 if f.num > 0 else -1
    num, den = abs(f.num), f.den
    tail: list[int] = []
    if num < den:
        tail.append(0)
        num, den = den, num
    out: list[int] = []
    # greedy expansion, read from the last entry backwards
    while True:
        q, r = divmod(num, den)
        if r == 0:
            out.append(q)
            break
        out.append(q)
        num, den = den, r
    seq = out[::-1] + tail
    return tuple(sign * x for x in seq)


def _even_expansion(num: int, den: int) -> list[int]:
    # num/den with exactly one of num, den even and |num| > |den| > 0
    out: list[int] = []
    while True:
        if abs(den) == 1 and num % 2 == 0:
            out.append(num * den)
            break
        # the unique even e with |num - e*den| < |den|
        e = 2 * round_half(num, 2 * den)
        r = num - e * den
        out.append(e)
        num, den = den, r
    return out[::-1]


def round_half(a: int, b: int) -> int:
    """Nearest integer to a/b (exact; ties cannot occur for our parities)."""
    return (2 * a + b) // (2 * b)


def to_even_form(p: int, q: int, *, canonical: bool = False, up_to_mirror: bool = False) -> ConwaySeq:
    """All-even Conway sequence ``e`` of the 2-bridge knot ``S(p, q)``.

    ``if_eval(e) == p/q'`` where ``q'`` is the even representative of ``q``
    modulo ``p`` in ``(-p, p)``; ``len(e)`` is twice the genus.  With
    ``canonical`` the form is chosen among ``q`` and ``q^-1`` (the same knot);
    ``up_to_mirror`` also admits ``-q`` and ``-q^-1``.  The choice is the
    lexicographically smallest sequence.
    """
    if p <= 0 or p % 2 == 0:
        raise ValueError(f"p={p}: an even-form knot needs odd positive p (even p is a 2-component link)")
    if p == 1:
        raise ValueError("the unknot has no even form")
    if q % p == 0 or gcd(p, q) != 1:
        raise ValueError(f"q={q} must be coprime to p={p}")
    reps = [q % p]
    if canonical or up_to_mirror:
        reps.append(pow(q, -1, p))
    if up_to_mirror:
        reps += [(-r) % p for r in list(reps)]
    forms = []
    for r in reps:
        qe = r if r % 2 == 0 else r - p
        forms.append(tuple(_even_expansion(p, qe)))
    return min(forms)


def format_seq(a: Sequence[int]) -> str:
    return "C(" + ",".join(str(x) for x in a) + ")"


def parse(text: str) -> ConwaySeq:
    """Parse ``C(2,-4,-2)`` or the bare form ``2 -4 -2``."""
    s = text
    i = 0
    n = len(s)

    def skip_ws(j):
        while j < n and s[j].isspace():
            j += 1
        return j

    def read_int(j):
        start = j
        if j < n and s[j] in "+-":
            j += 1
        digits = j
        while j < n and s[j].isdigit():
            j += 1
        if j == digits:
            raise ConwaySyntaxError("expected an integer", text, start)
        return int(s[start:j]), j

    i = skip_ws(i)
    if i >= n:
        raise ConwaySyntaxError("empty input", text, i)
    if s[i] in "Cc" and skip_ws(i + 1) < n and s[skip_ws(i + 1)] == "(":
        i = skip_ws(i + 1) + 1
        entries = []
        i = skip_ws(i)
        if i < n and s[i] == ")":
            raise ConwaySyntaxError("empty sequence", text, i)
        while True:
            i = skip_ws(i)
            val, i = read_int(i)
            entries.append(val)
            i = skip_ws(i)
            if i >= n:
                raise ConwaySyntaxError("missing ')'", text, i)
            if s[i] == ",":
                i += 1
                continue
            if s[i] == ")":
                i += 1
                break
            raise ConwaySyntaxError("expected ',' or ')'", text, i)
        i = skip_ws(i)
        if i != n:
            raise ConwaySyntaxError("trailing characters", text, i)
        return tuple(entries)
    entries = []
    while i < n:
        val, i = read_int(i)
        entries.append(val)
        if i < n and not s[i].isspace():
            raise ConwaySyntaxError("expected whitespace", text, i)
        i = skip_ws(i)
    return tuple(entries)
