"""The n-trivial tangles ``w_n`` and the rational knots built from them.

``w_1 = (a_1)`` and ``w_n = w_{n-1} (a_n) reverse(-w_{n-1})``.  Setting any
``a_i = 0`` turns ``w_n`` into the 0-tangle; with all ``a_i != 0`` it is
non-trivial.  Plugging ``w_n`` into the unknot diagram ``C(0, c)`` gives the
knots of :func:`family_knot`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .conway import ConwaySeq, if_eval, tangle_fraction
from .extfrac import ExtRational, normalize

__all__ = [
    "RationalKnot",
    "make_wn",
    "TrivialityReport",
    "verify_n_trivial_structure",
    "family_knot",
    "certify_unknotting_one",
    "lm1_signed_sum",
    "lm1_fraction",
    "lm1_det",
    "lm1_sequence",
]


@dataclass(frozen=True)
class RationalKnot:
    """Schubert's 2-bridge knot ``S(p, q)``, ``p`` odd.

    ``p = 1, q = 0`` is the unknot.  ``provenance`` optionally records a
    Conway sequence whose numerator closure (in ``if_eval`` order) is this knot.
    """

    p: int
    q: int
    provenance: Optional[ConwaySeq] = field(default=None, compare=False)

    def __post_init__(self):
        if self.p <= 0 or self.p % 2 == 0:
            raise ValueError(f"p={self.p}: a rational knot needs odd positive p (even p gives a link)")
        if self.p == 1:
            if self.q != 0:
                raise ValueError("the unknot is S(1, 0)")
        elif not (0 < abs(self.q) < self.p and gcd(self.p, self.q) == 1):
            raise ValueError(f"S({self.p},{self.q}): need 0 < |q| < p and gcd(p, q) = 1")

    @classmethod
    def from_fraction(cls, f: ExtRational, provenance: Optional[Sequence[int]] = None) -> "RationalKnot":
        """Numerator closure of the tangle with fraction ``f``; ``q`` lands in ``[0, p)``."""
        if f.is_inf:
            p, q = 1, 0
        else:
            p = abs(f.num)
            q = (f.den * (1 if f.num > 0 else -1)) % p if p > 1 else 0
        prov = tuple(provenance) if provenance is not None else None
        return cls(p, q, prov)

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "RationalKnot":
        return cls.from_fraction(if_eval(seq), seq)

    @property
    def is_unknot(self) -> bool:
        return self.p == 1

    def same_knot(self, other: "RationalKnot", up_to_mirror: bool = False) -> bool:
        """Schubert's classification: equal ``p`` and ``q' = q^(+-1) mod p``."""
        if self.p != other.p:
            return False
        if self.p == 1:
            return True
        p = self.p
        qs = {self.q % p, pow(self.q, -1, p)}
        if up_to_mirror:
            qs |= {(-x) % p for x in qs}
        return other.q % p in qs

    def mirror(self) -> "RationalKnot":
        if self.p == 1:
            return self
        return RationalKnot(self.p, (-self.q) % self.p)

    def __str__(self) -> str:
        return f"S({self.p},{self.q})"


def _check_even(a: Sequence[int]) -> None:
    if not a:
        raise ValueError("need at least one twist parameter")
    odd = [x for x in a if x % 2]
    if odd:
        raise ValueError(f"twist parameters must be even, got {list(a)}")


def make_wn(a: Sequence[int]) -> ConwaySeq:
    """``w_n`` for twist parameters ``a = (a_1, ..., a_n)``; length ``2**n - 1``."""
    _check_even(a)
    w: list[int] = [a[0]]
    for m in a[1:]:
        w = w + [m] + [-x for x in reversed(w)]
    return tuple(w)


@dataclass
class TrivialityReport:
    params: tuple
    seed: int
    trials: int
    checks: int = 0
    nontriviality_asserted: bool = True
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "params": list(self.params),
            "seed": self.seed,
            "trials": self.trials,
            "checks": self.checks,
            "nontriviality_asserted": self.nontriviality_asserted,
            "violations": self.violations,
            "notes": self.notes,
            "ok": self.ok,
        }


def _random_even(rng: random.Random, nonzero: bool) -> int:
    while True:
        v = 2 * rng.randint(-10, 10)
        if v or not nonzero:
            return v


def verify_n_trivial_structure(a: Sequence[int], trials: int = 100, seed: int = 0) -> TrivialityReport:
    """Check that zeroing any ``a_i`` kills ``w_n`` and that all-nonzero params do not.

    Other parameters are swept over the given values and ``trials`` seeded
    random even values in [-20, 20].
    """
    _check_even(a)
    a = tuple(a)
    n = len(a)
    rng = random.Random(seed)
    rep = TrivialityReport(params=a, seed=seed, trials=trials)
    if any(x == 0 for x in a):
        rep.nontriviality_asserted = False
        rep.notes.append(f"zero parameter at positions {[i + 1 for i, x in enumerate(a) if x == 0]}: nontriviality not asserted")

    for i in range(n):
        vectors = [a] + [tuple(_random_even(rng, False) for _ in range(n)) for _ in range(trials)]
        for vec in vectors:
            vec = vec[:i] + (0,) + vec[i + 1:]
            f = tangle_fraction(make_wn(vec))
            rep.checks += 1
            if f.num != 0:
                rep.violations.append({"kind": "zeroing", "index": i + 1, "params": list(vec), "fraction": str(f)})

    vectors = [a] if rep.nontriviality_asserted else []
    vectors += [tuple(_random_even(rng, True) for _ in range(n)) for _ in range(trials)]
    for vec in vectors:
        f = tangle_fraction(make_wn(vec))
        rep.checks += 1
        if f.num == 0:
            rep.violations.append({"kind": "nontrivial", "params": list(vec), "fraction": str(f)})
    return rep


def _check_family(a: Sequence[int], c: int) -> None:
    _check_even(a)
    if any(x == 0 for x in a):
        raise ValueError(f"family knots need non-zero twist parameters, got {list(a)}")
    if c == 0 or c % 2:
        raise ValueError(f"c must be even and non-zero, got {c}")


def family_knot(a: Sequence[int], c: int) -> RationalKnot:
    """The knot ``w_n`` plugged into the 0-tangle slot of ``C(0, c)``: sequence ``w_n ++ (c)``."""
    _check_family(a, c)
    seq = make_wn(a) + (c,)
    return RationalKnot.from_sequence(seq)


def certify_unknotting_one(a: Sequence[int], c: int) -> bool:
    """One crossing change in the ``a_n`` twist region (``a_n -> a_n -+ 2 = 0``) unknots."""
    _check_even(a)
    if a[-1] not in (2, -2):
        raise ValueError(f"a_n must be +-2, got {a[-1]}")
    changed = tuple(a[:-1]) + (0,)
    f = if_eval(make_wn(changed) + (c,))
    return f.is_inf or abs(f.num) <= 1


def _check_signs(n: int, signs: Sequence[int]) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if len(signs) != n:
        raise ValueError(f"need {n} signs, got {len(signs)}")
    if any(s not in (1, -1) for s in signs):
        raise ValueError(f"signs must be +-1, got {list(signs)}")


def lm1_signed_sum(n: int, signs: Sequence[int]) -> int:
    """``sum_i e_i 2^(2^n - 2^i)`` with ``1/IF(w_n) = sum / 2^(2^n - 1)`` for ``a_i = 2*signs[i]``.

    The term signs are ``e_i = signs[i] * tau_i`` where ``tau = (+1)`` for
    ``n = 1`` and ``tau = (-1, +1, ..., +1, -1)`` otherwise.
    """
    _check_signs(n, signs)
    top = 2 ** n
    total = 0
    for i, s in enumerate(signs, start=1):
        tau = 1 if n == 1 or 1 < i < n else -1
        total += s * tau * 2 ** (top - 2 ** i)
    return total


def lm1_fraction(n: int, signs: Sequence[int]) -> ExtRational:
    """Closed form of ``IF(w_n)`` when every ``a_i = +-2``."""
    return normalize(2 ** (2 ** n - 1), lm1_signed_sum(n, signs))


def lm1_det(n: int, signs: Sequence[int], s: int) -> int:
    """Determinant of the closure of ``(w_n, s)`` with ``a_i = 2*signs[i]``."""
    return abs(lm1_signed_sum(n, signs) + s * 2 ** (2 ** n - 1))


def lm1_sequence(signs: Sequence[int], s: Optional[int] = None) -> ConwaySeq:
    w = make_wn([2 * x for x in signs])
    return w if s is None else w + (s,)
