"""Double branched cover homology and the determinant congruence solvers.

For a rational knot ``S(p, q)`` the double branched cover is a lens space with
``H_1 = Z_p``; connected sums add these up.  The solvers build ``n``-trivial
rational knots of the form ``(w_n, s)`` with prescribed determinant residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .conway import if_eval
from .tangle import KrebesPair
from .trivial import RationalKnot, lm1_sequence, lm1_signed_sum, make_wn

__all__ = [
    "SmithResult",
    "smith_normal_form",
    "AbelianGroupFin",
    "ConnectedSum",
    "h1_double_cover",
    "reduce_mod",
    "unit_lift",
    "solve_det_congruence",
    "lm1_knot",
    "lm2_adjust",
    "lm2_determinant",
    "realize_module",
]


@dataclass(frozen=True)
class SmithResult:
    diagonal: tuple  # full diagonal including 1s and 0s
    rank: int

    @property
    def group(self) -> "AbelianGroupFin":
        """Torsion part of the cokernel (free rank is reported separately)."""
        return AbelianGroupFin(tuple(d for d in self.diagonal if d > 1))

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.diagonal if d == 0)


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithResult:
    """Invariant factors of an integer matrix by exact row/column pivoting.

    ``diagonal`` has one entry per row (``0`` for rows beyond the rank) so that
    the cokernel is ``sum Z/d_i``.
    """
    a = [list(map(int, r)) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        # pick the smallest non-zero entry in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    done = False
            if done:
                # the pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    rank = len(diag)
    diag += [0] * (rows - rank)
    return SmithResult(tuple(diag), rank)


@dataclass(frozen=True)
class AbelianGroupFin:
    """Finite abelian group as invariant factors ``d_1 | d_2 | ... | d_r``, all ``> 1``."""

    factors: tuple = ()

    def __post_init__(self):
        f = tuple(int(x) for x in self.factors)
        if any(x <= 1 for x in f) or any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            raise ValueError(f"{f} is not an invariant-factor chain; use AbelianGroupFin.from_cyclic")
        object.__setattr__(self, "factors", f)

    @classmethod
    def from_cyclic(cls, orders: Sequence[int]) -> "AbelianGroupFin":
        """``sum Z_{orders[i]}`` brought to chain form."""
        orders = [abs(int(x)) for x in orders]
        if any(x == 0 for x in orders):
            raise ValueError("Z_0 = Z is not finite")
        n = len(orders)
        diag = [[orders[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return smith_normal_form(diag).group if n else cls()

    @property
    def order(self) -> int:
        out = 1
        for x in self.factors:
            out *= x
        return out

    @property
    def torsion_count(self) -> int:
        """Number of torsion coefficients; Wendt: ``u(K) >= torsion_count``."""
        return len(self.factors)

    def as_dict(self) -> dict:
        return {"factors": list(self.factors)}

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " + ".join(f"Z_{d}" for d in self.factors)


@dataclass(frozen=True)
class ConnectedSum:
    """Connected sum of rational knots; the empty sum is the unknot."""

    summands: tuple = ()

    def __str__(self) -> str:
        return " # ".join(str(k) for k in self.summands) if self.summands else "unknot"


def h1_double_cover(k: ConnectedSum | RationalKnot) -> AbelianGroupFin:
    if isinstance(k, RationalKnot):
        k = ConnectedSum((k,))
    return AbelianGroupFin.from_cyclic([s.p for s in k.summands if s.p > 1])


def reduce_mod(g: AbelianGroupFin, p: int) -> AbelianGroupFin:
    """``H tensor Z_p``: each ``Z_d`` becomes ``Z_gcd(d, p)``."""
    if p <= 1:
        raise ValueError("modulus must exceed 1")
    return AbelianGroupFin(tuple(x for x in (gcd(d, p) for d in g.factors) if x > 1))


def unit_lift(p: int, q: int, u: int) -> int:
    """A unit ``w`` mod ``p`` with ``w = u mod q``, for ``q | p`` and ``gcd(u, q) = 1``."""
    if p <= 0 or q <= 0 or p % q:
        raise ValueError(f"need q | p, got p={p}, q={q}")
    if gcd(u, q) != 1:
        raise ValueError(f"u={u} is not a unit mod {q}")
    # m = largest divisor of p coprime to q; primes of p/m already divide q
    m = p
    g = gcd(m, q)
    while g > 1:
        m //= g
        g = gcd(m, q)
    # u + q*t = 1 (mod m), solvable since gcd(q, m) = 1
    t = ((1 - u) * pow(q, -1, m)) % m if m > 1 else 0
    return (u + q * t) % p


def _check_odd_modulus(p: int) -> None:
    if p <= 1 or p % 2 == 0:
        raise ValueError(f"modulus p={p} must be odd and > 1")


def solve_det_congruence(p: int, k: int, n: int, signs: Optional[Sequence[int]] = None) -> int:
    """``s`` such that the ``(w_n, s)`` knot (``a_i = 2*signs[i]``) has ``det = k mod p``.

    ``det = sum + s * 2^(2^n - 1)`` with the signed sum of
    :func:`~ratknot.trivial.lm1_signed_sum`; the power of two is a unit mod
    odd ``p``.  ``s`` is the least non-negative solution with ``det > 1``, so
    the knot is non-trivial and ``det`` itself (not ``-det``) hits the residue.
    """
    _check_odd_modulus(p)
    signs = tuple(signs) if signs is not None else (1,) * n
    total = lm1_signed_sum(n, signs)
    big = 2 ** (2 ** n - 1)
    s = ((k - total) * pow(big, -1, p)) % p
    while total + s * big <= 1:
        s += p
    return s


def lm1_knot(signs: Sequence[int], s: int) -> RationalKnot:
    return RationalKnot.from_sequence(lm1_sequence(signs, s))


def lm2_determinant(pair: KrebesPair, n: int, signs: Sequence[int], s: int) -> int:
    """Signed ``k 2^(2^n-1) + a [sum + s 2^(2^n-1)]`` for ``R(T) = (a, k)``."""
    big = 2 ** (2 ** n - 1)
    return pair.b * big + pair.a * (lm1_signed_sum(n, signs) + s * big)


def lm2_adjust(p: int, pair: KrebesPair, n: int, signs: Optional[Sequence[int]] = None) -> int:
    """``s`` making ``det(T + (w_n, s, 0))`` coprime to ``p`` for ``R(T) = (+-2k+-1, k)``."""
    _check_odd_modulus(p)
    a, k = pair.a, pair.b
    if k == 0 or abs(a) not in (2 * abs(k) - 1, 2 * abs(k) + 1):
        raise ValueError(f"{pair} is not of the form (+-2k+-1, k)")
    signs = tuple(signs) if signs is not None else (1,) * n
    big = 2 ** (2 ** n - 1)
    inv_big = pow(big, -1, p)
    k_prime = k * big + a * lm1_signed_sum(n, signs)
    l = gcd(a, p)
    if l == 1:
        # a * big is a unit: aim for det = 1 (mod p)
        return ((1 - k_prime) * pow(a * big, -1, p)) % p
    # gcd(l, k') = 1, so some k' + l*s' is a unit mod p
    w = unit_lift(p, l, k_prime % l)
    s_prime = (w - k_prime) // l
    # a/l is a unit mod p/l; lift its inverse to Z_p
    ql = p // l
    v = unit_lift(p, ql, pow(a // l, -1, ql)) if ql > 1 else 1
    return (s_prime * inv_big * v) % p


def realize_module(p: int, h: Sequence[int], n: int, base: KrebesPair = KrebesPair(-1, 1)) -> ConnectedSum:
    """Connected sum of ``n``-trivial rational knots with ``H_1(D, Z_p) = sum Z_{h_i}``.

    Summand ``i`` solves ``det = h_i (mod p)``, so ``gcd(det, p) = h_i``.
    With ``h`` empty the result is the single knot ``T + (w_n, s, 0)`` for the
    unknotting tangle ``T`` with pair ``base``, its determinant made coprime
    to ``p``.
    """
    _check_odd_modulus(p)
    targets = [int(x) for x in h if int(x) != 1]
    bad = [x for x in targets if x <= 0 or p % x]
    if bad:
        raise ValueError(f"orders {bad} do not divide p={p}")
    signs = (1,) * n
    if not targets:
        s = lm2_adjust(p, base, n, signs)
        knot = _lm2_knot(base, signs, s)
        while knot.p <= 1:
            # det is linear in s, so stepping by p keeps the residue and leaves the unknot
            s += p
            knot = _lm2_knot(base, signs, s)
        return ConnectedSum((knot,))
    summands = []
    for target in targets:
        s = solve_det_congruence(p, target % p, n, signs)
        summands.append(lm1_knot(signs, s))
    return ConnectedSum(tuple(summands))


def _lm2_knot(base: KrebesPair, signs: Sequence[int], s: int) -> RationalKnot:
    # T + (w_n, s, 0) for a rational T with fraction a/k: IF(w_n, s, 0) + a/k
    from .extfrac import normalize

    inner = if_eval(make_wn([2 * x for x in signs]) + (s, 0))
    num = inner.num * base.b + inner.den * base.a
    den = inner.den * base.b
    f = normalize(num, den)
    return RationalKnot.from_fraction(f)
