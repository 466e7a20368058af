"""Polynomial and classical invariants of rational knots.

Conventions, fixed once:

* Bracket variable ``A``, ``delta = -A^2 - A^-2``; the twist ``[1]`` expands
  as ``A<0> + A^-1<inf>``.
* ``V(t) = (-A^3)^(-w) <K>`` at ``A = t^(-1/4)``.  With these choices
  ``S(3, 1)`` is the right-handed trefoil, ``V = t + t^3 - t^4``.
* The Seifert matrix of ``S(p, q)`` is read off the even form
  ``(2b_1, ..., 2b_2g)``: diagonal ``(-1)^i b_i``, ones on the superdiagonal.
  This gives ``sigma(S(3, 1)) = -2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .conway import to_even_form, to_positive_form
from .diagram import tangle_diagram, writhe
from .extfrac import normalize
from .laurent import LaurentPoly
from .trivial import RationalKnot

__all__ = [
    "bracket_pair",
    "closure_bracket",
    "knot_diagram_sequence",
    "jones",
    "seifert_matrix",
    "alexander_conway",
    "alexander_from_seifert",
    "conway_from_alexander",
    "symmetric_signature",
    "signature",
    "genus_rational",
    "VassilievData",
    "vassiliev_extract",
    "certify_n_similar_to_unknot",
    "SimilarityCertificate",
]

DELTA = LaurentPoly({2: -1, -2: -1})


def _twist(f: LaurentPoly, g: LaurentPoly, sign: int) -> tuple[LaurentPoly, LaurentPoly]:
    # <0> + [1] = A<0> + A^-1<inf>,  <inf> + [1] = (A + A^-1 delta)<inf> = -A^-3<inf>
    if sign > 0:
        return f.shift(1), f.shift(-1) - g.shift(-3)
    return f.shift(-1), f.shift(1) - g.shift(3)


def bracket_pair(a: Sequence[int]) -> tuple[LaurentPoly, LaurentPoly]:
    """Coordinates of the tangle's bracket in the basis ``(<0>, <inf>)``.

    Built in ``if_eval`` order, one transfer step per crossing; ``1/T`` swaps
    the basis and applies ``A -> A^-1``.
    """
    f, g = LaurentPoly.const(1), LaurentPoly()
    for i, m in enumerate(a):
        if i:
            f, g = g.substitute_power(-1), f.substitute_power(-1)
        sign = 1 if m > 0 else -1
        for _ in range(abs(m)):
            f, g = _twist(f, g, sign)
    return f, g


def closure_bracket(a: Sequence[int], which: str = "numerator") -> LaurentPoly:
    """Bracket of the numerator (N) or denominator (D) closure.

    ``N(<0>) = delta, N(<inf>) = 1``; the denominator closure swaps them.
    """
    f, g = bracket_pair(a)
    if which == "numerator":
        return f * DELTA + g
    if which == "denominator":
        return f + g * DELTA
    raise ValueError(f"unknown closure {which!r}")


def knot_diagram_sequence(k: RationalKnot) -> tuple:
    """Minimal-crossing Conway sequence whose numerator closure is ``k``."""
    if k.is_unknot:
        return (0, 0)  # IF = inf: a single circle, no crossings
    return to_positive_form(normalize(k.p, k.q % k.p))


def jones(k: RationalKnot) -> LaurentPoly:
    if k.is_unknot:
        return LaurentPoly.const(1)
    seq = knot_diagram_sequence(k)
    return jones_of_sequence(seq)


def jones_of_sequence(seq: Sequence[int]) -> LaurentPoly:
    """Jones polynomial of the numerator closure of ``seq`` (must be a knot)."""
    br = closure_bracket(seq)
    w = writhe(tangle_diagram(seq).numerator())
    v = br * LaurentPoly.monomial(-3 * w, (-1) ** w)
    # t = A^-4
    return v.substitute_power(-1).rescale_exponents(4)


# --- Seifert-matrix invariants ---------------------------------------------


def seifert_matrix(k: RationalKnot) -> list[list[int]]:
    if k.is_unknot:
        return []
    e = to_even_form(k.p, k.q)
    m = len(e)
    v = [[0] * m for _ in range(m)]
    for i, x in enumerate(e):
        v[i][i] = (-1) ** (i + 1) * (x // 2)
        if i + 1 < m:
            v[i][i + 1] = 1
    return v


def _pmul(p: list, q: list) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _psub(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]


def alexander_from_seifert(v: list[list[int]]) -> LaurentPoly:
    """``det(V - t V^T)`` for a tridiagonal ``V``, by the continuant recursion."""
    m = len(v)
    if m == 0:
        return LaurentPoly.const(1)
    for i in range(m):
        for j in range(m):
            if abs(i - j) > 1 and v[i][j]:
                raise ValueError("alexander_from_seifert expects a tridiagonal Seifert matrix")
    # polynomials in t as coefficient lists, lowest degree first
    prev2, prev = [1], [v[0][0], -v[0][0]]
    for i in range(1, m):
        diag = [v[i][i], -v[i][i]]
        up = [v[i - 1][i], -v[i][i - 1]]
        low = [v[i][i - 1], -v[i - 1][i]]
        prev2, prev = prev, _psub(_pmul(diag, prev), _pmul(_pmul(up, low), prev2))
    return LaurentPoly.from_coeff_list(prev)


def _normalize_alexander(d: LaurentPoly) -> LaurentPoly:
    if not d:
        return d
    lo, hi = d.min_degree(), d.max_degree()
    if (lo + hi) % 2:
        raise ValueError(f"{d} cannot be centred")
    d = d.shift(-(lo + hi) // 2)
    if d(1) < 0:
        d = -d
    return d


def conway_from_alexander(delta: LaurentPoly) -> LaurentPoly:
    """Rewrite a symmetric ``Delta(t)`` as ``nabla(z)``, ``z = t^1/2 - t^-1/2``.

    With ``x = z^2 = t - 2 + t^-1`` the sums ``T_k = t^k + t^-k`` obey
    ``T_0 = 2``, ``T_1 = x + 2`` and ``T_k = (x + 2) T_(k-1) - T_(k-2)``.
    """
    if not delta.is_symmetric():
        raise ValueError(f"{delta} is not symmetric")
    top = delta.max_degree() if delta else 0
    out = [delta[0]] + [0] * top
    t_prev, t_cur = [2], [2, 1]
    for k in range(1, top + 1):
        if k > 1:
            t_prev, t_cur = t_cur, _psub(_pmul([2, 1], t_cur), t_prev)
        c = delta[k]
        if c:
            for j, y in enumerate(t_cur):
                out[j] += c * y
    return LaurentPoly._wrap({2 * j: y for j, y in enumerate(out)})


def alexander_conway(k: RationalKnot) -> tuple[LaurentPoly, LaurentPoly]:
    """``(Delta(t), nabla(z))`` with ``Delta(1) = 1`` and ``Delta(t) = Delta(1/t)``."""
    delta = _normalize_alexander(alexander_from_seifert(seifert_matrix(k)))
    return delta, conway_from_alexander(delta)


def symmetric_signature(m: list[list[int]]) -> int:
    """Signature of a symmetric integer matrix by exact congruence diagonalization.

    Rows are sparse dicts and pivots are taken in index order, so a banded
    matrix is reduced in linear time.
    """
    rows: dict[int, dict[int, Fraction]] = {i: {j: Fraction(x) for j, x in enumerate(r) if x} for i, r in enumerate(m)}
    for i, r in rows.items():
        for j, x in r.items():
            if rows[j].get(i) != x:
                raise ValueError("matrix is not symmetric")
    sig = 0
    while rows:
        piv = next((i for i in rows if rows[i].get(i)), None)
        if piv is None:
            pair = next(((i, j) for i in rows for j in rows[i] if j != i), None)
            if pair is None:
                break  # what is left is the zero form
            _merge_basis(rows, *pair)
            continue
        p = rows[piv][piv]
        sig += 1 if p > 0 else -1
        nb = {j: x for j, x in rows.pop(piv).items() if j != piv}
        for j in nb:
            del rows[j][piv]
        # Schur complement
        for j, xj in nb.items():
            rj = rows[j]
            for k, xk in nb.items():
                nv = rj.get(k, 0) - xj * xk / p
                if nv:
                    rj[k] = nv
                else:
                    rj.pop(k, None)
    return sig


def _merge_basis(rows: dict, i: int, j: int) -> None:
    """Congruence ``e_i -> e_i + e_j``; makes the (i, i) entry ``2 M[i][j]`` when the diagonal is zero."""
    ri, rj = rows[i], rows[j]
    new = {}
    for k in set(ri) | set(rj):
        if k != i:
            v = ri.get(k, 0) + rj.get(k, 0)
            if v:
                new[k] = v
    dii = ri.get(i, 0) + 2 * ri.get(j, 0) + rj.get(j, 0)
    for k in ri:
        if k != i:
            rows[k].pop(i, None)
    for k, v in new.items():
        rows[k][i] = v
    if dii:
        new[i] = dii
    rows[i] = new


def signature(k: RationalKnot) -> int:
    """Signature of ``V + V^T`` for the even-form Seifert matrix."""
    v = seifert_matrix(k)
    m = len(v)
    sym = [[v[i][j] + v[j][i] for j in range(m)] for i in range(m)]
    return symmetric_signature(sym)


def genus_rational(k: RationalKnot) -> int:
    """Half the length of the even form (alternating knots: half the span of Delta)."""
    if k.is_unknot:
        return 0
    return len(to_even_form(k.p, k.q)) // 2


# --- finite-type invariants --------------------------------------------------


@dataclass(frozen=True)
class VassilievData:
    v2: Fraction
    v3: Fraction
    v2_from_alexander: Fraction
    jones_taylor: tuple
    conway_coefficients: tuple

    def as_dict(self) -> dict:
        return {
            "v2": str(self.v2),
            "v3": str(self.v3),
            "v2_from_alexander": str(self.v2_from_alexander),
            "jones_taylor": [str(u) for u in self.jones_taylor],
            "conway_coefficients": list(self.conway_coefficients),
        }


def vassiliev_extract(k: RationalKnot, n: int) -> VassilievData:
    """``v2 = -V''(1)/6 = Delta''(1)/2``, ``v3 = -V''(1)/12 - V'''(1)/36`` and
    the Taylor coefficients of ``V(e^x)`` up to ``x^n``."""
    if n < 2:
        raise ValueError("degree bound must be at least 2")
    v = jones(k)
    delta, nabla = alexander_conway(k)
    d2, d3 = v.derivative_at_one(2), v.derivative_at_one(3)
    v2 = Fraction(-d2, 6)
    v3 = Fraction(-d2, 12) - Fraction(d3, 36)
    v2a = Fraction(delta.derivative_at_one(2), 2)
    return VassilievData(
        v2=v2,
        v3=v3,
        v2_from_alexander=v2a,
        jones_taylor=tuple(v.taylor_exp(n)),
        conway_coefficients=tuple(nabla[j] for j in range(n + 1)),
    )


@dataclass(frozen=True)
class SimilarityCertificate:
    knot: str
    degree: int
    passed: bool
    jones_taylor: tuple
    conway_coefficients: tuple
    caveat: str = (
        "necessary condition only: checks the Jones-Taylor and Conway coefficients, "
        "not every Vassiliev invariant of this degree"
    )

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        return {
            "knot": self.knot,
            "degree": self.degree,
            "passed": self.passed,
            "jones_taylor": [str(u) for u in self.jones_taylor],
            "conway_coefficients": list(self.conway_coefficients),
            "caveat": self.caveat,
        }


def certify_n_similar_to_unknot(k: RationalKnot, n: int) -> SimilarityCertificate:
    """Polynomial certificate that ``k`` looks ``n``-similar to the unknot.

    Passes iff ``u_j = 0`` for ``2 <= j <= n`` in ``V(e^x) = sum u_j x^j``
    and the Conway coefficients of ``z^2 .. z^n`` vanish.  This is necessary,
    not sufficient, for ``n``-similarity.
    """
    data = vassiliev_extract(k, n)
    ok = all(u == 0 for u in data.jones_taylor[2:]) and all(c == 0 for c in data.conway_coefficients[2:])
    return SimilarityCertificate(str(k), n, ok, data.jones_taylor, data.conway_coefficients)
