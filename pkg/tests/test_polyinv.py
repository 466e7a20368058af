import random
from math import gcd

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from ratknot.diagram import bracket_state_sum, components, tangle_diagram, writhe
from ratknot.laurent import LaurentPoly
from ratknot.polyinv import (
    alexander_conway,
    bracket_pair,
    certify_n_similar_to_unknot,
    genus_rational,
    jones,
    knot_diagram_sequence,
    seifert_matrix,
    signature,
    symmetric_signature,
    vassiliev_extract,
)
from ratknot.trivial import RationalKnot, family_knot

odd_knots = st.integers(1, 60).map(lambda x: 2 * x + 1).flatmap(
    lambda p: st.tuples(st.just(p), st.integers(1, p - 1).filter(lambda q: gcd(p, q) == 1))
).map(lambda pq: RationalKnot(*pq))

TREFOIL, MIRROR_TREFOIL, FIG8, K52 = RationalKnot(3, 1), RationalKnot(3, 2), RationalKnot(5, 2), RationalKnot(7, 3)
UNKNOT = RationalKnot(1, 0)


def t_poly(d):
    return LaurentPoly(d)


def minkus_alexander(p, q):
    """Alexander polynomial of S(p, q) for odd q from the sign sequence of floor(jq/p)."""
    if q % 2 == 0:
        q = p - q  # the mirror has the same polynomial
    s, exps = 0, [0]
    for j in range(1, p):
        s += (-1) ** ((j * q) // p)
        exps.append(s)
    c = {}
    for k, e in enumerate(exps):
        c[e] = c.get(e, 0) + (-1) ** k
    d = LaurentPoly(c)
    lo, hi = d.min_degree(), d.max_degree()
    d = d.shift(-(lo + hi) // 2)
    return d if d(1) > 0 else -d


def jones_by_state_sum(seq):
    d = tangle_diagram(seq).numerator()
    assert components(d) == 1
    w = writhe(d)
    v = bracket_state_sum(d) * LaurentPoly.monomial(-3 * w, (-1) ** w)
    return v.substitute_power(-1).rescale_exponents(4)


# --- examples ---------------------------------------------------------------


def test_bracket_pair_basics():
    assert bracket_pair((0,)) == (LaurentPoly.const(1), LaurentPoly())
    assert bracket_pair((1,)) == (LaurentPoly.monomial(1), LaurentPoly.monomial(-1))


def test_jones_examples():
    assert jones(UNKNOT) == LaurentPoly.const(1)
    assert jones(TREFOIL) == t_poly({1: 1, 3: 1, 4: -1})
    assert jones(MIRROR_TREFOIL) == t_poly({-4: -1, -3: 1, -1: 1})
    assert jones(FIG8) == t_poly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})


def test_alexander_examples():
    d, n = alexander_conway(TREFOIL)
    assert d == t_poly({-1: 1, 0: -1, 1: 1}) and abs(d(-1)) == 3 and n == LaurentPoly({0: 1, 2: 1})
    d, _ = alexander_conway(FIG8)
    assert d == t_poly({-1: -1, 0: 3, 1: -1}) and abs(d(-1)) == 5
    assert alexander_conway(UNKNOT) == (LaurentPoly.const(1), LaurentPoly.const(1))


def test_signature_examples():
    assert signature(TREFOIL) in (2, -2) and signature(TREFOIL) % 4
    assert signature(FIG8) == 0
    assert signature(K52) in (2, -2)


def test_genus_examples():
    assert genus_rational(TREFOIL) == 1 and genus_rational(FIG8) == 1
    assert genus_rational(family_knot((2, -4), 2)) == 2
    assert genus_rational(UNKNOT) == 0


def test_vassiliev_examples():
    u = vassiliev_extract(UNKNOT, 4)
    assert (u.v2, u.v3) == (0, 0) and u.jones_taylor == (1, 0, 0, 0, 0)
    t = vassiliev_extract(TREFOIL, 3)
    assert t.v2 == 1 and abs(t.v3) == 1 and t.v2_from_alexander == 1


def test_similarity_examples():
    assert not certify_n_similar_to_unknot(TREFOIL, 2)
    assert certify_n_similar_to_unknot(UNKNOT, 5)
    cert = certify_n_similar_to_unknot(UNKNOT, 3)
    assert "necessary" in cert.as_dict()["caveat"]


@pytest.mark.parametrize("c", [2, -2, 4, -4])
def test_family_w3_vanishing_through_degree_3(c):
    data = vassiliev_extract(family_knot((2, -4, 2), c), 3)
    assert data.jones_taylor[2] == 0 and data.jones_taylor[3] == 0
    assert data.v2 == 0 and data.v3 == 0


def test_family_w3_similarity_certificate_degree_3():
    assert certify_n_similar_to_unknot(family_knot((2, -4, 2), 2), 3)


@pytest.mark.parametrize("a", [(2,), (2, 2), (2, -4), (2, -4, 2), (2, 2, 2), (2, -4, 2, -4), (-2, 2, 4, 2)])
@pytest.mark.parametrize("c", [2, -2, 4, -4])
def test_family_vanishes_below_degree_n(a, c):
    n = len(a)
    data = vassiliev_extract(family_knot(a, c), max(n, 2))
    assert all(u == 0 for u in data.jones_taylor[2:n])
    assert all(z == 0 for z in data.conway_coefficients[2:n])


# --- oracle properties --------------------------------------------------------


@settings(max_examples=80, deadline=None)
@given(odd_knots)
def test_alexander_matches_minkus(k):
    d, _ = alexander_conway(k)
    assert d == minkus_alexander(k.p, k.q)


@settings(max_examples=80, deadline=None)
@given(odd_knots)
def test_determinants_and_normalizations(k):
    v = jones(k)
    d, n = alexander_conway(k)
    assert v(1) == 1 and d(1) == 1 and n[0] == 1
    assert abs(v(-1)) == k.p == abs(d(-1))
    assert d.is_symmetric()


@settings(max_examples=60, deadline=None)
@given(odd_knots)
def test_conway_substitution(k):
    d, n = alexander_conway(k)
    s = sympy.symbols("s", positive=True)  # t = s^2, z = s - 1/s
    lhs = sum(c * s ** (2 * e) for e, c in d.items())
    rhs = sum(c * (s - 1 / s) ** e for e, c in n.items())
    assert sympy.simplify(sympy.expand(lhs - rhs)) == 0


small_knots = st.integers(1, 12).map(lambda x: 2 * x + 1).flatmap(
    lambda p: st.tuples(st.just(p), st.integers(1, p - 1).filter(lambda q: gcd(p, q) == 1))
).map(lambda pq: RationalKnot(*pq))


@settings(max_examples=40, deadline=None)
@given(small_knots)
def test_seifert_matrix_oracles(k):
    m = seifert_matrix(k)
    assume(len(m) <= 8)  # symbolic determinants blow up beyond this
    v = sympy.Matrix(m)
    t = sympy.symbols("t")
    assert (v - v.T).det() == 1
    det = sympy.Poly(sympy.expand((v - t * v.T).det(method="berkowitz")), t)
    coeffs = {m[0]: int(c) for m, c in zip(det.monoms(), det.coeffs())}
    d = LaurentPoly(coeffs)
    d = d.shift(-(d.min_degree() + d.max_degree()) // 2)
    want, _ = alexander_conway(k)
    assert d in (want, -want)


@settings(max_examples=80, deadline=None)
@given(odd_knots)
def test_signature_matches_eigenvalues(k):
    v = np.array(seifert_matrix(k), dtype=float)
    ev = np.linalg.eigvalsh(v + v.T)
    assert min(abs(ev)) > 1e-9  # V + V^T is nonsingular for knots
    assert signature(k) == int(np.sum(ev > 0) - np.sum(ev < 0))


@settings(max_examples=80, deadline=None)
@given(odd_knots)
def test_mirror_behaviour(k):
    m = k.mirror()
    assert jones(m) == jones(k).substitute_power(-1)
    assert signature(m) == -signature(k)
    assert vassiliev_extract(m, 3).v3 == -vassiliev_extract(k, 3).v3


@settings(max_examples=80, deadline=None)
@given(odd_knots)
def test_vassiliev_consistency(k):
    data = vassiliev_extract(k, 4)
    assert data.v2 == data.v2_from_alexander == data.conway_coefficients[2]
    # V(e^x) = 1 + 0 x + ...: u_1 = V'(1) vanishes for every knot
    assert data.jones_taylor[0] == 1 and data.jones_taylor[1] == 0


@settings(max_examples=80, deadline=None)
@given(odd_knots)
def test_genus_is_half_alexander_span(k):
    d, _ = alexander_conway(k)
    assert 2 * genus_rational(k) == d.span()


def test_jones_matches_state_sum_on_reduced_diagrams():
    rng = random.Random(5)
    done = 0
    while done < 40:
        p = rng.randrange(3, 160, 2)
        q = rng.randrange(1, p)
        if gcd(p, q) != 1:
            continue
        k = RationalKnot(p, q)
        seq = knot_diagram_sequence(k)
        if sum(map(abs, seq)) > 14:
            continue
        assert jones(k) == jones_by_state_sum(seq), k
        done += 1


def descartes_signature(m):
    """Inertia of a symmetric matrix from sign changes of its characteristic polynomial."""
    x = sympy.symbols("x")
    cp = sympy.Matrix(m).charpoly(x).all_coeffs()

    def changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(a != b for a, b in zip(signs, signs[1:]))

    pos = changes(cp)
    neg = changes([c * (-1) ** i for i, c in enumerate(reversed(cp))][::-1])
    return pos - neg


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_symmetric_signature_matches_descartes(rows):
    n = len(rows)
    m = [[rows[i][j] + rows[j][i] for j in range(n)] for i in range(n)]
    assert symmetric_signature(m) == descartes_signature(m)


def test_symmetric_signature_zero_diagonal():
    assert symmetric_signature([[0, 1], [1, 0]]) == 0
    assert symmetric_signature([[0, 0], [0, 0]]) == 0
    with pytest.raises(ValueError):
        symmetric_signature([[0, 1], [2, 0]])


def test_signature_criterion_small_p():
    for p in range(3, 60, 2):
        for q in range(1, p):
            if gcd(p, q) == 1:
                assert (signature(RationalKnot(p, q)) % 4 == 0) == (p % 4 == 1)
