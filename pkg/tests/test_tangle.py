import pytest
from hypothesis import given, strategies as st

from ratknot.conway import if_eval
from ratknot.tangle import (
    KrebesPair,
    RationalTangle,
    closure_determinant,
    is_trivial_tangle,
    krebes_extend,
    krebes_of_sequence,
    krebes_sum,
)

seqs = st.lists(st.integers(-9, 9), min_size=1, max_size=10).map(tuple)


def test_krebes_examples():
    assert krebes_of_sequence((2,)) == KrebesPair(2, 1)
    assert krebes_of_sequence((0,)) == KrebesPair(0, 1)
    # the recursion gives (-16, 7), i.e. if_eval's -16/7, canonically (16, -7)
    assert krebes_of_sequence((2, -4, -2)) == KrebesPair(-16, 7) == KrebesPair(16, -7)
    f = if_eval((2, -4, -2))
    assert (f.num, f.den) == (-16, 7)


def test_krebes_sum_examples():
    assert krebes_sum(KrebesPair(2, 1), KrebesPair(0, 1)) == KrebesPair(2, 1)
    assert krebes_sum(KrebesPair(3, 2), KrebesPair(3, 2)) == KrebesPair(12, 4)
    with pytest.raises(ValueError):
        krebes_sum(KrebesPair(1, 0), KrebesPair(1, 0))


def test_closure_determinants():
    assert closure_determinant(KrebesPair(16, 7)) == 16
    assert closure_determinant(KrebesPair(0, 1)) == 0
    k = 3
    assert closure_determinant(KrebesPair(2 * k + 1, k)) == 7


def test_pair_rejects_zero():
    with pytest.raises(ValueError):
        KrebesPair(0, 0)


@given(seqs)
def test_pair_matches_if_eval(a):
    pair = krebes_of_sequence(a)
    f = if_eval(a)
    # unimodular recursion: the pair is already reduced
    assert (pair.a, pair.b) in {(f.num, f.den), (-f.num, -f.den)}


@given(seqs, st.integers(-9, 9))
def test_extend_matches_append(a, m):
    assert krebes_extend(krebes_of_sequence(a), m) == krebes_of_sequence(a + (m,))


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_sum_is_commutative_and_sign_free(a, b, c, d):
    if (a, b) == (0, 0) or (c, d) == (0, 0) or (a * d + b * c, b * d) == (0, 0):
        return
    x, y = KrebesPair(a, b), KrebesPair(c, d)
    assert krebes_sum(x, y) == krebes_sum(y, x) == krebes_sum(KrebesPair(-a, -b), y)


def test_triviality():
    assert is_trivial_tangle((0,))
    assert is_trivial_tangle((2, 0, -2))
    assert not is_trivial_tangle((2, -4, -2))


def test_rational_tangle_witness_checked():
    t = RationalTangle.from_sequence((2, -4, -2))
    assert str(t.fraction) == "16/9" and not t.is_trivial()
    with pytest.raises(ValueError):
        RationalTangle(t.fraction, (2, 2))
