import json
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ratknot.census import (
    CACHE_ENV,
    CensusTable,
    asymptotic_check,
    compare_enumeration,
    count_dk,
    enumerate_Dk,
    exp_upper_bound,
    load_or_build,
)


def naive_dk(K):
    d = {1: 2}
    for k in range(2, K + 1):
        d[k] = 2 * sum(d[j] for j in range(1, k // 2 + 1))
    return [d[k] for k in range(1, K + 1)]


def test_first_values():
    t = count_dk(8)
    assert t.values == [2, 4, 4, 12, 12, 20, 20, 44]
    assert t.values == naive_dk(8)


def test_recursion_against_naive():
    assert count_dk(300).values == naive_dk(300)


def test_check_recursion_detects_tampering():
    t = count_dk(50)
    assert t.check_recursion() == []
    t.values[9] += 1
    assert 10 in t.check_recursion()


def test_count_rejects_zero():
    with pytest.raises(ValueError):
        count_dk(0)


def test_enumeration_small():
    assert enumerate_Dk(2) == []
    assert enumerate_Dk(3) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    for t in enumerate_Dk(12):
        assert len(t) >= 2 and all(t) and sum(2**i * abs(w) for i, w in enumerate(t)) == 12


def test_enumeration_guard():
    with pytest.raises(ValueError):
        enumerate_Dk(65)
    with pytest.raises(ValueError):
        enumerate_Dk(0)


def test_discrepancies_reported():
    rows = compare_enumeration(count_dk(24), 24)
    ks = {r["k"] for r in rows}
    assert {1, 2} <= ks
    for r in rows:
        assert r["enumerated"] == len(enumerate_Dk(r["k"]))
        assert r["recursion"] != r["enumerated"]


@settings(max_examples=60, deadline=None)
@given(st.fractions(min_value=Fraction(1, 100), max_value=Fraction(7, 10), max_denominator=1000), st.integers(2, 10**6))
def test_exp_upper_bound_is_upper_and_tight(rho, k):
    with mpmath.workdps(60):
        exact = mpmath.exp(mpmath.mpf(rho.numerator) / rho.denominator * mpmath.log(k) ** 2)
        b = exp_upper_bound(rho, k)
        bm = mpmath.mpf(b.numerator) / b.denominator
        assert bm >= exact
        assert (bm - exact) / exact < mpmath.mpf(2) ** -30


def test_rho_range():
    t = count_dk(16)
    with pytest.raises(ValueError):
        asymptotic_check(t, 0.8)
    with pytest.raises(ValueError):
        asymptotic_check(t, 0)


def test_asymptotic_small_rho_passes():
    rep = asymptotic_check(count_dk(2**12), "0.3")
    assert rep.passed and rep.k0 <= 2**10
    assert rep.as_dict()["rho"] == "3/10"


def test_asymptotic_large_rho_reports_no_threshold():
    rep = asymptotic_check(count_dk(2**10), "0.7")
    assert rep.k0 is None and not rep.passed and rep.last_failure == 2**10


def test_cache_round_trip(tmp_path, monkeypatch):
    path = tmp_path / "c.json"
    monkeypatch.setenv(CACHE_ENV, str(path))
    t = load_or_build(40)
    data = json.loads(path.read_text())
    assert data["version"] == 1 and data["values"] == [str(v) for v in t.values]
    assert load_or_build(20).values == t.values[:20]
    assert load_or_build(60).values == count_dk(60).values


def test_corrupt_cache_is_rebuilt(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"version": 1, "values": ["2", "5", "4"]}))
    assert load_or_build(10, str(path)).values == count_dk(10).values
    path.write_text("not json")
    assert load_or_build(5, str(path)).values == count_dk(5).values


def test_table_extend_matches_fresh():
    t = CensusTable()
    t.extend(10).extend(100)
    assert t.values == count_dk(100).values
