"""Counting n-trivial rational knots by crossing number.

``d_k`` counts the representations ``k = sum_{i=0}^n 2^i |w_i|`` through the
recursion ``d_1 = 2``, ``d_k = 2 (d_1 + ... + d_{floor(k/2)})``.  The explicit
enumerator lists the representations directly and is kept as an oracle; the
two disagree for small ``k`` and both counts are reported.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

import mpmath

__all__ = [
    "CensusTable",
    "count_dk",
    "enumerate_Dk",
    "compare_enumeration",
    "AsymptoticReport",
    "asymptotic_check",
    "exp_upper_bound",
    "RHO_LIMIT",
    "load_or_build",
    "CACHE_ENV",
]

CACHE_ENV = "RATKNOT_CACHE"
CACHE_VERSION = 1
ENUM_GUARD = 64
# 1/(2 ln 2) = 0.7213475...
RHO_LIMIT = Fraction(7213475204444817, 10**16)


@dataclass
class CensusTable:
    values: list = field(default_factory=list)  # values[k-1] = d_k
    prefix_sums: list = field(default_factory=list)  # prefix_sums[k-1] = d_1 + ... + d_k

    @property
    def K(self) -> int:
        return len(self.values)

    def d(self, k: int) -> int:
        return self.values[k - 1]

    def extend(self, K: int) -> "CensusTable":
        vals, pre = self.values, self.prefix_sums
        for k in range(len(vals) + 1, K + 1):
            v = 2 if k == 1 else 2 * pre[k // 2 - 1]
            vals.append(v)
            pre.append(v + (pre[-1] if pre else 0))
        return self

    def check_recursion(self) -> list[int]:
        """Indices where the stored table breaks the recursion (empty when consistent)."""
        bad = []
        sums = [0]  # recomputed here, not taken from prefix_sums
        for v in self.values:
            sums.append(sums[-1] + v)
        for k, v in enumerate(self.values, start=1):
            want = 2 if k == 1 else 2 * sums[k // 2]
            if v != want or self.prefix_sums[k - 1] != sums[k]:
                bad.append(k)
        return bad


def count_dk(K: int) -> CensusTable:
    if K < 1:
        raise ValueError("K must be at least 1")
    return CensusTable().extend(K)


def enumerate_Dk(k: int) -> list[tuple]:
    """All ``(w_0, ..., w_n)`` with ``n > 0``, every ``w_i != 0`` and ``sum 2^i |w_i| = k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > ENUM_GUARD:
        raise ValueError(f"explicit enumeration limited to k <= {ENUM_GUARD}")
    out = []

    def magnitudes(i, rest, acc):
        # choose |w_i| for i, i+1, ...; stop once at least two entries are fixed
        if rest == 0:
            if len(acc) >= 2:
                yield tuple(acc)
            return
        step = 2**i
        for m in range(1, rest // step + 1):
            yield from magnitudes(i + 1, rest - m * step, acc + [m])

    for mags in magnitudes(0, k, []):
        for signs in itertools.product((1, -1), repeat=len(mags)):
            out.append(tuple(s * m for s, m in zip(signs, mags)))
    return sorted(out)


def compare_enumeration(table: CensusTable, kmax: int) -> list[dict]:
    """Side-by-side recursion and brute-force counts; rows where they differ."""
    rows = []
    for k in range(1, kmax + 1):
        brute = len(enumerate_Dk(k))
        if brute != table.d(k):
            rows.append({"k": k, "recursion": table.d(k), "enumerated": brute})
    return rows


def exp_upper_bound(rho: Fraction, k: int, prec: int = 64) -> Fraction:
    """A rational ``B`` with ``exp(rho (ln k)^2) <= B``, from interval arithmetic.

    The returned bound exceeds the true value by a relative error below
    ``2^(-prec/2)``.
    """
    iv = mpmath.iv
    old = iv.prec
    iv.prec = prec
    try:
        r = iv.mpf(rho.numerator) / rho.denominator
        lk = iv.log(k)
        sign, man, exp, _ = iv.exp(r * lk * lk)._mpi_[1]
    finally:
        iv.prec = old
    # the upper endpoint is a binary float, hence an exact rational
    return (-1) ** sign * Fraction(man) * Fraction(2) ** exp


@dataclass
class AsymptoticReport:
    rho: Fraction
    K: int
    k0: Optional[int]  # least k with the bound holding on [k, K]
    failures: int  # k in [1, K] where the bound fails
    last_failure: Optional[int]

    @property
    def passed(self) -> bool:
        return self.k0 is not None

    def as_dict(self) -> dict:
        return {
            "rho": str(self.rho),
            "K": self.K,
            "k0": self.k0,
            "failures": self.failures,
            "last_failure": self.last_failure,
            "passed": self.passed,
        }


def asymptotic_check(table: CensusTable, rho, K: Optional[int] = None, k_start: int = 2) -> AsymptoticReport:
    """Check ``d_k >= exp(rho (ln k)^2)`` exactly on ``[k_start, K]`` and report the threshold.

    Each comparison is ``d_k >= B_k`` for a rational upper bound ``B_k``, so a
    pass is rigorous.  A failure may be spurious only if ``d_k`` falls inside
    the tiny interval-width margin; it is then counted as a failure.
    """
    rho = Fraction(str(rho)) if not isinstance(rho, Fraction) else rho
    if not 0 < rho < RHO_LIMIT:
        raise ValueError(f"rho={rho} must lie in (0, 1/(2 ln 2))")
    K = table.K if K is None else K
    if K > table.K:
        table.extend(K)
    failures, last = 0, None
    for k in range(k_start, K + 1):
        if table.d(k) < exp_upper_bound(rho, k):
            failures += 1
            last = k
    k0 = k_start if last is None else (last + 1 if last < K else None)
    return AsymptoticReport(rho, K, k0, failures, last)


def cache_path(path: Optional[str] = None) -> Path:
    if path:
        return Path(path)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "ratknot" / "census.json"


def load_or_build(K: int, path: Optional[str] = None) -> CensusTable:
    """Table up to ``K``, reusing and extending a JSON cache of decimal strings."""
    p = cache_path(path)
    table = CensusTable()
    try:
        data = json.loads(p.read_text())
        if data.get("version") == CACHE_VERSION:
            vals = [int(x) for x in data["values"]]
            table = CensusTable(vals, list(itertools.accumulate(vals)))
            if table.check_recursion():
                table = CensusTable()  # corrupt cache; rebuild
    except (OSError, ValueError, KeyError, TypeError):
        pass
    if table.K < K:
        table.extend(K)
        try:
            p.parent.mkdir(parents=True, exist_ok=True)
            p.write_text(json.dumps({"version": CACHE_VERSION, "values": [str(v) for v in table.values]}))
        except OSError:
            pass  # caching is best-effort
    if table.K > K:
        return CensusTable(table.values[:K], table.prefix_sums[:K])
    return table
