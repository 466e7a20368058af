"""Acceptance checks, shared by ``ratknot verify-paper`` and the test suite.

Each check returns a :class:`CheckResult` with a pass flag, its wall time
against a budget, and a JSON-friendly detail dict listing any witnesses.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Optional

from .census import asymptotic_check, compare_enumeration, count_dk
from .conway import if_eval, to_even_form
from .diagram import bracket_state_sum, tangle_diagram
from .homology import (
    AbelianGroupFin,
    h1_double_cover,
    lm1_knot,
    realize_module,
    reduce_mod,
    solve_det_congruence,
    unit_lift,
)
from .polyinv import alexander_conway, closure_bracket, genus_rational, signature, vassiliev_extract
from .trivial import (
    RationalKnot,
    certify_unknotting_one,
    family_knot,
    lm1_det,
    lm1_fraction,
    lm1_signed_sum,
    make_wn,
    verify_n_trivial_structure,
)

__all__ = ["CheckResult", "CHECKS", "run_all"]


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    budget: float  # seconds
    elapsed: float = 0.0
    detail: dict = field(default_factory=dict)

    @property
    def within_budget(self) -> bool:
        return self.elapsed < self.budget

    @property
    def ok(self) -> bool:
        return self.passed and self.within_budget

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        why = "" if self.passed else " (criterion violated)"
        if self.passed and not self.within_budget:
            why = " (over budget)"
        return f"[{status}] {self.number:2d} {self.name}: {self.elapsed:.3f}s / {self.budget:g}s{why}"

    def as_dict(self, timings: bool = False) -> dict:
        out = {"number": self.number, "name": self.name, "passed": self.passed, "detail": self.detail}
        if timings:
            out["elapsed"] = self.elapsed
            out["budget"] = self.budget
        return out


def _timed(number: int, name: str, budget: float):
    def wrap(fn: Callable[..., tuple[bool, dict]]):
        def run(**kw) -> CheckResult:
            t0 = time.perf_counter()
            passed, detail = fn(**kw)
            return CheckResult(number, name, passed, budget, time.perf_counter() - t0, detail)

        run.number = number
        run.name = name
        run.budget = budget
        return run

    return wrap


def _cap(n_max: int, cap: Optional[int]) -> int:
    return n_max if cap is None else max(1, min(n_max, cap))


@_timed(1, "w_n example reproduction", 0.001)
def check_wn_example(**_):
    want = {1: (2,), 2: (2, -4, -2), 3: (2, -4, -2, 2, 2, 4, -2)}
    got = {n: make_wn((2, -4, 2)[:n]) for n in want}
    bad = {n: list(got[n]) for n in want if got[n] != want[n]}
    return not bad, {"w": {n: list(v) for n, v in got.items()}, "mismatches": bad}


@_timed(2, "structural n-triviality of w_n", 1.0)
def check_structural(seed: int = 0, n_cap: Optional[int] = None, **_):
    rng = random.Random(seed)
    violations = []
    checks = 0
    for n in range(1, _cap(5, n_cap) + 1):
        for _ in range(100):
            a = tuple(2 * rng.choice([x for x in range(-10, 11) if x]) for _ in range(n))
            rep = verify_n_trivial_structure(a, trials=0, seed=seed)
            checks += rep.checks
            violations += rep.violations
    return not violations, {"checks": checks, "violations": violations[:10]}


@_timed(3, "closed form for a_i = +-2", 5.0)
def check_lm1(n_cap: Optional[int] = None, **_):
    bad = []
    cases = 0
    for n in range(1, _cap(6, n_cap) + 1):
        for signs in itertools.product((1, -1), repeat=n):
            w = make_wn([2 * s for s in signs])
            f = if_eval(w)
            closed = lm1_fraction(n, signs)
            if (abs(closed.num), closed.den) != (abs(f.num), f.den):
                bad.append({"n": n, "signs": list(signs), "closed": str(closed), "if_eval": str(f)})
            for s in range(-10, 11):
                cases += 1
                det = abs(if_eval(w + (s,)).num)
                if lm1_det(n, signs, s) != det:
                    bad.append({"n": n, "signs": list(signs), "s": s, "lm1_det": lm1_det(n, signs, s), "closure": det})
    return not bad, {"determinant_cases": cases, "mismatches": bad[:10]}


FAMILY_PARAMS = ((2, 2, 2, 2), (2, -4, 2, -4), (-2, 4, -2, 2))


@_timed(4, "Vassiliev vanishing through degree n for the w_n family", 30.0)
def check_family_vanishing(n_cap: Optional[int] = None, **_):
    rows = []
    passed = True
    for n in range(1, _cap(4, n_cap) + 1):
        for base in FAMILY_PARAMS:
            a = base[:n]
            for c in (2, -2, 4, -4):
                k = family_knot(a, c)
                data = vassiliev_extract(k, max(n, 2))
                u = [data.jones_taylor[j] for j in range(2, n + 1)]
                z = [data.conway_coefficients[j] for j in range(2, n + 1)]
                genus = genus_rational(k)
                ok = all(x == 0 for x in u) and all(x == 0 for x in z) and 2 * genus == len(to_even_form(k.p, k.q))
                passed &= ok
                if not ok:
                    rows.append({
                        "n": n, "a": list(a), "c": c, "knot": str(k),
                        "u": [str(x) for x in u], "conway": z, "genus": genus,
                        "vanishes_below_degree_n": all(x == 0 for x in u[:-1]) and all(x == 0 for x in z[:-1]),
                    })
    genus = {n: genus_rational(family_knot(FAMILY_PARAMS[0][:n], 2)) for n in range(1, _cap(4, n_cap) + 1)}
    return passed, {"genus_by_n": genus, "failures": rows}


@_timed(5, "unknotting number one certificate", 1.0)
def check_unknotting_one(n_cap: Optional[int] = None, **_):
    bad = []
    for n in range(1, _cap(4, n_cap) + 1):
        for base in FAMILY_PARAMS:
            for last in (2, -2):
                a = base[: n - 1] + (last,)
                for c in (2, -2, 4, -4):
                    if not certify_unknotting_one(a, c):
                        bad.append({"a": list(a), "c": c})
    return not bad, {"failures": bad}


@_timed(6, "signature mod 4 and determinant for p <= 200", 30.0)
def check_signature(p_max: int = 200, **_):
    bad = []
    count = 0
    for p in range(3, p_max + 1, 2):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            k = RationalKnot(p, q)
            count += 1
            sig = signature(k)
            delta, _ = alexander_conway(k)
            if (sig % 4 == 0) != (p % 4 == 1) or abs(delta(-1)) != p:
                bad.append({"knot": str(k), "signature": sig, "det": int(abs(delta(-1)))})
    return not bad, {"knots": count, "failures": bad[:10]}


def random_positive_forms(count: int, max_crossings: int, seed: int) -> list[tuple]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        c = rng.randint(1, max_crossings)
        cuts = sorted(rng.sample(range(1, c), rng.randint(0, min(c - 1, 5)))) if c > 1 else []
        parts = [b - a for a, b in zip([0] + cuts, cuts + [c])]
        out.append(tuple(parts))
    return out


@_timed(7, "bracket transfer vs state sum", 60.0)
def check_bracket(seed: int = 0, **_):
    forms = random_positive_forms(50, 12, seed)
    bad = []
    for seq in forms:
        d = tangle_diagram(seq)
        for which, closed in (("numerator", d.numerator()), ("denominator", d.denominator())):
            if closure_bracket(seq, which) != bracket_state_sum(closed):
                bad.append({"sequence": list(seq), "closure": which})
    return not bad, {"forms": [list(f) for f in forms[:5]], "count": len(forms), "failures": bad}


@_timed(8, "determinant congruences and unit lifts", 10.0)
def check_congruences(n_cap: Optional[int] = None, **_):
    bad = []
    for p in range(3, 26, 2):
        for n in range(1, _cap(3, n_cap) + 1):
            for signs in itertools.product((1, -1), repeat=n):
                # brute-force oracle: signed determinant residues over s = 0 .. p-1
                total, big = lm1_signed_sum(n, signs), 2 ** (2**n - 1)
                hits = {}
                for s in range(p):
                    hits.setdefault((total + s * big) % p, set()).add(s)
                for k in range(p):
                    s = solve_det_congruence(p, k, n, signs)
                    det = lm1_det(n, signs, s)
                    knot_det = lm1_knot(signs, s).p
                    if det % p != k or knot_det != det or s % p not in hits.get(k, ()):
                        bad.append({"p": p, "k": k, "n": n, "signs": list(signs), "s": s, "det": det})
    lifts = 0
    for p in range(1, 201):
        for q in (d for d in range(1, p + 1) if p % d == 0):
            for u in range(q):
                if gcd(u, q) != 1:
                    continue
                w = unit_lift(p, q, u)
                lifts += 1
                if w % q != u % q or gcd(w, p) != 1:
                    bad.append({"unit_lift": [p, q, u], "w": w})
    return not bad, {"unit_lifts_checked": lifts, "failures": bad[:10]}


@_timed(9, "Z_p homology realization", 10.0)
def check_homology(n_cap: Optional[int] = None, **_):
    bad = []
    cases = 0
    for p in (9, 15, 21):
        divisors = [d for d in range(2, p + 1) if p % d == 0]
        for r in range(len(divisors) + 1):
            for h in itertools.combinations(divisors, r):
                for n in range(1, _cap(2, n_cap) + 1):
                    cases += 1
                    result = realize_module(p, h, n)
                    got = reduce_mod(h1_double_cover(result), p)
                    want = AbelianGroupFin.from_cyclic(h)
                    if got != want:
                        bad.append({"p": p, "H": list(h), "n": n, "got": str(got), "want": str(want)})
    return not bad, {"cases": cases, "failures": bad}


@_timed(10, "census recursion and asymptotic bound", 60.0)
def check_census(max_k: int = 2**16, **_):
    table = count_dk(max_k)
    broken = table.check_recursion()
    head = table.values[:4]
    rep = asymptotic_check(table, "0.3")
    discrepancies = compare_enumeration(table, 24)
    reported = {row["k"] for row in discrepancies}
    passed = (
        not broken
        and head == [2, 4, 4, 12]
        and rep.k0 is not None
        and rep.k0 <= 2**10
        and {1, 2} <= reported
    )
    return passed, {
        "K": max_k,
        "recursion_breaks": broken[:10],
        "d_1..d_4": head,
        "asymptotic": rep.as_dict(),
        "enumeration_discrepancies": discrepancies,
    }


CHECKS = [
    check_wn_example,
    check_structural,
    check_lm1,
    check_family_vanishing,
    check_unknotting_one,
    check_signature,
    check_bracket,
    check_congruences,
    check_homology,
    check_census,
]


def run_all(seed: int = 0, n_cap: Optional[int] = None, max_k: int = 2**16) -> list[CheckResult]:
    return [chk(seed=seed, n_cap=n_cap, max_k=max_k) for chk in CHECKS]
