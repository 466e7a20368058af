"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line with its wall time and
budget; the lines are repeated in the terminal summary.  Run directly with
``python tests/test_acceptance.py`` for just the lines.
"""

import json
import sys

import pytest

from ratknot.checks import CHECKS

RESULT_LINES = []


@pytest.mark.parametrize("check", CHECKS, ids=[f"{c.number:02d}-{c.name.replace(' ', '_')}" for c in CHECKS])
def test_criterion(check):
    result = check(seed=0)
    line = result.line()
    RESULT_LINES.append(line)
    print(line)
    assert result.passed, json.dumps(result.detail, sort_keys=True, default=str)[:4000]
    assert result.within_budget, f"{result.elapsed:.3f}s over the {result.budget:g}s budget"


if __name__ == "__main__":
    results = [check(seed=0) for check in CHECKS]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.ok for r in results) else 1)
