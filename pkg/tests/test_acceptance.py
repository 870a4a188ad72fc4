"""The twelve acceptance criteria, one test each.

Every criterion is checked exactly (all are integer or set equalities) and
against its runtime budget.  Each test prints a PASS/FAIL line; the lines are
repeated in the terminal summary.  Run this file directly to get just the
lines: ``python tests/test_acceptance.py``.
"""

import sys

import pytest

from zschur.acceptance import CRITERIA, run_criterion

# runtime budgets in seconds
BUDGET = {"1": 5, "2": 1, "3": 30, "4": 120, "5": 120, "6": 300,
          "7": 30, "8": 30, "9": 60, "10": 300, "11": 120, "12": 300}

LINES = {}


def evaluate(key):
    res = run_criterion(key, tier="full")
    over = res.seconds > BUDGET[key]
    line = res.line()
    if over:
        line = line.replace("PASS", "FAIL", 1) + " -- over the %ds budget" % BUDGET[key]
    LINES[key] = line
    print(line)
    return res, over


@pytest.mark.parametrize("key", [k for k, _, _ in CRITERIA],
                         ids=["criterion_%s" % k for k, _, _ in CRITERIA])
def test_criterion(key):
    res, over = evaluate(key)
    assert res.ok, "\n".join(res.failures + res.notes)
    assert not over, "took %.1fs, budget %ds" % (res.seconds, BUDGET[key])


if __name__ == "__main__":
    bad = 0
    for key, _, _ in CRITERIA:
        res, over = evaluate(key)
        bad += (not res.ok) or over
    sys.exit(1 if bad else 0)
