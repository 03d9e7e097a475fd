"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Runs the same seeded criteria as ``recseq selftest`` and prints one
pass/fail line each.  Tolerance is zero everywhere: every comparison is
exact equality of ring elements, polynomials, or term prefixes.
"""

import pytest

from recseq import selftest

_RESULTS = {}


def _result(number: int) -> selftest.CriterionResult:
    if number not in _RESULTS:
        _RESULTS[number] = selftest.run_criterion(number, seed=selftest.DEFAULT_SEED)
    return _RESULTS[number]


@pytest.mark.parametrize("number,name", selftest.criteria())
def test_criterion(number, name, capsys):
    result = _result(number)
    with capsys.disabled():
        print(result.line())
    assert result.passed, result.line()


def test_every_criterion_ran():
    assert [number for number, _ in selftest.criteria()] == list(range(1, 11))
