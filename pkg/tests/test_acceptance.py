"""The ten acceptance criteria, each at its stated limit.

One PASS/FAIL line per criterion is printed in the terminal summary (see
``conftest.py``), or inline with ``pytest -s``.
"""
import pytest

from ringlab.suite import CRITERIA

RESULTS = []


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(criterion):
    result = criterion()
    RESULTS.append(result)
    print("\n" + result.line())
    assert result.passed, result.detail
    assert result.within_limit, f"took {result.seconds:.1f}s, limit {result.limit}s"
