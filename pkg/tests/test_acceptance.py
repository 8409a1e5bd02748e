"""All twelve acceptance criteria, one PASS/FAIL line each.

The lines are printed as each criterion finishes and repeated in the
terminal summary, so they show up without ``-s``.
"""

import pytest

from schubert_quiver.verification import CRITERIA, run_criterion

LINES: list[str] = []


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{c.number:02d}" for c in CRITERIA])
def test_criterion(criterion):
    result = run_criterion(criterion)
    LINES.append(result.line())
    print(result.line())
    assert result.passed, result.line()
