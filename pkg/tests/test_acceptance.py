"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""
import pytest

from oproot import acceptance


@pytest.mark.parametrize("cid", list(acceptance.CRITERIA))
def test_criterion(cid, capsys):
    rep = acceptance.run_criterion(cid)
    with capsys.disabled():
        print("\n" + acceptance.format_line(rep))
    failed = [c.describe() for c in rep.checks if not c.passed]
    assert rep.passed, "; ".join(failed)
