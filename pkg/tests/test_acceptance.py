"""Acceptance gate: every criterion at its stated tolerance and time budget."""

import pytest

from bunsod.checks import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


def test_verify_all_command(capsys):
    from bunsod.cli import run

    assert run(["verify-all", "--json"]) == 0
