"""One test per acceptance criterion; each prints a PASS/FAIL line."""

import pytest

from lieideals.verify import CRITERIA, DISTRIBUTIVE_COUNTS, brute_force_distributive_counts, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, capsys):
    result = run_criterion(number)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


def test_frozen_distributive_counts_match_oracle():
    assert brute_force_distributive_counts(7) == {n: DISTRIBUTIVE_COUNTS[n] for n in range(1, 8)}
