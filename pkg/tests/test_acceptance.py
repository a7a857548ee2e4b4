"""Acceptance gate: every criterion runs at its pinned tolerance and prints
one pass/fail line; the suite fails if any criterion does."""

import pytest

from ogrlab import acceptance


@pytest.mark.parametrize(
    "number,name,func",
    [(num, name, func) for num, name, func, _ in acceptance.CRITERIA],
    ids=[f"criterion-{num:02d}" for num, _, _, _ in acceptance.CRITERIA],
)
def test_criterion(number, name, func):
    passed, detail = func()
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] criterion {number} ({name}): {detail}")
    assert passed, f"criterion {number} ({name}): {detail}"
