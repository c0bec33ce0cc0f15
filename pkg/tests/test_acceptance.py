"""The twelve acceptance criteria, one line of PASS/FAIL output each."""
import pytest

from iterstab.repro import CRITERIA

# filled per run, printed by the terminal summary hook in conftest
RESULTS = {}


@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[f"{n:02d}-{name}" for n, name, _ in CRITERIA])
def test_criterion(num, name, fn):
    ok, details = fn()
    RESULTS[num] = f"criterion {num} {name}: {'PASS' if ok else 'FAIL'}"
    print(f"\ncriterion {num} {name}: {'PASS' if ok else 'FAIL'}")
    print(f"  {details}")
    assert ok, details
