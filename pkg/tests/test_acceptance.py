"""The nine acceptance criteria, one test each, with a printed verdict line.

Run with -s (or look at captured stdout on failure) to see the lines:

    PASS 1 divisor-chain H^2 regression: ...
"""

import pytest

from nilcoh.acceptance import CRITERIA


@pytest.mark.parametrize("name,check", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, check):
    ok, detail = check()
    print("%s %s: %s" % ("PASS" if ok else "FAIL", name, detail))
    assert ok, "%s: %s" % (name, detail)
