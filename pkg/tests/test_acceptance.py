"""One test per acceptance criterion; each prints a PASS/FAIL line."""
from __future__ import annotations

import sys
import time

import pytest

from ncjordan.matrix import CRITERIA

TIME_LIMITS = {1: 10.0, 10: 5.0}


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    title, fn = CRITERIA[k]
    t0 = time.perf_counter()
    rep = fn()
    secs = time.perf_counter() - t0
    ok = rep.passed and secs < TIME_LIMITS.get(k, float("inf"))
    with capsys.disabled():
        sys.stdout.write(f"\n{'PASS' if ok else 'FAIL'} criterion {k}: {title} ({secs:.2f}s)\n")
    assert rep.passed, rep.failures[:5]
    assert secs < TIME_LIMITS.get(k, float("inf"))
