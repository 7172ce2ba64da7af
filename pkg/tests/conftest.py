from __future__ import annotations

from fractions import Fraction

import pytest

from ncjordan.fields import function_field, prime_field, rationals


@pytest.fixture
def Q():
    return rationals()


@pytest.fixture
def F5():
    return prime_field(5)


@pytest.fixture
def Qa():
    return function_field("a")


HALF = Fraction(1, 2)
