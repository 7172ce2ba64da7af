from __future__ import annotations

from fractions import Fraction

import pytest

from ncjordan.errors import UnknownFamily
from ncjordan.families import (
    AUT_FAMILIES,
    SUBALGEBRA_ADDENDA,
    SUBALGEBRA_FAMILIES,
    SUBALGEBRA_LISTED,
    family_item,
    match_automorphisms,
    match_subalgebras,
    verify_aut_family,
    verify_family_closure,
)
from ncjordan.fields import prime_field

HALF = Fraction(1, 2)
F5 = prime_field(5)


@pytest.mark.parametrize("key", sorted(SUBALGEBRA_FAMILIES, key=str))
def test_family_closure(key):
    assert verify_family_closure(*key).passed


def test_closure_examples():
    assert verify_family_closure("K3", 3).passed
    exotic = [s for s in family_item("D", 3).shapes if s.label == "exotic line"]
    assert exotic
    assert verify_family_closure("Dh", 6).passed


def test_unknown_family():
    with pytest.raises(UnknownFamily):
        family_item("K3", 99)


def test_addenda_are_marked():
    assert all(not it.listed for it in SUBALGEBRA_ADDENDA.values())
    assert all(it.listed for it in SUBALGEBRA_LISTED.values())


@pytest.mark.parametrize("name", sorted(AUT_FAMILIES))
def test_aut_family(name):
    assert verify_aut_family(name).passed


@pytest.mark.parametrize("kind, alpha, t", [("K3", 2, None), ("K3", HALF, None), ("K3h", HALF, None), ("D", 2, 2)])
def test_automorphisms_match_base_families(kind, alpha, t):
    rep = match_automorphisms(kind, alpha, t, F5)
    assert rep.passed
    assert not rep.details["outside_listed"]


def test_swap_automorphisms_at_t_one():
    rep = match_automorphisms("D", 2, 1, F5)
    assert rep.passed
    assert rep.details["outside_listed"]
    assert rep.details["found"] == 8


@pytest.mark.parametrize("kind, alpha, t, dim", [
    ("K3", 2, 1, 1), ("K3", 2, 1, 2), ("K3", HALF, 1, 2), ("K3h", HALF, 1, 2), ("D", 2, 2, 3),
])
def test_subalgebras_match_base_lists(kind, alpha, t, dim):
    rep = match_subalgebras(kind, alpha, t, F5, dim)
    assert rep.passed and not rep.details["outside_listed"]


def test_subalgebras_beyond_base_lists():
    rep = match_subalgebras("D", 2, -1, F5, 3)
    assert rep.passed
    assert rep.details["outside_listed"]
    assert ("D", "A3") in [tuple(k) for k in rep.details["addenda_used"]]


def test_mod_thirteen_with_i():
    rep = match_subalgebras("Dh", HALF, -1, prime_field(13), 3)
    assert rep.passed
