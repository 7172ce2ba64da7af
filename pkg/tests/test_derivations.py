from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ncjordan.catalog import cross_product_star, make_dt, make_j_gamma, make_k3, make_uvf
from ncjordan.derivations import (
    brute_force_derivation_count,
    closure_check,
    der_bracket,
    derivation_space,
    find_sl2_triple,
    lieosp_check,
    nullity,
    uvfstar_der_check,
)
from ncjordan.fields import prime_field
from ncjordan.matrix import SPLIT_FORM_22, _maps, dt_generators, k3_generators
from ncjordan.superalgebra import check_derivation

HALF = Fraction(1, 2)


def test_k3_nullities():
    assert nullity(make_k3(), 0) == 3
    assert nullity(make_k3("a"), 1) == 0


@pytest.mark.parametrize("A, dims", [
    (make_k3(), (3, 2)),
    (make_k3("a"), (1, 0)),
    (make_k3(HALF, HALF, 0), (1, 0)),
    (make_dt("t"), (3, 2)),
    (make_dt("t", "a"), (1, 0)),
    (make_dt("t", HALF, HALF, 0), (1, 0)),
])
def test_derivation_dims(A, dims):
    D = derivation_space(A)
    assert D.dims == dims
    for d in D.basis():
        assert check_derivation(A, d).passed


def test_k3_reference_generators():
    K = make_k3()
    D = derivation_space(K)
    for d in k3_generators(K):
        assert check_derivation(K, d).passed and D.contains(d)


def test_dt_reference_generators():
    Dt = make_dt("t")
    D = derivation_space(Dt)
    for d in dt_generators(Dt, Dt.field.gen("t")):
        assert check_derivation(Dt, d).passed and D.contains(d)


def test_k3_half_half_derivation_is_z_to_w():
    K = make_k3(HALF, HALF, 0)
    (zw,) = _maps(K, [(0, {"z": {"w": 1}})])
    (ww,) = _maps(K, [(0, {"w": {"w": 1}})])
    assert derivation_space(K).contains(zw)
    assert not check_derivation(K, ww).passed


def test_generic_matches_specializations():
    rng = random.Random(7)
    generic = derivation_space(make_k3("a")).dims
    for _ in range(5):
        a = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        if a == HALF:
            a += 1
        assert derivation_space(make_k3(a)).dims == generic
        assert derivation_space(make_dt(3, a)).dims == derivation_space(make_dt("t", "a")).dims


def test_bracket_parity_and_closure():
    K = make_k3()
    D = derivation_space(K)
    d1, d2 = D.basis(1)
    assert der_bracket(d1, d2).parity == 0
    rep = closure_check(D)
    assert rep.passed


def test_odd_square_is_even_derivation():
    J = make_j_gamma(2)
    D = derivation_space(J)
    d = D.basis(1)[0]
    sq = der_bracket(d, d)
    assert sq.parity == 0 and D.contains(sq)


def test_sl2_triples():
    K = make_k3()
    triple = find_sl2_triple(derivation_space(K).basis(0))
    assert triple is not None
    e, h, f = triple
    assert der_bracket(h, e) == e.scale(K.field(2))
    assert der_bracket(h, f) == f.scale(K.field(-2))
    assert der_bracket(e, f) == h
    assert find_sl2_triple(derivation_space(make_dt(3)).basis(0)) is not None


def test_sl2_none_for_abelian():
    K = make_k3()
    diag = _maps(K, [(0, {"z": {"z": 1}}), (0, {"w": {"w": 1}}), (0, {"e": {"e": 1}})])
    assert find_sl2_triple(diag) is None


@pytest.mark.parametrize("vdims, f, dims", [
    ((1, 0), [[1]], (0, 0)),
    ((2, 0), [[1, 0], [0, 1]], (1, 0)),
    ((0, 2), [[0, 1], [-1, 0]], (3, 0)),
    ((2, 2), SPLIT_FORM_22, (4, 4)),
])
def test_lieosp(vdims, f, dims):
    rep = lieosp_check(vdims, f)
    assert rep.passed
    assert rep.details["dims"] == dims


def test_uvf_star_intersection():
    assert uvfstar_der_check(make_uvf([[1]])).passed
    U = make_uvf([[1, 0, 0], [0, 1, 0], [0, 0, 1]], cross_product_star())
    rep = uvfstar_der_check(U)
    assert rep.passed


def test_nullity_matches_brute_force():
    F5 = prime_field(5)
    K = make_k3(2, 0, 0, F5)
    for s in (0, 1):
        assert brute_force_derivation_count(K, s) == 5 ** nullity(K, s)
