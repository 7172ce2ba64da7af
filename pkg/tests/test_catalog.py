from __future__ import annotations

from fractions import Fraction

import pytest

from ncjordan.catalog import (
    build,
    cross_product_star,
    grassmann_algebra,
    make_dt,
    make_gamma_nd,
    make_j_gamma,
    make_j_gamma_A,
    make_jvf,
    make_k3,
    make_uvf,
)
from ncjordan.errors import (
    AOdd,
    FormDegenerate,
    FormNotSupersymmetric,
    NCJordanError,
    StarNotAnticommutative,
)
from ncjordan.superalgebra import check_noncomm_jordan, grading_violations, plus_algebra

HALF = Fraction(1, 2)


def test_k3_table():
    K = make_k3("a", "b", "g")
    a = K.field.gen("a")
    assert K.basis("w") * K.basis("z") == K.element({"e": -2 * (1 - a)})


def test_k3_jordan_specialization():
    K = make_k3(HALF, 0, 0)
    e, z, w = (K.basis(n) for n in "ezw")
    assert e * z == z * e == K.element({"z": HALF})
    assert z * w == e
    assert w * z == -e


def test_k3_half_half():
    K = make_k3(HALF, HALF, 0)
    z = K.basis("z")
    assert z * z == -K.basis("e")


def test_dt_xy():
    D = make_dt("t", "a", "b", "g")
    F = D.field
    a, t = F.gen("a"), F.gen("t")
    assert D.basis("x") * D.basis("y") == D.element({"e1": 2 * a, "e2": 2 * (1 - a) * t})


def test_dt_unit_at_half():
    D = make_dt("t", HALF, 0, 0)
    one = D.basis("e1") + D.basis("e2")
    for i in range(D.dim):
        v = D.basis(i)
        assert one * v == v and v * one == v


def test_d0_contains_k3():
    D = make_dt(0, "a", "b", "g")
    K = make_k3("a", "b", "g", D.field)
    idx = [D.index(n) for n in ("e1", "x", "y")]
    for i in range(3):
        for j in range(3):
            got = D.product(idx[i], idx[j])
            want = {idx[k]: c for k, c in K.product(i, j).items()}
            assert got == want


def test_jvf_is_uvf_without_star():
    f = [[1, 0], [0, 1]]
    assert make_jvf(f) == make_uvf(f, None)


def test_uvf_unit_and_form():
    U = make_uvf([[1]])
    one, u = U.basis("1"), U.basis("v1")
    assert one * u == u and u * one == u
    assert u * u == one


def test_uvf_cross_product():
    U = make_uvf([[1, 0, 0], [0, 1, 0], [0, 0, 1]], cross_product_star())
    assert check_noncomm_jordan(U).passed


def test_uvf_validation():
    with pytest.raises(FormDegenerate):
        make_uvf([[1, 1], [1, 1]])
    with pytest.raises(FormNotSupersymmetric):
        make_uvf([[1, 1], [0, 1]])
    with pytest.raises(FormNotSupersymmetric):
        make_uvf([[0, 1], [1, 0]], v_parity=(1, 1))
    with pytest.raises(StarNotAnticommutative):
        make_uvf([[1, 0], [0, 1]], {(0, 1): {0: 1}, (1, 0): {0: 1}})


def test_j_gamma_products():
    J = make_j_gamma(1)
    xb = J.basis("bar(x1)")
    assert xb * xb == J.basis("1")
    assert make_j_gamma_A(2, "0") == make_j_gamma(2)
    JA = make_j_gamma_A(2, "x1^x2")
    b = JA.basis("bar(1)")
    assert b * b == JA.basis("x1^x2")


def test_j_gamma_rejects_odd_a():
    with pytest.raises(AOdd):
        make_j_gamma_A(2, "x1")


def test_gamma_nd():
    G = make_gamma_nd(2, "identity")
    x1, x2 = G.basis("x1"), G.basis("x2")
    assert x1 * x1 == G.basis("1")
    assert x1 * x2 == G.basis("x1^x2")
    assert plus_algebra(G) == grassmann_algebra(2)


def test_gamma_nd_rejects_bad_matrix():
    with pytest.raises(NCJordanError):
        make_gamma_nd(2, [[1, "x1"], ["x1", 1]])


@pytest.mark.parametrize("A", [
    make_k3("a", "b", "g"),
    make_dt("t", "a", "b", "g"),
    make_j_gamma(2),
    make_j_gamma_A(2, "x1^x2"),
    make_gamma_nd(3, "diag:1,1,x1^x2"),
])
def test_catalog_noncomm_jordan(A):
    assert not grading_violations(A)
    assert check_noncomm_jordan(A).passed


def test_build_selector():
    assert build("k3", {"alpha": 2}) == make_k3(2)
    with pytest.raises(NCJordanError):
        build("nope", {})
