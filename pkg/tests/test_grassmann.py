from __future__ import annotations

import random

import pytest

from ncjordan.catalog import make_j_gamma, make_j_gamma_A
from ncjordan.derivations import derivation_space
from ncjordan.errors import NonHomogeneous
from ncjordan.grassmann import (
    GrassmannElement,
    WnDerivation,
    gr_mul,
    hn_from_potential,
    is_hn,
    monomials,
    parse_element,
    partial,
    poisson_grassmann,
    rpartial,
    wn_apply,
    wn_is_derivation,
)
from ncjordan.grassmann_derivations import (
    cent_ann_inclusion_check,
    gras_der_dual_check,
    gras_der_solve,
    jgammaA_d1_criterion,
    lift_d1,
    lift_d2,
)
from ncjordan.superalgebra import check_derivation, check_jordan_super, plus_algebra


def g(text: str, n: int = 3) -> GrassmannElement:
    return parse_element(text, n)


def test_products():
    assert gr_mul(g("x1"), g("x2")) == g("x1^x2")
    assert gr_mul(g("x2"), g("x1")) == g("-x1^x2")
    assert gr_mul(g("x1"), g("x1")).is_zero()
    assert gr_mul(g("1 + x1"), g("1 + x2")) == g("1 + x1 + x2 + x1^x2")


def test_left_partials():
    f = g("x1^x2")
    assert partial(1, f) == g("x2")
    assert partial(2, f) == g("-x1")
    assert partial(3, f).is_zero()


def test_right_partials():
    f = g("x1^x2")
    assert rpartial(2, f) == g("x1")
    assert rpartial(1, f) == g("-x2")


def test_poisson_bracket_values():
    assert poisson_grassmann(g("x1"), g("x1")) == g("-1")
    assert poisson_grassmann(g("x1"), g("x2")).is_zero()
    assert poisson_grassmann(g("x1^x2 + x3"), g("1")).is_zero()


def test_wn_apply_generator_deletion():
    d = WnDerivation.from_components([g("1", 2), g("0", 2)])
    assert wn_apply(d, g("x1", 2)) == g("1", 2)
    # right-derivative convention: x1 x2 -> -x2
    assert wn_apply(d, g("x1^x2", 2)) == g("-x2", 2)
    assert wn_is_derivation(d)
    assert WnDerivation.zero(3).is_zero()


def test_hn_membership():
    d = hn_from_potential(g("x1^x2"))
    assert is_hn(d) and wn_is_derivation(d)
    bad = WnDerivation.from_components([g("x2^x3"), g("-x1^x3"), g("0")])
    assert not is_hn(bad)
    assert is_hn(WnDerivation.zero(3))
    with pytest.raises(NonHomogeneous):
        hn_from_potential(g("1 + x1"))


def test_lifts_are_derivations():
    J1 = make_j_gamma(1)
    d2 = lift_d2(parse_element("1", 1))
    assert check_derivation(J1, d2).passed
    assert d2.apply(J1.basis("bar(1)")) == J1.basis("1")
    assert d2.apply(J1.basis("bar(x1)")) == J1.basis("x1")
    assert d2.apply(J1.basis("x1")).is_zero()
    J2 = make_j_gamma(2)
    assert check_derivation(J2, lift_d1(hn_from_potential(parse_element("x1^x2", 2)))).passed
    assert lift_d1(WnDerivation.zero(2)).is_zero()


def test_ann_criterion():
    d = hn_from_potential(parse_element("x1^x2", 2))
    assert jgammaA_d1_criterion(d, "0")
    # the verdict is cross-checked against the direct Leibniz test internally
    jgammaA_d1_criterion(d, "x1^x2")
    JA = make_j_gamma_A(2, "x1^x2")
    for x in ("1", "x1", "x1^x2"):
        assert check_derivation(JA, lift_d2(parse_element(x, 2), JA)).passed


def test_gamma_nd_example_two():
    even = gras_der_solve(3, "diag:1,1,x1^x2", 0)
    odd = gras_der_solve(3, "diag:1,1,x1^x2", 1)
    assert (len(even), len(odd)) == (1, 2)


def test_gamma_nd_identity_is_antisymmetric_relation():
    for s in (0, 1):
        for d in gras_der_solve(2, "identity", s):
            for i in range(1, 3):
                for j in range(1, 3):
                    assert (rpartial(j, d.components[i - 1]) + rpartial(i, d.components[j - 1])).is_zero()


@pytest.mark.parametrize("n, a", [(2, "identity"), (3, "identity"), (3, "diag:1,1,x1^x2")])
def test_dual_and_inclusion_checks(n, a):
    assert gras_der_dual_check(n, a).passed
    assert cent_ann_inclusion_check(n, a).passed


def test_kantor_double_is_jordan():
    for n in (1, 2, 3):
        J = make_j_gamma(n)
        assert J.is_supercommutative()
        assert check_jordan_super(J).passed
    assert plus_algebra(make_j_gamma_A(2, "x1^x2")) == make_j_gamma(2)


def test_der_j_gamma_dims():
    dims = [derivation_space(make_j_gamma(n)).dims for n in (1, 2)]
    assert dims == [(3, 2), (4, 4)]


def _random_homogeneous(rng, n):
    mons = monomials(n)
    p = rng.randint(0, 1)
    terms = {m: rng.randint(-3, 3) for m in mons if len(m) % 2 == p}
    return GrassmannElement(n, terms)


def test_supercommutative_and_associative():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 5)
        f, h, k = (_random_homogeneous(rng, n) for _ in range(3))
        assert gr_mul(gr_mul(f, h), k) == gr_mul(f, gr_mul(h, k))
        if f.parity is not None and h.parity is not None:
            sign = -1 if f.parity * h.parity else 1
            assert gr_mul(f, h) == gr_mul(h, f).scale(sign)


def test_partials_anticommute():
    n = 4
    for m in monomials(n):
        f = GrassmannElement.monomial(n, m)
        for i in range(1, n + 1):
            assert partial(i, partial(i, f)).is_zero()
            for j in range(1, n + 1):
                assert partial(i, partial(j, f)) == -partial(j, partial(i, f))
