from __future__ import annotations

from fractions import Fraction

import pytest

from ncjordan.catalog import grassmann_algebra, make_dt, make_k3, make_uvf
from ncjordan.errors import (
    AlgebraMismatch,
    CharacteristicTwo,
    GradingViolation,
    NonHomogeneous,
    NotSupercommutative,
)
from ncjordan.fields import prime_field, rationals
from ncjordan.superalgebra import (
    SuperAlgebra,
    check_flexible,
    check_jordan_super,
    check_noncomm_jordan,
    check_poisson_bracket,
    commutator_bracket,
    grading_violations,
    multiply,
    mult_operators,
    plus_algebra,
    reconstruct,
    sym_product,
    super_commutator,
)


@pytest.fixture(scope="module")
def K():
    return make_k3("a", "b", "g")


def test_k3_products(K):
    F = K.field
    a = F.gen("a")
    e, z, w = (K.basis(n) for n in "ezw")
    assert z * w == K.element({"e": 2 * a})
    assert e * e == e
    assert multiply(K, z, w) == z * w


def test_dt_product_yx():
    D = make_dt("t", "a", "b", "g")
    F = D.field
    a, t = F.gen("a"), F.gen("t")
    x, y = D.basis("x"), D.basis("y")
    assert y * x == D.element({"e1": -2 * (1 - a), "e2": -2 * a * t})


def test_multiplication_operators(K):
    F = K.field
    a, b = F.gen("a"), F.gen("b")
    e, z = K.basis("e"), K.basis("z")
    L, R = mult_operators(K, e)
    assert R.apply(z) == K.element({"z": 1 - a, "w": -b})
    assert L.apply(z) == K.element({"z": a, "w": b})
    L0, R0 = mult_operators(K, K.zero())
    assert R0.is_zero() and L0.is_zero()


def test_operators_need_homogeneous(K):
    with pytest.raises(NonHomogeneous):
        mult_operators(K, K.basis("e") + K.basis("z"))


def test_commutator_and_symmetric_product(K):
    a = K.field.gen("a")
    z, w, e = K.basis("z"), K.basis("w"), K.basis("e")
    assert super_commutator(z, w) == K.element({"e": 4 * a - 2})
    assert sym_product(z, w) == K.element({"e": 2})
    assert super_commutator(e, e).is_zero()


def test_product_is_half_sum(K):
    half = K.field(Fraction(1, 2))
    for i in range(K.dim):
        for j in range(K.dim):
            x, y = K.basis(i), K.basis(j)
            assert x * y == (sym_product(x, y) + super_commutator(x, y)) * half


def test_mixed_algebras_rejected(K):
    with pytest.raises(AlgebraMismatch):
        multiply(K, K.basis("e"), make_k3().basis("e"))


def test_plus_algebra_of_k3(K):
    P = plus_algebra(K)
    e, z, w = (P.basis(n) for n in "ezw")
    assert e * e == e
    assert z * w == e
    assert e * z == P.element({"z": Fraction(1, 2)})
    assert P.is_supercommutative()


def test_plus_algebra_independent_of_parameters(K):
    assert plus_algebra(K) == plus_algebra(make_k3(Fraction(1, 2), 0, 0, K.field))


def test_plus_of_supercommutative_unchanged():
    G = grassmann_algebra(3)
    assert plus_algebra(G) == G


def test_plus_needs_char_not_two():
    with pytest.raises(CharacteristicTwo):
        plus_algebra(make_k3(1, 0, 0, prime_field(2)))


def test_flexible_catalog(K):
    assert check_flexible(K).passed


def test_flexible_failure():
    # e f = e, all other products zero: (xy)x = ad*b e but x(yx) = 0
    A = SuperAlgebra(rationals(), (0, 0), {(0, 1): {0: 1}})
    assert not check_flexible(A).passed


def test_associative_example_is_flexible():
    # e e = e, e f = f, f e = f f = 0 is associative, hence flexible
    A = SuperAlgebra(rationals(), (0, 0), {(0, 0): {0: 1}, (0, 1): {1: 1}})
    assert check_flexible(A).passed


def test_noncomm_jordan_catalog():
    D = make_dt("t", "a", "b", "g")
    assert check_noncomm_jordan(D).passed
    assert check_noncomm_jordan(make_k3("a", "b", "g")).passed


def test_jordan_super_on_plus_algebras(K):
    assert check_jordan_super(plus_algebra(K)).passed
    assert check_jordan_super(plus_algebra(make_dt("t", "a", "b", "g"))).passed
    U = make_uvf([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], v_parity=(0, 0, 1, 1))
    assert check_jordan_super(plus_algebra(U)).passed
    assert check_jordan_super(grassmann_algebra(3)).passed


def test_jordan_super_needs_supercommutative(K):
    with pytest.raises(NotSupercommutative):
        check_jordan_super(K)


def test_poisson_bracket(K):
    P, B = plus_algebra(K), commutator_bracket(K)
    rep = check_poisson_bracket(P, B)
    assert rep.passed and rep.details["superanticommutative"]
    zero = SuperAlgebra(K.field, K.parity, {}, K.names)
    assert check_poisson_bracket(P, zero).passed


def test_reconstruct_round_trip(K):
    assert reconstruct(plus_algebra(K), commutator_bracket(K)) == K
    D = make_dt("t", "a", "b", "g")
    assert reconstruct(plus_algebra(D), commutator_bracket(D)) == D
    P = plus_algebra(K)
    assert reconstruct(P, SuperAlgebra(K.field, K.parity, {}, K.names)) == P


def test_grading_enforced():
    with pytest.raises(GradingViolation):
        SuperAlgebra(rationals(), (0, 1), {(0, 0): {1: 1}})
    A = SuperAlgebra(rationals(), (0, 1), {(0, 0): {1: 1}}, check=False)
    assert grading_violations(A) == [(0, 0, 1)]


def test_element_parity(K):
    assert K.basis("e").parity == 0
    assert K.basis("z").parity == 1
    assert (K.basis("e") + K.basis("z")).parity is None
