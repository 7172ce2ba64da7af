from __future__ import annotations

from fractions import Fraction

import pytest

from ncjordan.catalog import make_dt, make_k3
from ncjordan.derivations import derivation_space
from ncjordan.errors import SearchTooLarge
from ncjordan.fields import function_field, prime_field
from ncjordan.linalg import Matrix
from ncjordan.morphisms import (
    ParametricMap,
    SubalgebraWitness,
    compose,
    count_subspaces,
    echelon_subspaces,
    enumerate_automorphisms,
    enumerate_subalgebras,
    inverse,
    is_automorphism,
    is_homomorphism,
    is_subalgebra,
    isomorphism_search,
)
from ncjordan.superalgebra import identity_map

HALF = Fraction(1, 2)
F5 = prime_field(5)


def test_identity_is_automorphism():
    K = make_k3("a")
    assert is_homomorphism(K, K, identity_map(K)).passed
    assert is_automorphism(K, identity_map(K)).passed


def test_torus_family():
    F = function_field("a", "g")
    g = F.gen("g")
    K = make_k3("a", 0, 0, F)
    phi = Matrix(F, [[1, 0, 0], [0, g, 0], [0, 0, 1 / g]])
    assert is_automorphism(K, phi).passed
    bad = Matrix(F, [[1, 0, 0], [0, g, 0], [0, 0, g]])
    assert not is_homomorphism(K, K, bad).passed


def test_k3_half_half_shear():
    F = function_field("k")
    k = F.gen("k")
    K = make_k3(HALF, HALF, 0, F)
    for s in (1, -1):
        phi = Matrix(F, [[1, 0, 0], [0, s, k], [0, 0, s]])
        assert is_automorphism(K, phi).passed


def test_dt_half_sl2_family():
    F = function_field("t", "g1", "g2", "g3", "g4")
    g1, g2, g3, g4 = (F.gen(n) for n in ("g1", "g2", "g3", "g4"))
    D = make_dt("t", HALF, 0, 0, F)
    m = Matrix(F, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, g1, g2], [0, 0, g3, g4]])
    phi = ParametricMap(m, {"g4": "(1 + g2*g3)/g1"})
    assert is_automorphism(D, phi).passed


def test_zero_map_is_not_automorphism():
    K = make_k3("a")
    assert not is_automorphism(K, Matrix.zeros(K.field, 3, 3)).passed


def test_subalgebra_membership():
    K = make_k3("a")
    assert is_subalgebra(K, SubalgebraWitness.from_vectors(K, [{"e": 1}, {"z": 1}]))
    assert not is_subalgebra(K, SubalgebraWitness.from_vectors(K, [{"e": 1}, {"z": 1, "w": 1}]))
    D = make_dt("t", "a")
    assert is_subalgebra(D, SubalgebraWitness.from_vectors(D, [{"e1": 1, "e2": 1}]))


def test_one_dim_subalgebras_generic_alpha():
    K = make_k3(2, 0, 0, F5)
    for W in enumerate_subalgebras(K, 1):
        (v,) = W.basis
        assert not (v[1] and v[2])


def test_every_line_closed_at_half():
    K = make_k3(3, 0, 0, F5)  # 3 = 1/2 in GF(5)
    assert len(enumerate_subalgebras(K, 1)) == count_subspaces(5, 3, 1) == 31


def test_two_dim_count():
    assert len(enumerate_subalgebras(make_k3(2, 0, 0, F5), 2)) == 2


def test_echelon_enumeration_counts():
    for n, d in ((3, 1), (3, 2), (4, 2)):
        assert len(list(echelon_subspaces(F5, n, d))) == count_subspaces(5, n, d)


def test_k3_automorphisms():
    K = make_k3(2, 0, 0, F5)
    auts = enumerate_automorphisms(K)
    assert len(auts) == 4
    assert any(a == identity_map(K) for a in auts)
    for a in auts:
        m = a.matrix
        assert m[0, 0] == 1 and m[1, 2] == 0 and m[2, 1] == 0
        assert m[1, 1] * m[2, 2] == 1


def test_dt_automorphisms():
    assert len(enumerate_automorphisms(make_dt(2, 2, 0, 0, F5))) == 4


@pytest.mark.parametrize("A", [make_k3(2, 0, 0, F5), make_k3(3, 0, 0, F5), make_k3(3, 3, 0, F5)])
def test_automorphism_groups(A):
    auts = enumerate_automorphisms(A)
    keys = {a.flat() for a in auts}
    for a in auts:
        assert is_automorphism(A, a).passed
        assert inverse(a).flat() in keys
        for b in auts:
            assert compose(a, b).flat() in keys


def test_enumerated_subalgebras_are_sound():
    K = make_k3(3, 3, 0, F5)
    for d in (1, 2):
        for W in enumerate_subalgebras(K, d):
            assert is_subalgebra(K, W)


def test_isomorphism_search():
    A = make_k3(1, 2, 1, F5)
    B = make_k3(2, 0, 0, F5)
    phi = isomorphism_search(A, B)
    assert phi is not None and is_homomorphism(A, B, phi).passed
    assert derivation_space(A).dims == derivation_space(B).dims
    K = make_k3(2, 0, 0, F5)
    assert isomorphism_search(K, K) is not None
    assert isomorphism_search(K, make_k3(3, 0, 0, F5)) is None


def test_budget_guard():
    with pytest.raises(SearchTooLarge):
        enumerate_automorphisms(make_dt(2, 2, 0, 0, prime_field(13)), budget=1000)
