from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from ncjordan.catalog import grassmann_algebra, make_k3, random_algebra
from ncjordan.derivations import derivation_space
from ncjordan.fields import evaluate, function_field, prime_field, rationals
from ncjordan.grassmann import GrassmannElement, monomials, poisson_grassmann
from ncjordan.linalg import Matrix, kernel_basis, rank, rref
from ncjordan.superalgebra import (
    SuperAlgebra,
    check_poisson_bracket,
    commutator_bracket,
    grading_violations,
    plus_algebra,
    reconstruct,
)

F5 = prime_field(5)
Q = rationals()
Qa = function_field("a")

small = st.integers(-6, 6)
fractions = st.builds(Fraction, small, st.integers(1, 6))


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_nullity_gf5(r, c, data):
    rows = [[data.draw(st.integers(0, 4)) for _ in range(c)] for _ in range(r)]
    M = Matrix(F5, rows)
    assert rank(M) + len(kernel_basis(M)) == c


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_rref_idempotent(r, c, data):
    M = Matrix(Q, [[data.draw(fractions) for _ in range(c)] for _ in range(r)])
    R, _, _ = rref(M)
    assert rref(R)[0] == R


@given(fractions, fractions, fractions)
def test_field_axioms(x, y, z):
    a, b, c = Q(x), Q(y), Q(z)
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a


@given(st.lists(small, min_size=1, max_size=4), st.lists(small, min_size=1, max_size=4), fractions)
def test_evaluate_is_homomorphism(p, q, point):
    a = Qa.gen("a")
    f = sum((Qa(c) * a ** k for k, c in enumerate(p)), Qa.zero)
    g = sum((Qa(c) * a ** k for k, c in enumerate(q)), Qa.zero)
    at = {"a": point}
    assert evaluate(f * g, at) == evaluate(f, at) * evaluate(g, at)
    assert evaluate(f + g, at) == evaluate(f, at) + evaluate(g, at)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 3))
def test_random_algebra_round_trip(seed, dim):
    A = random_algebra(dim, F5, random.Random(seed))
    assert not grading_violations(A)
    assert reconstruct(plus_algebra(A), commutator_bracket(A)) == A


@settings(max_examples=10, deadline=None)
@given(fractions)
def test_plus_k3_constant(alpha):
    assert plus_algebra(make_k3(alpha, 1, 2)) == plus_algebra(make_k3(Fraction(1, 2)))


@settings(max_examples=8, deadline=None)
@given(fractions.filter(lambda a: a != Fraction(1, 2)))
def test_k3_dims_are_generic(alpha):
    assert derivation_space(make_k3(alpha)).dims == (1, 0)


def test_poisson_grassmann_bracket_law():
    for n in (3, 4):
        G = grassmann_algebra(n)
        basis = monomials(n)
        idx = {m: k for k, m in enumerate(basis)}
        table = {}
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                br = poisson_grassmann(GrassmannElement.monomial(n, a), GrassmannElement.monomial(n, b))
                if not br.is_zero():
                    table[(i, j)] = {idx[m]: c for m, c in br.terms.items()}
        B = SuperAlgebra(G.field, G.parity, table, G.names)
        rep = check_poisson_bracket(G, B)
        assert rep.passed and rep.details["superanticommutative"]
