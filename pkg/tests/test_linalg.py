from __future__ import annotations

import pytest

from ncjordan.catalog import make_k3
from ncjordan.derivations import derivation_system
from ncjordan.linalg import (
    Matrix,
    determinant,
    in_span,
    kernel_basis,
    rank,
    row_space_basis,
    rref,
    same_span,
    solve,
)


def test_rref_identity(Q):
    I = Matrix.identity(Q, 3)
    R, r, piv = rref(I)
    assert R == I and r == 3 and piv == [0, 1, 2]


def test_rref_rank_one(Q):
    R, r, piv = rref(Matrix(Q, [[1, 1], [2, 2]]))
    assert R == Matrix(Q, [[1, 1], [0, 0]]) and r == 1 and piv == [0]


def test_kernel_examples(Q):
    assert kernel_basis(Matrix(Q, [[1, 1], [0, 0]])) == [(Q(1), Q(-1))]
    assert kernel_basis(Matrix(Q, [[1, 2], [3, 4]])) == []


def test_k3_odd_system_nullity():
    K = make_k3()
    M = derivation_system(K, 1)
    assert len(kernel_basis(M)) == 2


def test_rref_idempotent(F5):
    M = Matrix(F5, [[1, 2, 3], [2, 4, 1], [0, 0, 4]])
    R, _, _ = rref(M)
    assert rref(R)[0] == R


def test_solve_and_determinant(Q):
    M = Matrix(Q, [[2, 1], [1, 1]])
    assert determinant(M) == 1
    x = solve(M, [Q(3), Q(2)])
    assert M @ Matrix(Q, [[c] for c in x]) == Matrix(Q, [[3], [2]])
    assert solve(Matrix(Q, [[1, 1], [1, 1]]), [Q(1), Q(2)]) is None


def test_span_helpers(Q):
    vecs = [(Q(1), Q(0), Q(1)), (Q(0), Q(1), Q(1)), (Q(1), Q(1), Q(2))]
    basis = row_space_basis(Q, vecs)
    assert len(basis) == 2
    assert in_span(Q, basis, (Q(2), Q(3), Q(5)))
    assert not in_span(Q, basis, (Q(0), Q(0), Q(1)))
    assert same_span(Q, vecs[:2], [vecs[2], vecs[0]])


def test_symbolic_kernel(Qa):
    a = Qa.gen("a")
    M = Matrix(Qa, [[a, 1], [a * a, a]])
    assert rank(M) == 1
    (k,) = kernel_basis(M)
    assert Qa.eq(a * k[0] + k[1], Qa.zero)
