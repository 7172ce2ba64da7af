"""Homomorphisms, automorphisms and subalgebras.

A map is given by the images of the source basis: row ``i`` of its matrix is
``phi(b_i)`` in target coordinates.  Finite-field oracles enumerate
automorphisms (vectorized with numpy) and subspaces (one reduced echelon
representative per subspace).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .errors import AlgebraMismatch, ParityViolation, SearchTooLarge
from .fields import Field
from .linalg import Matrix, determinant, in_span, row_space_basis
from .superalgebra import Element, LinearMap, Report, SuperAlgebra

DEFAULT_BUDGET = 2_000_000


@dataclass
class ParametricMap:
    """Matrix over a function field plus eliminations ``name := expression``."""

    matrix: Matrix
    constraints: Mapping[str, Any] = dc_field(default_factory=dict)
    parity: int = 0

    @property
    def field(self) -> Field:
        return self.matrix.field

    def resolved(self) -> Matrix:
        if not self.constraints:
            return self.matrix
        F = self.field
        mapping = {k: (F.parse(v) if isinstance(v, str) else F(v)) for k, v in self.constraints.items()}
        return self.matrix.map_entries(lambda c: F.substitute(c, mapping, F), F)

    def specialize(self, bindings: Mapping[str, Any], target: Field) -> Matrix:
        m = self.resolved()
        return m.map_entries(lambda c: self.field.substitute(c, bindings, target), target)


def _as_matrix(phi, field: Field | None = None) -> tuple[Matrix, int]:
    if isinstance(phi, ParametricMap):
        return phi.resolved(), phi.parity
    if isinstance(phi, LinearMap):
        return phi.matrix, phi.parity
    if isinstance(phi, Matrix):
        return phi, 0
    return Matrix(field, phi), 0


def _common_field(A: SuperAlgebra, m: Matrix) -> tuple[SuperAlgebra, Field]:
    if A.field == m.field:
        return A, A.field
    return A.over(m.field), m.field


def is_homomorphism(A: SuperAlgebra, B: SuperAlgebra, phi) -> Report:
    """``phi(b_i b_j) = phi(b_i) phi(b_j)`` for all basis pairs, exactly."""
    m, parity = _as_matrix(phi, A.field)
    if (m.nrows, m.ncols) != (A.dim, B.dim):
        raise AlgebraMismatch("map has the wrong shape")
    if parity:
        raise ParityViolation("homomorphisms are even maps")
    A2, F = _common_field(A, m)
    B2 = B if B.field == F else B.over(F)
    for i, row in enumerate(m.rows):
        for k, v in enumerate(row):
            if v and B.parity[k] != A.parity[i]:
                raise ParityViolation(f"phi({A.names[i]}) is not of parity {A.parity[i]}")
    images = [{k: v for k, v in enumerate(r) if v} for r in m.rows]
    failures = []
    for i, j in product(range(A.dim), repeat=2):
        lhs: dict = {}
        for k, c in A2.product(i, j).items():
            for t, v in images[k].items():
                val = lhs.get(t, F.zero) + c * v
                if val:
                    lhs[t] = val
                else:
                    lhs.pop(t, None)
        rhs = B2.mul_sparse(images[i], images[j])
        diff = {t: lhs.get(t, F.zero) - rhs.get(t, F.zero) for t in set(lhs) | set(rhs)}
        diff = {t: v for t, v in diff.items() if v}
        if diff:
            failures.append(((i, j), diff))
    return Report("homomorphism", not failures, failures)


def is_automorphism(A: SuperAlgebra, phi) -> Report:
    rep = is_homomorphism(A, A, phi)
    m, _ = _as_matrix(phi, A.field)
    det = determinant(m)
    invertible = bool(det)
    rep.name = "automorphism"
    rep.details["invertible"] = invertible
    if not invertible:
        rep.passed = False
        rep.failures.append(("determinant", "map is not invertible"))
    return rep


# subalgebras -----------------------------------------------------------------

@dataclass
class SubalgebraWitness:
    algebra: SuperAlgebra
    basis: list  # reduced echelon coordinate tuples

    @classmethod
    def from_vectors(cls, A: SuperAlgebra, vectors: Iterable) -> "SubalgebraWitness":
        rows = []
        for v in vectors:
            if isinstance(v, Element):
                rows.append(v.coords)
            elif isinstance(v, Mapping):
                rows.append(A.element(v).coords)
            else:
                rows.append(tuple(A.field(x) for x in v))
        return cls(A, row_space_basis(A.field, rows))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def key(self) -> tuple:
        return tuple(tuple(int(x) % self.algebra.field.modulus if self.algebra.field.is_finite else x
                           for x in r) for r in self.basis)

    def elements(self) -> list[Element]:
        return [self.algebra.element(r) for r in self.basis]

    def is_graded(self) -> bool:
        """Whether the span is spanned by homogeneous vectors."""
        A = self.algebra
        F = A.field
        parts = []
        for r in self.basis:
            for p in (0, 1):
                parts.append(tuple(x if A.parity[i] == p else F.zero for i, x in enumerate(r)))
        return len(row_space_basis(F, [p for p in parts if any(p)])) == self.dim

    def describe(self) -> list[str]:
        out = []
        for e in self.elements():
            out.append(" + ".join(f"{self.algebra.field.format(c)}*{self.algebra.names[i]}"
                                  for i, c in sorted(e.vec.items())))
        return out


def is_subalgebra(A: SuperAlgebra, W: SubalgebraWitness) -> bool:
    """Whether the span of ``W`` is closed under the product."""
    F = A.field
    basis = W.basis
    for u, v in product(basis, repeat=2):
        prod = A.mul_sparse({i: x for i, x in enumerate(u) if x}, {i: x for i, x in enumerate(v) if x})
        vec = [prod.get(i, F.zero) for i in range(A.dim)]
        if not in_span(F, basis, vec):
            return False
    return True


def echelon_subspaces(field: Field, n: int, d: int) -> Iterable[list[tuple]]:
    """Every ``d``-dimensional subspace of ``GF(p)^n`` once, as its reduced echelon basis."""
    elems = field.elements()
    zero, one = field.zero, field.one
    for pivots in combinations(range(n), d):
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
        for vals in product(elems, repeat=len(free)):
            rows = [[zero] * n for _ in range(d)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = one
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            yield [tuple(r) for r in rows]


def count_subspaces(p: int, n: int, d: int) -> int:
    num = den = 1
    for i in range(d):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def enumerate_subalgebras(A: SuperAlgebra, d: int, budget: int = DEFAULT_BUDGET) -> list[SubalgebraWitness]:
    F = A.field
    if not F.is_finite:
        raise ValueError("subalgebra enumeration needs a finite field")
    total = count_subspaces(F.modulus, A.dim, d)
    if total > budget:
        raise SearchTooLarge(f"{total} subspaces exceed the budget {budget}")
    out = []
    for basis in echelon_subspaces(F, A.dim, d):
        W = SubalgebraWitness(A, basis)
        if is_subalgebra(A, W):
            out.append(W)
    return out


# vectorized oracles over GF(p) ------------------------------------------------------

def _int_tensor(A: SuperAlgebra) -> np.ndarray:
    p = A.field.modulus
    T = np.zeros((A.dim, A.dim, A.dim), dtype=np.int64)
    for (i, j), vec in A._table.items():
        for k, c in vec.items():
            T[i, j, k] = int(c) % p
    return T


def _block_layout(A: SuperAlgebra):
    return [i for i in range(A.dim) if A.parity[i] == 0], [i for i in range(A.dim) if A.parity[i] == 1]


def _block_candidates(cells, n, m, p):
    total = p ** len(cells)
    idx = np.arange(total, dtype=np.int64)
    M = np.zeros((total, n, m), dtype=np.int64)
    for (i, k) in reversed(cells):
        M[:, i, k] = idx % p
        idx //= p
    return M


def _even_maps(A: SuperAlgebra, B: SuperAlgebra, budget: int, TA=None, TB=None, chunk: int = 200_000):
    """Yield batches of parity-preserving matrices ``A -> B`` as int arrays.

    When the structure tensors are given, the even block is first filtered on
    even-by-even products, which only involve that block."""
    p = A.field.modulus
    ea, oa = _block_layout(A)
    eb, ob = _block_layout(B)
    if len(ea) != len(eb) or len(oa) != len(ob):
        return
    n, m = A.dim, B.dim
    even_cells = [(i, k) for i in ea for k in eb]
    odd_cells = [(i, k) for i in oa for k in ob]
    total = p ** (len(even_cells) + len(odd_cells))
    if total > budget:
        raise SearchTooLarge(f"{total} candidate maps exceed the budget {budget}")
    if p ** len(even_cells) > chunk:
        # no prefilter: stream everything
        cells = even_cells + odd_cells
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            M = np.zeros((len(idx), n, m), dtype=np.int64)
            for (i, k) in reversed(cells):
                M[:, i, k] = idx % p
                idx //= p
            yield M
        return
    E = _block_candidates(even_cells, n, m, p)
    if TA is not None and ea:
        sub = np.ix_(ea, ea, range(n))
        lhs = np.einsum("ijk,bkt->bijt", TA[sub], E) % p
        Ee = E[:, ea, :]
        tmp = np.einsum("bia,act->bict", Ee, TB) % p
        rhs = np.einsum("bjc,bict->bijt", Ee, tmp) % p
        E = E[np.all((lhs - rhs) % p == 0, axis=(1, 2, 3))]
    if not len(E):
        return
    O = _block_candidates(odd_cells, n, m, p)
    step = max(1, chunk // len(O))
    for s in range(0, len(E), step):
        block = E[s:s + step]
        yield (block[:, None, :, :] + O[None, :, :, :]).reshape(-1, n, m)


def _homomorphism_mask(M: np.ndarray, TA: np.ndarray, TB: np.ndarray, p: int) -> np.ndarray:
    # lhs[b,i,j,:] = sum_k TA[i,j,k] M[b,k,:];  rhs[b,i,j,:] = sum_{a,c} M[b,i,a] M[b,j,c] TB[a,c,:]
    lhs = np.einsum("ijk,bkt->bijt", TA, M) % p
    tmp = np.einsum("bia,act->bict", M, TB) % p
    rhs = np.einsum("bjc,bict->bijt", M, tmp) % p
    return np.all((lhs - rhs) % p == 0, axis=(1, 2, 3))


def _det_mod(mat: list[list[int]], p: int) -> int:
    a = [r[:] for r in mat]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for r in range(c + 1, n):
            f = a[r][c] * inv % p
            if f:
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return det % p


def _to_map(A: SuperAlgebra, B: SuperAlgebra, arr: np.ndarray) -> LinearMap:
    F = B.field
    return LinearMap(Matrix(F, [[F(int(x)) for x in row] for row in arr], B.dim), 0, A, B)


def _search(A: SuperAlgebra, B: SuperAlgebra, budget: int, first_only: bool) -> list[LinearMap]:
    F = A.field
    if not F.is_finite or F != B.field:
        raise ValueError("the exhaustive oracles need both algebras over the same GF(p)")
    p = F.modulus
    TA, TB = _int_tensor(A), _int_tensor(B)
    found = []
    for M in _even_maps(A, B, budget, TA, TB):
        mask = _homomorphism_mask(M, TA, TB, p)
        for arr in M[mask]:
            if _det_mod(arr.tolist(), p):
                found.append(_to_map(A, B, arr))
                if first_only:
                    return found
    return found


def enumerate_automorphisms(A: SuperAlgebra, budget: int = DEFAULT_BUDGET) -> list[LinearMap]:
    """All invertible parity-preserving maps respecting the product, in lexicographic order."""
    return _search(A, A, budget, False)


def isomorphism_search(A: SuperAlgebra, B: SuperAlgebra, budget: int = DEFAULT_BUDGET,
                       use_invariants: bool = True) -> LinearMap | None:
    """An isomorphism ``A -> B`` or ``None``; derivation dimensions short-circuit the search."""
    if A.dim != B.dim or sorted(A.parity) != sorted(B.parity):
        return None
    if use_invariants:
        from .derivations import derivation_space
        if derivation_space(A).dims != derivation_space(B).dims:
            return None
    found = _search(A, B, budget, True)
    return found[0] if found else None


def compose(phi: LinearMap, psi: LinearMap) -> LinearMap:
    """First ``phi`` then ``psi`` (as maps on coordinates)."""
    return LinearMap(phi.matrix @ psi.matrix, 0, phi.source, psi.target)


def inverse(phi: LinearMap) -> LinearMap:
    from .linalg import solve
    F = phi.matrix.field
    n = phi.matrix.nrows
    cols = []
    for k in range(n):
        e = [F.one if i == k else F.zero for i in range(n)]
        # x M = e_k  <=>  M^T x^T = e_k
        x = solve(phi.matrix.transpose(), e)
        if x is None:
            raise ValueError("map is not invertible")
        cols.append(list(x))
    return LinearMap(Matrix(F, cols, n), 0, phi.codomain, phi.source)
