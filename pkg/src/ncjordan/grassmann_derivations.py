"""Derivations built from Grassmann data: lifts to the Kantor double, the
``Ad = 0`` criterion for J(Gamma_n, A), and the linear system describing
derivations of Gamma_n(D)."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .catalog import _matrix_of_elements, make_gamma_nd, make_j_gamma, make_j_gamma_A
from .derivations import derivation_space, map_span_rank, same_map_span
from .errors import AlgebraMismatch, InconsistentResult, NonHomogeneous, NotPoissonDerivation
from .fields import Field, rationals
from .grassmann import (
    GrassmannElement,
    WnDerivation,
    gr_mul,
    monomials,
    preserves_bracket,
    rpartial,
    wn_apply,
    wn_basis,
    wn_from_vector,
)
from .linalg import Matrix, kernel_basis_sparse
from .superalgebra import LinearMap, Report, SuperAlgebra, check_derivation


def _field_of(d: WnDerivation) -> Field:
    return d.components[0].field if d.n else rationals()


def wn_to_map(d: WnDerivation, algebra: SuperAlgebra) -> LinearMap:
    """A W_n derivation as a matrix on an algebra whose basis is the monomials of Gamma_n."""
    basis = monomials(d.n)
    if algebra.dim != len(basis):
        raise AlgebraMismatch("algebra is not built on Gamma_n")
    F = algebra.field
    rows = [list(wn_apply(d, GrassmannElement.monomial(d.n, m, 1, F)).coords(basis)) for m in basis]
    return LinearMap(Matrix(F, rows, len(basis)), d.parity, algebra)


def map_to_wn(d: LinearMap, n: int) -> WnDerivation:
    """Read a map on a Gamma_n-based algebra as ``x_i -> x_i d``."""
    basis = monomials(n)
    F = d.source.field
    comps = []
    for i in range(1, n + 1):
        row = d.matrix.rows[basis.index((i,))]
        comps.append(GrassmannElement(n, {m: c for m, c in zip(basis, row) if c}, F))
    return WnDerivation(tuple(comps), d.parity)


# lifts to J(Gamma_n) ------------------------------------------------------------

def lift_d1(d: WnDerivation, algebra: SuperAlgebra | None = None, require_poisson: bool = True) -> LinearMap:
    """``a -> ad``, ``abar -> (-1)^{p(d)} bar(ad)``."""
    n = d.n
    F = _field_of(d)
    if require_poisson and not preserves_bracket(d):
        raise NotPoissonDerivation("d does not preserve the Poisson-Grassmann bracket")
    J = algebra or make_j_gamma(n, F)
    basis = monomials(n)
    N = len(basis)
    if J.dim != 2 * N:
        raise AlgebraMismatch("algebra is not a double of Gamma_n")
    sign = -1 if d.parity else 1
    rows = []
    for m in basis:
        img = list(wn_apply(d, GrassmannElement.monomial(n, m, 1, F)).coords(basis))
        rows.append(img + [F.zero] * N)
    for m in basis:
        img = wn_apply(d, GrassmannElement.monomial(n, m, 1, F)).coords(basis)
        rows.append([F.zero] * N + [c if sign > 0 else -c for c in img])
    return LinearMap(Matrix(F, rows, 2 * N), d.parity, J)


def lift_d2(x: GrassmannElement, algebra: SuperAlgebra | None = None) -> LinearMap:
    """``a -> 0``, ``abar -> a x``; parity ``p(x) + 1``."""
    if x.parity is None:
        raise NonHomogeneous("x must be homogeneous")
    n = x.n
    F = x.field
    J = algebra or make_j_gamma(n, F)
    basis = monomials(n)
    N = len(basis)
    rows = [[F.zero] * (2 * N) for _ in range(N)]
    for m in basis:
        img = list(gr_mul(GrassmannElement.monomial(n, m, 1, F), x).coords(basis))
        rows.append(img + [F.zero] * N)
    return LinearMap(Matrix(F, rows, 2 * N), (x.parity + 1) & 1, J)


def jgamma_derivation(kind: str, arg, algebra: SuperAlgebra | None = None) -> LinearMap:
    """``kind="D1"`` lifts a bracket-preserving W_n derivation, ``kind="D2"`` builds ``0^x``."""
    if kind.upper() == "D1":
        return lift_d1(arg, algebra)
    if kind.upper() == "D2":
        return lift_d2(arg, algebra)
    raise ValueError("kind must be 'D1' or 'D2'")


def jgammaA_d1_criterion(d: WnDerivation, A, cross_check: bool = True) -> bool:
    """Whether ``(A)d = 0``; optionally confirmed by testing the lift on J(Gamma_n, A) directly."""
    n = d.n
    F = _field_of(d)
    JA = make_j_gamma_A(n, A, F)
    A_el = A if isinstance(A, GrassmannElement) else None
    if A_el is None:
        from .grassmann import parse_element
        A_el = parse_element(str(A), n, F) if isinstance(A, str) else GrassmannElement(n, {(): A}, F)
    verdict = wn_apply(d, A_el).is_zero()
    if cross_check:
        direct = check_derivation(JA, lift_d1(d, JA)).passed
        if direct != verdict:
            raise InconsistentResult(f"(A)d = 0 is {verdict} but the direct Leibniz test says {direct}")
    return verdict


# Gamma_n(D) ----------------------------------------------------------------------

def _residual_coords(elems: Sequence[GrassmannElement], basis) -> list:
    out = []
    for e in elems:
        out.extend(e.coords(basis))
    return out


def eq9_residuals(d: WnDerivation, a) -> list[GrassmannElement]:
    """``sum_k (a_ij d_k) f_k - (-1)^s sum_k ((f_i d_k) a_jk + (f_j d_k) a_ik)`` for ``i <= j``."""
    n = d.n
    f = d.components
    sign = -1 if d.parity else 1
    out = []
    for i in range(n):
        for j in range(i, n):
            lhs = f[0].zero_like()
            rhs = f[0].zero_like()
            for k in range(n):
                lhs = lhs + gr_mul(rpartial(k + 1, a[i][j]), f[k])
                rhs = rhs + gr_mul(rpartial(k + 1, f[i]), a[j][k]) + gr_mul(rpartial(k + 1, f[j]), a[i][k])
            out.append(lhs - rhs.scale(sign))
    return out


def _solve_linear_on_wn(n: int, s: int, F: Field, residual) -> list[WnDerivation]:
    basis = wn_basis(n, s, F)
    monos = monomials(n)
    cols = [_residual_coords(residual(b), monos) for b in basis]
    if not cols:
        return []
    nrows = len(cols[0])
    rows = []
    for r in range(nrows):
        row = {c: cols[c][r] for c in range(len(basis)) if cols[c][r]}
        if row:
            rows.append(row)
    return [wn_from_vector(n, s, v, F) for v in kernel_basis_sparse(F, rows, len(basis))]


def gras_der_solve(n: int, a, s: int, field: Field | None = None, verify: bool = True) -> list[WnDerivation]:
    """Basis of the parity-``s`` W_n derivations solving the Gamma_n(D) derivation system.

    With ``verify`` every solution is re-checked against the Leibniz rule of the
    full product of ``make_gamma_nd(n, a)`` (which also validates ``a``)."""
    F = field or rationals()
    a = _matrix_of_elements(a, n, F)
    G = make_gamma_nd(n, a, F)
    sols = _solve_linear_on_wn(n, s & 1, F, lambda b: eq9_residuals(b, a))
    if verify:
        for d in sols:
            if not check_derivation(G, wn_to_map(d, G)).passed:
                raise InconsistentResult(f"solution {d} is not a derivation of Gamma_n(D)")
    return sols


def gras_der_dual_check(n: int, a, field: Field | None = None) -> Report:
    """Compare :func:`gras_der_solve` with the kernel computed on the full multiplication table."""
    F = field or rationals()
    a = _matrix_of_elements(a, n, F)
    G = make_gamma_nd(n, a, F)
    D = derivation_space(G)
    failures = []
    dims = []
    for s in (0, 1):
        mine = [wn_to_map(d, G) for d in gras_der_solve(n, a, s, F, verify=False)]
        direct = D.basis(s)
        dims.append((len(mine), len(direct)))
        if len(mine) != len(direct) or (mine and not same_map_span(mine, direct, F)):
            failures.append((s, "spans differ"))
    return Report("gamma-nd-dual", not failures, failures,
                  {"dims": (dims[0][0], dims[1][0]), "direct_dims": (dims[0][1], dims[1][1])})


def structure_derivations(n: int, a, field: Field | None = None) -> list[WnDerivation]:
    """The odd derivations ``d_i`` with ``x_j d_i = a_ij``."""
    F = field or rationals()
    a = _matrix_of_elements(a, n, F)
    return [WnDerivation(tuple(a[i][j] for j in range(n)), 1) for i in range(n)]


def _op_matrix(d: WnDerivation, F: Field) -> Matrix:
    basis = monomials(d.n)
    rows = [list(wn_apply(d, GrassmannElement.monomial(d.n, m, 1, F)).coords(basis)) for m in basis]
    return Matrix(F, rows, len(basis))


def _supercommutator_residual(di: WnDerivation, d: WnDerivation, F: Field) -> list[GrassmannElement]:
    """``x_k [di, d]`` for every generator; a derivation vanishes iff it kills all generators."""
    sign = -1 if di.parity * d.parity else 1
    out = []
    for k in range(1, d.n + 1):
        xk = GrassmannElement.gen(d.n, k, F)
        out.append(wn_apply(d, wn_apply(di, xk)) - wn_apply(di, wn_apply(d, xk)).scale(sign))
    return out


def cent_ann_space(n: int, a, s: int, field: Field | None = None) -> list[WnDerivation]:
    """Parity-``s`` W_n derivations supercommuting with every ``d_i`` and killing every ``a_ij``."""
    F = field or rationals()
    a = _matrix_of_elements(a, n, F)
    ds = structure_derivations(n, a, F)

    def residual(b: WnDerivation):
        out = []
        for di in ds:
            out.extend(_supercommutator_residual(di, b, F))
        for i in range(n):
            for j in range(i, n):
                out.append(wn_apply(b, a[i][j]))
        return out

    return _solve_linear_on_wn(n, s, F, residual)


def cent_ann_inclusion_check(n: int, a, field: Field | None = None) -> Report:
    """Every member of Cent(d_1..d_n) and Ann(a_ij) solves the Gamma_n(D) system."""
    F = field or rationals()
    a = _matrix_of_elements(a, n, F)
    G = make_gamma_nd(n, a, F)
    failures = []
    dims = []
    for s in (0, 1):
        left = cent_ann_space(n, a, s, F)
        right = [wn_to_map(d, G) for d in gras_der_solve(n, a, s, F)]
        dims.append((len(left), len(right)))
        for d in left:
            m = wn_to_map(d, G)
            if not check_derivation(G, m).passed:
                failures.append((s, f"{d.components} is not a derivation"))
            elif right and map_span_rank(right + [m], F) != map_span_rank(right, F):
                failures.append((s, f"{d.components} outside the solution space"))
            elif not right and not m.is_zero():
                failures.append((s, f"{d.components} outside the (zero) solution space"))
    return Report("cent-ann", not failures, failures,
                  {"cent_ann_dims": (dims[0][0], dims[1][0]), "der_dims": (dims[0][1], dims[1][1])})
