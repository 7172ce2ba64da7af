"""Derivation superalgebras computed as kernels of the Leibniz system.

A parity-``s`` map ``d`` is a derivation when, for all basis ``x, y``,
``(xy)d = (-1)^{s p(y)} (xd)y + x(yd)``.  Unknowns are the matrix entries
``d[i][k]`` allowed by the parity block pattern.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Sequence

from .errors import AlgebraMismatch, NotDerivation, WrongDimension
from .fields import Field
from .linalg import Matrix, kernel_basis_sparse, rref_sparse, same_span, solve
from .superalgebra import (
    LinearMap,
    Report,
    SuperAlgebra,
    check_derivation,
    map_from_images,
)


def _unknowns(A: SuperAlgebra, s: int, target: SuperAlgebra | None = None) -> list[tuple[int, int]]:
    B = target or A
    return [(i, k) for i in range(A.dim) for k in range(B.dim) if B.parity[k] == (A.parity[i] + s) & 1]


def derivation_equations(A: SuperAlgebra, s: int) -> tuple[list[dict], list[tuple[int, int]]]:
    """Sparse rows of the Leibniz system for parity ``s`` and the unknown labels."""
    s &= 1
    unknowns = _unknowns(A, s)
    col = {u: c for c, u in enumerate(unknowns)}
    F = A.field
    rows = []
    for x, y in product(range(A.dim), repeat=2):
        sign = -1 if s * A.parity[y] else 1
        eqs: dict[int, dict] = {}

        def add(k, unknown, coeff):
            c = col.get(unknown)
            if c is None:
                return
            row = eqs.setdefault(k, {})
            v = row.get(c, F.zero) + coeff
            if v:
                row[c] = v
            else:
                row.pop(c, None)

        # (xy)d : sum_m c[x][y][m] d[m][k]
        for m, c in A.product(x, y).items():
            for k in range(A.dim):
                add(k, (m, k), c)
        # -(-1)^{s p(y)} (xd)y : sum_m d[x][m] c[m][y][k]
        for m in range(A.dim):
            for k, c in A.product(m, y).items():
                add(k, (x, m), -c if sign > 0 else c)
        # -x(yd) : sum_m c[x][m][k] d[y][m]
        for m in range(A.dim):
            for k, c in A.product(x, m).items():
                add(k, (y, m), -c)
        rows.extend(r for r in eqs.values() if r)
    return rows, unknowns


def derivation_system(A: SuperAlgebra, s: int) -> Matrix:
    """Coefficient matrix of the Leibniz system (one column per allowed entry of ``d``)."""
    rows, unknowns = derivation_equations(A, s)
    return Matrix.from_sparse(A.field, rows, len(unknowns))


def _map_from_solution(A: SuperAlgebra, s: int, unknowns, vec) -> LinearMap:
    F = A.field
    dense = [[F.zero] * A.dim for _ in range(A.dim)]
    for (i, k), v in zip(unknowns, vec):
        dense[i][k] = v
    return LinearMap(Matrix(F, dense, A.dim), s & 1, A)


@dataclass
class DerivationSpace:
    algebra: SuperAlgebra
    even_basis: list
    odd_basis: list

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.even_basis), len(self.odd_basis)

    def basis(self, s: int | None = None) -> list:
        if s is None:
            return self.even_basis + self.odd_basis
        return self.even_basis if s % 2 == 0 else self.odd_basis

    def contains(self, d: LinearMap) -> bool:
        return in_span_of_maps(self.basis(d.parity), d)


def derivation_basis(A: SuperAlgebra, s: int) -> list[LinearMap]:
    rows, unknowns = derivation_equations(A, s)
    kernel = kernel_basis_sparse(A.field, rows, len(unknowns))
    return [_map_from_solution(A, s, unknowns, v) for v in kernel]


def derivation_space(A: SuperAlgebra) -> DerivationSpace:
    return DerivationSpace(A, derivation_basis(A, 0), derivation_basis(A, 1))


# span utilities on maps -----------------------------------------------------

def coordinates_in(basis: Sequence[LinearMap], d: LinearMap):
    """Coefficients expressing ``d`` in ``basis``, or ``None`` if outside the span."""
    F = d.source.field
    if not basis:
        return () if d.is_zero() else None
    cols = [b.flat() for b in basis]
    target = d.flat()
    m = Matrix(F, [list(r) for r in zip(*cols)], len(basis))
    return solve(m, target)


def in_span_of_maps(basis: Sequence[LinearMap], d: LinearMap) -> bool:
    return coordinates_in(basis, d) is not None


def same_map_span(a: Sequence[LinearMap], b: Sequence[LinearMap], field: Field) -> bool:
    if not a or not b:
        return len(a) == len(b) == 0 or (not [x for x in a if not x.is_zero()]
                                          and not [x for x in b if not x.is_zero()])
    return same_span(field, [x.flat() for x in a], [x.flat() for x in b])


def map_span_rank(maps: Sequence[LinearMap], field: Field) -> int:
    rows = [{i: v for i, v in enumerate(m.flat()) if v} for m in maps]
    if not rows:
        return 0
    return len(rref_sparse(field, rows, len(maps[0].flat()))[1])


# Lie superalgebra structure -----------------------------------------------------

def der_bracket(d1: LinearMap, d2: LinearMap, check: bool = True) -> LinearMap:
    """``[d1, d2] = d1 d2 - (-1)^{p1 p2} d2 d1`` in right-action order."""
    if d1.source.dim != d2.source.dim:
        raise AlgebraMismatch("maps act on different algebras")
    if check:
        for d in (d1, d2):
            if not check_derivation(d.source, d).passed:
                raise NotDerivation("bracket input is not a derivation")
    return d1.supercommutator(d2)


def closure_check(D: DerivationSpace) -> Report:
    """Brackets of basis derivations stay in the space; the report carries the
    structure constants ``[b_i, b_j] = sum_k c_ij^k b_k`` (basis = even then odd)
    and the outcome of the super Jacobi identity on basis triples."""
    basis = D.basis()
    F = D.algebra.field
    consts: dict = {}
    failures = []
    for i, j in product(range(len(basis)), repeat=2):
        br = basis[i].supercommutator(basis[j])
        part = D.basis(br.parity)
        coords = coordinates_in(part, br)
        if coords is None:
            failures.append(((i, j), "bracket outside the span"))
            continue
        offset = 0 if br.parity == 0 else len(D.even_basis)
        consts[(i, j)] = {offset + k: c for k, c in enumerate(coords) if c}
    jacobi = True
    if not failures:
        par = [b.parity for b in basis]

        def br(u: dict, v: dict) -> dict:
            out: dict = {}
            for a, ca in u.items():
                for b, cb in v.items():
                    for k, c in consts.get((a, b), {}).items():
                        val = out.get(k, F.zero) + ca * cb * c
                        if val:
                            out[k] = val
                        else:
                            out.pop(k, None)
            return out

        one = F.one
        for a, b, c in product(range(len(basis)), repeat=3):
            # [a,[b,c]] = [[a,b],c] + (-1)^{ab} [b,[a,c]]
            lhs = br({a: one}, br({b: one}, {c: one}))
            r1 = br(br({a: one}, {b: one}), {c: one})
            r2 = br({b: one}, br({a: one}, {c: one}))
            sgn = -1 if par[a] * par[b] else 1
            for k in set(lhs) | set(r1) | set(r2):
                if lhs.get(k, F.zero) - r1.get(k, F.zero) - sgn * r2.get(k, F.zero):
                    jacobi = False
                    failures.append(((a, b, c), "super Jacobi identity fails"))
                    break
    return Report("closure", not failures, failures,
                  {"dims": D.dims, "structure_constants": consts, "jacobi": jacobi})


def _lie_consts(maps: Sequence[LinearMap]):
    n = len(maps)
    consts = {}
    for i, j in product(range(n), repeat=2):
        coords = coordinates_in(maps, maps[i].supercommutator(maps[j]))
        if coords is None:
            return None
        consts[(i, j)] = list(coords)
    return consts


def _combo(maps: Sequence[LinearMap], coeffs) -> LinearMap:
    acc = maps[0].scale(coeffs[0])
    for m, c in zip(maps[1:], coeffs[1:]):
        acc = acc + m.scale(c)
    return acc


def find_sl2_triple(maps: Sequence[LinearMap], search_height: int = 2):
    """An ``(e, h, f)`` in the span with ``[h,e]=2e, [h,f]=-2f, [e,f]=h``, or ``None``.

    Scans small integer combinations ``X`` whose ``ad X`` has eigenvalues
    ``0, +-mu`` with ``mu`` in the field, rescales to ``h = (2/mu) X`` and reads
    ``e, f`` off the eigenspaces of ``ad h``.
    """
    maps = list(maps)
    if len(maps) != 3:
        raise WrongDimension("an sl2 triple needs a 3-dimensional span")
    F = maps[0].source.field
    consts = _lie_consts(maps)
    if consts is None:
        return None
    # ad matrices in right-action convention: row i = coordinates of [X, b_i]
    def ad(coeffs):
        rows = []
        for i in range(3):
            row = [F.zero] * 3
            for j, cj in enumerate(coeffs):
                if cj:
                    for k in range(3):
                        row[k] = row[k] + cj * consts[(j, i)][k]
            rows.append(row)
        return Matrix(F, rows, 3)

    def charpoly_coeffs(m: Matrix):
        tr = m[0, 0] + m[1, 1] + m[2, 2]
        m2 = sum((m[i, i] * m[j, j] - m[i, j] * m[j, i] for i, j in ((0, 1), (0, 2), (1, 2))), F.zero)
        return tr, m2

    rng = range(-search_height, search_height + 1)
    candidates = sorted((c for c in product(rng, repeat=3) if any(c)),
                        key=lambda c: (sum(1 for v in c if v), sum(abs(v) for v in c), [-v for v in c]))
    for coeffs in candidates:
        c = [F(v) for v in coeffs]
        adx = ad(c)
        tr, m2 = charpoly_coeffs(adx)
        if tr:
            continue
        mu = F.sqrt(-m2)
        if mu is None or not mu:
            continue
        scale = F(2) / mu
        hc = [scale * v for v in c]
        adh = ad(hc)
        e_vec = _eigvec(adh, F(2), F)
        f_vec = _eigvec(adh, F(-2), F)
        if e_vec is None or f_vec is None:
            continue
        h = _combo(maps, hc)
        e = _combo(maps, e_vec)
        f = _combo(maps, f_vec)
        ef = coordinates_in([h], e.supercommutator(f))
        if ef is None or not ef[0]:
            continue
        f = f.scale(F.one / ef[0])
        if (h.supercommutator(e) == e.scale(2) and h.supercommutator(f) == f.scale(-2)
                and e.supercommutator(f) == h):
            return e, h, f
    return None


def _eigvec(m: Matrix, lam, F: Field):
    """A row eigenvector ``v m = lam v``."""
    shifted = [[m[i, j] - (lam if i == j else F.zero) for j in range(3)] for i in range(3)]
    # v M' = 0  <=>  M'^T v^T = 0
    rows = [{i: shifted[i][j] for i in range(3) if shifted[i][j]} for j in range(3)]
    ker = kernel_basis_sparse(F, rows, 3)
    return list(ker[0]) if ker else None


# J(V, f) and U(V, f, star) ----------------------------------------------------

def _form_rows(f: Matrix, v_parity: Sequence[int], s: int, col: dict, reading: str) -> list[dict]:
    F = f.field
    m = f.nrows
    rows = []
    for w, v in product(range(m), repeat=2):
        if reading == "skew":
            sign = 1 if s * v_parity[v] else -1      # f(wD,v) = -(-1)^{s p(v)} f(w,vD)
        else:
            sign = -1 if s * v_parity[w] else 1      # f(wD,v) = (-1)^{s p(w)} f(w,vD)
        row: dict = {}
        for k in range(m):
            if (w, k) in col and f[k, v]:
                row[col[(w, k)]] = row.get(col[(w, k)], F.zero) + f[k, v]
            if (v, k) in col and f[w, k]:
                c = col[(v, k)]
                row[c] = row.get(c, F.zero) - sign * f[w, k]
        row = {c: x for c, x in row.items() if x}
        if row:
            rows.append(row)
    return rows


def lieosp_basis(f: Matrix, v_parity: Sequence[int], s: int, reading: str = "skew") -> list[list[list]]:
    """Parity-``s`` maps ``D`` on V compatible with the form.

    ``reading="skew"`` (default) solves ``f(wD, v) + (-1)^{s p(v)} f(w, vD) = 0``,
    the super skew-adjointness that matches Der(J(V, f)).  ``reading="plain"``
    solves ``f(wD, v) = (-1)^{s p(w)} f(w, vD)``, which disagrees with Der(J(V, f))
    on the even part (it returns the self-adjoint maps).
    """
    if reading not in ("skew", "plain"):
        raise ValueError("reading must be 'skew' or 'plain'")
    F = f.field
    m = f.nrows
    unknowns = [(i, k) for i in range(m) for k in range(m) if v_parity[k] == (v_parity[i] + s) & 1]
    col = {u: c for c, u in enumerate(unknowns)}
    rows = _form_rows(f, v_parity, s, col, reading)
    out = []
    for vec in kernel_basis_sparse(F, rows, len(unknowns)):
        D = [[F.zero] * m for _ in range(m)]
        for (i, k), x in zip(unknowns, vec):
            D[i][k] = x
        out.append(D)
    return out


def _embed(U: SuperAlgebra, D: list[list], s: int) -> LinearMap:
    """Extend a map on V to U = F1 + V by killing the unit."""
    F = U.field
    n = U.dim
    rows = [[F.zero] * n]
    for r in D:
        rows.append([F.zero] + list(r))
    return LinearMap(Matrix(F, rows, n), s, U)


def _kills_unit_preserves_v(d: LinearMap) -> bool:
    rows = d.matrix.rows
    return not any(rows[0]) and not any(r[0] for r in rows[1:])


def lieosp_check(vdims: tuple[int, int], f, reading: str = "skew") -> Report:
    """Compare Der(J(V, f)) with the form-compatibility description, both parities."""
    from .catalog import make_jvf
    m0, m1 = vdims
    par = [0] * m0 + [1] * m1
    fm = f if isinstance(f, Matrix) else Matrix(_default_field(), f)
    J = make_jvf(fm, par, fm.field)
    D = derivation_space(J)
    failures = []
    dims = {}
    for s in (0, 1):
        direct = D.basis(s)
        via_form = [_embed(J, M, s) for M in lieosp_basis(fm, par, s, reading)]
        dims[s] = (len(direct), len(via_form))
        if len(direct) != len(via_form):
            failures.append((s, "dimension mismatch"))
        elif direct and not same_map_span(direct, via_form, J.field):
            failures.append((s, "spans differ"))
        if not all(_kills_unit_preserves_v(d) for d in direct):
            failures.append((s, "a derivation moves the unit or leaves V"))
    return Report("lieosp", not failures, failures,
                  {"dims": (dims[0][0], dims[1][0]), "form_dims": (dims[0][1], dims[1][1])})


def _default_field():
    from .fields import rationals
    return rationals()


def uvf_parts(U: SuperAlgebra) -> tuple[Matrix, dict, list[int]]:
    """Recover ``(f, star, v_parity)`` from an algebra built by ``make_uvf``."""
    F = U.field
    m = U.dim - 1
    fm = [[U.product(i + 1, j + 1).get(0, F.zero) for j in range(m)] for i in range(m)]
    star = {}
    for i, j in product(range(m), repeat=2):
        vec = {k - 1: c for k, c in U.product(i + 1, j + 1).items() if k}
        if vec:
            star[(i, j)] = vec
    return Matrix(F, fm, m), star, list(U.parity[1:])


def _star_algebra(star: dict, par: Sequence[int], F: Field) -> SuperAlgebra:
    return SuperAlgebra(F, par, star)


def uvfstar_der_check(U: SuperAlgebra) -> Report:
    """Der(U) equals the intersection of the form-compatible maps with Der(V, star)."""
    fm, star, par = uvf_parts(U)
    F = U.field
    m = len(par)
    V = _star_algebra(star, par, F)
    failures = []
    dims = {}
    for s in (0, 1):
        # joint system on the V-block unknowns: form condition + Leibniz for star
        form_maps = lieosp_basis(fm, par, s)
        star_rows, unknowns = derivation_equations(V, s)
        col = {u: c for c, u in enumerate(unknowns)}
        form_rows = _form_rows(fm, par, s, col, "skew")
        inter = []
        for vec in kernel_basis_sparse(F, star_rows + form_rows, len(unknowns)):
            D = [[F.zero] * m for _ in range(m)]
            for (i, k), x in zip(unknowns, vec):
                D[i][k] = x
            inter.append(_embed(U, D, s))
        direct = derivation_basis(U, s)
        form_span = [_embed(U, M, s) for M in form_maps]
        dims[s] = (len(direct), len(inter), len(form_span))
        if len(direct) != len(inter) or (direct and not same_map_span(direct, inter, F)):
            failures.append((s, "Der(U) differs from the intersection"))
        if not all(in_span_of_maps(form_span, d) for d in direct):
            failures.append((s, "a derivation violates the form condition"))
    return Report("uvf-star", not failures, failures,
                  {"dims": (dims[0][0], dims[1][0]), "intersection_dims": (dims[0][1], dims[1][1]),
                   "lieosp_dims": (dims[0][2], dims[1][2])})


# brute-force oracle ------------------------------------------------------------

def brute_force_derivation_count(A: SuperAlgebra, s: int, limit: int = 10 ** 6) -> int:
    """Number of parity-``s`` maps satisfying the Leibniz rule, by enumeration over GF(p)."""
    from .errors import SearchTooLarge
    F = A.field
    if not F.is_finite:
        raise ValueError("brute force needs a finite field")
    unknowns = _unknowns(A, s)
    total = F.modulus ** len(unknowns)
    if total > limit:
        raise SearchTooLarge(f"{total} maps exceed the budget {limit}")
    elems = F.elements()
    count = 0
    for vals in product(elems, repeat=len(unknowns)):
        d = _map_from_solution(A, s, unknowns, vals)
        if check_derivation(A, d).passed:
            count += 1
    return count


def nullity(A: SuperAlgebra, s: int) -> int:
    rows, unknowns = derivation_equations(A, s)
    return len(unknowns) - len(rref_sparse(A.field, rows, len(unknowns))[1])
