"""Dense-interface, sparse-core exact linear algebra over any :class:`Field`.

Rank over a function field is the *generic* rank: the rank for all parameter
values outside a proper closed set.  Specialize the matrix first when a
special parameter value matters.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .fields import Field, FieldValue

SparseRow = dict  # column index -> nonzero field value


class Matrix:
    """Immutable matrix of field values."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence], ncols: int | None = None):
        self.field = field
        conv = [tuple(field(x) for x in r) for r in rows]
        if ncols is None:
            ncols = len(conv[0]) if conv else 0
        for r in conv:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        self.rows = tuple(conv)
        self.nrows = len(conv)
        self.ncols = ncols

    @classmethod
    def from_sparse(cls, field: Field, rows: Iterable[SparseRow], ncols: int) -> "Matrix":
        zero = field.zero
        dense = []
        for r in rows:
            line = [zero] * ncols
            for c, v in r.items():
                line[c] = v
            dense.append(line)
        return cls(field, dense, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[field.zero] * ncols for _ in range(nrows)], ncols)

    def sparse_rows(self) -> list[SparseRow]:
        return [{c: v for c, v in enumerate(r) if v} for r in self.rows]

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix) or (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return NotImplemented
        return all(not (a - b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    __hash__ = None

    def __repr__(self):
        body = "; ".join(", ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = self.field.zero
        out = []
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            line = []
            for j in range(other.ncols):
                col = cols[j]
                s = zero
                for k, a in nz:
                    b = col[k]
                    if b:
                        s = s + a * b
                line.append(s)
            out.append(line)
        return Matrix(self.field, out, other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, [[c * a for a in r] for r in self.rows], self.ncols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.nrows else [], self.nrows)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def apply_row(self, vec: Sequence) -> tuple:
        """Row vector times matrix (maps act on the right)."""
        zero = self.field.zero
        out = [zero] * self.ncols
        for a, r in zip(vec, self.rows):
            if a:
                for j, b in enumerate(r):
                    if b:
                        out[j] = out[j] + a * b
        return tuple(out)

    def map_entries(self, fn, field: Field) -> "Matrix":
        return Matrix(field, [[fn(x) for x in r] for r in self.rows], self.ncols)


def _complexity(field: Field, v) -> tuple:
    if field.kind == "ratfunc":
        num, den = v.numer, v.denom
        return _total_degree(num) + _total_degree(den), len(num) + len(den)
    if field.kind == "Q":
        return (abs(int(v.numerator)).bit_length() + int(v.denominator).bit_length(),)
    return (0,)


def _total_degree(poly) -> int:
    return max((sum(m) for m in poly.monoms()), default=0) if poly else 0


def rref_sparse(field: Field, rows: Iterable[SparseRow], ncols: int) -> tuple[list[SparseRow], list[int]]:
    """Gauss-Jordan elimination on sparse rows.

    Returns the nonzero rows of the reduced row echelon form (sorted by pivot)
    and the pivot columns.  Pivots are chosen as the structurally simplest
    candidate in each column to limit expression swell over function fields.
    """
    pending = [dict(r) for r in rows if r]
    reduced: list[SparseRow] = []
    pivots: list[int] = []
    simple = field.kind in ("GF",)
    for col in range(ncols):
        cand = [i for i, r in enumerate(pending) if col in r]
        if not cand:
            continue
        if simple:
            best = cand[0]
        else:
            best = min(cand, key=lambda i: (_complexity(field, pending[i][col]), i))
        prow = pending.pop(best)
        inv = field.one / prow[col]
        if inv != field.one:
            prow = {c: v * inv for c, v in prow.items()}
        prow[col] = field.one
        for r in pending:
            f = r.get(col)
            if f:
                _axpy(r, prow, f)
        for r in reduced:
            f = r.get(col)
            if f:
                _axpy(r, prow, f)
        pending = [r for r in pending if r]
        reduced.append(prow)
        pivots.append(col)
        if not pending:
            break
    return reduced, pivots


def _axpy(r: SparseRow, prow: SparseRow, f) -> None:
    """r <- r - f * prow, pruning zeros."""
    for c, v in prow.items():
        new = r.get(c)
        new = -f * v if new is None else new - f * v
        if new:
            r[c] = new
        else:
            r.pop(c, None)


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    reduced, pivots = rref_sparse(m.field, m.sparse_rows(), m.ncols)
    zero_rows = [{} for _ in range(m.nrows - len(reduced))]
    return Matrix.from_sparse(m.field, reduced + zero_rows, m.ncols), len(pivots), pivots


def rank(m: Matrix) -> int:
    return len(rref_sparse(m.field, m.sparse_rows(), m.ncols)[1])


def kernel_from_rref(field: Field, reduced: list[SparseRow], pivots: list[int], ncols: int) -> list[tuple]:
    """Null-space basis from an RREF, each vector scaled so its first nonzero entry is 1."""
    pivset = set(pivots)
    zero = field.zero
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [zero] * ncols
        vec[free] = field.one
        for row, pc in zip(reduced, pivots):
            v = row.get(free)
            if v:
                vec[pc] = -v
        lead = next(x for x in vec if x)
        if lead != field.one:
            inv = field.one / lead
            vec = [x * inv for x in vec]
        basis.append(tuple(vec))
    return basis


def kernel_basis_sparse(field: Field, rows: Iterable[SparseRow], ncols: int) -> list[tuple]:
    reduced, pivots = rref_sparse(field, rows, ncols)
    return kernel_from_rref(field, reduced, pivots, ncols)


def kernel_basis(m: Matrix) -> list[tuple]:
    """Basis of {v : m v = 0} as column-vector coordinates."""
    return kernel_basis_sparse(m.field, m.sparse_rows(), m.ncols)


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution x of m x = b, or ``None`` if the system is inconsistent."""
    field = m.field
    rows = []
    for r, rhs in zip(m.sparse_rows(), b):
        r = dict(r)
        rhs = field(rhs)
        if rhs:
            r[m.ncols] = rhs
        rows.append(r)
    reduced, pivots = rref_sparse(field, rows, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [field.zero] * m.ncols
    for row, pc in zip(reduced, pivots):
        v = row.get(m.ncols)
        if v:
            x[pc] = v
    return tuple(x)


def row_space_basis(field: Field, vectors: Iterable[Sequence]) -> list[tuple]:
    """Reduced echelon basis of the span of ``vectors`` (canonical for the subspace)."""
    vectors = list(vectors)
    if not vectors:
        return []
    n = len(vectors[0])
    rows = [{i: x for i, x in enumerate(v) if x} for v in vectors]
    reduced, _ = rref_sparse(field, rows, n)
    zero = field.zero
    out = []
    for r in reduced:
        line = [zero] * n
        for c, v in r.items():
            line[c] = v
        out.append(tuple(line))
    return out


def in_span(field: Field, basis_rref: list[tuple], vec: Sequence) -> bool:
    """Whether ``vec`` lies in the span of an echelon basis from :func:`row_space_basis`."""
    v = list(vec)
    for row in basis_rref:
        pc = next(i for i, x in enumerate(row) if x)
        f = v[pc]
        if f:
            v = [a - f * b for a, b in zip(v, row)]
    return not any(v)


def same_span(field: Field, a: Iterable[Sequence], b: Iterable[Sequence]) -> bool:
    ra, rb = row_space_basis(field, a), row_space_basis(field, b)
    if len(ra) != len(rb):
        return False
    return all(not (x - y) for u, w in zip(ra, rb) for x, y in zip(u, w))


def determinant(m: Matrix) -> FieldValue:
    """Determinant by fraction-tracking elimination."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    field = m.field
    a = [list(r) for r in m.rows]
    n = m.nrows
    det = field.one
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = field.one / p
        for i in range(col + 1, n):
            f = a[i][col]
            if f:
                f = f * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det
