"""Superalgebras given by structure constants, and the superidentity checkers.

Conventions used throughout the package:

* maps act on the right: ``u R_x = u x`` and ``u L_x = (-1)^{p(x)p(u)} x u``;
  operator composition ``P Q`` means "first P, then Q";
* operator supercommutator ``[P, Q] = PQ - (-1)^{pq} QP``;
* ``x . y`` (:func:`sym_product`) is the unhalved ``xy + (-1)^{xy} yx``, while the
  plus-algebra uses the halved product ``x o y = (x . y) / 2`` so that
  idempotents stay idempotent and ``xy = x o y + [x, y] / 2``.

Identity checkers run over basis tuples only; multilinearity makes that complete.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Any, Iterable, Mapping, Sequence

from .errors import (
    AlgebraMismatch,
    CharacteristicTwo,
    GradingViolation,
    NonHomogeneous,
    NotSupercommutative,
    ParityViolation,
)
from .fields import Field, rationals
from .linalg import Matrix

Sparse = dict  # basis index -> nonzero coefficient


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def _add_into(acc: Sparse, vec: Sparse, scale=None) -> None:
    for k, c in vec.items():
        v = c if scale is None else scale * c
        cur = acc.get(k)
        if cur is not None:
            v = cur + v
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


def _combine(*terms) -> Sparse:
    """Sum of (sign, vector) pairs."""
    acc: Sparse = {}
    for s, vec in terms:
        for k, c in vec.items():
            cur = acc.get(k)
            v = c if s > 0 else -c
            if cur is not None:
                v = cur + v
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
    return acc


class SuperAlgebra:
    """A finite-dimensional superalgebra ``b_i b_j = sum_k c[i][j][k] b_k``.

    ``table`` maps ``(i, j)`` to ``{k: c}``; a dense ``dim x dim x dim`` nested
    list is accepted too.  Omitted pairs multiply to zero.
    """

    def __init__(self, field: Field, parity: Sequence[int], table, names: Sequence[str] | None = None,
                 check: bool = True):
        self.field = field
        self.parity = tuple(int(p) & 1 for p in parity)
        self.dim = len(self.parity)
        self.names = tuple(names) if names is not None else tuple(f"b{i}" for i in range(self.dim))
        if len(self.names) != self.dim:
            raise ValueError("names/parity length mismatch")
        self._table: dict[tuple[int, int], Sparse] = {}
        if isinstance(table, Mapping):
            items = table.items()
        else:
            items = (((i, j), {k: c for k, c in enumerate(table[i][j])})
                     for i in range(self.dim) for j in range(self.dim))
        for (i, j), entry in items:
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"basis pair {(i, j)} out of range")
            vec = {}
            for k, c in dict(entry).items():
                if not 0 <= k < self.dim:
                    raise ValueError(f"basis index {k} out of range")
                c = field(c)
                if c:
                    vec[k] = c
            if vec:
                self._table[(i, j)] = vec
        if check:
            bad = grading_violations(self)
            if bad:
                raise GradingViolation(f"products violate the grading at {bad[:5]}")

    # basic access ------------------------------------------------------
    def product(self, i: int, j: int) -> Sparse:
        return self._table.get((i, j), {})

    def structure_constants(self) -> list:
        zero = self.field.zero
        out = [[[zero] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), vec in self._table.items():
            for k, c in vec.items():
                out[i][j][k] = c
        return out

    def table_items(self):
        return sorted(self._table.items())

    def index(self, name: str) -> int:
        return self.names.index(name)

    def basis(self, i: int | str) -> "Element":
        if isinstance(i, str):
            i = self.index(i)
        return Element(self, {i: self.field.one})

    def element(self, coords: Sequence | Mapping) -> "Element":
        if isinstance(coords, Mapping):
            vec = {}
            for key, c in coords.items():
                idx = self.index(key) if isinstance(key, str) else key
                c = self.field(c)
                if c:
                    vec[idx] = c
            return Element(self, vec)
        if len(coords) != self.dim:
            raise ValueError("coordinate vector has wrong length")
        return Element(self, {i: self.field(c) for i, c in enumerate(coords) if self.field(c)})

    def zero(self) -> "Element":
        return Element(self, {})

    @property
    def even(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == 0]

    @property
    def odd(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == 1]

    def vec_parity(self, u: Sparse):
        ps = {self.parity[i] for i in u}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def mul_sparse(self, u: Sparse, v: Sparse) -> Sparse:
        acc: Sparse = {}
        table = self._table
        for i, a in u.items():
            for j, b in v.items():
                prod = table.get((i, j))
                if prod:
                    _add_into(acc, prod, a * b)
        return acc

    # comparison ---------------------------------------------------------
    def same_shape(self, other: "SuperAlgebra") -> bool:
        return self.field == other.field and self.parity == other.parity

    def __eq__(self, other):
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        if not self.same_shape(other):
            return False
        keys = set(self._table) | set(other._table)
        for key in keys:
            a, b = self._table.get(key, {}), other._table.get(key, {})
            for k in set(a) | set(b):
                if a.get(k, self.field.zero) - b.get(k, self.field.zero):
                    return False
        return True

    __hash__ = None

    def __repr__(self):
        return f"SuperAlgebra(dim={self.dim}, parity={self.parity}, field={self.field.name})"

    # transformations ---------------------------------------------------
    def map_coefficients(self, fn, field: Field) -> "SuperAlgebra":
        table = {key: {k: fn(c) for k, c in vec.items()} for key, vec in self._table.items()}
        return SuperAlgebra(field, self.parity, table, self.names)

    def specialize(self, bindings: Mapping[str, Any], target: Field | None = None) -> "SuperAlgebra":
        """Substitute parameter values (a ring homomorphism on every coefficient)."""
        if self.field.kind != "ratfunc":
            target = target or self.field
            return self.map_coefficients(target, target)
        target = target or self.field.base
        return self.map_coefficients(lambda c: self.field.substitute(c, bindings, target), target)

    def over(self, target: Field) -> "SuperAlgebra":
        """The same structure constants read in a larger field."""
        return self.map_coefficients(lambda c: self.field.substitute(c, {}, target)
                                     if self.field.kind == "ratfunc" else target(c), target)

    def with_table(self, table) -> "SuperAlgebra":
        return SuperAlgebra(self.field, self.parity, table, self.names)

    def is_supercommutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i, self.dim):
                s = _sign(self.parity[i] * self.parity[j])
                a, b = self.product(i, j), self.product(j, i)
                for k in set(a) | set(b):
                    if a.get(k, self.field.zero) - s * b.get(k, self.field.zero):
                        return False
        return True


def grading_violations(A: SuperAlgebra) -> list[tuple[int, int, int]]:
    """Triples (i, j, k) with c[i][j][k] != 0 although p(k) != p(i) + p(j)."""
    bad = []
    for (i, j), vec in A._table.items():
        want = A.parity[i] ^ A.parity[j]
        bad.extend((i, j, k) for k in vec if A.parity[k] != want)
    return sorted(bad)


class Element:
    """A vector of an algebra, stored sparsely; ``coords`` gives the dense view."""

    __slots__ = ("algebra", "vec")

    def __init__(self, algebra: SuperAlgebra, vec: Sparse):
        self.algebra = algebra
        self.vec = vec

    @property
    def coords(self) -> tuple:
        zero = self.algebra.field.zero
        return tuple(self.vec.get(i, zero) for i in range(self.algebra.dim))

    @property
    def parity(self):
        """0 or 1 for homogeneous elements (zero counts as even), ``None`` if mixed."""
        return self.algebra.vec_parity(self.vec)

    def homogeneous_parts(self) -> list["Element"]:
        parts = []
        for p in (0, 1):
            vec = {i: c for i, c in self.vec.items() if self.algebra.parity[i] == p}
            if vec:
                parts.append(Element(self.algebra, vec))
        return parts

    def _check(self, other: "Element"):
        if not isinstance(other, Element) or other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, _combine((1, self.vec), (1, other.vec)))

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, _combine((1, self.vec), (-1, other.vec)))

    def __neg__(self):
        return Element(self.algebra, {k: -c for k, c in self.vec.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self.algebra, self, other)
        c = self.algebra.field(other)
        return Element(self.algebra, {k: c * v for k, v in self.vec.items() if c * v})

    def __rmul__(self, other):
        c = self.algebra.field(other)
        return Element(self.algebra, {k: c * v for k, v in self.vec.items() if c * v})

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra.dim == other.algebra.dim and not _combine((1, self.vec), (-1, other.vec))

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.vec

    def __repr__(self):
        if not self.vec:
            return "0"
        f = self.algebra.field
        return " + ".join(f"({f.format(c)})*{self.algebra.names[i]}" for i, c in sorted(self.vec.items()))


@dataclass(frozen=True, eq=False)
class LinearMap:
    """Matrix acting on row vectors: row ``i`` is the image of source basis vector ``i``."""

    matrix: Matrix
    parity: int
    source: SuperAlgebra
    target: SuperAlgebra | None = None

    @property
    def codomain(self) -> SuperAlgebra:
        return self.target if self.target is not None else self.source

    def apply(self, x: Element) -> Element:
        if x.algebra.dim != self.source.dim:
            raise AlgebraMismatch("element not in the source algebra")
        out: Sparse = {}
        for i, c in x.vec.items():
            row = {k: v for k, v in enumerate(self.matrix.rows[i]) if v}
            _add_into(out, row, c)
        return Element(self.codomain, out)

    __call__ = apply

    def image(self, i: int) -> Sparse:
        return {k: v for k, v in enumerate(self.matrix.rows[i]) if v}

    def then(self, other: "LinearMap") -> "LinearMap":
        """Composition in right-action order: first ``self``, then ``other``."""
        return LinearMap(self.matrix @ other.matrix, (self.parity + other.parity) & 1, self.source, other.target)

    def supercommutator(self, other: "LinearMap") -> "LinearMap":
        a = self.then(other).matrix
        b = other.then(self).matrix
        if self.parity * other.parity:
            m = a + b
        else:
            m = a - b
        return LinearMap(m, (self.parity + other.parity) & 1, self.source, self.target)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix + other.matrix, self.parity, self.source, self.target)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix - other.matrix, self.parity, self.source, self.target)

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.matrix.scale(c), self.parity, self.source, self.target)

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.matrix == other.matrix

    __hash__ = None

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def respects_parity(self) -> bool:
        tgt = self.codomain
        for i, row in enumerate(self.matrix.rows):
            for k, v in enumerate(row):
                if v and tgt.parity[k] != (self.source.parity[i] + self.parity) & 1:
                    return False
        return True

    def flat(self) -> tuple:
        return tuple(x for r in self.matrix.rows for x in r)


def map_from_images(A: SuperAlgebra, images: Sequence[Sparse | Element | Sequence], parity: int,
                    target: SuperAlgebra | None = None) -> LinearMap:
    B = target or A
    rows = []
    for img in images:
        if isinstance(img, Element):
            rows.append(img.coords)
        elif isinstance(img, Mapping):
            rows.append([img.get(k, B.field.zero) for k in range(B.dim)])
        else:
            rows.append(list(img))
    return LinearMap(Matrix(B.field, rows, B.dim), parity & 1, A, target)


def identity_map(A: SuperAlgebra) -> LinearMap:
    return LinearMap(Matrix.identity(A.field, A.dim), 0, A)


@dataclass
class Report:
    """Outcome of a verification: ``passed`` plus the failing cases, in index order."""

    name: str
    passed: bool
    failures: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} cases)"
        return f"{self.name}: {status}"


# products ---------------------------------------------------------------

def multiply(A: SuperAlgebra, x: Element, y: Element) -> Element:
    if x.algebra != A or y.algebra != A:
        if x.algebra is not A or y.algebra is not A:
            raise AlgebraMismatch("elements do not belong to the algebra")
    return Element(A, A.mul_sparse(x.vec, y.vec))


def _bilinear_signed(x: Element, y: Element, sign_of_swap: int) -> Element:
    """xy + s (-1)^{p(x)p(y)} yx summed over homogeneous components."""
    if x.algebra is not y.algebra and x.algebra != y.algebra:
        raise AlgebraMismatch("elements belong to different algebras")
    A = x.algebra
    acc: Sparse = {}
    for xp in x.homogeneous_parts():
        for yp in y.homogeneous_parts():
            s = sign_of_swap * _sign(xp.parity * yp.parity)
            acc = _combine((1, acc), (1, A.mul_sparse(xp.vec, yp.vec)), (s, A.mul_sparse(yp.vec, xp.vec)))
    return Element(A, acc)


def sym_product(x: Element, y: Element) -> Element:
    """``x . y = xy + (-1)^{xy} yx`` (unhalved)."""
    return _bilinear_signed(x, y, 1)


def super_commutator(x: Element, y: Element) -> Element:
    """``[x, y] = xy - (-1)^{xy} yx``."""
    return _bilinear_signed(x, y, -1)


def _right(A: SuperAlgebra, x: Sparse, u: Sparse) -> Sparse:
    return A.mul_sparse(u, x)


def _left(A: SuperAlgebra, x: Sparse, px: int, u: Sparse) -> Sparse:
    if px:
        u = {b: (-c if A.parity[b] else c) for b, c in u.items()}
    return A.mul_sparse(x, u)


def mult_operators(A: SuperAlgebra, x: Element) -> tuple[LinearMap, LinearMap]:
    """``(L_x, R_x)`` with ``y R_x = yx`` and ``y L_x = (-1)^{p(x)p(y)} xy``."""
    px = x.parity
    if px is None:
        raise NonHomogeneous("multiplication operators need a homogeneous element")
    zero = A.field.zero
    lrows, rrows = [], []
    for b in range(A.dim):
        u = {b: A.field.one}
        lv, rv = _left(A, x.vec, px, u), _right(A, x.vec, u)
        lrows.append([lv.get(k, zero) for k in range(A.dim)])
        rrows.append([rv.get(k, zero) for k in range(A.dim)])
    return (LinearMap(Matrix(A.field, lrows, A.dim), px, A),
            LinearMap(Matrix(A.field, rrows, A.dim), px, A))


def _require_char_not_two(A: SuperAlgebra):
    if A.field.characteristic == 2:
        raise CharacteristicTwo("2 is not invertible")


def plus_algebra(A: SuperAlgebra) -> SuperAlgebra:
    """Same space with ``a o b = (ab + (-1)^{ab} ba) / 2``."""
    _require_char_not_two(A)
    half = A.field.one / A.field(2)
    table = {}
    for i, j in product(range(A.dim), repeat=2):
        s = _sign(A.parity[i] * A.parity[j])
        vec = _combine((1, A.product(i, j)), (s, A.product(j, i)))
        if vec:
            table[(i, j)] = {k: half * c for k, c in vec.items()}
    return SuperAlgebra(A.field, A.parity, table, A.names)


def commutator_bracket(A: SuperAlgebra) -> SuperAlgebra:
    """The supercommutator of ``A`` packaged as a bilinear table on the same space."""
    table = {}
    for i, j in product(range(A.dim), repeat=2):
        s = _sign(A.parity[i] * A.parity[j])
        vec = _combine((1, A.product(i, j)), (-s, A.product(j, i)))
        if vec:
            table[(i, j)] = vec
    return SuperAlgebra(A.field, A.parity, table, A.names)


def reconstruct(P: SuperAlgebra, B: SuperAlgebra) -> SuperAlgebra:
    """Algebra with product ``a o b + B(a, b) / 2``; inverts :func:`plus_algebra`
    when ``B`` is the supercommutator."""
    if not P.same_shape(B):
        raise AlgebraMismatch("product and bracket live on different spaces")
    _require_char_not_two(P)
    half = P.field.one / P.field(2)
    table = {}
    for i, j in product(range(P.dim), repeat=2):
        vec = dict(P.product(i, j))
        _add_into(vec, B.product(i, j), half)
        if vec:
            table[(i, j)] = vec
    return SuperAlgebra(P.field, P.parity, table, P.names)


# identity checkers --------------------------------------------------------

def _unit(A: SuperAlgebra, i: int) -> Sparse:
    return {i: A.field.one}


def check_flexible(A: SuperAlgebra) -> Report:
    """``[R_x, L_y] = [L_x, R_y]`` on all basis pairs."""
    failures = []
    par = A.parity
    for x, y in product(range(A.dim), repeat=2):
        s = _sign(par[x] * par[y])
        ux, uy = _unit(A, x), _unit(A, y)
        residual = {}
        for u in range(A.dim):
            v = _unit(A, u)
            t1 = _left(A, uy, par[y], _right(A, ux, v))      # u R_x L_y
            t2 = _right(A, ux, _left(A, uy, par[y], v))      # u L_y R_x
            t3 = _right(A, uy, _left(A, ux, par[x], v))      # u L_x R_y
            t4 = _left(A, ux, par[x], _right(A, uy, v))      # u R_y L_x
            r = _combine((1, t1), (-s, t2), (-1, t3), (s, t4))
            if r:
                residual[u] = r
        if residual:
            failures.append(((x, y), residual))
    return Report("flexible", not failures, failures)


def check_noncomm_jordan(A: SuperAlgebra) -> Report:
    """Flexibility plus the cyclic identity
    ``[R_{x.y}, L_z] + (-1)^{x(y+z)}[R_{y.z}, L_x] + (-1)^{z(x+y)}[R_{z.x}, L_y] = 0``."""
    flex = check_flexible(A)
    par = A.parity
    n = A.dim
    sym = {}
    for a, b in product(range(n), repeat=2):
        s = _sign(par[a] * par[b])
        sym[(a, b)] = _combine((1, A.product(a, b)), (s, A.product(b, a)))
    comm_cache: dict = {}

    def comm(a, b, c):
        key = (a, b, c)
        got = comm_cache.get(key)
        if got is None:
            P = sym[(a, b)]
            pp = par[a] ^ par[b]
            s = _sign(pp * par[c])
            uc = _unit(A, c)
            got = {}
            if P:
                for u in range(n):
                    v = _unit(A, u)
                    r = _combine((1, _left(A, uc, par[c], _right(A, P, v))),
                                 (-s, _right(A, P, _left(A, uc, par[c], v))))
                    if r:
                        got[u] = r
            comm_cache[key] = got
        return got

    failures = []
    for x, y, z in product(range(n), repeat=3):
        s2 = _sign(par[x] * (par[y] + par[z]))
        s3 = _sign(par[z] * (par[x] + par[y]))
        c1, c2, c3 = comm(x, y, z), comm(y, z, x), comm(z, x, y)
        residual = {}
        for u in set(c1) | set(c2) | set(c3):
            r = _combine((1, c1.get(u, {})), (s2, c2.get(u, {})), (s3, c3.get(u, {})))
            if r:
                residual[u] = r
        if residual:
            failures.append(((x, y, z), residual))
    return Report("noncommutative-jordan", flex.passed and not failures, flex.failures + failures,
                  {"flexible": flex.passed, "cyclic": not failures})


def check_jordan_super(A: SuperAlgebra, signs: str = "koszul") -> Report:
    """The Jordan superidentity on a supercommutative algebra::

        R_a R_b R_c + s R_c R_b R_a + (-1)^{bc} R_{(ac)b}
            = R_a R_{bc} + t R_c R_{ab} + (-1)^{ab} R_b R_{ac}

    with ``s = (-1)^{ab+ac+bc}``.  With ``signs="koszul"`` (default) ``t`` is the
    sign of moving ``c`` past ``ab``, ``(-1)^{c(a+b)}``; ``signs="uniform"`` uses
    ``t = s``, which already fails on the plus-algebra of K3.
    """
    if signs not in ("koszul", "uniform"):
        raise ValueError("signs must be 'koszul' or 'uniform'")
    if not A.is_supercommutative():
        raise NotSupercommutative("the Jordan superidentity is stated for supercommutative algebras")
    par = A.parity
    n = A.dim
    right2 = {}
    for u, a, b in product(range(n), repeat=3):
        ua = A.product(u, a)
        right2[(u, a, b)] = A.mul_sparse(ua, _unit(A, b)) if ua else {}
    failures = []
    for a, b, c in product(range(n), repeat=3):
        s = _sign(par[a] * par[b] + par[a] * par[c] + par[b] * par[c])
        s2 = _sign(par[c] * (par[a] + par[b])) if signs == "koszul" else s
        acb = A.mul_sparse(A.product(a, c), _unit(A, b))
        bc, ab, ac = A.product(b, c), A.product(a, b), A.product(a, c)
        residual = {}
        for u in range(n):
            uv = _unit(A, u)
            lhs1 = A.mul_sparse(right2[(u, a, b)], _unit(A, c))
            lhs2 = A.mul_sparse(right2[(u, c, b)], _unit(A, a))
            lhs3 = A.mul_sparse(uv, acb)
            rhs1 = A.mul_sparse(A.product(u, a), bc)
            rhs2 = A.mul_sparse(A.product(u, c), ab)
            rhs3 = A.mul_sparse(A.product(u, b), ac)
            r = _combine((1, lhs1), (s, lhs2), (_sign(par[b] * par[c]), lhs3),
                         (-1, rhs1), (-s2, rhs2), (-_sign(par[a] * par[b]), rhs3))
            if r:
                residual[u] = r
        if residual:
            failures.append(((a, b, c), residual))
    return Report("jordan-super", not failures, failures)


def check_poisson_bracket(P: SuperAlgebra, B: SuperAlgebra) -> Report:
    """``{ab, c} = (-1)^{bc}{a, c} b + a {b, c}`` on basis triples; the report's
    details also say whether ``B`` is superanticommutative."""
    if not P.same_shape(B):
        raise AlgebraMismatch("product and bracket live on different spaces")
    par = P.parity
    n = P.dim
    failures = []
    for a, b, c in product(range(n), repeat=3):
        lhs = B.mul_sparse(P.product(a, b), _unit(P, c))
        t1 = P.mul_sparse(B.product(a, c), _unit(P, b))
        t2 = P.mul_sparse(_unit(P, a), B.product(b, c))
        r = _combine((1, lhs), (-_sign(par[b] * par[c]), t1), (-1, t2))
        if r:
            failures.append(((a, b, c), r))
    anti = True
    for i in range(n):
        for j in range(i, n):
            s = _sign(par[i] * par[j])
            if _combine((1, B.product(i, j)), (s, B.product(j, i))):
                anti = False
    return Report("poisson-bracket", not failures, failures, {"superanticommutative": anti})


def check_derivation(A: SuperAlgebra, d: LinearMap) -> Report:
    """``(xy)d = (-1)^{p(d)p(y)} (xd)y + x(yd)`` on all basis pairs."""
    if d.source.dim != A.dim:
        raise AlgebraMismatch("map does not act on this algebra")
    images = [d.image(i) for i in range(A.dim)]
    failures = []
    for x, y in product(range(A.dim), repeat=2):
        lhs = {}
        for k, c in A.product(x, y).items():
            _add_into(lhs, images[k], c)
        t1 = A.mul_sparse(images[x], _unit(A, y))
        t2 = A.mul_sparse(_unit(A, x), images[y])
        r = _combine((1, lhs), (-_sign(d.parity * A.parity[y]), t1), (-1, t2))
        if r:
            failures.append(((x, y), r))
    return Report("derivation", not failures, failures)


def check_parity(d: LinearMap) -> None:
    if not d.respects_parity():
        raise ParityViolation(f"map is not homogeneous of parity {d.parity}")
