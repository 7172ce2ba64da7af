"""Constructors for the algebra families handled by the workbench.

Parameters may be field values, ints, ``Fraction``s or strings.  A string that
is not a number names a free parameter; when no field is given, the smallest
rational function field containing all named parameters is used.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Any, Mapping, Sequence

from .errors import (
    AOdd,
    BracketNotPoisson,
    FormDegenerate,
    FormNotSupersymmetric,
    GradingViolation,
    NonHomogeneous,
    StarNotAnticommutative,
    StarNotCompatible,
    UnknownFamily,
)
from .fields import Field, function_field, rationals
from .grassmann import (
    GrassmannElement,
    format_monomial,
    gr_mul,
    merge_sign,
    monomials,
    parse_element,
    poisson_grassmann,
    rpartial,
)
from .linalg import Matrix, determinant
from .superalgebra import SuperAlgebra, check_poisson_bracket


def _is_name(v) -> bool:
    if not isinstance(v, str):
        return False
    try:
        Fraction(v.strip())
        return False
    except ValueError:
        return True


def resolve_field(values: Sequence[Any], field: Field | None = None) -> Field:
    """The given field, or Q extended by every parameter spelled as a name."""
    if field is not None:
        return field
    names = []
    for v in values:
        if _is_name(v):
            for tok in _identifiers(v):
                if tok not in names:
                    names.append(tok)
    return function_field(*names) if names else rationals()


def _identifiers(text: str) -> list[str]:
    import re
    return [t for t in re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text) if t not in ("I",)]


def _value(field: Field, v):
    if isinstance(v, str):
        return field.parse(v)
    return field(v)


# K3 and D_t ----------------------------------------------------------------

K3_NAMES = ("e", "z", "w")
DT_NAMES = ("e1", "e2", "x", "y")


def make_k3(alpha=Fraction(1, 2), beta=0, gamma=0, field: Field | None = None) -> SuperAlgebra:
    """K3(alpha, beta, gamma) on the basis (e | z, w)."""
    F = resolve_field([alpha, beta, gamma], field)
    a, b, g = (_value(F, v) for v in (alpha, beta, gamma))
    one = F.one
    e, z, w = 0, 1, 2
    table = {
        (e, e): {e: one},
        (e, z): {z: a, w: b},
        (e, w): {z: g, w: one - a},
        (z, e): {z: one - a, w: -b},
        (z, z): {e: -2 * b},
        (z, w): {e: 2 * a},
        (w, e): {w: a, z: -g},
        (w, z): {e: -2 * (one - a)},
        (w, w): {e: 2 * g},
    }
    return SuperAlgebra(F, (0, 1, 1), table, K3_NAMES)


def make_dt(t=1, alpha=Fraction(1, 2), beta=0, gamma=0, field: Field | None = None) -> SuperAlgebra:
    """D_t(alpha, beta, gamma) on the basis (e1, e2 | x, y)."""
    F = resolve_field([t, alpha, beta, gamma], field)
    t, a, b, g = (_value(F, v) for v in (t, alpha, beta, gamma))
    one = F.one
    e1, e2, x, y = 0, 1, 2, 3
    table = {
        (e1, e1): {e1: one},
        (e1, x): {x: a, y: b},
        (e1, y): {x: g, y: one - a},
        (e2, e2): {e2: one},
        (e2, x): {x: one - a, y: -b},
        (e2, y): {x: -g, y: a},
        (x, e1): {x: one - a, y: -b},
        (x, e2): {x: a, y: b},
        (x, x): {e1: -2 * b, e2: 2 * b * t},
        (x, y): {e1: 2 * a, e2: 2 * (one - a) * t},
        (y, e1): {x: -g, y: a},
        (y, e2): {x: g, y: one - a},
        (y, x): {e1: -2 * (one - a), e2: -2 * a * t},
        (y, y): {e1: 2 * g, e2: -2 * g * t},
    }
    return SuperAlgebra(F, (0, 0, 1, 1), table, DT_NAMES)


# U(V, f, star) --------------------------------------------------------------

def _dense_star(star, m: int, F: Field) -> dict:
    out = {}
    if star is None:
        return out
    if isinstance(star, Mapping):
        for (i, j), vec in star.items():
            vec = {k: F(c) for k, c in dict(vec).items() if F(c)}
            if vec:
                out[(i, j)] = vec
        return out
    for i in range(m):
        for j in range(m):
            vec = {k: F(c) for k, c in enumerate(star[i][j]) if F(c)}
            if vec:
                out[(i, j)] = vec
    return out


def make_uvf(f, star=None, v_parity: Sequence[int] | None = None, field: Field | None = None,
             names: Sequence[str] | None = None) -> SuperAlgebra:
    """U(V, f, star) on the basis (1, v_1, ..., v_m).

    ``f`` is the Gram matrix of the form on V, ``star`` the structure constants
    of the product on V (dict ``(i, j) -> {k: c}`` or a dense tensor, 0-based V
    indices), ``v_parity`` the parities of the V basis (default all even).
    """
    F = field or (f.field if isinstance(f, Matrix) else rationals())
    fm = f if isinstance(f, Matrix) else Matrix(F, f)
    m = fm.nrows
    if fm.ncols != m:
        raise FormDegenerate("form matrix must be square")
    par = tuple(v_parity) if v_parity is not None else (0,) * m
    if len(par) != m:
        raise ValueError("v_parity length does not match the form")
    for i in range(m):
        for j in range(m):
            fij, fji = fm[i, j], fm[j, i]
            if par[i] != par[j] and fij:
                raise FormNotSupersymmetric("V0 and V1 must be orthogonal")
            if par[i] == par[j] == 0 and fij - fji:
                raise FormNotSupersymmetric("form must be symmetric on V0")
            if par[i] == par[j] == 1 and fij + fji:
                raise FormNotSupersymmetric("form must be skew-symmetric on V1")
    if m and not determinant(fm):
        raise FormDegenerate("form is degenerate")
    st = _dense_star(star, m, F)
    for (i, j), vec in st.items():
        for k in vec:
            if par[k] != par[i] ^ par[j]:
                raise GradingViolation("star product does not respect the grading")
    zero = F.zero
    for i in range(m):
        for j in range(i, m):
            s = -1 if par[i] * par[j] else 1
            a, b = st.get((i, j), {}), st.get((j, i), {})
            if any(a.get(k, zero) + s * b.get(k, zero) for k in set(a) | set(b)):
                raise StarNotAnticommutative(f"v{i}*v{j} is not superanticommutative")
    for i, j, k in product(range(m), repeat=3):
        lhs = sum((c * fm[l, k] for l, c in st.get((i, j), {}).items()), zero)
        rhs = sum((fm[i, l] * c for l, c in st.get((j, k), {}).items()), zero)
        if lhs - rhs:
            raise StarNotCompatible(f"f(v{i}*v{j}, v{k}) != f(v{i}, v{j}*v{k})")
    table = {(0, 0): {0: F.one}}
    for i in range(m):
        table[(0, i + 1)] = {i + 1: F.one}
        table[(i + 1, 0)] = {i + 1: F.one}
        for j in range(m):
            vec = {k + 1: c for k, c in st.get((i, j), {}).items()}
            if fm[i, j]:
                vec[0] = fm[i, j]
            if vec:
                table[(i + 1, j + 1)] = vec
    nm = tuple(names) if names is not None else ("1",) + tuple(f"v{i + 1}" for i in range(m))
    return SuperAlgebra(F, (0,) + par, table, nm)


def make_jvf(f, v_parity: Sequence[int] | None = None, field: Field | None = None) -> SuperAlgebra:
    """J(V, f) = U(V, f, 0)."""
    return make_uvf(f, None, v_parity, field)


def cross_product_star(field: Field | None = None) -> dict:
    """The cross product on Q^3 with the standard basis, compatible with the dot product."""
    F = field or rationals()
    one = F.one
    return {(0, 1): {2: one}, (1, 0): {2: -one}, (1, 2): {0: one}, (2, 1): {0: -one},
            (2, 0): {1: one}, (0, 2): {1: -one}}


# Grassmann-based families ---------------------------------------------------

def _as_grassmann(v, n: int, F: Field) -> GrassmannElement:
    if isinstance(v, GrassmannElement):
        if v.n != n:
            raise ValueError(f"element lives in Gamma_{v.n}, expected Gamma_{n}")
        return v
    if isinstance(v, str):
        return parse_element(v, n, F)
    return GrassmannElement(n, {(): v}, F)


def grassmann_algebra(n: int, field: Field | None = None) -> SuperAlgebra:
    """Gamma_n on the monomial basis (degree, then lexicographic order)."""
    F = field or rationals()
    basis = monomials(n)
    idx = {m: i for i, m in enumerate(basis)}
    table = {}
    for a, b in product(basis, repeat=2):
        s, m = merge_sign(a, b)
        if m is not None:
            table[(idx[a], idx[b])] = {idx[m]: F(s)}
    return SuperAlgebra(F, tuple(len(m) & 1 for m in basis), table,
                        tuple(format_monomial(m) for m in basis))


def _jgamma_table(n: int, F: Field, A: GrassmannElement | None):
    basis = monomials(n)
    N = len(basis)
    idx = {m: i for i, m in enumerate(basis)}
    one = F.one
    table: dict = {}

    def put(i, j, elem: GrassmannElement, shift: int, sign: int):
        vec = table.setdefault((i, j), {})
        for m, c in elem.terms.items():
            k = idx[m] + shift
            v = vec.get(k, F.zero) + (c if sign > 0 else -c)
            if v:
                vec[k] = v
            else:
                vec.pop(k, None)

    monos = {m: GrassmannElement.monomial(n, m, 1, F) for m in basis}
    for a, b in product(basis, repeat=2):
        ea, eb = monos[a], monos[b]
        ab = gr_mul(ea, eb)
        sb = -1 if len(b) & 1 else 1
        i, j = idx[a], idx[b]
        put(i, j, ab, 0, 1)                                       # a.b = ab
        put(i + N, j, ab, N, sb)                                  # abar.b = (-1)^b bar(ab)
        put(i, j + N, ab, N, 1)                                   # a.bbar = bar(ab)
        put(i + N, j + N, poisson_grassmann(ea, eb), 0, sb)       # abar.bbar = (-1)^b {a,b}
        if A is not None and not A.is_zero():
            put(i + N, j + N, gr_mul(ab, A), 0, sb)               # + (-1)^b abA
    table = {k: v for k, v in table.items() if v}
    parity = tuple(len(m) & 1 for m in basis) + tuple((len(m) + 1) & 1 for m in basis)
    names = tuple(format_monomial(m) for m in basis) + tuple(f"bar({format_monomial(m)})" for m in basis)
    return parity, table, names


def make_j_gamma(n: int, field: Field | None = None) -> SuperAlgebra:
    """The Kantor double J(Gamma_n): monomials, then their barred copies."""
    F = field or rationals()
    parity, table, names = _jgamma_table(n, F, None)
    return SuperAlgebra(F, parity, table, names)


def make_j_gamma_A(n: int, A, field: Field | None = None) -> SuperAlgebra:
    """J(Gamma_n, A) for an even ``A``: the double with ``{abar, bbar} = (-1)^b abA`` added."""
    F = field or (A.field if isinstance(A, GrassmannElement) else rationals())
    A = _as_grassmann(A, n, F)
    if A.parity != 0:
        raise AOdd("A must be even")
    parity, table, names = _jgamma_table(n, F, A)
    return SuperAlgebra(F, parity, table, names)


def _matrix_of_elements(a, n: int, F: Field) -> list[list[GrassmannElement]]:
    if isinstance(a, str):
        a = parse_matrix_spec(a, n, F)
    rows = [[_as_grassmann(v, n, F) for v in row] for row in a]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected an {n}x{n} matrix")
    return rows


def parse_matrix_spec(text: str, n: int, F: Field | None = None) -> list[list[GrassmannElement]]:
    """``"diag:1,1,x1^x2"``, ``"identity"`` or rows ``"1,0;0,1"``."""
    F = F or rationals()
    text = text.strip()
    zero = GrassmannElement(n, {}, F)
    if text in ("identity", "id", "I"):
        return [[GrassmannElement.one(n, F) if i == j else zero for j in range(n)] for i in range(n)]
    if text.startswith("diag:"):
        entries = [parse_element(s, n, F) for s in text[5:].split(",")]
        if len(entries) != n:
            raise ValueError(f"diag needs {n} entries")
        return [[entries[i] if i == j else zero for j in range(n)] for i in range(n)]
    return [[parse_element(s, n, F) for s in row.split(",")] for row in text.split(";")]


def gamma_nd_bracket(f: GrassmannElement, g: GrassmannElement, a) -> GrassmannElement:
    """``[f, g] = (-1)^{p(g)+1} sum_{i,j} (f d_i)(g d_j) a_ij`` with right derivatives."""
    acc = f.zero_like()
    n = f.n
    for gp in g.homogeneous_parts():
        s = 1 if gp.parity else -1
        for i in range(1, n + 1):
            fi = rpartial(i, f)
            if fi.is_zero():
                continue
            for j in range(1, n + 1):
                if a[i - 1][j - 1].is_zero():
                    continue
                acc = acc + gr_mul(gr_mul(fi, rpartial(j, gp)), a[i - 1][j - 1]).scale(s)
    return acc


def make_gamma_nd(n: int, a, field: Field | None = None, validate: bool = True) -> SuperAlgebra:
    """Gamma_n with product ``f * g = fg + [f, g]``, ``[x_i, x_j] = a_ij``."""
    F = field or rationals()
    a = _matrix_of_elements(a, n, F)
    for i in range(n):
        for j in range(n):
            if a[i][j].parity != 0:
                raise NonHomogeneous(f"a[{i + 1}][{j + 1}] must be even")
            if a[i][j] != a[j][i]:
                raise BracketNotPoisson("the matrix (a_ij) must be symmetric")
    G = grassmann_algebra(n, F)
    basis = monomials(n)
    idx = {m: k for k, m in enumerate(basis)}
    monos = [GrassmannElement.monomial(n, m, 1, F) for m in basis]
    btable = {}
    for i, fi in enumerate(monos):
        for j, gj in enumerate(monos):
            br = gamma_nd_bracket(fi, gj, a)
            if not br.is_zero():
                btable[(i, j)] = {idx[m]: c for m, c in br.terms.items()}
    B = SuperAlgebra(F, G.parity, btable, G.names)
    if validate:
        rep = check_poisson_bracket(G, B)
        if not rep.passed or not rep.details["superanticommutative"]:
            raise BracketNotPoisson(
                f"bracket from a fails the Poisson checks ({len(rep.failures)} Leibniz failures, "
                f"superanticommutative={rep.details['superanticommutative']})")
    table = {}
    for key in set(G._table) | set(btable):
        vec = dict(G.product(*key))
        for k, c in btable.get(key, {}).items():
            v = vec.get(k, F.zero) + c
            if v:
                vec[k] = v
            else:
                vec.pop(k, None)
        if vec:
            table[key] = vec
    return SuperAlgebra(F, G.parity, table, G.names)


# selector used by the command line --------------------------------------------

FAMILIES = ("k3", "dt", "uvf", "jgamma", "jgammaA", "gammaND")


def build(family: str, params: Mapping[str, Any], field: Field | None = None) -> SuperAlgebra:
    """Construct a catalog algebra from a family tag and a parameter mapping."""
    p = dict(params)
    if family == "k3":
        return make_k3(p.get("alpha", Fraction(1, 2)), p.get("beta", 0), p.get("gamma", 0), field)
    if family == "dt":
        return make_dt(p.get("t", "t"), p.get("alpha", Fraction(1, 2)), p.get("beta", 0), p.get("gamma", 0), field)
    if family == "jgamma":
        return make_j_gamma(int(p.get("n", 2)), field)
    if family == "jgammaA":
        n = int(p.get("n", 2))
        return make_j_gamma_A(n, p.get("A", "0"), field)
    if family == "gammaND":
        n = int(p.get("n", 2))
        return make_gamma_nd(n, p.get("a", "identity"), field)
    if family == "uvf":
        return make_uvf(p["f"], p.get("star"), p.get("v_parity"), field)
    raise UnknownFamily(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


def random_algebra(dim: int, field: Field, rng, parity: Sequence[int] | None = None,
                   density: float = 1.0) -> SuperAlgebra:
    """A random graded structure tensor (no identities imposed); ``rng`` is a ``random.Random``."""
    if parity is None:
        parity = tuple(rng.randint(0, 1) for _ in range(dim))
    table = {}
    for i in range(dim):
        for j in range(dim):
            vec = {}
            for k in range(dim):
                if parity[k] == parity[i] ^ parity[j] and rng.random() < density:
                    c = field.random(rng)
                    if c:
                        vec[k] = c
            if vec:
                table[(i, j)] = vec
    return SuperAlgebra(field, tuple(parity), table)
