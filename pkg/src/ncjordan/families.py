"""Parametric subalgebra and automorphism families of K3 and D_t.

Every subalgebra item is a list of shapes.  A shape is a list of vectors whose
coefficients are functions of free parameters and of the algebra data
(``alpha``, ``t`` and a square root of -1).  Shapes are checked for closure over
rational function fields and instantiated over GF(p) to match oracle output.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Iterable, Sequence

from .catalog import make_dt, make_k3
from .errors import UnknownFamily
from .fields import Field, function_field, gaussian_rationals, rationals
from .linalg import Matrix, row_space_basis
from .morphisms import ParametricMap, SubalgebraWitness, is_automorphism, is_subalgebra
from .superalgebra import LinearMap, Report, SuperAlgebra

HALF = Fraction(1, 2)


@dataclass
class Ctx:
    """Algebra data visible to shape builders."""

    F: Field
    alpha: Any
    t: Any
    i: Any = None


@dataclass
class Shape:
    """Vectors depending on ``params``; ``nonzero`` params must be invertible."""

    params: tuple[str, ...]
    build: Callable[[Sequence, Ctx], list[dict]]
    nonzero: tuple[str, ...] = ()
    needs_i: bool = False
    # optional override for finite-field instantiation: yields parameter tuples
    instances: Callable[[Ctx], Iterable[tuple]] | None = None
    # optional generic parametrization for the symbolic check
    symbolic_params: tuple[str, ...] | None = None
    symbolic_build: Callable[[Sequence, Ctx], list[dict]] | None = None
    label: str = ""


# algebra kinds: "K3" = K3(alpha,0,0), "K3h" = K3(1/2,1/2,0), "D" = D_t(alpha,0,0), "Dh" = D_t(1/2,1/2,0)
@dataclass
class FamilyItem:
    item: int | str
    kind: str
    dim: int
    alpha: str  # "generic" (alpha != 1/2) | "half" | "n/a"
    t: str  # "generic" | "-1" | "1" | "ne1" | "any" | "n/a"
    shapes: list[Shape] = dc_field(default_factory=list)
    # False for addenda: closed families found by exhaustive search beyond the base list
    listed: bool = True

    @property
    def key(self) -> tuple[str, int | str]:
        return (self.kind, self.item)

    def applies(self, alpha, t, F: Field) -> bool:
        """Whether the item's hypotheses hold for concrete ``alpha``, ``t`` in ``F``."""
        if self.kind in ("K3", "D"):
            is_half = not (F(alpha) - F(HALF))
            if (self.alpha == "half") != is_half:
                return False
        if self.kind in ("D", "Dh"):
            tv = F(t)
            if self.t == "-1" and (tv + F.one):
                return False
            if self.t == "1" and (tv - F.one):
                return False
            if self.t == "generic" and not (tv + F.one):
                return False
            if self.t == "ne1" and not (tv - F.one):
                return False
        return True


def _v(**coeffs) -> dict:
    return coeffs


def _one(build) -> Shape:
    return Shape((), lambda g, c: build(c))


def _ei(i: int) -> str:
    return f"e{i}"


# -- K3(alpha) and K3^{1/2} -------------------------------------------------------------------

def _k3_items() -> list[FamilyItem]:
    return [
        FamilyItem(1, "K3", 1, "half", "n/a", [
            Shape(("g1", "g2", "g3"), lambda g, c: [_v(e=g[0], z=g[1], w=g[2])])]),
        FamilyItem(2, "K3", 1, "generic", "n/a", [
            Shape(("g1", "g2"), lambda g, c: [_v(e=g[0], z=g[1])]),
            Shape(("g1", "g2"), lambda g, c: [_v(e=g[0], w=g[1])])]),
        FamilyItem(3, "K3", 2, "half", "n/a", [
            Shape(("g1", "g2"), lambda g, c: [_v(e=1), _v(z=g[0], w=g[1])])]),
        FamilyItem(4, "K3", 2, "generic", "n/a", [
            _one(lambda c: [_v(e=1), _v(z=1)]),
            _one(lambda c: [_v(e=1), _v(w=1)])]),
        FamilyItem(1, "K3h", 1, "n/a", "n/a", [
            Shape(("g1", "g2"), lambda g, c: [_v(e=g[0], w=g[1])])]),
        FamilyItem(2, "K3h", 2, "n/a", "n/a", [
            _one(lambda c: [_v(e=1), _v(w=1)])]),
    ]


# -- D_t(alpha) ------------------------------------------------------------------

def _lines_ei(odd: str) -> list[Shape]:
    return [Shape(("g1", "g2"), (lambda i: lambda g, c: [{_ei(i): g[0], odd: g[1]}])(i)) for i in (1, 2)]


def _pairs_common() -> list[Shape]:
    out = [_one(lambda c: [_v(e1=1), _v(e2=1)])]
    for i in (1, 2):
        for odd in ("x", "y"):
            out.append(_one((lambda i, odd: lambda c: [{_ei(i): 1}, {odd: 1}])(i, odd)))
    return out


def _exotic(g, c):
    g1, g2, g3 = g
    return [_v(e1=g1, e2=g2, x=g3, y=g1 * g2 / (g3 * (4 * c.alpha - 2)))]


def _dt_items() -> list[FamilyItem]:
    item1 = [_one(lambda c: [_v(e1=1, e2=1)])] + _lines_ei("x") + _lines_ei("y")
    return [
        FamilyItem(1, "D", 1, "generic", "generic", item1),
        FamilyItem(2, "D", 1, "half", "any", [
            _one(lambda c: [_v(e1=1, e2=1)]),
            Shape(("g1", "g2"), lambda g, c: [_v(x=g[0], y=g[1])]),
            Shape(("g1", "g2"), lambda g, c: [_v(e1=1, x=g[0], y=g[1])]),
            Shape(("g1", "g2"), lambda g, c: [_v(e2=1, x=g[0], y=g[1])]),
        ]),
        FamilyItem(3, "D", 1, "generic", "-1", item1 + [
            Shape(("g1", "g2", "g3"), _exotic, nonzero=("g1", "g2", "g3"), label="exotic line")]),
        FamilyItem(4, "D", 2, "generic", "generic", _pairs_common() + [
            _one(lambda c: [_v(e1=1, e2=1), _v(x=1)]),
            _one(lambda c: [_v(e1=1, e2=1), _v(y=1)]),
            Shape(("g",), lambda g, c: [_v(e1=1, x=g[0]), _v(e2=1, x=-g[0])]),
            Shape(("g",), lambda g, c: [_v(e1=1, y=g[0]), _v(e2=1, y=-g[0])]),
        ]),
        FamilyItem(5, "D", 2, "half", "generic", _pairs_common() + [
            _one(lambda c: [_v(e1=1, e2=1), _v(x=1)]),
            _one(lambda c: [_v(e1=1, e2=1), _v(y=1)]),
            Shape(("g1", "g2"), lambda g, c: [_v(e1=1, x=g[0], y=g[1]), _v(e2=1, x=-g[0], y=-g[1])]),
        ]),
        FamilyItem(6, "D", 2, "generic", "-1", _pairs_common() + [
            Shape(("g",), lambda g, c: [_v(e1=1, y=g[0]), _v(e2=1, y=-g[0])]),
            Shape(("g",), lambda g, c: [_v(e1=1, x=g[0]), _v(e2=1, x=-g[0])]),
            Shape(("g1", "g2"), lambda g, c: [_v(e1=1, e2=1), _v(x=g[0], y=g[1])]),
        ]),
        FamilyItem(7, "D", 3, "generic", "any", [
            _one(lambda c: [_v(e1=1), _v(e2=1), _v(x=1)]),
            _one(lambda c: [_v(e1=1), _v(e2=1), _v(y=1)]),
        ]),
        FamilyItem(8, "D", 3, "half", "ne1", [
            Shape(("g1", "g2"), lambda g, c: [_v(e1=1), _v(e2=1), _v(x=g[0], y=g[1])])]),
        FamilyItem(9, "D", 3, "half", "1", [
            Shape(("g1", "g2"), lambda g, c: [_v(e1=1, e2=1), _v(e2=g[0], x=1), _v(e2=g[1], y=1)]),
            Shape(("g1", "g2"), lambda g, c: [_v(e1=1), _v(e2=1), _v(x=g[0], y=g[1])]),
        ]),
    ]


# -- D_t^{1/2} -------------------------------------------------------------------

def _sqrt_instances(c: Ctx):
    for g1, g2, g3 in product(c.F.elements(), repeat=3):
        for s in _all_roots(c.F, -g1 * g2):
            yield (g1, g2, g3, s)


def _all_roots(F: Field, v) -> list:
    return [r for r in F.elements() if not (r * r - v)]


def _dh_items() -> list[FamilyItem]:
    sqrt_line = Shape(
        ("g1", "g2", "g3", "s"),
        lambda g, c: [_v(e1=g[0], e2=g[1], x=g[3], y=g[2])],
        instances=_sqrt_instances,
        # generic parametrization g1 = -s^2/g2 so that sqrt(-g1 g2) = s
        symbolic_params=("s", "g2", "g3"),
        symbolic_build=lambda g, c: [_v(e1=-g[0] * g[0] / g[1], e2=g[1], x=g[0], y=g[2])],
        label="sqrt line",
    )
    pairs = [_one((lambda i: lambda c: [{_ei(i): 1}, _v(y=1)])(i)) for i in (1, 2)] + [
        Shape(("g",), lambda g, c: [_v(e1=1, y=g[0]), _v(e2=1, y=-g[0])])]
    triple_i = [
        Shape(("g",), (lambda sgn: lambda g, c: [_v(e1=1, e2=1), _v(e2=g[0], x=1), _v(e2=sgn * 2 * c.i, y=1)])(sgn),
              needs_i=True, label=f"{'+' if sgn > 0 else '-'}2i")
        for sgn in (1, -1)
    ]
    return [
        FamilyItem(1, "Dh", 1, "n/a", "generic", [
            _one(lambda c: [_v(e1=1, e2=1)]),
            Shape(("g1", "g2"), lambda g, c: [_v(e1=g[0], y=g[1])]),
            Shape(("g1", "g2"), lambda g, c: [_v(e2=g[0], y=g[1])])]),
        FamilyItem(2, "Dh", 1, "n/a", "-1", [_one(lambda c: [_v(e1=1, e2=1)]), sqrt_line]),
        FamilyItem(3, "Dh", 2, "n/a", "generic", pairs),
        FamilyItem(4, "Dh", 2, "n/a", "-1", pairs + [
            Shape(("g1", "g2"), lambda g, c: [_v(e1=1, e2=1), _v(x=g[0], y=g[1])])]),
        FamilyItem(5, "Dh", 3, "n/a", "generic", [_one(lambda c: [_v(e1=1), _v(e2=1), _v(y=1)])]),
        FamilyItem(6, "Dh", 3, "n/a", "-1", [_one(lambda c: [_v(e1=1), _v(e2=1), _v(y=1)])] + triple_i),
    ]


def _mixed_pair(g, c):
    return [_v(e1=1, x=g[0], y=g[1]), _v(e2=1, x=-g[0], y=-g[1])]


def _addenda() -> list[FamilyItem]:
    """Closed families beyond the base list (item labels ``A1``, ``A2``, ...)."""
    half_lines = [Shape(("g1", "g2"), (lambda i: lambda g, c: [{_ei(i): 1}, _v(x=g[0], y=g[1])])(i))
                  for i in (1, 2)]
    half_lines.append(Shape(("g1", "g2"), lambda g, c: [_v(e1=1, e2=1), _v(x=g[0], y=g[1])]))
    return [
        # alpha = 1/2: every odd line pairs with e1, e2 and e1 + e2
        FamilyItem("A1", "D", 2, "half", "any", half_lines, listed=False),
        FamilyItem("A2", "D", 2, "generic", "-1", [Shape(("g1", "g2"), _mixed_pair)], listed=False),
        FamilyItem("A3", "D", 3, "generic", "-1", [
            Shape(("g",), lambda g, c: [_v(e1=1, y=g[0]), _v(e2=1, y=-g[0]),
                                        _v(x=1, y=2 * g[0] * g[0] / (2 * c.alpha - 1))])], listed=False),
        # the alpha = 1/2 pair list also holds at t = -1
        FamilyItem("A4", "D", 2, "half", "-1", SUBALGEBRA_LISTED[("D", 5)].shapes, listed=False),
        FamilyItem("A1", "Dh", 2, "n/a", "generic", [
            _one(lambda c: [_v(e1=1, e2=1), _v(y=1)])], listed=False),
        FamilyItem("A2", "Dh", 2, "n/a", "-1", [Shape(("g1", "g2"), _mixed_pair)], listed=False),
    ]


SUBALGEBRA_LISTED: dict[tuple, FamilyItem] = {
    it.key: it for it in _k3_items() + _dt_items() + _dh_items()
}
SUBALGEBRA_ADDENDA: dict[tuple, FamilyItem] = {it.key: it for it in _addenda()}
SUBALGEBRA_FAMILIES: dict[tuple, FamilyItem] = {**SUBALGEBRA_LISTED, **SUBALGEBRA_ADDENDA}


def family_item(kind: str, item: int | str) -> FamilyItem:
    try:
        return SUBALGEBRA_FAMILIES[(kind, item)]
    except KeyError:
        raise UnknownFamily(f"no family registered for {kind} item {item}") from None


def build_algebra(kind: str, alpha, t, F: Field) -> SuperAlgebra:
    if kind == "K3":
        return make_k3(alpha, 0, 0, F)
    if kind == "K3h":
        return make_k3(HALF, HALF, 0, F)
    if kind == "D":
        return make_dt(t, alpha, 0, 0, F)
    if kind == "Dh":
        return make_dt(t, HALF, HALF, 0, F)
    raise UnknownFamily(kind)


def _vectors(A: SuperAlgebra, vecs: list[dict]) -> list[tuple]:
    F = A.field
    return [tuple(F(v.get(name, 0)) for name in A.names) for v in vecs]


def _symbolic_setup(item: FamilyItem, shape: Shape):
    params = shape.symbolic_params if shape.symbolic_params is not None else shape.params
    names = list(params)
    if item.kind in ("K3", "D") and item.alpha == "generic":
        names.append("alpha")
    if item.kind in ("D", "Dh") and item.t in ("generic", "ne1", "any"):
        names.append("t")
    base = gaussian_rationals() if shape.needs_i else rationals()
    F = function_field(*names, base=base) if names else base
    alpha = F.gen("alpha") if "alpha" in names else F(HALF)
    if item.t in ("-1", "1"):
        t = F(int(item.t))
    elif "t" in names:
        t = F.gen("t")
    else:
        t = F(1)
    i = F.imaginary_unit() if shape.needs_i else None
    return F, Ctx(F, alpha, t, i), [F.gen(p) for p in params]


def verify_family_closure(kind: str, item: int | str) -> Report:
    """Closure of every shape of one item with all parameters symbolic."""
    fam = family_item(kind, item)
    failures = []
    for k, shape in enumerate(fam.shapes):
        F, ctx, gens = _symbolic_setup(fam, shape)
        A = build_algebra(fam.kind, ctx.alpha, ctx.t, F)
        build = shape.symbolic_build or shape.build
        W = SubalgebraWitness(A, row_space_basis(F, _vectors(A, build(gens, ctx))))
        if W.dim != fam.dim:
            failures.append((k, f"generic dimension {W.dim} instead of {fam.dim}"))
        elif not is_subalgebra(A, W):
            failures.append((k, "not closed"))
    return Report(f"{kind} item {item}", not failures, failures,
                  {"shapes": len(fam.shapes), "dim": fam.dim})


def items_for(kind: str, addenda: bool = True) -> list[FamilyItem]:
    pool = SUBALGEBRA_FAMILIES if addenda else SUBALGEBRA_LISTED
    return [it for it in pool.values() if it.kind == kind]


def family_instances(A: SuperAlgebra, kind: str, alpha, t, dim: int,
                     addenda: bool = True) -> dict[tuple, list[tuple]]:
    """Echelon keys of every finite-field instance of the applicable items of dimension ``dim``."""
    F = A.field
    i = F.imaginary_unit() if F.sqrt(F(-1)) is not None else None
    ctx = Ctx(F, F(alpha) if alpha is not None else None, F(t) if t is not None else None, i)
    out: dict[tuple, list[tuple[int, int]]] = {}
    for fam in items_for(kind, addenda):
        if fam.dim != dim or not fam.applies(alpha, t, F):
            continue
        for shape in fam.shapes:
            if shape.needs_i and i is None:
                continue
            if shape.instances is not None:
                values = shape.instances(ctx)
            else:
                values = product(list(F.elements()), repeat=len(shape.params))
            for vals in values:
                named = dict(zip(shape.params, vals))
                if any(not named[p] for p in shape.nonzero):
                    continue
                W = SubalgebraWitness.from_vectors(A, _vectors(A, shape.build(vals, ctx)))
                if W.dim != dim:
                    continue
                out.setdefault(W.key(), []).append(fam.key)
    return out


def match_subalgebras(kind: str, alpha, t, F: Field, dim: int) -> Report:
    """Enumerate ``dim``-dimensional subalgebras over GF(p) and match each with a family instance."""
    from .morphisms import enumerate_subalgebras
    A = build_algebra(kind, alpha, t, F)
    found = enumerate_subalgebras(A, dim)
    inst = family_instances(A, kind, alpha, t, dim)
    literal = family_instances(A, kind, alpha, t, dim, addenda=False)
    keys = {W.key() for W in found}
    unmatched = [W for W in found if W.key() not in inst]
    failures = [("unmatched", W.describe()) for W in unmatched]
    failures += [("family instance not closed", k) for k in inst if k not in keys]
    only_addenda = [W for W in found if W.key() not in literal]
    used = sorted({fk for W in only_addenda for fk in inst.get(W.key(), [])}, key=str)
    return Report(f"{kind} alpha={alpha} t={t} dim={dim}", not failures, failures,
                  {"found": len(found), "instances": len(inst),
                   "graded": sum(W.is_graded() for W in found),
                   "outside_listed": [W.describe() for W in only_addenda],
                   "addenda_used": used})


# -- automorphism families ------------------------------------------------------------------

@dataclass
class AutFamily:
    name: str
    kind: str
    alpha: str
    params: tuple[str, ...]
    images: Callable[[Sequence, "_AutCtx"], list[dict]]
    constraints: dict = dc_field(default_factory=dict)
    signs: tuple[int, ...] = (1,)
    # "any" or the tuple of special t values where the family exists
    t_values: str | tuple[int, ...] = "any"
    listed: bool = True


@dataclass
class _AutCtx(Ctx):
    sign: int = 1
    even: tuple = ()


def _sl2(names):
    a, b = names

    def images(g, c):
        g1, g2, g3, g4 = g
        out = [{n: 1} for n in c.even]
        return out + [{a: g1, b: g2}, {a: g3, b: g4}]
    return images


def _swap_scalar(c: _AutCtx):
    # y -> c y with c^2 = -t: c = +-1 at t = -1 and c = +-i at t = 1
    return c.sign * (c.i if c.t == c.F.one else c.F.one)


AUT_FAMILIES: dict[str, AutFamily] = {
    "k3-torus": AutFamily("k3-torus", "K3", "generic", ("g",),
                          lambda g, c: [_v(e=1), _v(z=g[0]), _v(w=1 / g[0])]),
    "k3-sl2": AutFamily("k3-sl2", "K3", "half", ("g1", "g2", "g3", "g4"), _sl2(("z", "w")),
                        {"g4": "(1 + g2*g3)/g1"}),
    "k3h-shear": AutFamily("k3h-shear", "K3h", "n/a", ("k",),
                           lambda g, c: [_v(e=1), _v(z=c.sign, w=g[0]), _v(w=c.sign)], signs=(1, -1)),
    "dt-torus": AutFamily("dt-torus", "D", "generic", ("g",),
                          lambda g, c: [_v(e1=1), _v(e2=1), _v(x=g[0]), _v(y=1 / g[0])]),
    "dt-sl2": AutFamily("dt-sl2", "D", "half", ("g1", "g2", "g3", "g4"), _sl2(("x", "y")),
                        {"g4": "(1 + g2*g3)/g1"}),
    "dth-shear": AutFamily("dth-shear", "Dh", "n/a", ("k",),
                           lambda g, c: [_v(e1=1), _v(e2=1), _v(x=c.sign, y=g[0]), _v(y=c.sign)],
                           signs=(1, -1)),
    # addenda: at t = 1 and t = -1 the idempotents e1, e2 can be exchanged
    "dt-swap": AutFamily("dt-swap", "D", "generic", ("g",),
                         lambda g, c: [_v(e2=1), _v(e1=1), _v(y=g[0]), _v(x=-c.t / g[0])],
                         t_values=(1, -1), listed=False),
    "dt-sl2-swap": AutFamily("dt-sl2-swap", "D", "half", ("g1", "g2", "g3", "g4"),
                             lambda g, c: [_v(e2=1), _v(e1=1), _v(x=-c.t * g[1], y=g[0]),
                                           _v(x=-c.t * g[3], y=g[2])],
                             {"g4": "(1 + g2*g3)/g1"}, t_values=(1, -1), listed=False),
    "dth-swap": AutFamily("dth-swap", "Dh", "n/a", ("k",),
                          lambda g, c: [_v(e2=1), _v(e1=1), _v(x=-_swap_scalar(c), y=g[0]),
                                        _v(y=_swap_scalar(c))],
                          signs=(1, -1), t_values=(1, -1), listed=False),
}


def aut_family(name: str) -> AutFamily:
    try:
        return AUT_FAMILIES[name]
    except KeyError:
        raise UnknownFamily(f"unknown automorphism family {name!r}") from None


def _aut_matrix(A: SuperAlgebra, fam: AutFamily, g, ctx: _AutCtx) -> Matrix:
    rows = _vectors(A, fam.images(g, ctx))
    return Matrix(A.field, [list(r) for r in rows], A.dim)


def _even_names(A: SuperAlgebra) -> tuple:
    return tuple(n for n, p in zip(A.names, A.parity) if p == 0)


def verify_aut_family(name: str) -> Report:
    """The family is an automorphism for symbolic parameters (and symbolic alpha, t when free)."""
    fam = aut_family(name)
    failures = []
    t_cases = [None] if fam.t_values == "any" else list(fam.t_values)
    for tv in t_cases:
        for sign in fam.signs:
            names = list(fam.params)
            if fam.kind in ("K3", "D") and fam.alpha == "generic":
                names.append("alpha")
            if fam.kind in ("D", "Dh") and tv is None:
                names.append("t")
            needs_i = fam.name == "dth-swap" and tv == 1
            F = function_field(*names, base=gaussian_rationals() if needs_i else rationals())
            alpha = F.gen("alpha") if "alpha" in names else F(HALF)
            t = F.gen("t") if "t" in names else F(tv if tv is not None else 1)
            A = build_algebra(fam.kind, alpha, t, F)
            ctx = _AutCtx(F, alpha, t, F.imaginary_unit() if needs_i else None, sign, _even_names(A))
            phi = ParametricMap(_aut_matrix(A, fam, [F.gen(p) for p in fam.params], ctx), fam.constraints)
            rep = is_automorphism(A, phi)
            if not rep.passed:
                failures.append(((tv, sign), rep.failures[:3]))
    return Report(f"automorphism family {name}", not failures, failures)


def aut_family_instances(A: SuperAlgebra, kind: str, alpha, t=None, addenda: bool = True) -> dict[tuple, str]:
    """All finite-field instances of the applicable automorphism families, keyed by matrix."""
    F = A.field
    out: dict[tuple, str] = {}
    is_half = not (F(alpha) - F(HALF)) if alpha is not None else None
    tv = F(t) if t is not None else None
    root = F.sqrt(F(-1))
    for fam in AUT_FAMILIES.values():
        if fam.kind != kind or (not fam.listed and not addenda):
            continue
        if fam.alpha == "generic" and is_half or fam.alpha == "half" and not is_half:
            continue
        if fam.t_values != "any" and (tv is None or all(tv - F(v) for v in fam.t_values)):
            continue
        if fam.name == "dth-swap" and tv == F.one and root is None:
            continue
        for sign in fam.signs:
            ctx = _AutCtx(F, None, tv, root, sign, _even_names(A))
            for vals in product(list(F.elements()), repeat=len(fam.params)):
                named = dict(zip(fam.params, vals))
                if "g4" in fam.constraints:
                    # the whole of SL2, including the g1 = 0 chart the substitution misses
                    if named["g1"] * named["g4"] - named["g2"] * named["g3"] != F.one:
                        continue
                elif fam.params == ("g",) and not named["g"]:
                    continue
                m = _aut_matrix(A, fam, vals, ctx)
                out.setdefault(_matrix_key(m), fam.name)
    return out


def _matrix_key(m: Matrix) -> tuple:
    p = m.field.modulus
    return tuple(tuple(int(x) % p for x in r) for r in m.rows)


def match_automorphisms(kind: str, alpha, t, F: Field) -> Report:
    """Exhaustive automorphisms over GF(p) against the family instances."""
    from .morphisms import enumerate_automorphisms
    A = build_algebra(kind, alpha, t, F)
    found = enumerate_automorphisms(A)
    inst = aut_family_instances(A, kind, alpha, t)
    literal = aut_family_instances(A, kind, alpha, t, addenda=False)
    keys = {_matrix_key(phi.matrix) for phi in found}
    failures = [("unmatched", k) for k in sorted(keys - set(inst))]
    failures += [("family instance not an automorphism", k) for k in sorted(set(inst) - keys)]
    return Report(f"automorphisms of {kind} alpha={alpha} t={t}", not failures, failures,
                  {"found": len(found), "instances": len(inst),
                   "outside_listed": len(keys - set(literal)),
                   "addenda_used": sorted({inst[k] for k in keys - set(literal) if k in inst})})
