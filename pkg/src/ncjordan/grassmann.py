"""Grassmann superalgebra arithmetic on odd generators x1..xn.

Two derivative conventions coexist here:

* :func:`partial` is the signed deletion ``x_{i1}..x_{ik}..  ->  (-1)^{k-1} (deleted)``,
  i.e. the generator is first moved to the *front*;
* :func:`rpartial` moves the generator to the *back*, which is the derivative
  ``f d_j`` acting on the right.  It is the one compatible with right-acting
  derivations ``(xy)d = (-1)^{p(d)p(y)}(xd)y + x(yd)``.

On a monomial of degree ``m`` they differ by ``(-1)^{m-1}``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import NonHomogeneous, ParityViolation, SizeMismatch
from .fields import Field, rationals

Monomial = tuple  # strictly ascending 1-based generator indices


def monomials(n: int) -> list[Monomial]:
    """All monomials of Gamma_n ordered by degree, then lexicographically."""
    out: list[Monomial] = []
    for k in range(n + 1):
        out.extend(combinations(range(1, n + 1), k))
    return out


def merge_sign(a: Monomial, b: Monomial) -> tuple[int, Monomial | None]:
    """Sign and sorted monomial of the wedge ``a ^ b`` (``None`` when it vanishes)."""
    if set(a) & set(b):
        return 0, None
    inversions = 0
    j = 0
    for x in a:
        # count elements of b smaller than x
        while j < len(b) and b[j] < x:
            j += 1
        inversions += j
    return (-1 if inversions & 1 else 1), tuple(sorted(a + b))


class GrassmannElement:
    """Linear combination of monomials with coefficients in ``field``."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | None = None, field: Field | None = None):
        self.n = n
        self.field = field or rationals()
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if any(b <= a for a, b in zip(mono, mono[1:])):
                sign, sorted_mono = _sort_sign(mono)
                if sorted_mono is None:
                    continue
                c = self.field(c) * sign
                mono = sorted_mono
            else:
                c = self.field(c)
            if mono and not (1 <= mono[0] and mono[-1] <= n):
                raise ValueError(f"generator index out of range in {mono}")
            if c:
                prev = clean.get(mono)
                c = c if prev is None else prev + c
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        self.terms = clean

    # construction ------------------------------------------------------
    @classmethod
    def one(cls, n: int, field: Field | None = None) -> "GrassmannElement":
        return cls(n, {(): 1}, field)

    @classmethod
    def gen(cls, n: int, i: int, field: Field | None = None) -> "GrassmannElement":
        return cls(n, {(i,): 1}, field)

    @classmethod
    def monomial(cls, n: int, mono: Iterable[int], coeff=1, field: Field | None = None) -> "GrassmannElement":
        return cls(n, {tuple(mono): coeff}, field)

    def zero_like(self) -> "GrassmannElement":
        return GrassmannElement(self.n, {}, self.field)

    # structure ----------------------------------------------------------
    @property
    def parity(self):
        ps = {len(m) & 1 for m in self.terms}
        if not ps:
            return 0
        return ps.pop() if len(ps) == 1 else None

    def homogeneous_parts(self) -> list["GrassmannElement"]:
        out = []
        for p in (0, 1):
            t = {m: c for m, c in self.terms.items() if len(m) & 1 == p}
            if t:
                out.append(GrassmannElement(self.n, t, self.field))
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def coords(self, basis: Sequence[Monomial] | None = None) -> tuple:
        basis = basis or monomials(self.n)
        return tuple(self.terms.get(m, self.field.zero) for m in basis)

    def _same(self, other: "GrassmannElement"):
        if self.n != other.n:
            raise SizeMismatch(f"Gamma_{self.n} vs Gamma_{other.n}")

    def __add__(self, other):
        if not isinstance(other, GrassmannElement):
            other = GrassmannElement(self.n, {(): other}, self.field)
        self._same(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, self.field.zero) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return GrassmannElement(self.n, t, self.field)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.n, {m: -c for m, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        if not isinstance(other, GrassmannElement):
            other = GrassmannElement(self.n, {(): other}, self.field)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "GrassmannElement":
        c = self.field(c)
        return GrassmannElement(self.n, {m: c * v for m, v in self.terms.items()}, self.field)

    def __mul__(self, other):
        if isinstance(other, GrassmannElement):
            return gr_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, GrassmannElement):
            return self.n == other.n and (self - other).is_zero()
        if not self.terms:
            return not self.field(other) if other is not None else False
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"GrassmannElement({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def _sort_sign(mono: Sequence[int]) -> tuple[int, Monomial | None]:
    if len(set(mono)) != len(mono):
        return 0, None
    inv = sum(1 for i in range(len(mono)) for j in range(i + 1, len(mono)) if mono[i] > mono[j])
    return (-1 if inv & 1 else 1), tuple(sorted(mono))


def gr_mul(f: GrassmannElement, g: GrassmannElement) -> GrassmannElement:
    """Wedge product."""
    f._same(g)
    acc: dict = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            s, m = merge_sign(a, b)
            if m is None:
                continue
            v = ca * cb if s > 0 else -(ca * cb)
            prev = acc.get(m)
            acc[m] = v if prev is None else prev + v
    return GrassmannElement(f.n, {m: c for m, c in acc.items() if c}, f.field)


def partial(j: int, f: GrassmannElement) -> GrassmannElement:
    """Signed deletion of ``x_j`` after moving it to the front."""
    out = {}
    for m, c in f.terms.items():
        if j in m:
            k = m.index(j)
            out[m[:k] + m[k + 1:]] = -c if k & 1 else c
    return GrassmannElement(f.n, out, f.field)


def rpartial(j: int, f: GrassmannElement) -> GrassmannElement:
    """Right derivative ``f d_j``: move ``x_j`` to the back and delete it."""
    out = {}
    for m, c in f.terms.items():
        if j in m:
            k = m.index(j)
            out[m[:k] + m[k + 1:]] = -c if (len(m) - 1 - k) & 1 else c
    return GrassmannElement(f.n, out, f.field)


def poisson_grassmann(f: GrassmannElement, g: GrassmannElement) -> GrassmannElement:
    """``{f, g} = (-1)^{p(f)} sum_j partial(j, f) partial(j, g)``, bilinear in ``f``."""
    f._same(g)
    acc = f.zero_like()
    for fp in f.homogeneous_parts():
        s = -1 if fp.parity else 1
        for j in range(1, f.n + 1):
            df = partial(j, fp)
            if df.is_zero():
                continue
            acc = acc + gr_mul(df, partial(j, g)).scale(s)
    return acc


# text syntax -------------------------------------------------------------

_MONO_RE = re.compile(r"^x\d+(\^x\d+)*$")


def _split_top(text: str, seps: str) -> list[tuple[str, str]]:
    """Split at top-level separator characters, returning (separator, chunk) pairs."""
    parts, depth, cur, sep = [], 0, [], "+"
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in seps:
            prev = text[:i].rstrip()
            # a sign right after an operator or at the start is unary
            if ch in "+-" and (not prev or prev[-1] in "*/^(+-"):
                cur.append(ch)
                continue
            parts.append((sep, "".join(cur)))
            sep, cur = ch, []
            continue
        cur.append(ch)
    parts.append((sep, "".join(cur)))
    return parts


def parse_element(text: str, n: int, field: Field | None = None) -> GrassmannElement:
    """Parse ``"1 + 2*x1^x2 - x1^x3"``; ``^`` and ``*`` between generators both mean the wedge."""
    field = field or rationals()
    text = text.strip()
    if not text:
        raise ValueError("empty Grassmann element")
    total = GrassmannElement(n, {}, field)
    for sep, chunk in _split_top(text, "+-"):
        chunk = chunk.strip()
        if not chunk:
            if sep == "+" and total.is_zero():
                continue
            raise ValueError(f"malformed Grassmann element {text!r}")
        neg = False
        while chunk[:1] in "+-":
            neg ^= chunk[0] == "-"
            chunk = chunk[1:].strip()
        term = GrassmannElement.one(n, field)
        for fsep, factor in _split_top(chunk, "*"):
            factor = factor.strip()
            if _MONO_RE.match(factor):
                idx = tuple(int(t[1:]) for t in factor.split("^"))
                if any(not 1 <= i <= n for i in idx):
                    raise ValueError(f"generator out of range in {factor!r} (n={n})")
                s, mono = _sort_sign(idx)
                mono_el = GrassmannElement(n, {} if mono is None else {mono: s}, field)
                term = gr_mul(term, mono_el)
            else:
                term = term.scale(field.parse(factor))
        if neg ^ (sep == "-"):
            term = -term
        total = total + term
    return total


def format_monomial(m: Monomial) -> str:
    return "^".join(f"x{i}" for i in m) if m else "1"


def format_element(f: GrassmannElement) -> str:
    if not f.terms:
        return "0"
    pieces = []
    for m in sorted(f.terms, key=lambda m: (len(m), m)):
        c = f.field.format(f.terms[m])
        if not m:
            pieces.append(c)
        elif c == "1":
            pieces.append(format_monomial(m))
        elif c == "-1":
            pieces.append("-" + format_monomial(m))
        else:
            if any(ch in c[1:] for ch in "+- "):
                c = f"({c})"
            pieces.append(f"{c}*{format_monomial(m)}")
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# derivations of the Grassmann product -------------------------------------

@dataclass(frozen=True)
class WnDerivation:
    """Derivation of (Gamma_n, wedge) with ``x_i d = components[i-1]``, acting on the right."""

    components: tuple
    parity: int

    def __post_init__(self):
        for f in self.components:
            p = f.parity
            if p is None:
                raise NonHomogeneous("derivation components must be homogeneous")
            if not f.is_zero() and p != (self.parity + 1) & 1:
                raise ParityViolation(f"component {f} has the wrong parity for a parity-{self.parity} derivation")

    @property
    def n(self) -> int:
        return len(self.components)

    @classmethod
    def from_components(cls, comps: Sequence[GrassmannElement], parity: int | None = None) -> "WnDerivation":
        comps = tuple(comps)
        if parity is None:
            ps = {(c.parity + 1) & 1 for c in comps if not c.is_zero()}
            if len(ps) > 1:
                raise NonHomogeneous("components of mixed parity")
            parity = ps.pop() if ps else 0
        return cls(comps, parity & 1)

    @classmethod
    def zero(cls, n: int, parity: int = 0, field: Field | None = None) -> "WnDerivation":
        return cls(tuple(GrassmannElement(n, {}, field) for _ in range(n)), parity)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "WnDerivation") -> "WnDerivation":
        return WnDerivation(tuple(a + b for a, b in zip(self.components, other.components)), self.parity)

    def scale(self, c) -> "WnDerivation":
        return WnDerivation(tuple(a.scale(c) for a in self.components), self.parity)

    def __call__(self, f: GrassmannElement) -> GrassmannElement:
        return wn_apply(self, f)

    def __eq__(self, other):
        return (isinstance(other, WnDerivation) and self.n == other.n
                and all(a == b for a, b in zip(self.components, other.components)))

    __hash__ = None


def wn_apply(d: WnDerivation, f: GrassmannElement) -> GrassmannElement:
    """``(f)d = sum_i (f d_i) f_i`` with right derivatives."""
    if f.n != d.n:
        raise SizeMismatch("derivation and element live in different Grassmann algebras")
    acc = f.zero_like()
    for i, fi in enumerate(d.components, start=1):
        if fi.is_zero():
            continue
        acc = acc + gr_mul(rpartial(i, f), fi)
    return acc


def wn_is_derivation(d: WnDerivation) -> bool:
    """Check ``(ab)d = (-1)^{p(d)p(b)} (ad) b + a (bd)`` on all monomial pairs."""
    n = d.n
    field = d.components[0].field if n else rationals()
    monos = [GrassmannElement.monomial(n, m, 1, field) for m in monomials(n)]
    images = [wn_apply(d, m) for m in monos]
    for a, ad in zip(monos, images):
        for b, bd in zip(monos, images):
            s = -1 if d.parity * b.parity else 1
            lhs = wn_apply(d, gr_mul(a, b))
            rhs = gr_mul(ad, b).scale(s) + gr_mul(a, bd)
            if lhs != rhs:
                return False
    return True


def is_hn(d: WnDerivation) -> bool:
    """Hamiltonian condition ``f_i d_j + f_j d_i = 0`` for all ``i, j`` (right derivatives)."""
    n = d.n
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if not (rpartial(j, d.components[i - 1]) + rpartial(i, d.components[j - 1])).is_zero():
                return False
    return True


def hn_from_potential(f: GrassmannElement) -> WnDerivation:
    """The derivation with ``f_i = f d_i`` for homogeneous ``f``; its parity is ``p(f)``."""
    p = f.parity
    if p is None:
        raise NonHomogeneous("potential must be homogeneous")
    return WnDerivation(tuple(rpartial(i, f) for i in range(1, f.n + 1)), p)


def preserves_bracket(d: WnDerivation, bracket=poisson_grassmann) -> bool:
    """``{a, b}d = (-1)^{p(d)p(b)} {ad, b} + {a, bd}`` on all monomial pairs."""
    n = d.n
    field = d.components[0].field if n else rationals()
    monos = [GrassmannElement.monomial(n, m, 1, field) for m in monomials(n)]
    images = [wn_apply(d, m) for m in monos]
    for a, ad in zip(monos, images):
        for b, bd in zip(monos, images):
            s = -1 if d.parity * b.parity else 1
            lhs = wn_apply(d, bracket(a, b))
            rhs = bracket(ad, b).scale(s) + bracket(a, bd)
            if lhs != rhs:
                return False
    return True


def wn_basis(n: int, parity: int, field: Field | None = None) -> list[WnDerivation]:
    """Monomial basis of the parity-``parity`` part of W_n: ``x_i -> m`` with ``|m| = parity + 1 mod 2``."""
    field = field or rationals()
    out = []
    for i in range(n):
        for m in monomials(n):
            if len(m) & 1 == (parity + 1) & 1:
                comps = [GrassmannElement(n, {}, field) for _ in range(n)]
                comps[i] = GrassmannElement.monomial(n, m, 1, field)
                out.append(WnDerivation(tuple(comps), parity))
    return out


def wn_from_vector(n: int, parity: int, vec: Sequence, field: Field | None = None) -> WnDerivation:
    """Inverse of the coordinates used by :func:`wn_basis`."""
    acc = WnDerivation.zero(n, parity, field)
    for c, b in zip(vec, wn_basis(n, parity, field)):
        if c:
            acc = acc + b.scale(c)
    return acc


def operator_matrix(fn, n: int, field: Field | None = None) -> list[list]:
    """Matrix (rows = images of monomials) of a linear map on Gamma_n."""
    field = field or rationals()
    basis = monomials(n)
    return [list(fn(GrassmannElement.monomial(n, m, 1, field)).coords(basis)) for m in basis]
