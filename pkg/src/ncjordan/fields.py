"""Exact coefficient fields.

Four kinds of field are supported, all backed by sympy's polynomial domains:

* ``Q``        the rationals (gmpy2 ``mpq`` elements when available),
* ``GF``       a prime field ``GF(p)``,
* ``Qi``       the Gaussian rationals ``Q(i)``,
* ``ratfunc``  rational functions in named variables over one of the above,
  kept as reduced fractions with a graded-lex monomial order.

Field elements are the raw sympy domain elements; a :class:`Field` is the
descriptor that knows how to build, parse, print and specialize them.  Rank
computations over a function field describe *generic* parameter values;
callers interested in a special value must :meth:`Field.substitute` first.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Mapping

import sympy
from sympy import GF, QQ
from sympy.polys.domains.algebraicfield import AlgebraicField
from sympy.polys.domains.modularinteger import ModularInteger
from sympy.polys.fields import FracElement
from sympy.polys.polyclasses import ANP
from sympy.polys.orderings import grlex

from .errors import (
    DivisionByZero,
    FieldMismatch,
    PoleAtPoint,
    UnboundVariable,
)

FieldValue = Any  # a sympy domain element belonging to some Field

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


class Field:
    """Descriptor for an exact field.  Instances are interned; compare with ``==``."""

    def __init__(self, kind: str, domain, modulus: int = 0,
                 variables: tuple[str, ...] = (), base: "Field | None" = None):
        self.kind = kind
        self.domain = domain
        self.modulus = modulus
        self.variables = variables
        self.base = base
        self._symbols = {name: sympy.Symbol(name) for name in variables}
        self.zero = domain.zero
        self.one = domain.one

    # identity -----------------------------------------------------------
    def _key(self):
        return (self.kind, self.modulus, self.variables,
                self.base._key() if self.base is not None else None)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Field({self.name})"

    @property
    def name(self) -> str:
        if self.kind == "Q":
            return "Q"
        if self.kind == "Qi":
            return "Q(i)"
        if self.kind == "GF":
            return f"GF({self.modulus})"
        return f"{self.base.name}({','.join(self.variables)})"

    @property
    def characteristic(self) -> int:
        if self.kind == "ratfunc":
            return self.base.characteristic
        return self.modulus

    @property
    def is_finite(self) -> bool:
        return self.kind == "GF"

    # membership and conversion -------------------------------------------
    def contains(self, v) -> bool:
        if self.kind == "Q":
            return QQ.of_type(v)
        if self.kind == "GF":
            return self.domain.of_type(v)
        if self.kind == "Qi":
            return isinstance(v, self.domain.dtype) and list(v.mod) == list(self.domain.mod.to_list())
        return isinstance(v, FracElement) and v.field == self.domain.field

    def __call__(self, value) -> FieldValue:
        """Convert ``value`` (int, Fraction, str literal, sympy expression,
        base-field element or element of this field) into this field."""
        if self.contains(value):
            return value
        if isinstance(value, bool):
            raise FieldMismatch("booleans are not field elements")
        if isinstance(value, int):
            return self.domain(value) if self.kind != "GF" else self.domain(value % self.modulus)
        if isinstance(value, Fraction):
            return self._from_fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        if QQ.of_type(value):
            return self._from_fraction(Fraction(int(value.numerator), int(value.denominator)))
        if self.kind == "ratfunc" and self.base.contains(value):
            return self._from_base(value)
        if isinstance(value, sympy.Basic):
            return self._from_sympy(value)
        src = field_of(value)
        if src is not None and src.kind == "GF" and self.characteristic == src.modulus:
            return self(int(value))
        raise FieldMismatch(f"cannot convert {value!r} into {self.name}")

    def _from_fraction(self, q: Fraction):
        if self.kind == "GF":
            den = q.denominator % self.modulus
            if den == 0:
                raise DivisionByZero(f"{q} has no image in {self.name}")
            return self.domain(q.numerator * pow(den, -1, self.modulus))
        if self.kind == "ratfunc":
            return self._from_base(self.base._from_fraction(q))
        return self.domain.from_sympy(sympy.Rational(q.numerator, q.denominator))

    def _from_base(self, c):
        return self.domain.field.ground_new(c)

    def _from_sympy(self, expr):
        free = {str(s) for s in expr.free_symbols}
        unknown = free - set(self.variables)
        if unknown:
            raise FieldMismatch(f"variables {sorted(unknown)} not declared in {self.name}")
        if self.kind == "GF":
            if not expr.is_Rational:
                raise FieldMismatch(f"{expr} is not a rational literal")
            return self._from_fraction(Fraction(int(expr.p), int(expr.q)))
        if self.kind == "Q" and not expr.is_Rational:
            raise FieldMismatch(f"{expr} is not rational")
        if self.kind == "ratfunc" and self.base.kind == "GF":
            num, den = sympy.fraction(sympy.together(expr))
            return self._poly_from_sympy(num) / self._poly_from_sympy(den)
        try:
            return self.domain.from_sympy(expr)
        except Exception as exc:  # sympy raises CoercionFailed
            raise FieldMismatch(f"cannot coerce {expr} into {self.name}") from exc

    def _poly_from_sympy(self, expr):
        poly = sympy.Poly(sympy.expand(expr), *[self._symbols[v] for v in self.variables])
        out = self.zero
        for monom, coeff in poly.terms():
            term = self.base._from_sympy(coeff)
            term = self._from_base(term)
            for name, e in zip(self.variables, monom):
                if e:
                    term = term * self.gen(name) ** e
            out = out + term
        return out

    def parse(self, text: str) -> FieldValue:
        """Parse a coefficient literal such as ``"3"``, ``"-1/2"`` or ``"(4*a-2)/(t+1)"``."""
        text = text.strip()
        if not text:
            raise ValueError("empty coefficient literal")
        try:
            return self._from_fraction(Fraction(text))
        except ValueError:
            pass
        local = dict(self._symbols)
        if self.kind == "Qi" or (self.kind == "ratfunc" and self.base.kind == "Qi"):
            local.setdefault("i", sympy.I)
            local.setdefault("I", sympy.I)
        try:
            expr = sympy.sympify(text, locals=local, rational=True)
        except (sympy.SympifyError, SyntaxError, TypeError) as exc:
            raise ValueError(f"malformed coefficient literal {text!r}") from exc
        if self.kind == "GF":
            expr = sympy.nsimplify(expr)
        return self._from_sympy(expr)

    def format(self, v) -> str:
        """Deterministic text form that :meth:`parse` reads back."""
        if self.kind == "GF":
            return str(int(v) % self.modulus)
        if self.kind == "Q":
            q = Fraction(int(v.numerator), int(v.denominator))
            return str(q)
        if self.kind == "Qi":
            return str(self.domain.to_sympy(v))
        if self.base.kind == "Q":
            return str(v)
        return str(self.domain.to_sympy(self.canonical(v)))

    def canonical(self, v):
        """Normal form: reduced fraction with monic denominator over finite or
        Gaussian bases (sympy already normalizes over Q)."""
        if self.kind != "ratfunc" or self.base.kind == "Q":
            return v
        lc = v.denom.LC
        return v.new(v.numer.quo_ground(lc), v.denom.quo_ground(lc))

    def eq(self, a, b) -> bool:
        return not (a - b)

    def gen(self, name: str) -> FieldValue:
        if self.kind != "ratfunc" or name not in self.variables:
            raise UnboundVariable(name)
        return self.domain.from_sympy(self._symbols[name])

    def gens(self) -> tuple:
        return tuple(self.gen(n) for n in self.variables)

    # predicates and helpers -----------------------------------------------
    @staticmethod
    def is_zero(v) -> bool:
        return not v

    def imaginary_unit(self):
        """A square root of -1 in the field, or ``None``."""
        if self.kind == "Qi":
            return self.domain.from_sympy(sympy.I)
        if self.kind == "GF":
            r = self.sqrt(self(-1))
            return r
        if self.kind == "ratfunc":
            r = self.base.imaginary_unit()
            return None if r is None else self._from_base(r)
        return None

    def sqrt(self, v):
        """An exact square root of ``v`` in this field, or ``None`` if there is none."""
        if not v:
            return self.zero
        if self.kind == "GF":
            p = self.modulus
            a = int(v) % p
            for r in range(p):
                if r * r % p == a:
                    return self.domain(r)
            return None
        if self.kind == "Q":
            num, den = int(v.numerator), int(v.denominator)
            if num < 0:
                return None
            rn, rd = math.isqrt(num), math.isqrt(den)
            if rn * rn == num and rd * rd == den:
                return self._from_fraction(Fraction(rn, rd))
            return None
        if self.kind == "ratfunc":
            if v.numer.is_ground and v.denom.is_ground:
                c = self.base.domain.quo(v.numer.LC, v.denom.LC) if self.base.kind != "Q" \
                    else QQ.quo(QQ.convert(v.numer.LC), QQ.convert(v.denom.LC))
                r = self.base.sqrt(c)
                return None if r is None else self._from_base(r)
            return None
        expr = self.domain.to_sympy(v)
        root = sympy.sqrt(expr)
        try:
            cand = self._from_sympy(sympy.nsimplify(root))
        except Exception:
            return None
        return cand if cand * cand == v else None

    def elements(self) -> Iterable[FieldValue]:
        """All elements of a prime field, in residue order."""
        if self.kind != "GF":
            raise FieldMismatch(f"{self.name} is infinite")
        return [self.domain(r) for r in range(self.modulus)]

    def random(self, rng, height: int = 9) -> FieldValue:
        """A random element (small-height rationals for infinite fields)."""
        if self.kind == "GF":
            return self.domain(rng.randrange(self.modulus))
        num = rng.randint(-height, height)
        den = rng.randint(1, height)
        val = self._from_fraction(Fraction(num, den))
        if self.kind == "ratfunc" and self.variables and rng.random() < 0.5:
            var = self.gen(rng.choice(self.variables))
            val = val + self._from_fraction(Fraction(rng.randint(-3, 3))) * var
        return val

    # specialization ------------------------------------------------------
    def variables_of(self, v) -> tuple[str, ...]:
        if self.kind != "ratfunc":
            return ()
        used = set()
        for poly in (v.numer, v.denom):
            for monom in poly.monoms():
                used.update(name for name, e in zip(self.variables, monom) if e)
        return tuple(n for n in self.variables if n in used)

    def substitute(self, v, mapping: Mapping[str, Any], target: "Field") -> FieldValue:
        """Ring homomorphism sending each variable to ``mapping[var]`` (converted into
        ``target``) or, when unmapped, to the same-named variable of ``target``."""
        if self.kind != "ratfunc":
            return target(v) if self.kind != "Qi" else target(self.domain.to_sympy(v))
        values = []
        for name in self.variables:
            if name in mapping:
                values.append(target(mapping[name]))
            elif target.kind == "ratfunc" and name in target.variables:
                values.append(target.gen(name))
            else:
                values.append(None)
        num = self._eval_poly(v.numer, values, target)
        den = self._eval_poly(v.denom, values, target)
        if not den:
            raise PoleAtPoint(f"denominator of {v} vanishes at {dict(mapping)}")
        return num / den

    def _eval_poly(self, poly, values, target):
        out = target.zero
        for monom, coeff in poly.terms():
            term = self._coeff_into(coeff, target)
            for name, val, e in zip(self.variables, values, monom):
                if e:
                    if val is None:
                        raise UnboundVariable(name)
                    term = term * val ** e
            out = out + term
        return out

    def _coeff_into(self, c, target):
        if self.base.kind == "Q":
            return target._from_fraction(Fraction(int(c.numerator), int(c.denominator)))
        if self.base.kind == "GF":
            return target(int(c))
        return target(self.base.domain.to_sympy(c))

    def evaluate(self, v, bindings: Mapping[str, Any]) -> FieldValue:
        """Value of a rational function at a rational point (an element of Q)."""
        needed = self.variables_of(v)
        missing = [n for n in needed if n not in bindings]
        if missing:
            raise UnboundVariable(", ".join(missing))
        target = self.base if self.kind == "ratfunc" else self
        return self.substitute(v, bindings, target)


@lru_cache(maxsize=None)
def rationals() -> Field:
    return Field("Q", QQ)


@lru_cache(maxsize=None)
def prime_field(p: int) -> Field:
    if p < 2 or not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    return Field("GF", GF(p), modulus=p)


@lru_cache(maxsize=None)
def gaussian_rationals() -> Field:
    return Field("Qi", QQ.algebraic_field(sympy.I))


@lru_cache(maxsize=None)
def _function_field(names: tuple[str, ...], base: Field) -> Field:
    syms = [sympy.Symbol(n) for n in names]
    domain = base.domain.frac_field(*syms, order=grlex)
    return Field("ratfunc", domain, variables=names, base=base)


def function_field(*names: str, base: Field | None = None) -> Field:
    """Field of rational functions in ``names`` over ``base`` (default Q)."""
    base = base or rationals()
    if base.kind == "ratfunc":
        raise FieldMismatch("nested function fields are not supported")
    if not names:
        return base
    for n in names:
        if not _IDENT.match(n):
            raise ValueError(f"bad variable name {n!r}")
    if len(set(names)) != len(names):
        raise ValueError("duplicate variable names")
    return _function_field(tuple(names), base)


def parse_field(spec: str) -> Field:
    """Parse a field selector: ``q``, ``qi``, ``gf5``, ``ratfunc:a,b,t`` or ``gf13:g``."""
    spec = spec.strip().lower() if not spec.startswith("ratfunc") else spec.strip()
    head, _, tail = spec.partition(":")
    head = head.lower()
    if head in ("q", "qq"):
        base = rationals()
    elif head in ("qi", "q(i)"):
        base = gaussian_rationals()
    elif head.startswith("gf"):
        base = prime_field(int(head[2:]))
    elif head == "ratfunc":
        base = rationals()
    else:
        raise ValueError(f"unknown field selector {spec!r}")
    names = tuple(n.strip() for n in tail.split(",") if n.strip())
    return function_field(*names, base=base) if names else base


def field_of(v) -> Field | None:
    """The field a raw element belongs to (``None`` for foreign objects)."""
    if isinstance(v, FracElement):
        dom = v.field.domain
        names = tuple(str(s) for s in v.field.symbols)
        if dom == QQ:
            base = rationals()
        elif isinstance(dom, AlgebraicField):
            base = gaussian_rationals()
        else:
            base = prime_field(int(dom.mod))
        return function_field(*names, base=base)
    if isinstance(v, (int, Fraction)) or QQ.of_type(v):
        return rationals()
    if isinstance(v, ModularInteger):
        return prime_field(int(v.mod))
    if isinstance(v, ANP):
        return gaussian_rationals()
    return None


def field_arith(op: str, a, b=None):
    """Checked field arithmetic: ``op`` in add, sub, mul, div, neg, inv."""
    fa = field_of(a)
    if fa is None:
        raise FieldMismatch(f"{a!r} is not a field element")
    a = fa(a)
    if op in ("neg", "inv"):
        if op == "neg":
            return -a
        if not a:
            raise DivisionByZero("inverse of zero")
        return fa.one / a
    fb = field_of(b)
    if fb is None or fb != fa:
        raise FieldMismatch(f"cannot combine elements of {fa.name} and {fb.name if fb else b!r}")
    b = fb(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def canon(field: Field, v):
    """Canonical representative (elements are stored canonically; idempotent)."""
    return field(v)


def evaluate(v, bindings: Mapping[str, Any]):
    """Evaluate a rational function at a rational point."""
    f = field_of(v)
    if f is None:
        raise FieldMismatch(f"{v!r} is not a field element")
    return f.evaluate(v, bindings)
