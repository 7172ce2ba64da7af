"""Command-line entry point.

Exit codes: 0 pass, 1 a check failed, 2 malformed input, 3 search budget exceeded.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import io
from .catalog import _identifiers, _is_name, build, cross_product_star, parse_matrix_spec
from .errors import NCJordanError, SearchTooLarge
from .fields import Field, function_field, parse_field

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
FAMILY_CHOICES = ("k3", "dt", "uvf", "jgamma", "jgammaA", "gammaND")


class InputError(Exception):
    pass


# algebra selection ---------------------------------------------------------------------------

def _field_for(args, values: Sequence) -> Field:
    base = parse_field(args.field)
    names = []
    for v in values:
        if _is_name(v):
            names += [t for t in _identifiers(v) if t not in names]
    names = [n for n in names if n not in base.variables]
    if not names:
        return base
    if base.kind == "ratfunc":
        return function_field(*(base.variables + tuple(names)), base=base.base)
    return function_field(*names, base=base)


def _params(args) -> dict:
    p = {}
    for key in ("alpha", "beta", "gamma", "t"):
        v = getattr(args, key, None)
        if v is not None:
            p[key] = v
    return p


def select_algebra(args, family: str | None = None, json_path: str | None = None):
    family = family if family is not None else args.family
    json_path = json_path if json_path is not None else args.json
    if json_path:
        return io.load_algebra(json_path)
    if not family:
        raise InputError("give a family or --json FILE")
    p = _params(args)
    if family == "k3":
        p.setdefault("alpha", "1/2")
    if family == "dt":
        p.setdefault("t", "t")
        p.setdefault("alpha", "1/2")
    F = _field_for(args, [str(v) for v in p.values()])
    if family in ("jgamma", "jgammaA", "gammaND"):
        p["n"] = args.n
        if family == "jgammaA":
            p["A"] = args.A or "0"
        if family == "gammaND":
            p["a"] = parse_matrix_spec(args.a or "identity", args.n, F)
    if family == "uvf":
        if not args.form:
            raise InputError("uvf needs --form 'r1;r2;...'")
        p["f"] = [[F.parse(c) for c in row.split(",")] for row in args.form.split(";")]
        if args.v_parity:
            p["v_parity"] = [int(c) for c in args.v_parity.split(",")]
        if args.star == "cross":
            p["star"] = cross_product_star(F)
    return build(family, p, F)


def _family_kind(args):
    """Map a k3/dt selection with beta = gamma = 0 (or the 1/2,1/2 twist) to a family kind."""
    if args.json or args.family not in ("k3", "dt"):
        return None
    F = parse_field(args.field)
    try:
        a = F.parse(args.alpha if args.alpha is not None else "1/2")
        b = F.parse(args.beta or "0")
        g = F.parse(args.gamma or "0")
        t = F.parse(args.t) if args.t is not None else None
    except Exception:
        return None
    half = F(Fraction(1, 2))
    prefix = "K3" if args.family == "k3" else "D"
    if args.family == "dt" and t is None:
        return None
    if not b and not g:
        return prefix, a, t
    if not (a - half) and not (b - half) and not g:
        return prefix + "h", half, t
    return None


# verbs --------------------------------------------------------------------------------------

def cmd_verify(args) -> tuple[int, dict]:
    from .matrix import identity_suite
    A = select_algebra(args)
    res = identity_suite(A)
    ok = all(res.values())
    return (EXIT_PASS if ok else EXIT_FAIL), {"passed": ok, "checks": res, "algebra": io.algebra_to_json(A)}


def cmd_derive(args) -> tuple[int, dict]:
    from .derivations import closure_check, derivation_space
    A = select_algebra(args)
    D = derivation_space(A)
    closed = closure_check(D)
    return EXIT_PASS if closed.passed else EXIT_FAIL, {
        "dims": list(D.dims),
        "basis": {"even": [io.matrix_to_json(d.matrix) for d in D.even_basis],
                  "odd": [io.matrix_to_json(d.matrix) for d in D.odd_basis]},
        "closure": io.report_to_json(closed),
        "algebra": io.algebra_to_json(A),
    }


def _finite(A):
    if not A.field.is_finite:
        raise InputError("exhaustive search needs --field gfP")


def cmd_aut(args) -> tuple[int, dict]:
    from .families import match_automorphisms
    from .morphisms import enumerate_automorphisms
    A = select_algebra(args)
    _finite(A)
    found = enumerate_automorphisms(A, budget=args.budget)
    out = {"count": len(found), "automorphisms": [io.matrix_to_json(m.matrix) for m in found],
           "algebra": io.algebra_to_json(A)}
    kind = _family_kind(args)
    code = EXIT_PASS
    if kind is not None:
        rep = match_automorphisms(kind[0], kind[1], kind[2] if kind[2] is not None else 1, A.field)
        out["family_match"] = io.report_to_json(rep)
        code = EXIT_PASS if rep.passed else EXIT_FAIL
    return code, out


def cmd_subalg(args) -> tuple[int, dict]:
    from .families import match_subalgebras
    from .morphisms import enumerate_subalgebras
    A = select_algebra(args)
    _finite(A)
    dims = [args.dim] if args.dim else list(range(1, A.dim))
    out = {"algebra": io.algebra_to_json(A), "subalgebras": {}}
    code = EXIT_PASS
    kind = _family_kind(args)
    for d in dims:
        found = enumerate_subalgebras(A, d, budget=args.budget)
        entry = {"count": len(found), "witnesses": [W.describe() for W in found],
                 "graded": sum(W.is_graded() for W in found)}
        if kind is not None:
            rep = match_subalgebras(kind[0], kind[1], kind[2] if kind[2] is not None else 1, A.field, d)
            entry["family_match"] = io.report_to_json(rep)
            if not rep.passed:
                code = EXIT_FAIL
        out["subalgebras"][str(d)] = entry
    return code, out


def _parse_other(spec: str, args):
    """``k3:alpha=2,beta=1`` or a JSON path."""
    if Path(spec).suffix == ".json":
        return io.load_algebra(spec)
    family, _, rest = spec.partition(":")
    ns = argparse.Namespace(**vars(args))
    for key in ("alpha", "beta", "gamma", "t"):
        setattr(ns, key, None)
    for part in filter(None, rest.split(",")):
        k, _, v = part.partition("=")
        setattr(ns, k.strip(), v.strip())
    ns.json = None
    return select_algebra(ns, family=family.strip(), json_path="")


def cmd_isosearch(args) -> tuple[int, dict]:
    from .derivations import derivation_space
    from .morphisms import isomorphism_search
    if not args.other:
        raise InputError("isosearch needs --other FAMILY:params or --other FILE.json")
    A = select_algebra(args)
    B = _parse_other(args.other, args)
    _finite(A)
    if A.field != B.field:
        raise InputError("both algebras must live over the same field")
    phi = isomorphism_search(A, B, budget=args.budget)
    out = {"isomorphic": phi is not None,
           "derivation_dims": [list(derivation_space(A).dims), list(derivation_space(B).dims)],
           "map": io.matrix_to_json(phi.matrix) if phi is not None else None}
    return EXIT_PASS if phi is not None else EXIT_FAIL, out


def cmd_grassmann(args) -> tuple[int, dict]:
    from .catalog import make_gamma_nd
    from .grassmann import format_element, is_hn, monomials
    from .grassmann_derivations import (
        cent_ann_inclusion_check,
        gras_der_dual_check,
        gras_der_solve,
        jgammaA_d1_criterion,
    )
    from .grassmann import GrassmannElement, hn_from_potential
    from .fields import rationals
    n = args.n
    F = parse_field(args.field) if args.field else rationals()
    if args.action == "gras-der":
        a = parse_matrix_spec(args.a or "identity", n, F)
        sols = [gras_der_solve(n, a, s, F) for s in (0, 1)]
        return EXIT_PASS, {
            "dims": [len(sols[0]), len(sols[1])],
            "even": [[format_element(c) for c in d.components] for d in sols[0]],
            "odd": [[format_element(c) for c in d.components] for d in sols[1]],
            "algebra": io.algebra_to_json(make_gamma_nd(n, a, F)),
        }
    if args.action == "dual-check":
        rep = gras_der_dual_check(n, parse_matrix_spec(args.a or "identity", n, F), F)
        return (EXIT_PASS if rep.passed else EXIT_FAIL), io.report_to_json(rep)
    if args.action == "cent-ann":
        rep = cent_ann_inclusion_check(n, parse_matrix_spec(args.a or "identity", n, F), F)
        return (EXIT_PASS if rep.passed else EXIT_FAIL), io.report_to_json(rep)
    if args.action == "ad-criterion":
        A = args.A or "0"
        rows = []
        for m in monomials(n):
            d = hn_from_potential(GrassmannElement.monomial(n, m, 1, F))
            rows.append({"potential": format_element(GrassmannElement.monomial(n, m, 1, F)),
                         "hamiltonian": is_hn(d), "Ad=0": jgammaA_d1_criterion(d, A)})
        return EXIT_PASS, {"A": A, "n": n, "potentials": rows}
    raise InputError(f"unknown grassmann action {args.action!r}")


def cmd_matrix(args) -> tuple[int, dict]:
    from .matrix import CRITERIA, criterion_11, run_matrix
    only = [int(x) for x in args.only.split(",")] if args.only else None
    rows = []
    ok = True
    for k, title, rep, secs in run_matrix(only):
        if k == 11 and args.seed is not None:
            rep = criterion_11(seed=args.seed)
        rows.append({"criterion": k, "title": title, "passed": bool(rep.passed),
                     "failures": io._plain(rep.failures[:5])})
        ok &= bool(rep.passed)
        if not args.quiet:
            print(f"{k:>3}  {'PASS' if rep.passed else 'FAIL'}  {title}", file=sys.stderr)
    return (EXIT_PASS if ok else EXIT_FAIL), {"passed": ok, "criteria": rows}


VERBS = {
    "verify": cmd_verify,
    "derive": cmd_derive,
    "aut": cmd_aut,
    "subalg": cmd_subalg,
    "isosearch": cmd_isosearch,
    "grassmann": cmd_grassmann,
    "matrix": cmd_matrix,
}


def _algebra_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", nargs="?", choices=FAMILY_CHOICES)
    p.add_argument("--json", help="algebra spec file")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--gamma")
    p.add_argument("--t")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--A", help="even Grassmann element for jgammaA")
    p.add_argument("--a", help="matrix for gammaND: identity, diag:..., or rows 'r1;r2'")
    p.add_argument("--form", help="bilinear form rows for uvf, e.g. '1,0;0,1'")
    p.add_argument("--v-parity", help="parities of V for uvf, e.g. '0,0,1,1'")
    p.add_argument("--star", choices=("none", "cross"), default="none")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncjordan", description=__doc__.splitlines()[0])
    parser.add_argument("--field", default="q", help="q, qi, gfP, ratfunc:a,b (default q)")
    parser.add_argument("--out", help="write the JSON report here instead of stdout")
    parser.add_argument("--budget", type=int, default=2_000_000, help="maximum enumeration size")
    parser.add_argument("--seed", type=int, default=None)
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in ("verify", "derive", "aut", "subalg", "isosearch"):
        p = sub.add_parser(verb)
        _algebra_flags(p)
        if verb == "subalg":
            p.add_argument("--dim", type=int)
        if verb == "isosearch":
            p.add_argument("--other", help="FAMILY:key=value,... or FILE.json")
    g = sub.add_parser("grassmann")
    g.add_argument("action", choices=("gras-der", "dual-check", "cent-ann", "ad-criterion"))
    g.add_argument("--n", type=int, default=2)
    g.add_argument("--a")
    g.add_argument("--A")
    m = sub.add_parser("matrix")
    m.add_argument("--only", help="comma separated criterion numbers")
    m.add_argument("--quiet", action="store_true")
    return parser


def _hoist_globals(argv: list[str]) -> list[str]:
    """Allow global flags after the verb (``aut k3 --field gf5``)."""
    glob = {"--field", "--out", "--budget", "--seed"}
    front, rest, i = [], [], 0
    while i < len(argv):
        tok = argv[i]
        key = tok.split("=", 1)[0]
        if key in glob:
            if "=" in tok:
                front.append(tok)
            elif i + 1 < len(argv):
                front += [tok, argv[i + 1]]
                i += 1
            else:
                rest.append(tok)
        else:
            rest.append(tok)
        i += 1
    return front + rest


def main(argv: Sequence[str] | None = None) -> int:
    argv = _hoist_globals(list(sys.argv[1:] if argv is None else argv))
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if not exc.code:
            return EXIT_PASS
        print(io.dumps({"error": "UsageError", "message": "invalid arguments (see usage above)"}))
        return EXIT_INPUT
    try:
        code, report = VERBS[args.verb](args)
    except SearchTooLarge as exc:
        code, report = EXIT_BUDGET, {"error": "SearchTooLarge", "message": str(exc)}
    except (InputError, NCJordanError, ValueError, KeyError, OSError) as exc:
        code, report = EXIT_INPUT, {"error": type(exc).__name__, "message": str(exc)}
    text = io.dumps(report)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
