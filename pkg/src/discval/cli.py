"""Command line front end.

Subcommands::

    discval val     (--p P | --field F) EXPR
    discval factor  (--p P | --field F) EXPR
    discval padic   --p P [--prec N] EXPR
    discval laurent --field F [--prec N] EXPR
    discval ext     (--p P | --field Fp) --poly POLY {info,val,norm,integral,residue} [EXPR]

``--json`` switches to one flat JSON object per invocation.  Exit status is
0 on success, 1 on a mathematical error and 2 on a parse or flag error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import extension as ext_mod
from .arith import is_prime
from .coefficients import PrimeField, field_from_name
from .expr import ParseError, evaluate, free_names, parse
from .laurent import LaurentCtx, from_ratfunc
from .padic import INF, PAdicCtx
from .valuation_core import (
    PAdic,
    RatFunc,
    XAdic,
    canonical_uniformizer,
    pow_uniformizer,
    val,
)

DEFAULT_PREC = 20


class UsageError(Exception):
    """Bad flags or input; maps to exit status 2."""


# -- argument parsing ----------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, top: bool = False):
    # subparsers use SUPPRESS so a flag given at any level survives
    default = None if top else argparse.SUPPRESS
    p.add_argument("--json", action="store_true", default=False if top else argparse.SUPPRESS,
                   help="emit one flat JSON object")
    p.add_argument("--prec", type=int, default=default,
                   help=f"precision in digits/coefficients (default {DEFAULT_PREC})")


def _add_base(p: argparse.ArgumentParser, need_expr: bool = True):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=int, dest="p", default=argparse.SUPPRESS, help="prime for Q / Q_p")
    g.add_argument("--field", dest="field", default=argparse.SUPPRESS,
                   help="coefficient field for K(X): Q or F<p>")
    if need_expr:
        p.add_argument("expr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="discval", description="Discretely valued fields.")
    _add_common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("val", help="valuation of a rational or rational function")
    _add_base(p)
    _add_common(p)

    p = sub.add_parser("factor", help="write r = pi^n * u with u a unit")
    _add_base(p)
    _add_common(p)

    p = sub.add_parser("padic", help="evaluate in Q_p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("expr")
    _add_common(p)

    p = sub.add_parser("laurent", help="expand a rational function in K((X))")
    p.add_argument("--field", required=True)
    p.add_argument("expr")
    _add_common(p)

    p = sub.add_parser("ext", help="finite extension K[x]/(poly) of Q_p or F_p((X))")
    _add_base(p, need_expr=False)
    p.add_argument("--poly", required=True, help="monic modulus in x")
    _add_common(p)
    esub = p.add_subparsers(dest="action", required=True)
    for name in ("info", "val", "norm", "integral", "residue"):
        q = esub.add_parser(name)
        if name != "info":
            q.add_argument("expr", help="element as a polynomial in a")
        _add_common(q)
    return parser


# -- helpers -------------------------------------------------------------------

def _prime(p: int) -> int:
    if not is_prime(p):
        raise UsageError(f"--p {p} is not a prime")
    return p


def _field(name: str):
    try:
        return field_from_name(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _prec(args) -> int:
    prec = getattr(args, "prec", None)
    if prec is None:
        return DEFAULT_PREC
    if prec < 1:
        raise UsageError("--prec must be >= 1")
    return prec


def _parse(text: str, allowed: set[str]):
    node = parse(text)
    bad = free_names(node) - allowed
    if bad:
        raise UsageError(f"unknown identifier(s) {', '.join(sorted(bad))} in {text!r}; "
                         f"allowed: {', '.join(sorted(allowed)) or 'none'}")
    return node


def _descriptor(args):
    if hasattr(args, "p"):
        return PAdic(_prime(args.p))
    return XAdic(_field(args.field))


def _eval_in(desc, text: str):
    if isinstance(desc, PAdic):
        return evaluate(_parse(text, set()), Fraction, {})
    F = desc.field
    return evaluate(_parse(text, {"X"}), lambda n: RatFunc.const(F, n), {"X": RatFunc.x(F)})


def _absprec(x):
    return None if x.absprec == INF else x.absprec


class _XPoly:
    """Polynomial in ``x`` with rational or rational-function coefficients (modulus input)."""

    def __init__(self, terms: dict):
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def _lift(self, o):
        return o if isinstance(o, _XPoly) else _XPoly({0: o})

    def __add__(self, o):
        o = self._lift(o)
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return _XPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return _XPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        out = {}
        for i, a in self.terms.items():
            for j, b in o.terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return _XPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        if set(o.terms) != {0}:
            raise UsageError("modulus may only be divided by constants")
        c = o.terms[0]
        return _XPoly({k: v / c for k, v in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise UsageError("negative power of x in the modulus")
        out = _XPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def coeffs(self) -> list:
        if not self.terms:
            return [0]
        d = max(self.terms)
        return [self.terms.get(i, 0) for i in range(d + 1)]


def _make_ext(args):
    prec = _prec(args)
    if hasattr(args, "p"):
        base = PAdicCtx(_prime(args.p), prec)
        node = _parse(args.poly, {"x"})
        f = evaluate(node, lambda n: _XPoly({0: Fraction(n)}), {"x": _XPoly({1: Fraction(1)})})
    else:
        F = _field(args.field)
        if not isinstance(F, PrimeField):
            raise UsageError("extension base must be F_p((X)); use --field F<p>")
        base = LaurentCtx(F, prec)
        node = _parse(args.poly, {"x", "X"})
        f = evaluate(node, lambda n: _XPoly({0: RatFunc.const(F, n)}),
                     {"x": _XPoly({1: RatFunc.const(F, 1)}), "X": _XPoly({0: RatFunc.x(F)})})
    try:
        return ext_mod.make_extension(base, f.coeffs())
    except ArithmeticError:
        raise
    except ValueError as exc:
        # non-monic, constant or over-degree modulus: a bad --poly value
        raise UsageError(str(exc)) from None


def _ext_elem(L, text: str):
    names = {"a"} | ({"X"} if isinstance(L.base, LaurentCtx) else set())
    node = _parse(text, names)
    env = {"a": L.gen}
    if isinstance(L.base, LaurentCtx):
        env["X"] = L.embed_base(L.base.uniformizer())
    return evaluate(node, L.embed_rat, env)


# -- commands ------------------------------------------------------------------

def cmd_val(args):
    desc = _descriptor(args)
    x = _eval_in(desc, args.expr)
    v = val(desc, x)
    a = v.to_addval()
    text = f"{v}  (additive: {a})"
    return text, {"result": str(v), "valuation": a.a, "precision": "exact"}


def cmd_factor(args):
    desc = _descriptor(args)
    x = _eval_in(desc, args.expr)
    pi = canonical_uniformizer(desc)
    n, u = pow_uniformizer(desc, x, pi)
    pis = str(desc.p) if isinstance(desc, PAdic) else "X"
    text = f"{pis}^{n} * ({u})"
    return text, {"result": text, "n": n, "unit": str(u), "valuation": n, "precision": "exact"}


def cmd_padic(args):
    ctx = PAdicCtx(_prime(args.p), _prec(args))
    x = evaluate(_parse(args.expr, set()), ctx, {})
    return str(x), {"result": str(x), "valuation": str(x.valuation()), "precision": _absprec(x)}


def cmd_laurent(args):
    F = _field(args.field)
    prec = _prec(args)
    rf = _eval_in(XAdic(F), args.expr)
    f = from_ratfunc(rf, prec, LaurentCtx(F, prec))
    return str(f), {"result": str(f), "valuation": str(f.valuation()), "precision": _absprec(f)}


def cmd_ext(args):
    L = _make_ext(args)
    action = args.action
    if action == "info":
        if L.cert.kind == ext_mod.NO_CERTIFICATE:
            rec = {"certificate": L.cert.kind, "n": L.n, "e": None, "f": None,
                   "residue_order": None, "uniformizer": None}
        else:
            rec = ext_mod.local_field_data(L).record()
        text = "\n".join(f"{k}: {'-' if v is None else v}" for k, v in rec.items())
        return text, rec
    x = _ext_elem(L, args.expr)
    if action == "val":
        w = ext_mod.add_val_ext(x)
        if L.cert.kind == ext_mod.NO_CERTIFICATE:
            text = f"w = {w}  (normalized valuation needs a certificate)"
            return text, {"result": None, "w": str(w), "valuation": None, "precision": "exact"}
        nv = ext_mod.normalized_val(x)
        mv = nv.to_multz0()
        text = f"{mv}  (w = {w}, normalized additive: {nv.value if nv.is_exact else 'inf'})"
        return text, {"result": str(mv), "w": str(w),
                      "valuation": nv.value if nv.is_exact else None, "precision": "exact"}
    if action == "norm":
        N = ext_mod.norm(x)
        return str(N), {"result": str(N), "valuation": str(N.valuation()), "precision": _absprec(N)}
    if action == "integral":
        b = ext_mod.is_integral(x)
        text = "true" if b else "false"
        return text, {"result": b, "w": str(ext_mod.add_val_ext(x)), "valuation": None,
                      "precision": "exact"}
    r = ext_mod.residue_map(L, x)
    return str(r), {"result": str(r), "residue_order": L.residue_field().order,
                    "valuation": None, "precision": "exact"}


COMMANDS = {
    "val": cmd_val,
    "factor": cmd_factor,
    "padic": cmd_padic,
    "laurent": cmd_laurent,
    "ext": cmd_ext,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    """Run the CLI; returns the exit status instead of exiting."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        old_err, sys.stderr = sys.stderr, stderr
        try:
            args = parser.parse_args(argv)
        finally:
            sys.stderr = old_err
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, record = COMMANDS[args.command](args)
    except (ParseError, UsageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    except (ArithmeticError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if args.json:
        print(json.dumps(record, separators=(",", ":")), file=stdout)
    else:
        print(text, file=stdout)
    return 0


def main():  # pragma: no cover - console entry point
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
