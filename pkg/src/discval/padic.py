"""Finite-precision p-adic numbers.

A nonzero :class:`PAdicNum` is stored as ``p**val * unit`` where ``unit`` is
known modulo ``p**rel`` (so the number is known modulo ``p**(val + rel)``,
its *absolute precision*).  When every known digit cancels the result is a
zero-approximation ``O(p**k)``; the exact zero has infinite precision.

Precision rules:

* ``x + y`` is known modulo ``p**min(abs(x), abs(y))``;
* ``x * y`` and ``1 / x`` keep relative precision ``min(rel(x), rel(y))``;
* dividing by a zero-approximation raises
  :class:`~discval.errors.ZeroIndistinguishableError`.

>>> Q5 = PAdicCtx(5, 4)
>>> print(Q5(Fraction(1, 3)))
2 + 3*5 + 5^2 + 3*5^3 + O(5^4)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import mod_rat, require_prime, split_int, unit_part
from .errors import (
    ContextMismatchError,
    NotIntegralError,
    PrecisionError,
    ZeroIndistinguishableError,
)
from .value_group import ValBound

INF = math.inf


@dataclass(frozen=True)
class PAdicCtx:
    """Q_p with a default relative precision used when embedding rationals."""

    p: int
    prec: int = 20

    def __post_init__(self):
        require_prime(self.p)
        if self.prec < 1:
            raise ValueError("default relative precision must be >= 1")

    def __call__(self, q, prec: Optional[int] = None) -> "PAdicNum":
        if isinstance(q, PAdicNum):
            _check_ctx(self, q.ctx)
            return q
        return from_rat(self, q, prec)

    def zero(self) -> "PAdicNum":
        return PAdicNum(self, None, 0, 0, INF)

    def one(self) -> "PAdicNum":
        return from_rat(self, 1)

    def zero_approx(self, k: int) -> "PAdicNum":
        return PAdicNum(self, None, 0, 0, k)

    def uniformizer(self) -> "PAdicNum":
        return from_rat(self, self.p)

    def known(self, val: int, unit: int, rel: int) -> "PAdicNum":
        """Build ``p**val * unit + O(p**(val + rel))``; ``unit`` must be a p-adic unit."""
        if rel < 1:
            raise ValueError("relative precision must be >= 1")
        unit %= self.p ** rel
        if unit % self.p == 0:
            raise ValueError("unit part must not be divisible by p")
        return PAdicNum(self, val, unit, rel, val + rel)

    @property
    def residue_char(self) -> int:
        return self.p

    def __str__(self):
        return f"Q_{self.p}"


def _check_ctx(a: PAdicCtx, b: PAdicCtx):
    if a.p != b.p:
        raise ContextMismatchError(f"mixing {a} and {b}")


class PAdicNum:
    """Element of Q_p known to finite precision.  Immutable."""

    __slots__ = ("ctx", "val", "unit", "rel", "absprec")

    def __init__(self, ctx: PAdicCtx, val, unit, rel, absprec):
        self.ctx = ctx
        self.val = val          # None for zero-approximations and exact zero
        self.unit = unit
        self.rel = rel
        self.absprec = absprec  # INF only for exact zero

    # -- classification ---------------------------------------------------

    @property
    def p(self) -> int:
        return self.ctx.p

    def is_exact_zero(self) -> bool:
        return self.val is None and self.absprec == INF

    def is_zero_approx(self) -> bool:
        """True when no known digit is nonzero (includes exact zero)."""
        return self.val is None

    def is_known(self) -> bool:
        return self.val is not None

    def valuation(self) -> ValBound:
        if self.val is not None:
            return ValBound.exact(self.val)
        if self.absprec == INF:
            return ValBound.infinite()
        return ValBound.at_least(self.absprec)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "PAdicNum":
        if isinstance(other, PAdicNum):
            _check_ctx(self.ctx, other.ctx)
            return other
        if isinstance(other, (int, Fraction)):
            return from_rat(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _add(self, o)

    __radd__ = __add__

    def __neg__(self) -> "PAdicNum":
        if self.val is None:
            return self
        return PAdicNum(self.ctx, self.val, -self.unit % self.p ** self.rel, self.rel, self.absprec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _add(self, -o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _mul(self, o)

    __rmul__ = __mul__

    def inv(self) -> "PAdicNum":
        if self.val is None:
            raise ZeroIndistinguishableError(f"cannot invert {self}: valuation not known exactly")
        m = self.p ** self.rel
        return PAdicNum(self.ctx, -self.val, pow(self.unit, -1, m), self.rel, -self.val + self.rel)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _mul(self, o.inv())

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int) -> "PAdicNum":
        if n < 0:
            return self.inv() ** (-n)
        if n == 0:
            if self.val is None:
                raise ZeroIndistinguishableError("0^0 on a zero-approximation")
            return PAdicNum(self.ctx, 0, 1, self.rel, self.rel)
        out, base = None, self
        while n:
            if n & 1:
                out = base if out is None else _mul(out, base)
            n >>= 1
            if n:
                base = _mul(base, base)
        return out

    # -- observables ------------------------------------------------------

    def digits(self) -> list[int]:
        """Known base-p digits of the unit part, lowest first (``rel`` of them)."""
        out, u = [], self.unit
        for _ in range(self.rel):
            u, d = divmod(u, self.p)
            out.append(d)
        return out

    def lift(self) -> Fraction:
        """Canonical rational representative ``unit * p**val`` (0 for zero-approximations)."""
        if self.val is None:
            return Fraction(0)
        return self.unit * Fraction(self.p) ** self.val

    def approximate(self, n: int) -> Fraction:
        """Rational ``q`` with ``v_p(self - q) >= n``; needs absolute precision >= n."""
        if n > self.absprec:
            raise PrecisionError(f"requested precision {n} exceeds known precision {self.absprec}")
        if self.val is None or n <= self.val:
            return Fraction(0)
        return (self.unit % self.p ** (n - self.val)) * Fraction(self.p) ** self.val

    def residue(self) -> int:
        """Image in F_p of an integral element."""
        if self.val is None:
            if self.absprec < 1:
                raise PrecisionError(f"{self} is not known to be integral")
            return 0
        if self.val < 0:
            raise NotIntegralError(f"{self} has negative valuation {self.val}")
        return self.unit % self.p if self.val == 0 else 0

    def __eq__(self, other):
        if not isinstance(other, PAdicNum):
            return NotImplemented
        return (self.ctx.p == other.ctx.p and self.val == other.val and self.unit == other.unit
                and self.rel == other.rel and self.absprec == other.absprec)

    def __hash__(self):
        return hash((self.ctx.p, self.val, self.unit, self.rel, self.absprec))

    def __str__(self) -> str:
        p = self.p
        if self.is_exact_zero():
            return "0"
        big_o = f"O({_pow_str(p, self.absprec)})"
        if self.val is None:
            return big_o
        terms = []
        for i, d in enumerate(self.digits()):
            if d:
                terms.append(_digit_term(d, p, self.val + i))
        return " + ".join(terms + [big_o])

    def __repr__(self) -> str:
        if self.val is None:
            return f"PAdicNum(p={self.p}, zero_approx={self.absprec})"
        return f"PAdicNum(p={self.p}, val={self.val}, unit={self.unit}, rel={self.rel})"


def _pow_str(p: int, e) -> str:
    return str(p) if e == 1 else f"{p}^{e}"


def _digit_term(d: int, p: int, e: int) -> str:
    if e == 0:
        return str(d)
    mono = _pow_str(p, e)
    return mono if d == 1 else f"{d}*{mono}"


def _normalize(ctx: PAdicCtx, m: int, s: int, A) -> PAdicNum:
    """The element ``s * p**m`` known modulo ``p**A`` (``A > m``)."""
    p = ctx.p
    s %= p ** (A - m)
    if s == 0:
        return ctx.zero_approx(A)
    k, u = split_int(s, p)
    val = m + k
    return PAdicNum(ctx, val, u, A - val, A)


def _add(x: PAdicNum, y: PAdicNum) -> PAdicNum:
    if x.is_exact_zero():
        return y
    if y.is_exact_zero():
        return x
    A = min(x.absprec, y.absprec)
    known = [z for z in (x, y) if z.val is not None]
    if not known:
        return x.ctx.zero_approx(A)
    m = min(z.val for z in known)
    if A <= m:
        return x.ctx.zero_approx(A)
    s = sum(z.unit * x.p ** (z.val - m) for z in known)
    return _normalize(x.ctx, m, s, A)


def _mul(x: PAdicNum, y: PAdicNum) -> PAdicNum:
    if x.is_exact_zero() or y.is_exact_zero():
        return x.ctx.zero()
    if x.val is None or y.val is None:
        # lower bound on the valuation of each factor
        lo_x = x.val if x.val is not None else x.absprec
        lo_y = y.val if y.val is not None else y.absprec
        return x.ctx.zero_approx(lo_x + lo_y)
    r = min(x.rel, y.rel)
    val = x.val + y.val
    return PAdicNum(x.ctx, val, x.unit * y.unit % x.p ** r, r, val + r)


def from_rat(ctx: PAdicCtx, q, prec: Optional[int] = None) -> PAdicNum:
    """Embed a rational, keeping ``prec`` (default ``ctx.prec``) unit digits."""
    q = Fraction(q)
    if q == 0:
        return ctx.zero()
    r = ctx.prec if prec is None else prec
    k, w = unit_part(q, ctx.p)
    return PAdicNum(ctx, k, mod_rat(w, ctx.p ** r), r, k + r)


def add(x: PAdicNum, y: PAdicNum) -> PAdicNum:
    return x + y


def sub(x: PAdicNum, y: PAdicNum) -> PAdicNum:
    return x - y


def neg(x: PAdicNum) -> PAdicNum:
    return -x


def mul(x: PAdicNum, y: PAdicNum) -> PAdicNum:
    return x * y


def inv(x: PAdicNum) -> PAdicNum:
    return x.inv()


def div(x: PAdicNum, y: PAdicNum) -> PAdicNum:
    return x / y


def valuation(x: PAdicNum) -> ValBound:
    return x.valuation()


def approximate(x: PAdicNum, n: int) -> Fraction:
    return x.approximate(n)


def residue(x: PAdicNum) -> int:
    return x.residue()
