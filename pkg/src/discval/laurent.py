"""Truncated Laurent series over F_p or Q: the completion K((X)) of K(X).

A nonzero :class:`LaurentSeries` stores its order ``d`` and a window of
``r`` coefficients ``c[0] != 0, ..., c[r-1]``; it is known through
exponent ``d + r - 1`` (absolute precision ``d + r``).  Precision rules
match :mod:`discval.padic`.

>>> F2 = LaurentCtx(PrimeField(2), 8)
>>> X = RatFunc.x(PrimeField(2))
>>> print(F2.from_ratfunc(1 / (1 + X)))
1 + X + X^2 + X^3 + X^4 + X^5 + X^6 + X^7 + O(X^8)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import coefficients as cf
from .coefficients import QQ, PrimeField, RationalField
from .errors import (
    ContextMismatchError,
    NotIntegralError,
    PrecisionError,
    ZeroIndistinguishableError,
)
from .valuation_core import RatFunc
from .value_group import ValBound

INF = math.inf


@dataclass(frozen=True)
class LaurentCtx:
    """K((X)) with a default absolute precision for expansions of K(X)."""

    field: Union[PrimeField, RationalField] = QQ
    prec: int = 20

    def __call__(self, x, prec: Optional[int] = None) -> "LaurentSeries":
        if isinstance(x, LaurentSeries):
            _check(self, x.ctx)
            return x
        if isinstance(x, RatFunc):
            return from_ratfunc(x, self.prec if prec is None else prec, self)
        return self.const(x)

    def const(self, c) -> "LaurentSeries":
        """Constant series, known to the default precision (exact zero stays exact)."""
        return from_ratfunc(RatFunc.const(self.field, c), self.prec, self)

    def from_ratfunc(self, rf: RatFunc, prec: Optional[int] = None) -> "LaurentSeries":
        return from_ratfunc(rf, self.prec if prec is None else prec, self)

    def zero(self) -> "LaurentSeries":
        return LaurentSeries(self, None, (), INF)

    def zero_approx(self, k: int) -> "LaurentSeries":
        return LaurentSeries(self, None, (), k)

    def one(self) -> "LaurentSeries":
        return self.const(1)

    def uniformizer(self) -> "LaurentSeries":
        return from_ratfunc(RatFunc.x(self.field), self.prec, self)

    def series(self, order: int, coeffs) -> "LaurentSeries":
        """Build ``sum coeffs[i] X^(order+i) + O(X^(order+len))``; ``coeffs[0]`` must be nonzero."""
        F = self.field
        c = tuple(F(x) for x in coeffs)
        if not c:
            raise ValueError("empty coefficient window")
        if c[0] == F.zero:
            raise ValueError("leading coefficient must be nonzero")
        return LaurentSeries(self, order, c, order + len(c))

    @property
    def residue_char(self) -> int:
        return self.field.characteristic

    def __str__(self):
        return f"{self.field.name}((X))"


def _check(a: LaurentCtx, b: LaurentCtx):
    if a.field != b.field:
        raise ContextMismatchError(f"mixing {a} and {b}")


class LaurentSeries:
    """Element of K((X)) known to finite precision.  Immutable."""

    __slots__ = ("ctx", "order", "coeffs", "absprec")

    def __init__(self, ctx: LaurentCtx, order, coeffs, absprec):
        self.ctx = ctx
        self.order = order      # None for zero-approximations and exact zero
        self.coeffs = coeffs
        self.absprec = absprec

    @property
    def field(self):
        return self.ctx.field

    @property
    def rel(self) -> int:
        return len(self.coeffs)

    def is_exact_zero(self) -> bool:
        return self.order is None and self.absprec == INF

    def is_zero_approx(self) -> bool:
        return self.order is None

    def is_known(self) -> bool:
        return self.order is not None

    def valuation(self) -> ValBound:
        if self.order is not None:
            return ValBound.exact(self.order)
        if self.absprec == INF:
            return ValBound.infinite()
        return ValBound.at_least(self.absprec)

    def coeff(self, n: int):
        """Coefficient of ``X**n``; ``n`` must be below the absolute precision."""
        if n >= self.absprec:
            raise PrecisionError(f"coefficient {n} is beyond precision O(X^{self.absprec})")
        if self.order is None or n < self.order:
            return self.field.zero
        return self.coeffs[n - self.order]

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            _check(self.ctx, other.ctx)
            return other
        if isinstance(other, RatFunc):
            return self.ctx(other)
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _add(self, o)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        F = self.field
        return LaurentSeries(self.ctx, self.order, tuple(F.neg(c) for c in self.coeffs), self.absprec)

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

    def inv(self) -> "LaurentSeries":
        if self.order is None:
            raise ZeroIndistinguishableError(f"cannot invert {self}: order not known exactly")
        w = series_inverse(self.field, self.coeffs, self.rel)
        return LaurentSeries(self.ctx, -self.order, w, -self.order + self.rel)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _mul(self, o.inv())

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            return self.inv() ** (-n)
        out = None
        base = self
        if n == 0:
            return self.ctx.series(0, (1,) + (0,) * (max(self.rel, 1) - 1))
        while n:
            if n & 1:
                out = base if out is None else _mul(out, base)
            n >>= 1
            if n:
                base = _mul(base, base)
        return out

    # -- observables ------------------------------------------------------

    def is_power_series(self) -> bool:
        """Membership in the unit ball K[[X]]."""
        if self.order is not None:
            return self.order >= 0
        if self.absprec >= 0:
            return True
        raise PrecisionError(f"{self} does not determine whether the order is >= 0")

    def approximate_by_ratfunc(self, n: int) -> RatFunc:
        """Laurent polynomial ``sum_{k<n} coeff(k) X^k`` as a rational function."""
        if n > self.absprec:
            raise PrecisionError(f"requested precision {n} exceeds known precision {self.absprec}")
        F = self.field
        if self.order is None or n <= self.order:
            return RatFunc(F, ())
        window = self.coeffs[: n - self.order]
        if self.order >= 0:
            return RatFunc(F, (F.zero,) * self.order + tuple(window))
        return RatFunc(F, window, (F.zero,) * (-self.order) + (F.one,))

    def residue(self):
        """Constant coefficient of a power series (its image in K)."""
        if not self.is_power_series():
            raise NotIntegralError(f"{self} has negative order")
        return self.coeff(0)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.field == other.field and self.order == other.order
                and self.coeffs == other.coeffs and self.absprec == other.absprec)

    def __hash__(self):
        return hash((self.field, self.order, self.coeffs, self.absprec))

    def __str__(self) -> str:
        if self.is_exact_zero():
            return "0"
        big_o = f"O({_mono(self.absprec)})"
        if self.order is None:
            return big_o
        F = self.field
        terms = []
        for i, c in enumerate(self.coeffs):
            if c != F.zero:
                terms.append(_term(F.fmt(c), self.order + i))
        return cf.join_terms(terms + [big_o])

    def __repr__(self) -> str:
        return f"LaurentSeries({self.field.name}, {self})"


def _mono(e) -> str:
    if e == 0:
        return "1"
    return "X" if e == 1 else f"X^{e}"


def _term(cs: str, e: int) -> str:
    if e == 0:
        return cs
    if cs == "1":
        return _mono(e)
    if cs == "-1":
        return "-" + _mono(e)
    return f"{cs}*{_mono(e)}"


def series_inverse(F, a, r: int) -> tuple:
    """First ``r`` coefficients of ``1/a`` for a power series with ``a[0] != 0``.

    Solves ``a0*b0 = 1`` and ``sum_{i+j=k} a_i b_j = 0`` term by term.
    """
    a0_inv = F.inv(a[0])
    b = [a0_inv]
    for k in range(1, r):
        s = F.zero
        for i in range(1, min(k, len(a) - 1) + 1):
            s = F.add(s, F.mul(a[i], b[k - i]))
        b.append(F.neg(F.mul(s, a0_inv)))
    return tuple(b)


def series_div(F, num, den, r: int) -> tuple:
    """First ``r`` coefficients of ``num/den`` (``den[0] != 0``)."""
    inv = series_inverse(F, den, r)
    out = []
    for k in range(r):
        s = F.zero
        for i in range(min(k, len(num) - 1) + 1):
            s = F.add(s, F.mul(num[i], inv[k - i]))
        out.append(s)
    return tuple(out)


def _from_window(ctx: LaurentCtx, m: int, window, A) -> LaurentSeries:
    """Series ``X**m * sum window[i] X**i`` known through exponent ``A - 1``."""
    F = ctx.field
    n = A - m
    for i, c in enumerate(window[:n]):
        if c != F.zero:
            return LaurentSeries(ctx, m + i, tuple(window[i:n]), A)
    return ctx.zero_approx(A)


def _add(x: LaurentSeries, y: LaurentSeries) -> LaurentSeries:
    if x.is_exact_zero():
        return y
    if y.is_exact_zero():
        return x
    A = min(x.absprec, y.absprec)
    known = [z for z in (x, y) if z.order is not None]
    if not known:
        return x.ctx.zero_approx(A)
    m = min(z.order for z in known)
    if A <= m:
        return x.ctx.zero_approx(A)
    F = x.field
    window = [F.zero] * (A - m)
    for z in known:
        off = z.order - m
        for i, c in enumerate(z.coeffs):
            if off + i >= len(window):
                break
            window[off + i] = F.add(window[off + i], c)
    return _from_window(x.ctx, m, window, A)


def _mul(x: LaurentSeries, y: LaurentSeries) -> LaurentSeries:
    if x.is_exact_zero() or y.is_exact_zero():
        return x.ctx.zero()
    if x.order is None or y.order is None:
        lo_x = x.order if x.order is not None else x.absprec
        lo_y = y.order if y.order is not None else y.absprec
        return x.ctx.zero_approx(lo_x + lo_y)
    F = x.field
    r = min(x.rel, y.rel)
    out = []
    for k in range(r):
        s = F.zero
        for i in range(k + 1):
            s = F.add(s, F.mul(x.coeffs[i], y.coeffs[k - i]))
        out.append(s)
    d = x.order + y.order
    return LaurentSeries(x.ctx, d, tuple(out), d + r)


def from_ratfunc(rf: RatFunc, abs_prec: int, ctx: Optional[LaurentCtx] = None) -> LaurentSeries:
    """Expand ``rf`` at ``X = 0``, correct through exponent ``abs_prec - 1``."""
    ctx = ctx or LaurentCtx(rf.field)
    if rf.field != ctx.field:
        raise ContextMismatchError(f"{rf.field.name}(X) does not embed in {ctx}")
    if rf.is_zero():
        return ctx.zero()
    F = rf.field
    a, num = cf.x_power_split(F, rf.num)
    b, den = cf.x_power_split(F, rf.den)
    d = a - b
    r = abs_prec - d
    if r <= 0:
        return ctx.zero_approx(abs_prec)
    return LaurentSeries(ctx, d, series_div(F, num, den, r), abs_prec)


def add(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    return f + g


def mul(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    return f * g


def inv(f: LaurentSeries) -> LaurentSeries:
    return f.inv()


def valuation(f: LaurentSeries) -> ValBound:
    return f.valuation()


def coeff(f: LaurentSeries, n: int):
    return f.coeff(n)


def approximate_by_ratfunc(f: LaurentSeries, n: int) -> RatFunc:
    return f.approximate_by_ratfunc(n)


def is_power_series(f: LaurentSeries) -> bool:
    return f.is_power_series()
