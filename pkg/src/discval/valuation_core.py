"""Exact discrete valuations on Q (p-adic) and K(X) (X-adic).

Two valuation descriptors are provided: :class:`PAdic` for ``Z`` localized
at ``(p)`` and :class:`XAdic` for ``K[X]`` localized at ``(X)``.  Values are
reported in :class:`~discval.value_group.MultZ0`.

>>> val(PAdic(7), Fraction(392, 5))
MultZ0.of_add(-2)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import coefficients as cf
from .arith import mod_rat, require_prime, vp_rat
from .coefficients import QQ, PrimeField, RationalField
from .errors import (
    NotAUniformizerError,
    NotInMaximalIdealError,
    NotInUnitBallError,
)
from .value_group import ONE, ZERO, MultZ0


class RatFunc:
    """Rational function ``num/den`` over F_p or Q in canonical form.

    The denominator is monic and coprime to the numerator; zero is ``0/1``.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num=(), den=None):
        F = field
        num = cf.trim(F, [F(c) for c in num])
        den = (F.one,) if den is None else cf.trim(F, [F(c) for c in den])
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = (F.one,)
        else:
            g = cf.pgcd(F, num, den)
            if len(g) > 1:
                num = cf.pdivmod(F, num, g)[0]
                den = cf.pdivmod(F, den, g)[0]
            lc = F.inv(den[-1])
            num, den = cf.pscale(F, lc, num), cf.pscale(F, lc, den)
        self.field = F
        self.num = num
        self.den = den

    @classmethod
    def const(cls, field, c) -> "RatFunc":
        return cls(field, (c,))

    @classmethod
    def x(cls, field) -> "RatFunc":
        return cls(field, (0, 1))

    @classmethod
    def poly(cls, field, coeffs) -> "RatFunc":
        return cls(field, coeffs)

    def is_zero(self) -> bool:
        return not self.num

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise ValueError(f"mixing {self.field.name}(X) and {other.field.name}(X)")
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.field, (other,))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        num = cf.padd(F, cf.pmul(F, self.num, o.den), cf.pmul(F, o.num, self.den))
        return RatFunc(F, num, cf.pmul(F, self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, cf.pneg(self.field, self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        return RatFunc(F, cf.pmul(F, self.num, o.num), cf.pmul(F, self.den, o.den))

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.field, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int) -> "RatFunc":
        base = self if n >= 0 else self.inv()
        out = RatFunc.const(self.field, 1)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (RatFunc, int, Fraction)) else None
        if o is None or o is NotImplemented:
            return NotImplemented
        return self.field == o.field and self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.field, self.num, self.den))

    def x_order(self) -> int | None:
        """Additive X-adic valuation: order of vanishing at 0 (``None`` for zero)."""
        if self.is_zero():
            return None
        a, _ = cf.x_power_split(self.field, self.num)
        b, _ = cf.x_power_split(self.field, self.den)
        return a - b

    def value_at_zero(self):
        """``num(0)/den(0)``; requires ``den(0) != 0``."""
        F = self.field
        n0 = self.num[0] if self.num else F.zero
        d0 = self.den[0]
        return F.mul(n0, F.inv(d0))

    def __str__(self) -> str:
        n = cf.pfmt(self.field, self.num)
        if self.den == (self.field.one,):
            return n
        return f"({n})/({cf.pfmt(self.field, self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self.field.name}, {self})"


Element = Union[int, Fraction, RatFunc]


@dataclass(frozen=True)
class PAdic:
    """The p-adic valuation on Q."""

    p: int

    def __post_init__(self):
        require_prime(self.p)

    def coerce(self, x) -> Fraction:
        if isinstance(x, RatFunc):
            raise TypeError("p-adic valuation takes rationals")
        return Fraction(x)

    def additive(self, x) -> int | None:
        return vp_rat(self.coerce(x), self.p)

    def uniformizer_element(self) -> Fraction:
        return Fraction(self.p)

    def residue_field(self) -> PrimeField:
        return PrimeField(self.p)

    def residue_of(self, x) -> int:
        return mod_rat(self.coerce(x), self.p)

    def __str__(self):
        return f"PAdic({self.p})"


@dataclass(frozen=True)
class XAdic:
    """The X-adic valuation on K(X), for K = F_p or Q."""

    field: Union[PrimeField, RationalField] = QQ

    def coerce(self, x) -> RatFunc:
        if isinstance(x, RatFunc):
            if x.field != self.field:
                raise ValueError(f"element of {x.field.name}(X), expected {self.field.name}(X)")
            return x
        return RatFunc.const(self.field, x)

    def additive(self, x) -> int | None:
        return self.coerce(x).x_order()

    def uniformizer_element(self) -> RatFunc:
        return RatFunc.x(self.field)

    def residue_field(self):
        return self.field

    def residue_of(self, x):
        return self.coerce(x).value_at_zero()

    def __str__(self):
        return f"XAdic({self.field.name})"


ValuationDescriptor = Union[PAdic, XAdic]


def val(v: ValuationDescriptor, x: Element) -> MultZ0:
    a = v.additive(x)
    return ZERO if a is None else MultZ0(-a)


def is_in_unit_ball(v: ValuationDescriptor, x: Element) -> bool:
    return val(v, x) <= ONE


def is_uniformizer(v: ValuationDescriptor, x: Element) -> bool:
    return val(v, x) == MultZ0(-1)


@dataclass(frozen=True)
class Uniformizer:
    """An element certified to have valuation ``of_add(-1)`` for ``valuation``.

    Construction validates; an invalid element raises
    :class:`~discval.errors.NotAUniformizerError`.
    """

    valuation: ValuationDescriptor
    element: object

    def __post_init__(self):
        x = self.valuation.coerce(self.element)
        object.__setattr__(self, "element", x)
        v = val(self.valuation, x)
        if v != MultZ0(-1):
            raise NotAUniformizerError(x, v)


def make_uniformizer(v: ValuationDescriptor, x: Element) -> Uniformizer:
    return Uniformizer(v, x)


def canonical_uniformizer(v: ValuationDescriptor) -> Uniformizer:
    """``p`` for the p-adic valuation, ``X`` for the X-adic one."""
    return Uniformizer(v, v.uniformizer_element())


def pow_uniformizer(v: ValuationDescriptor, r: Element, pi: Uniformizer) -> tuple[int, Element]:
    """Factor a nonzero unit-ball element as ``r = pi**n * u`` with ``u`` a unit."""
    r = v.coerce(r)
    if r == 0:
        raise ZeroDivisionError("pow_uniformizer of zero")
    n = v.additive(r)
    if n < 0:
        raise NotInUnitBallError(f"{r} has valuation {val(v, r)} > 1")
    u = r / pi.element ** n
    return n, u


def maximal_ideal_witness(v: ValuationDescriptor, x: Element, pi: Uniformizer) -> Element:
    """Return ``y`` in the unit ball with ``x = pi * y``."""
    x = v.coerce(x)
    if not val(v, x) < ONE:
        raise NotInMaximalIdealError(f"{x} has valuation {val(v, x)}, not < 1")
    return x / pi.element


def residue(v: ValuationDescriptor, x: Element):
    """Image of a unit-ball element in the residue field (F_p, or K for X-adic)."""
    x = v.coerce(x)
    if not is_in_unit_ball(v, x):
        raise NotInUnitBallError(f"{x} is not in the unit ball of {v}")
    return v.residue_of(x)

