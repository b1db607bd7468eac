"""The value group Z^m0 of a discrete valuation, and its additive views.

``MultZ0`` is the multiplicative group ``{of_add(e) : e in Z}`` with an
absorbing bottom element ``0`` adjoined.  A nonzero element ``x`` of a
discretely valued field has ``v(x) = of_add(-a(x))`` where ``a`` is the
additive valuation, so *smaller* multiplicative values mean *larger*
additive ones.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import PrecisionError, UndefinedPowerError, ZeroInversionError


@functools.total_ordering
@dataclass(frozen=True)
class MultZ0:
    """An element of ``WithZero(Multiplicative Z)``.

    ``exp`` is ``None`` for the zero element, otherwise the exponent ``e``
    of ``of_add(e)``.  Use :meth:`of_add` and :data:`ZERO` to build values.
    """

    exp: Optional[int] = None

    @classmethod
    def of_add(cls, e: int) -> "MultZ0":
        return cls(int(e))

    @property
    def is_zero(self) -> bool:
        return self.exp is None

    def __mul__(self, other: "MultZ0") -> "MultZ0":
        if not isinstance(other, MultZ0):
            return NotImplemented
        if self.exp is None or other.exp is None:
            return ZERO
        return MultZ0(self.exp + other.exp)

    def __pow__(self, n: int) -> "MultZ0":
        if self.exp is None:
            if n <= 0:
                raise UndefinedPowerError(f"0^{n} is undefined in Z^m0")
            return ZERO
        return MultZ0(self.exp * n)

    def inv(self) -> "MultZ0":
        if self.exp is None:
            raise ZeroInversionError("0 has no inverse in Z^m0")
        return MultZ0(-self.exp)

    def __truediv__(self, other: "MultZ0") -> "MultZ0":
        return self * other.inv()

    def __lt__(self, other: "MultZ0") -> bool:
        if not isinstance(other, MultZ0):
            return NotImplemented
        if other.exp is None:
            return False
        if self.exp is None:
            return True
        return self.exp < other.exp

    def to_real(self, base: "NormBase | int | Fraction" = None) -> Fraction:
        """Embed into the nonnegative rationals: ``0 -> 0``, ``of_add(e) -> base**e``."""
        b = _as_base(base).base
        if self.exp is None:
            return Fraction(0)
        return b ** self.exp

    def to_addval(self) -> "AddVal":
        return AddVal(None if self.exp is None else -self.exp)

    def __str__(self) -> str:
        return "0" if self.exp is None else f"of_add({self.exp})"

    def __repr__(self) -> str:
        return "MultZ0.ZERO" if self.exp is None else f"MultZ0.of_add({self.exp})"


ZERO = MultZ0(None)
ONE = MultZ0(0)


def mul(x: MultZ0, y: MultZ0) -> MultZ0:
    return x * y


def le(x: MultZ0, y: MultZ0) -> bool:
    return x <= y


def pow(x: MultZ0, n: int) -> MultZ0:  # noqa: A001 - mirrors the value-group operation name
    return x ** n


def inv(x: MultZ0) -> MultZ0:
    return x.inv()


@functools.total_ordering
@dataclass(frozen=True)
class AddVal:
    """Additive valuation value in ``Z u {inf}``; ``a is None`` is infinity."""

    a: Optional[int] = None

    @classmethod
    def fin(cls, a: int) -> "AddVal":
        return cls(int(a))

    @property
    def is_infinite(self) -> bool:
        return self.a is None

    def __lt__(self, other: "AddVal") -> bool:
        if not isinstance(other, AddVal):
            return NotImplemented
        if self.a is None:
            return False
        return other.a is None or self.a < other.a

    def __str__(self) -> str:
        return "inf" if self.a is None else str(self.a)


INFINITY = AddVal(None)


def of_addval(a: AddVal) -> MultZ0:
    return ZERO if a.a is None else MultZ0(-a.a)


def to_addval(x: MultZ0) -> AddVal:
    return x.to_addval()


@dataclass(frozen=True)
class NormBase:
    """Base ``b`` of the embedding ``of_add(e) -> b**e`` into the reals.

    Defaults to 6; use :meth:`residue` for the standard choice ``p**k`` when
    the residue field has ``p**k`` elements.
    """

    base: Fraction = Fraction(6)

    def __post_init__(self):
        b = Fraction(self.base)
        if b <= 0:
            raise ValueError("norm base must be positive")
        object.__setattr__(self, "base", b)

    @classmethod
    def residue(cls, p: int, k: int = 1) -> "NormBase":
        return cls(Fraction(p) ** k)

    @property
    def is_monotone(self) -> bool:
        return self.base > 1


def _as_base(b) -> NormBase:
    if b is None:
        return NormBase()
    if isinstance(b, NormBase):
        return b
    return NormBase(Fraction(b))


def to_real(x: MultZ0, b: "NormBase | int | Fraction" = None) -> Fraction:
    return x.to_real(b)


@dataclass(frozen=True)
class ValBound:
    """Precision-honest additive valuation of a finite-precision element.

    ``kind`` is ``"exact"`` (value is the valuation), ``"atleast"`` (all
    known digits vanish; value is a lower bound) or ``"infinite"`` (the
    element is exactly zero).
    """

    kind: str
    value: Optional[int] = None

    @classmethod
    def exact(cls, a: int) -> "ValBound":
        return cls("exact", int(a))

    @classmethod
    def at_least(cls, k: int) -> "ValBound":
        return cls("atleast", int(k))

    @classmethod
    def infinite(cls) -> "ValBound":
        return cls("infinite")

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def is_ge(self, d: int) -> bool:
        """Decide ``valuation >= d``; raises if the bound is too weak."""
        if self.kind == "infinite":
            return True
        if self.kind == "exact":
            return self.value >= d
        if self.value >= d:
            return True
        raise PrecisionError(f"valuation >= {self.value} known; cannot decide >= {d}")

    def to_multz0(self) -> MultZ0:
        if self.kind == "infinite":
            return ZERO
        if self.kind == "exact":
            return MultZ0(-self.value)
        raise PrecisionError(f"only a lower bound {self.value} on the valuation is known")

    def __str__(self) -> str:
        if self.kind == "exact":
            return f"Exact({self.value})"
        if self.kind == "atleast":
            return f"AtLeast({self.value})"
        return "ExactlyInfinite"
