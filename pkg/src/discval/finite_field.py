"""Arithmetic in F_p, F_p[x] and F_p[t]/(g).

These are the residue fields of the local fields handled in
:mod:`discval.extension`; the Rabin irreducibility test is the engine that
certifies unramified extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import coefficients as cf
from .arith import prime_factors, require_prime
from .coefficients import PrimeField


def fp_add(a: int, b: int, p: int) -> int:
    return (a + b) % p


def fp_mul(a: int, b: int, p: int) -> int:
    return a * b % p


def fp_inv(a: int, p: int) -> int:
    if a % p == 0:
        raise ZeroDivisionError(f"0 is not invertible in F_{p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p, coefficients ascending and trimmed."""

    p: int
    coeffs: tuple = ()

    def __post_init__(self):
        require_prime(self.p)
        c = tuple(int(x) % self.p for x in self.coeffs)
        object.__setattr__(self, "coeffs", cf.trim(self.field, c))

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.p)

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @property
    def degree(self) -> int:
        """Degree, or ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _wrap(self, c) -> "FpPoly":
        return FpPoly(self.p, c)

    def _coerce(self, other) -> "FpPoly":
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p} polynomials")
            return other
        if isinstance(other, int):
            return FpPoly(self.p, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(cf.padd(self.field, self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(cf.pneg(self.field, self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(cf.psub(self.field, self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(cf.pmul(self.field, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        q, r = cf.pdivmod(self.field, self.coeffs, other.coeffs)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = (y * x + c) % self.p
        return y

    def monic(self) -> "FpPoly":
        return self._wrap(cf.monic(self.field, self.coeffs))

    def gcd(self, other: "FpPoly") -> "FpPoly":
        return self._wrap(cf.pgcd(self.field, self.coeffs, self._coerce(other).coeffs))

    def powmod(self, n: int, m: "FpPoly") -> "FpPoly":
        return self._wrap(cf.ppowmod(self.field, self.coeffs, n, m.coeffs))

    def __str__(self) -> str:
        return cf.pfmt(self.field, self.coeffs, "x")


def poly_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    return a.gcd(b)


def powmod(a: FpPoly, n: int, m: FpPoly) -> FpPoly:
    return a.powmod(n, m)


def is_irreducible(f: FpPoly) -> bool:
    """Rabin's test.

    ``f`` of degree ``n`` is irreducible iff ``x^(p^n) = x (mod f)`` and
    ``gcd(x^(p^(n/q)) - x, f) = 1`` for every prime ``q | n``.
    """
    n = f.degree
    if n < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    f = f.monic()
    if n == 1:
        return True
    p = f.p
    x = FpPoly.x(p)
    for q in prime_factors(n):
        h = x.powmod(p ** (n // q), f) - x
        if f.gcd(h).degree != 0:
            return False
    return (x.powmod(p ** n, f) - x) % f == FpPoly(p)


class FiniteField:
    """F_p[t]/(g) for a monic irreducible ``g``; irreducibility is checked once."""

    def __init__(self, modulus: FpPoly, var: str = "t"):
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if modulus.lc != 1:
            raise ValueError("modulus must be monic")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus} is reducible over F_{modulus.p}")
        self.modulus = modulus
        self.var = var

    @classmethod
    def prime(cls, p: int) -> "FiniteField":
        """F_p itself, presented as F_p[t]/(t)."""
        return cls(FpPoly(p, (0, 1)))

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def order(self) -> int:
        return self.p ** self.degree

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"FiniteField({self.modulus})"

    def __call__(self, x) -> "FFElem":
        if isinstance(x, FFElem):
            if x.field != self:
                raise ValueError("element of a different finite field")
            return x
        if isinstance(x, int):
            x = FpPoly(self.p, (x,))
        elif not isinstance(x, FpPoly):
            x = FpPoly(self.p, tuple(x))
        return FFElem(self, x % self.modulus)

    @cached_property
    def gen(self) -> "FFElem":
        return self(FpPoly.x(self.p))

    def zero(self) -> "FFElem":
        return self(0)

    def one(self) -> "FFElem":
        return self(1)

    def elements(self):
        """All ``p**deg`` elements, in base-p counting order of coordinates."""
        for k in range(self.order):
            digits = []
            for _ in range(self.degree):
                k, d = divmod(k, self.p)
                digits.append(d)
            yield self(FpPoly(self.p, tuple(digits)))


@dataclass(frozen=True)
class FFElem:
    field: FiniteField
    rep: FpPoly

    def _other(self, other) -> "FFElem":
        if isinstance(other, FFElem):
            if other.field != self.field:
                raise ValueError("modulus mismatch")
            return other
        return self.field(other)

    def __add__(self, other):
        return self.field(self.rep + self._other(other).rep)

    __radd__ = __add__

    def __sub__(self, other):
        return self.field(self.rep - self._other(other).rep)

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        return self.field(-self.rep)

    def __mul__(self, other):
        return self.field(self.rep * self._other(other).rep)

    __rmul__ = __mul__

    def inv(self) -> "FFElem":
        if self.rep.is_zero():
            raise ZeroDivisionError("0 is not invertible")
        F = self.field.modulus.field
        g, s, _ = cf.pxgcd(F, self.rep.coeffs, self.field.modulus.coeffs)
        assert g == (1,)
        return self.field(FpPoly(self.field.p, s))

    def __truediv__(self, other):
        return self * self._other(other).inv()

    def __pow__(self, n: int) -> "FFElem":
        if n < 0:
            return self.inv() ** (-n)
        return self.field(self.rep.powmod(n, self.field.modulus))

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def frobenius(self) -> "FFElem":
        return self ** self.field.p

    def __str__(self) -> str:
        return cf.pfmt(self.rep.field, self.rep.coeffs, self.field.var)
