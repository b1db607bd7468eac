"""Finite extensions ``L = K[x]/(f)`` of ``K = Q_p`` or ``K = F_p((X))``.

The unique extension of the valuation of ``K`` to ``L`` is computed from
norms::

    w(x) = a(N_{L/K}(x)) / n,        n = [L : K],

where ``a`` is the additive valuation of ``K`` and the norm is the
determinant of multiplication-by-``x`` on the power basis
``1, a, ..., a^(n-1)``.  The determinant is the constant term (up to sign)
of the characteristic polynomial, which is a power of the minimal
polynomial, so this agrees with the root-of-constant-coefficient formula
for the spectral norm.

Normalizing ``w`` needs the ramification index ``e``.  It is certified,
never guessed: Eisenstein moduli give ``e = n``, moduli with irreducible
reduction give ``e = 1``; anything else gets ``NoCertificate`` and only
the unnormalized ``w`` is available.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    ContextMismatchError,
    NoCertificateError,
    NotIntegralError,
    PrecisionError,
    ZeroIndistinguishableError,
)
from .finite_field import FFElem, FiniteField, FpPoly, is_irreducible
from .laurent import LaurentCtx, LaurentSeries
from .padic import PAdicCtx, PAdicNum
from .value_group import MultZ0, NormBase, ValBound
from .coefficients import PrimeField

BaseCtx = Union[PAdicCtx, LaurentCtx]
BaseElem = Union[PAdicNum, LaurentSeries]

EISENSTEIN = "eisenstein"
UNRAMIFIED = "unramified"
NO_CERTIFICATE = "none"

DEFAULT_MAX_DEGREE = 8


@dataclass(frozen=True)
class QVal:
    """Extended additive valuation: ``None`` for infinity, else a rational."""

    q: Optional[Fraction]

    @property
    def is_infinite(self) -> bool:
        return self.q is None

    def __str__(self):
        return "inf" if self.q is None else str(self.q)


@dataclass(frozen=True)
class NormValue:
    """``base ** exp`` (or zero): a value of the spectral norm."""

    base: NormBase
    exp: Optional[Fraction]

    @property
    def is_zero(self) -> bool:
        return self.exp is None

    def __float__(self):
        return 0.0 if self.exp is None else float(self.base.base) ** float(self.exp)

    def __str__(self):
        return "0" if self.exp is None else f"{self.base.base}^({self.exp})"


@dataclass(frozen=True)
class Certificate:
    kind: str
    residual: Optional[FpPoly] = None


class ExtField:
    """``K[x]/(f)`` for a monic ``f``; build with :func:`make_extension`."""

    def __init__(self, base: BaseCtx, coeffs: Sequence[BaseElem], cert: Certificate):
        self.base = base
        self.coeffs = tuple(coeffs)  # a_0 .. a_{n-1}; leading 1 implicit
        self.cert = cert

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def p(self) -> int:
        return self.base.residue_char

    def __repr__(self):
        return f"ExtField({self.base}, {self.modulus_str()}, cert={self.cert.kind})"

    def modulus_str(self) -> str:
        parts = [f"x^{self.n}" if self.n > 1 else "x"]
        for i in range(self.n - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_exact_zero():
                continue
            mono = "" if i == 0 else ("*x" if i == 1 else f"*x^{i}")
            parts.append(f"({c}){mono}")
        return " + ".join(parts)

    # -- element construction ---------------------------------------------

    def element(self, coords: Sequence) -> "ExtElem":
        coords = [self.base(c) for c in coords]
        if len(coords) > self.n:
            raise ValueError(f"expected at most {self.n} coordinates")
        coords += [self.base.zero()] * (self.n - len(coords))
        return ExtElem(self, tuple(coords))

    def embed_base(self, c) -> "ExtElem":
        return self.element([c])

    def embed_rat(self, q) -> "ExtElem":
        return self.element([self.base(q)])

    def zero(self) -> "ExtElem":
        return self.element([])

    def one(self) -> "ExtElem":
        return self.embed_rat(1)

    @property
    def gen(self) -> "ExtElem":
        """The class ``a`` of ``x``."""
        if self.n == 1:
            return self.embed_base(-self.coeffs[0])
        z, one = self.base.zero(), self.base.one()
        return ExtElem(self, tuple(one if i == 1 else z for i in range(self.n)))

    # -- invariants of the extension ----------------------------------------

    def _require_cert(self):
        if self.cert.kind == NO_CERTIFICATE:
            raise NoCertificateError(
                f"{self.modulus_str()} is neither Eisenstein nor residually irreducible; "
                "ramification data is not certified")

    def ramification_index(self) -> int:
        self._require_cert()
        return self.n if self.cert.kind == EISENSTEIN else 1

    def residue_degree(self) -> int:
        self._require_cert()
        return 1 if self.cert.kind == EISENSTEIN else self.n

    def residue_field(self) -> FiniteField:
        self._require_cert()
        if self.cert.kind == UNRAMIFIED:
            return FiniteField(self.cert.residual, "t")
        return FiniteField.prime(self.p)

    def uniformizer(self) -> "ExtElem":
        """``a`` for Eisenstein moduli, the base uniformizer for unramified ones."""
        self._require_cert()
        if self.cert.kind == EISENSTEIN:
            return self.gen
        return self.embed_base(self.base.uniformizer())

    def uniformizer_str(self) -> str:
        self._require_cert()
        if self.cert.kind == EISENSTEIN:
            return "a"
        return "X" if isinstance(self.base, LaurentCtx) else str(self.p)


class ExtElem:
    """Element of an :class:`ExtField`, as power-basis coordinates."""

    __slots__ = ("parent", "coords")

    def __init__(self, parent: ExtField, coords: tuple):
        self.parent = parent
        self.coords = coords

    def _coerce(self, other) -> "ExtElem":
        if isinstance(other, ExtElem):
            if other.parent is not self.parent:
                raise ContextMismatchError("elements of different extensions")
            return other
        if isinstance(other, (int, Fraction, PAdicNum, LaurentSeries)):
            return self.parent.embed_base(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtElem(self.parent, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return ExtElem(self.parent, tuple(-a for a in self.coords))

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
        K = self.parent
        n = K.n
        prod = [K.base.zero() for _ in range(2 * n - 1)]
        for i, a in enumerate(self.coords):
            if a.is_exact_zero():
                continue
            for j, b in enumerate(o.coords):
                if not b.is_exact_zero():
                    prod[i + j] = prod[i + j] + a * b
        # x^n = -(a_0 + ... + a_{n-1} x^{n-1})
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c.is_exact_zero():
                continue
            for i, a in enumerate(K.coeffs):
                if not a.is_exact_zero():
                    prod[k - n + i] = prod[k - n + i] - c * a
        return ExtElem(K, tuple(prod[:n]))

    __rmul__ = __mul__

    def times_gen(self) -> "ExtElem":
        K = self.parent
        top = self.coords[-1]
        shifted = (K.base.zero(),) + self.coords[:-1]
        if top.is_exact_zero():
            return ExtElem(K, shifted)
        return ExtElem(K, tuple(s - top * a for s, a in zip(shifted, K.coeffs)))

    def mult_matrix(self) -> list[list[BaseElem]]:
        """Matrix of ``y -> self*y``; column ``j`` holds the coordinates of ``self * a^j``."""
        cols = [self]
        for _ in range(self.parent.n - 1):
            cols.append(cols[-1].times_gen())
        n = self.parent.n
        return [[cols[j].coords[i] for j in range(n)] for i in range(n)]

    def is_exact_zero(self) -> bool:
        return all(c.is_exact_zero() for c in self.coords)

    def norm(self) -> BaseElem:
        return norm(self)

    def inv(self) -> "ExtElem":
        """Inverse via the adjugate: ``x^-1 = adj(M) e_0 / det M``."""
        M = self.mult_matrix()
        d, minors = _det_with_first_row_minors(M, self.parent.base.zero())
        if d.is_zero_approx():
            raise ZeroIndistinguishableError(f"norm of {self} is {d}; cannot invert")
        d_inv = d.inv()
        coords = tuple((m if i % 2 == 0 else -m) * d_inv for i, m in enumerate(minors))
        return ExtElem(self.parent, coords)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int) -> "ExtElem":
        if n < 0:
            return self.inv() ** (-n)
        out = self.parent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, ExtElem):
            return NotImplemented
        return self.parent is other.parent and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords):
            if c.is_exact_zero():
                continue
            s = str(c)
            if i == 0:
                terms.append(s)
                continue
            mono = "a" if i == 1 else f"a^{i}"
            terms.append(f"({s})*{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"ExtElem({self})"


def _det_with_first_row_minors(M, zero):
    """Division-free determinant by Laplace expansion with memoized minors.

    Returns ``(det M, [minor(0, j) for j])`` where ``minor(0, j)`` deletes
    row 0 and column ``j``.  Cost is ``O(2^n * n)`` ring operations.
    """
    n = len(M)
    full = (1 << n) - 1
    memo: dict[int, BaseElem] = {}

    def det_from(mask: int) -> BaseElem:
        # rows i.. with i = popcount(mask), columns not in mask
        if mask == full:
            return None
        if mask in memo:
            return memo[mask]
        i = bin(mask).count("1")
        total = zero
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                continue
            entry = M[i][j]
            if not entry.is_exact_zero():
                sub = det_from(mask | 1 << j)
                term = entry if sub is None else entry * sub
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    d = det_from(0)
    minors = []
    for j in range(n):
        m = det_from(1 << j)
        minors.append(M[0][0].ctx.one() if m is None else m)
    return d, minors


# -- construction and certificates -----------------------------------------

def _base_elem(base: BaseCtx, c) -> BaseElem:
    return base(c)


def _is_one(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 1
    if isinstance(c, (PAdicNum, LaurentSeries)):
        return (c - 1).is_zero_approx()
    return c == 1


def make_extension(base: BaseCtx, f: Sequence, max_degree: int = DEFAULT_MAX_DEGREE) -> ExtField:
    """Build ``base[x]/(f)`` from the coefficient list ``f = [a_0, ..., a_{n-1}, 1]``.

    Coefficients may be rationals (p-adic base), rational functions in ``X``
    (Laurent base) or base elements.  The certificate is detected here.
    """
    f = list(f)
    while len(f) > 1 and isinstance(f[-1], (int, Fraction)) and f[-1] == 0:
        f.pop()
    if len(f) < 2:
        raise ValueError("modulus must have degree >= 1")
    if not _is_one(f[-1]):
        raise ValueError(f"modulus must be monic (leading coefficient {f[-1]})")
    if isinstance(base, LaurentCtx) and not isinstance(base.field, PrimeField):
        raise ValueError("Laurent base field must be F_p((X))")
    n = len(f) - 1
    if n > max_degree:
        raise ValueError(f"degree {n} exceeds the configured maximum {max_degree}")
    coeffs = tuple(_base_elem(base, c) for c in f[:-1])
    return ExtField(base, coeffs, _certify(base, coeffs))


def _certify(base: BaseCtx, coeffs) -> Certificate:
    vals = [c.valuation() for c in coeffs]
    n = len(coeffs)
    try:
        eis = all(v.is_ge(1) for v in vals) and vals[0] == ValBound.exact(1)
        if eis:
            return Certificate(EISENSTEIN)
        if all(v.is_ge(0) for v in vals):
            p = base.residue_char
            residual = FpPoly(p, tuple(c.residue() for c in coeffs) + (1,))
            if residual.degree == n and is_irreducible(residual):
                return Certificate(UNRAMIFIED, residual)
    except PrecisionError as exc:
        raise PrecisionError(f"modulus coefficients too imprecise to certify: {exc}") from exc
    return Certificate(NO_CERTIFICATE)


# -- valuations -------------------------------------------------------------

def norm(x: ExtElem) -> BaseElem:
    """``N_{L/K}(x)`` as the determinant of the multiplication matrix."""
    M = x.mult_matrix()
    d, _ = _det_with_first_row_minors(M, x.parent.base.zero())
    return d


def add_val_ext(x: ExtElem) -> QVal:
    """Extended additive valuation ``a(N(x)) / n``."""
    if x.is_exact_zero():
        return QVal(None)
    N = norm(x)
    v = N.valuation()
    if not v.is_exact:
        raise PrecisionError(f"norm {N} is zero to the available precision; valuation undecided")
    return QVal(Fraction(v.value, x.parent.n))


def val_ext(x: ExtElem) -> MultZ0:
    """Normalized multiplicative valuation ``of_add(-e * w(x))``."""
    return normalized_val(x).to_multz0()


def spectral_norm(x: ExtElem, base: Optional[NormBase] = None) -> NormValue:
    """``|x|_L = base ** (-w(x))``; ``base`` defaults to the residue order ``p`` of ``K``."""
    b = base or NormBase.residue(x.parent.p)
    w = add_val_ext(x)
    return NormValue(b, None if w.q is None else -w.q)


def ramification_index(ext: ExtField) -> int:
    return ext.ramification_index()


def residue_degree(ext: ExtField) -> int:
    return ext.residue_degree()


def normalized_val(x: ExtElem) -> ValBound:
    e = x.parent.ramification_index()
    w = add_val_ext(x)
    if w.q is None:
        return ValBound.infinite()
    v = e * w.q
    # e * w is integral for certified extensions
    assert v.denominator == 1, v
    return ValBound.exact(int(v))


def value_group_generator(ext: ExtField, samples: Sequence[ExtElem]) -> int:
    """Divisor of ``e`` read off the observed values ``n * w(s)``.

    The base uniformizer is always included; the result equals ``e`` as
    soon as the samples generate the value group.
    """
    if not samples:
        raise ValueError("value_group_generator needs at least one sample")
    vals = [ext.n]  # n * w(base uniformizer)
    for s in samples:
        w = add_val_ext(s)
        if w.q is None:
            raise ValueError("samples must be nonzero")
        vals.append(int(w.q * ext.n))
    c = 0
    for v in vals:
        c = math.gcd(c, v)
    return ext.n // c


def is_integral(x: ExtElem) -> bool:
    """Ring-of-integers membership: ``w(x) >= 0``."""
    w = add_val_ext(x)
    return w.q is None or w.q >= 0


def uniformizer_ext(ext: ExtField) -> ExtElem:
    return ext.uniformizer()


def residue_map(ext: ExtField, x: ExtElem) -> FFElem:
    """Reduction of an integral element into the residue field of ``L``."""
    k = ext.residue_field()
    if not is_integral(x):
        raise NotIntegralError(f"{x} is not integral (w = {add_val_ext(x)})")
    digits = [c.residue() for c in x.coords]
    if ext.cert.kind == EISENSTEIN:
        # a lies in the maximal ideal, so only the constant coordinate survives
        return k(digits[0])
    return k(FpPoly(ext.p, tuple(digits)))


@dataclass(frozen=True)
class LocalFieldData:
    certificate: str
    n: int
    e: int
    f: int
    residue_order: int
    uniformizer: str
    discrete: bool = True
    complete: bool = True

    def record(self) -> dict:
        """Flat machine-readable record, fixed key order."""
        return {
            "certificate": self.certificate,
            "n": self.n,
            "e": self.e,
            "f": self.f,
            "residue_order": self.residue_order,
            "uniformizer": self.uniformizer,
        }


def local_field_data(ext: ExtField) -> LocalFieldData:
    e, f = ext.ramification_index(), ext.residue_degree()
    return LocalFieldData(
        certificate=ext.cert.kind,
        n=ext.n,
        e=e,
        f=f,
        residue_order=ext.p ** f,
        uniformizer=ext.uniformizer_str(),
    )
