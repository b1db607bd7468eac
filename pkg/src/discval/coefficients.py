"""Coefficient fields (F_p and Q) and dense polynomial helpers over them.

Polynomials are tuples of field elements in ascending order with no
trailing zeros; ``()`` is the zero polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import mod_rat, require_prime


@dataclass(frozen=True)
class PrimeField:
    """The field F_p; elements are ints in ``range(p)``."""

    p: int

    def __post_init__(self):
        require_prime(self.p)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return f"F{self.p}"

    zero = 0
    one = 1

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return mod_rat(x, self.p)
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return pow(a, -1, self.p)

    def fmt(self, a) -> str:
        return str(a)

    def elements(self):
        return range(self.p)


@dataclass(frozen=True)
class RationalField:
    """The field Q; elements are ``Fraction``."""

    characteristic = 0
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / Fraction(a)

    def fmt(self, a) -> str:
        return str(a)


QQ = RationalField()


def field_from_name(name: str):
    """Parse ``"Q"``/``"QQ"`` or ``"F<p>"``/``"GF<p>"``."""
    s = name.strip().upper()
    if s in ("Q", "QQ"):
        return QQ
    for prefix in ("GF", "F"):
        if s.startswith(prefix) and s[len(prefix):].isdigit():
            return PrimeField(int(s[len(prefix):]))
    raise ValueError(f"unknown coefficient field {name!r}")


# --- dense polynomials -----------------------------------------------------

def trim(F, a) -> tuple:
    a = list(a)
    while a and a[-1] == F.zero:
        a.pop()
    return tuple(a)


def deg(a) -> int:
    """Degree; the zero polynomial has degree -1 here (stands in for -inf)."""
    return len(a) - 1


def padd(F, a, b) -> tuple:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero
        y = b[i] if i < len(b) else F.zero
        out.append(F.add(x, y))
    return trim(F, out)


def pneg(F, a) -> tuple:
    return tuple(F.neg(x) for x in a)


def psub(F, a, b) -> tuple:
    return padd(F, a, pneg(F, b))


def pscale(F, c, a) -> tuple:
    return trim(F, [F.mul(c, x) for x in a])


def pmul(F, a, b) -> tuple:
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == F.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(F, out)


def pdivmod(F, a, b) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    lc_inv = F.inv(b[-1])
    db = len(b) - 1
    q = [F.zero] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k]
        if c == F.zero:
            continue
        c = F.mul(c, lc_inv)
        q[k - db] = c
        for j in range(db + 1):
            r[k - db + j] = F.sub(r[k - db + j], F.mul(c, b[j]))
    return trim(F, q), trim(F, r[:db] if db > 0 else [])


def monic(F, a) -> tuple:
    if not a:
        return a
    return pscale(F, F.inv(a[-1]), a)


def pgcd(F, a, b) -> tuple:
    a, b = trim(F, a), trim(F, b)
    while b:
        a, b = b, pdivmod(F, a, b)[1]
    return monic(F, a)


def pxgcd(F, a, b) -> tuple[tuple, tuple, tuple]:
    """Return monic ``g`` and ``s, t`` with ``s*a + t*b = g``."""
    r0, r1 = trim(F, a), trim(F, b)
    s0, s1 = (F.one,), ()
    t0, t1 = (), (F.one,)
    while r1:
        q, r = pdivmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(F, s0, pmul(F, q, s1))
        t0, t1 = t1, psub(F, t0, pmul(F, q, t1))
    if not r0:
        return (), s0, t0
    c = F.inv(r0[-1])
    return pscale(F, c, r0), pscale(F, c, s0), pscale(F, c, t0)


def ppowmod(F, a, n: int, m) -> tuple:
    result = (F.one,)
    base = pdivmod(F, a, m)[1]
    while n > 0:
        if n & 1:
            result = pdivmod(F, pmul(F, result, base), m)[1]
        base = pdivmod(F, pmul(F, base, base), m)[1]
        n >>= 1
    return pdivmod(F, result, m)[1]


def x_power_split(F, a) -> tuple[int, tuple]:
    """Write a nonzero ``a = X**k * b`` with ``b(0) != 0``."""
    k = 0
    while a[k] == F.zero:
        k += 1
    return k, tuple(a[k:])


def pfmt(F, a, var: str = "X") -> str:
    """Dense ascending rendering, e.g. ``1 + 2*X + X^3``; zero prints ``0``."""
    terms = []
    for i, c in enumerate(a):
        if c == F.zero:
            continue
        terms.append(_term(F.fmt(c), i, var))
    if not terms:
        return "0"
    return join_terms(terms)


def _term(cs: str, i: int, var: str) -> str:
    if i == 0:
        return cs
    mono = var if i == 1 else f"{var}^{i}"
    if cs == "1":
        return mono
    if cs == "-1":
        return "-" + mono
    return f"{cs}*{mono}"


def join_terms(terms: list[str]) -> str:
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out
