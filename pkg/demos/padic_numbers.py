"""
p-adic numbers at finite precision
==================================

Elements of Q_p are stored as ``p^v * unit`` with the unit known modulo
a power of p.  Precision is tracked through every operation, so a
printed ``O(p^k)`` is always an honest error bound.
"""

from fractions import Fraction

from discval import PAdicCtx
from discval.errors import ZeroIndistinguishableError

Q5 = PAdicCtx(5, prec=6)

# 1/3 has a repeating 5-adic expansion.
third = Q5(Fraction(1, 3))
print(third)

# Adding 2/3 gives 1 to the same precision.
print(third + Q5(Fraction(2, 3)))

# Multiplying by 3 also recovers 1.
print(third * 3)

# Subtracting nearly equal numbers loses digits: only O(5^k) survives.
a = Q5(Fraction(1, 3))
b = Q5(Fraction(1, 3) + 5 ** 4)
print(b - a)
print(a - a)

# A zero approximation cannot be inverted, since its valuation is unknown.
try:
    (a - a).inv()
except ZeroIndistinguishableError as exc:
    print("error:", exc)

# Rational approximation: any q with v_5(x - q) >= n.
print(third.approximate(4), third.residue())
