"""
Truncated Laurent series
========================

The completion of K(X) at X is K((X)).  Series here carry an absolute
precision ``O(X^A)``; rational functions expand by solving the
coefficient recurrence.
"""

from fractions import Fraction

from discval import LaurentCtx, RatFunc
from discval.coefficients import QQ, PrimeField

F2 = PrimeField(2)
L2 = LaurentCtx(F2, prec=8)
X = RatFunc.x(F2)

# The geometric series over F_2.
g = L2(1 / (1 + X))
print(g)
print(g * L2(1 + X))

# Poles are fine: the expansion starts at a negative power.
LQ = LaurentCtx(QQ, prec=5)
Y = RatFunc.x(QQ)
f = LQ((1 + Y) / (Y ** 2 * (1 - Y)))
print(f)
print("valuation bound:", f.valuation())

# The leading coefficient and the order decide the valuation.
print(f.coeff(-2), f.coeff(0), f.approximate_by_ratfunc(2))

# Units of F[[X]] invert termwise.
u = LQ.series(0, [1, Fraction(1, 2), 3])
print(u.inv())
