"""
Valuations on Q and K(X)
========================

A discrete valuation sends a nonzero element to a power of a fixed
generator.  We write the values multiplicatively, in the group Z
with a zero adjoined: ``of_add(-n)`` stands for "divisible n times".
"""

from fractions import Fraction

from discval import PAdic, RatFunc, XAdic, canonical_uniformizer, pow_uniformizer, val
from discval.coefficients import PrimeField

# The 7-adic valuation of 392/5.  392 = 2^3 * 7^2, so the answer is of_add(-2).
v7 = PAdic(7)
print(val(v7, Fraction(392, 5)))

# Zero sits below everything, one is the unit value.
print(val(v7, 0), val(v7, 1))

# Multiplicativity and the ultrametric inequality, on a pair of rationals.
x, y = Fraction(49, 3), Fraction(14, 9)
print(val(v7, x * y) == val(v7, x) * val(v7, y))
print(val(v7, x + y) <= max(val(v7, x), val(v7, y)))

# The X-adic valuation on F_3(X) counts the order of vanishing at X = 0.
F3 = PrimeField(3)
X = RatFunc.x(F3)
r = X ** 2 * (1 + X) / (2 + X)
vX = XAdic(F3)
print(r, "->", val(vX, r))

# Every unit-ball element factors as pi^n times a unit.
pi = canonical_uniformizer(vX)
n, u = pow_uniformizer(vX, r, pi)
print(f"n = {n}, u = {u}, val(u) = {val(vX, u)}")
