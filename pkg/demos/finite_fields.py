"""
Finite fields as residue fields
===============================

F_q is built as F_p[t] modulo an irreducible polynomial; Rabin's test
decides irreducibility without factoring.
"""

from discval import FiniteField, FpPoly, is_irreducible

# x^2 + 1 is irreducible over F_3 but not over F_5 (since 2^2 = -1 there).
print(is_irreducible(FpPoly(3, (1, 0, 1))), is_irreducible(FpPoly(5, (1, 0, 1))))

F9 = FiniteField(FpPoly(3, (1, 0, 1)))
t = F9.gen
print(F9.order, t * t, (1 + t) ** 4)

# Every nonzero element has an inverse, and Frobenius fixes F_3.
print([str(x * x.inv()) for x in F9.elements() if not x.is_zero()][:4])
print(t.frobenius(), F9(2).frobenius())

# Counting irreducible monic quartics over F_2.
from itertools import product

quartics = [FpPoly(2, low + (1,)) for low in product(range(2), repeat=4)]
print(sum(is_irreducible(f) for f in quartics))
