"""
Extending a valuation to K[x]/(f)
=================================

On a finite extension L of Q_p or F_p((X)) of degree n the valuation
extends uniquely as ``w(x) = v(N(x)) / n``.  Certified moduli
(Eisenstein or residually irreducible) also give the ramification
data e and f with e*f = n.
"""

from fractions import Fraction

from discval import PAdicCtx
from discval.extension import (
    add_val_ext,
    is_integral,
    local_field_data,
    make_extension,
    norm,
    normalized_val,
    residue_map,
)

Q5 = PAdicCtx(5, prec=6)

# Q_5(sqrt 5) is totally ramified.
L = make_extension(Q5, [-5, 0, 1])
a = L.gen
print(L.cert.kind, add_val_ext(a), normalized_val(a))
print("N(1 + a) =", norm(1 + a))
print("1/(1 + a) =", (1 + a).inv())

# Q_5(sqrt 2) is unramified with residue field F_25.
U = make_extension(Q5, [-2, 0, 1])
print(local_field_data(U).record())
print(residue_map(U, 3 + 2 * U.gen))

# Integral elements are exactly those with w >= 0.
for x in (a, a / 5, U.embed_rat(Fraction(1, 3))):
    print(x, is_integral(x), add_val_ext(x))
