"""Exact arithmetic for discretely valued fields.

Value group Z^m0, p-adic and X-adic valuations on Q and K(X), the
completions Q_p and K((X)) at finite precision, residue fields, and
finite extensions of Q_p and F_p((X)) with the extended valuation.
"""

from .coefficients import QQ, PrimeField
from .extension import (
    add_val_ext,
    is_integral,
    local_field_data,
    make_extension,
    norm,
    normalized_val,
    residue_map,
    value_group_generator,
)
from .finite_field import FiniteField, FpPoly, is_irreducible
from .laurent import LaurentCtx, LaurentSeries, from_ratfunc
from .padic import PAdicCtx, PAdicNum, from_rat
from .valuation_core import (
    PAdic,
    RatFunc,
    Uniformizer,
    XAdic,
    canonical_uniformizer,
    is_in_unit_ball,
    is_uniformizer,
    make_uniformizer,
    maximal_ideal_witness,
    pow_uniformizer,
    residue,
    val,
)
from .value_group import ONE, ZERO, AddVal, MultZ0, NormBase, ValBound

__version__ = "0.1.0"
