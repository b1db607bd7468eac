from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from discval.arith import vp_rat
from discval.errors import ContextMismatchError, NotIntegralError, PrecisionError, ZeroIndistinguishableError
from discval.padic import PAdicCtx, approximate, from_rat, inv, residue, valuation
from discval.valuation_core import PAdic, val
from discval.value_group import ValBound

from conftest import coprime_rationals, rationals

PRIMES = [2, 3, 5, 7, 97]


def ext_euclid_inverse(a, m):
    """Independent modular inverse by the extended Euclidean algorithm."""
    r0, r1, s0, s1 = m, a % m, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    assert r0 == 1
    return s0 % m


def agrees(x, q):
    """x represents q: v_p(q - lift(x)) >= absolute precision of x."""
    d = Fraction(q) - x.lift()
    return d == 0 or vp_rat(d, x.p) >= x.absprec


Q5 = PAdicCtx(5, 4)


class TestFromRat:
    def test_one_third(self):
        x = from_rat(Q5, Fraction(1, 3))
        assert ext_euclid_inverse(3, 5 ** 4) == 417
        assert (x.val, x.unit, x.rel) == (0, 417, 4)
        assert x.digits() == [2, 3, 1, 3]

    def test_fifty(self):
        x = from_rat(Q5, 50)
        assert (x.val, x.unit) == (2, 2)

    def test_zero_is_exact(self):
        z = from_rat(Q5, 0)
        assert z.is_exact_zero() and valuation(z) == ValBound.infinite()

    @given(rationals(nonzero=True), st.sampled_from(PRIMES))
    def test_agrees_with_valuation_core(self, q, p):
        x = from_rat(PAdicCtx(p, 10), q)
        assert valuation(x) == ValBound.exact(-val(PAdic(p), q).exp)
        assert agrees(x, q)


class TestArithmetic:
    def test_add_examples(self):
        Q = PAdicCtx(5, 4)
        s = Q(2) + Q(3)
        assert (s.val, s.unit) == (1, 1)
        z = Q(1) + Q(-1)
        assert z.is_zero_approx() and z.absprec == 4
        one = Q(Fraction(1, 3)) + Q(Fraction(2, 3))
        assert (one.val, one.unit) == (0, 1)

    def test_mul_examples(self):
        Q = PAdicCtx(5, 4)
        x = Q(50) * Q(Fraction(1, 3))
        assert 2 * 417 % 625 == 209
        assert (x.val, x.unit) == (2, 209)
        assert Q(Fraction(7, 9)) * Q(1) == Q(Fraction(7, 9))
        y = Q(5) * Q(Fraction(1, 5))
        assert (y.val, y.unit) == (0, 1)

    def test_inv_examples(self):
        assert inv(Q5(3)) == Q5(Fraction(1, 3))
        x = inv(Q5(5))
        assert (x.val, x.unit) == (-1, 1)
        with pytest.raises(ZeroIndistinguishableError):
            inv(Q5.zero_approx(10))

    def test_precision_rules(self):
        Q = PAdicCtx(3, 6)
        x = Q(1) + Q.zero_approx(2)
        assert x.absprec == 2
        y = Q(9) * Q.zero_approx(4)
        assert y.is_zero_approx() and y.absprec == 6
        assert (Q(1) * Q(2, prec=3)).rel == 3
        assert Q(4) * Q.zero() == Q.zero()

    def test_context_mismatch(self):
        with pytest.raises(ContextMismatchError):
            PAdicCtx(5)(1) + PAdicCtx(7)(1)

    @given(coprime_rationals(7), coprime_rationals(7), st.sampled_from(["+", "-", "*", "/"]))
    def test_embedding_is_homomorphism(self, a, b, op):
        Q = PAdicCtx(7, 12)
        x, y = Q(a), Q(b)
        if op == "+":
            got, want = x + y, a + b
        elif op == "-":
            got, want = x - y, a - b
        elif op == "*":
            got, want = x * y, a * b
        else:
            assume(b != 0)
            got, want = x / y, a / b
        assert agrees(got, want)

    @given(rationals(nonzero=True), rationals(nonzero=True), st.sampled_from([2, 3, 5]))
    def test_ultrametric(self, a, b, p):
        Q = PAdicCtx(p, 15)
        x, y = Q(a), Q(b)
        s = (x + y).valuation()
        lo = min(x.val, y.val)
        if s.is_exact:
            assert s.value >= lo
        if x.val != y.val:
            assert s == ValBound.exact(lo)

    @given(rationals(nonzero=True), st.sampled_from(PRIMES))
    def test_structural_uniformizer_factorization(self, q, p):
        x = PAdicCtx(p, 8)(q)
        unit = x * PAdicCtx(p, 8)(Fraction(p) ** -x.val)
        assert unit.valuation() == ValBound.exact(0)
        assert unit.unit == x.unit


class TestValuation:
    def test_examples(self):
        assert valuation(PAdicCtx(5)(75)) == ValBound.exact(2)
        assert valuation(PAdicCtx(5)(Fraction(1, 5))) == ValBound.exact(-1)
        Q = PAdicCtx(5, 7)
        assert valuation(Q(1) + Q(-1)) == ValBound.at_least(7)


class TestApproximate:
    def test_examples(self):
        x = PAdicCtx(5)(Fraction(1, 3))
        q = approximate(x, 2)
        assert q == 17 and vp_rat(Fraction(1, 3) - 17, 5) == 2
        assert approximate(PAdicCtx(5)(7), 10) == 7
        assert approximate(PAdicCtx(5)(Fraction(1, 5)), 1) == Fraction(1, 5)

    def test_insufficient_precision(self):
        with pytest.raises(PrecisionError):
            approximate(PAdicCtx(5, 3)(1), 4)

    @given(rationals(nonzero=True), st.sampled_from(PRIMES), st.integers(0, 30))
    def test_density(self, q, p, k):
        x = PAdicCtx(p, 10)(q)
        n = x.absprec - k
        a = approximate(x, n)
        d = x - x.ctx(a, prec=x.absprec - min(x.val, 0) + 5)
        assert d.valuation().is_ge(n)
        # exact check on the embedded rational itself
        assert q == a or vp_rat(q - a, p) >= n


class TestResidue:
    def test_examples(self):
        assert residue(PAdicCtx(5)(Fraction(1, 3))) == 2
        assert residue(PAdicCtx(5)(10)) == 0
        with pytest.raises(NotIntegralError):
            residue(PAdicCtx(5)(Fraction(1, 5)))

    @given(coprime_rationals(5), coprime_rationals(5))
    def test_ring_homomorphism(self, a, b):
        Q = PAdicCtx(5, 6)
        ra, rb = residue(Q(a)), residue(Q(b))
        assert residue(Q(a) + Q(b)) == (ra + rb) % 5
        assert residue(Q(a) * Q(b)) == ra * rb % 5
        assert ra == a.numerator * pow(a.denominator, -1, 5) % 5


def test_printing():
    Q = PAdicCtx(5, 6)
    assert str(Q(Fraction(1, 3)) + Q(Fraction(2, 3))) == "1 + O(5^6)"
    assert str(PAdicCtx(5, 4)(Fraction(1, 3))) == "2 + 3*5 + 5^2 + 3*5^3 + O(5^4)"
    assert str(Q.zero_approx(3)) == "O(5^3)"
    assert str(PAdicCtx(5, 2)(Fraction(1, 5))) == "5^-1 + O(5)"
    assert str(Q.zero()) == "0"
