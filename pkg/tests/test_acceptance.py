"""Acceptance suite: one printed PASS/FAIL line per criterion.

Run on its own with ``pytest tests/test_acceptance.py -v`` (lines are
printed even under output capture).  Random inputs are drawn from a fixed
seed so the run is reproducible.
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from discval.arith import vp_rat
from discval.coefficients import QQ, PrimeField
from discval.errors import ZeroIndistinguishableError
from discval.extension import (
    UNRAMIFIED,
    add_val_ext,
    is_integral,
    make_extension,
    norm,
    normalized_val,
    ramification_index,
    residue_degree,
    residue_map,
)
from discval.finite_field import FiniteField, FpPoly, is_irreducible
from discval.laurent import LaurentCtx, from_ratfunc
from discval.padic import PAdicCtx
from discval.valuation_core import (
    PAdic,
    RatFunc,
    XAdic,
    canonical_uniformizer,
    is_in_unit_ball,
    maximal_ideal_witness,
    pow_uniformizer,
    val,
)
from discval.value_group import ONE, ZERO, MultZ0

from oracles import is_irreducible_bruteforce, long_division_expansion, monic_polys
from test_cli import EXIT_MATRIX, GOLDENS, call

SEED = 20261018


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
        assert ok, detail
    return emit


# -- random generators ---------------------------------------------------------

def rand_rational(rng, p=None, nonzero=False, unit_ball=False):
    while True:
        num = rng.randint(-10**6, 10**6) * (p ** rng.randint(0, 4) if p else 1)
        den = rng.randint(1, 10**4)
        if p is not None:
            if unit_ball:
                while den % p == 0:
                    den = rng.randint(1, 10**4)
            elif rng.random() < 0.3:
                den *= p ** rng.randint(1, 3)
        q = Fraction(num, den)
        if q or not nonzero:
            return q


def rand_poly(rng, F, maxdeg):
    p = F.characteristic
    if p:
        return [rng.randrange(p) for _ in range(rng.randint(1, maxdeg + 1))]
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(rng.randint(1, maxdeg + 1))]


def rand_ratfunc(rng, F, nonzero=False, unit_ball=False):
    X = RatFunc.x(F)
    while True:
        num = RatFunc.poly(F, rand_poly(rng, F, 4)) * X ** rng.randint(0, 3)
        den = RatFunc.poly(F, rand_poly(rng, F, 3))
        if den.is_zero():
            continue
        if not unit_ball:
            den = den * X ** rng.randint(0, 2)
        elif den.value_at_zero() == F.zero:
            continue
        r = num / den
        if not nonzero or not r.is_zero():
            return r


# -- 1 -------------------------------------------------------------------------

def check_axioms(desc, xs):
    ok = val(desc, desc.coerce(0)) == ZERO and val(desc, desc.coerce(1)) == ONE
    for x, y in zip(xs[::2], xs[1::2]):
        vx, vy = val(desc, x), val(desc, y)
        ok &= val(desc, x * y) == vx * vy
        vs = val(desc, x + y)
        ok &= vs <= max(vx, vy)
        if vx != vy:
            ok &= vs == max(vx, vy)
    return ok


def test_criterion_1_valuation_axioms(report):
    rng = random.Random(SEED)
    cases = [(PAdic(p), [rand_rational(rng, p) for _ in range(2000)]) for p in (2, 3, 5, 7, 97)]
    for F in (PrimeField(2), PrimeField(7), QQ):
        cases.append((XAdic(F), [rand_ratfunc(rng, F) for _ in range(2000)]))
    t0 = time.perf_counter()
    ok = all(check_axioms(desc, xs) for desc, xs in cases)
    dt = time.perf_counter() - t0
    report(1, ok and dt < 5, f"valuation axioms on 1000 pairs x {len(cases)} valuations ({dt:.2f}s < 5s)")


# -- 2 -------------------------------------------------------------------------

class Tracked:
    """Exact rational plus the precision the documented rules predict."""

    def __init__(self, p, q, absprec, zero_approx=False):
        self.p, self.q, self.absprec, self.zero_approx = p, q, absprec, zero_approx

    @property
    def v(self):
        return None if self.zero_approx else vp_rat(self.q, self.p)

    def _settle(self):
        if self.q == 0 or vp_rat(self.q, self.p) >= self.absprec:
            self.zero_approx = True
        return self

    def __add__(self, o):
        return Tracked(self.p, self.q + o.q, min(self.absprec, o.absprec))._settle()

    def __sub__(self, o):
        return Tracked(self.p, self.q - o.q, min(self.absprec, o.absprec))._settle()

    def __mul__(self, o):
        if self.zero_approx or o.zero_approx:
            lo = (self.absprec if self.zero_approx else self.v) + (o.absprec if o.zero_approx else o.v)
            return Tracked(self.p, self.q * o.q, lo, True)
        r = min(self.absprec - self.v, o.absprec - o.v)
        return Tracked(self.p, self.q * o.q, self.v + o.v + r)

    def inv(self):
        if self.zero_approx:
            raise ZeroIndistinguishableError("tracked zero")
        return Tracked(self.p, 1 / self.q, -self.v + (self.absprec - self.v))


def rand_tree(rng, depth):
    if depth == 0 or rng.random() < 0.2:
        return ("leaf", rng.randrange(500))
    op = rng.choice(["+", "-", "*", "inv"])
    if op == "inv":
        return (op, rand_tree(rng, depth - 1))
    return (op, rand_tree(rng, depth - 1), rand_tree(rng, depth - 1))


def ev_tree(t, leaves):
    if t[0] == "leaf":
        return leaves[t[1]]
    if t[0] == "inv":
        return ev_tree(t[1], leaves).inv()
    a, b = ev_tree(t[1], leaves), ev_tree(t[2], leaves)
    return a + b if t[0] == "+" else a - b if t[0] == "-" else a * b


def test_criterion_2_padic_oracle(report):
    rng = random.Random(SEED)
    prec, checked, bad = 20, 0, []
    t0 = time.perf_counter()
    for p in (2, 3, 5, 7):
        K = PAdicCtx(p, prec)
        qs = [rand_rational(rng, p, nonzero=True, unit_ball=True) for _ in range(500)]
        padic_leaves = [K(q) for q in qs]
        exact_leaves = [Tracked(p, q, vp_rat(q, p) + prec) for q in qs]
        for _ in range(500):
            t = rand_tree(rng, rng.randint(1, 4))
            try:
                want = ev_tree(t, exact_leaves)
            except ZeroIndistinguishableError:
                try:
                    ev_tree(t, padic_leaves)
                    bad.append((p, t, "expected ZeroIndistinguishableError"))
                except ZeroIndistinguishableError:
                    pass
                continue
            got = ev_tree(t, padic_leaves)
            checked += 1
            same_prec = got.absprec == want.absprec and got.is_zero_approx() == want.zero_approx
            d = got.lift() - want.q
            digits_ok = d == 0 or vp_rat(d, p) >= want.absprec
            if not (same_prec and digits_ok):
                bad.append((p, t))
    dt = time.perf_counter() - t0
    report(2, not bad and dt < 5,
           f"{checked} depth<=4 compositions over 4 primes x 500 rationals agree digit-exactly "
           f"at precision {prec}, {len(bad)} mismatches ({dt:.2f}s < 5s)")


# -- 3 -------------------------------------------------------------------------

def test_criterion_3_laurent_oracle(report):
    rng = random.Random(SEED)
    bad = 0
    fields = [PrimeField(2), PrimeField(5), QQ]
    for i in range(200):
        F = fields[i % 3]
        p = F.characteristic or None
        num, den = [0], [0]
        while RatFunc.poly(F, num).is_zero() or RatFunc.poly(F, den).is_zero():
            num = rand_poly(rng, F, 5)
            den = [0] * rng.randint(0, 2) + rand_poly(rng, F, 4)
        rf = RatFunc.poly(F, num) / RatFunc.poly(F, den)
        order, want = long_division_expansion(num, den, p, 50)
        s = from_ratfunc(rf, order + 50)
        got = [s.coeff(n) for n in range(order, order + 50)]
        bad += got != [F(c) for c in want] or s.valuation().value != order
    geo = []
    for F in fields:
        ctx = LaurentCtx(F, 50)
        one_minus_x = RatFunc.poly(F, [1, -1])
        prod = ctx(one_minus_x) * from_ratfunc(one_minus_x.inv(), 50, ctx)
        geo.append(str(prod) == "1 + O(X^50)")
    report(3, bad == 0 and all(geo),
           f"200 expansions over F2/F5/Q match long division through 50 coefficients "
           f"({bad} mismatches); (1-X)*(1/(1-X)) = 1 + O(X^50) over all fields: {all(geo)}")


# -- 4 -------------------------------------------------------------------------

def rand_series(rng, ctx):
    F = ctx.field
    p = F.characteristic
    kind = rng.random()
    if kind < 0.1:
        return ctx.zero_approx(rng.randint(-3, 12))
    order = rng.randint(-5, 8)
    n = rng.randint(1, 12)
    c = [rng.randrange(p) if p else Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
    c[0] = c[0] or 1
    s = ctx.series(order, c)
    if kind < 0.3:  # force cancellation of leading terms
        s = s - ctx.series(order, c[: rng.randint(1, n)])
    return s


def test_criterion_4_coefficient_vanishing(report):
    rng = random.Random(SEED)
    ctxs = [LaurentCtx(PrimeField(3), 12), LaurentCtx(PrimeField(2), 12), LaurentCtx(QQ, 12)]
    checks = bad = 0
    for i in range(200):
        s = rand_series(rng, ctxs[i % 3])
        vb = s.valuation()
        lo = -8
        for D in range(lo, s.absprec + 1):
            if vb.is_exact:
                lhs = vb.to_multz0() <= MultZ0.of_add(-D)
            else:
                lhs = vb.is_ge(D)
            rhs = all(s.coeff(n) == s.field.zero for n in range(lo - 1, D))
            checks += 1
            bad += lhs != rhs
    report(4, bad == 0, f"v(f) <= of_add(-D) iff coeff_n = 0 for n < D: {checks} (series, D) checks "
                        f"on 200 series, {bad} failures")


# -- 5 -------------------------------------------------------------------------

def uniformizer_calculus(desc, xs):
    pi = canonical_uniformizer(desc)
    bad = 0
    for r in xs:
        n, u = pow_uniformizer(desc, r, pi)
        bad += not (pi.element ** n * u == r and val(desc, u) == MultZ0.of_add(0))
        if n >= 1:
            y = maximal_ideal_witness(desc, r, pi)
            bad += not (pi.element * y == r and is_in_unit_ball(desc, y))
    return bad


def test_criterion_5_uniformizer_calculus(report):
    rng = random.Random(SEED)
    F3 = PrimeField(3)
    bad = uniformizer_calculus(PAdic(5), [rand_rational(rng, 5, True, True) for _ in range(500)])
    bad += uniformizer_calculus(XAdic(F3), [rand_ratfunc(rng, F3, True, True) for _ in range(500)])
    report(5, bad == 0, f"r = pi^n * u with val(u) = of_add(0) and exact witnesses on 500 elements "
                        f"of Z_(5) and of F3[X]_(X), {bad} failures")


# -- 6 -------------------------------------------------------------------------

UNRAMIFIED_QUADRATIC = {2: [1, 1, 1], 3: [-2, 0, 1], 5: [-2, 0, 1], 7: [-3, 0, 1]}
UNRAMIFIED_CUBIC = {2: [1, 1, 0, 1], 3: [1, 2, 0, 1], 5: [1, 1, 0, 1], 7: [1, 1, 0, 1]}


def test_criterion_6_extension_formula(report):
    lines, ok = [], True
    for p in (2, 3, 5, 7):
        t0 = time.perf_counter()
        K = PAdicCtx(p)
        L = make_extension(K, [-p, 0, 1])
        a = L.gen
        ram = (add_val_ext(a).q == Fraction(1, 2) and normalized_val(a).value == 1
               and normalized_val(L.embed_rat(p)).value == 2
               and ramification_index(L) * residue_degree(L) == 2)
        U = make_extension(K, UNRAMIFIED_QUADRATIC[p])
        unr = (U.cert.kind == UNRAMIFIED and ramification_index(U) == 1
               and U.residue_field().order == p * p and normalized_val(U.embed_rat(p)).value == 1)
        dt = time.perf_counter() - t0
        ok &= ram and unr and dt < 1
        lines.append(f"p={p}:{'ok' if ram and unr else 'bad'}/{dt:.2f}s")
    rng = random.Random(SEED)
    bad = 0
    for i in range(200):
        p = (2, 3, 5, 7)[i % 4]
        K = PAdicCtx(p)
        f = [[-p, 0, 1], UNRAMIFIED_QUADRATIC[p], [-p, 0, 0, 1], UNRAMIFIED_CUBIC[p]][i % 4]
        L = make_extension(K, f)
        x = L.element([rand_rational(rng, p) for _ in range(L.n)])
        y = L.element([rand_rational(rng, p) for _ in range(L.n)])
        bad += not (norm(x * y) - norm(x) * norm(y)).is_zero_approx()
    report(6, ok and bad == 0, f"Q_p(sqrt p) and unramified quadratics ({', '.join(lines)}, each < 1s); "
                               f"N(xy) = N(x)N(y) on 200 pairs, {bad} failures")


# -- 7 -------------------------------------------------------------------------

def test_criterion_7_trivial_extension(report):
    rng = random.Random(SEED)
    bad = 0
    F5 = PrimeField(5)
    for i in range(200):
        if i % 2:
            p = (2, 3, 5, 7, 97)[i % 5]
            L = make_extension(PAdicCtx(p), [-rand_rational(rng, p), 1])
            q = rand_rational(rng, p, nonzero=True)
            bad += add_val_ext(L.embed_rat(q)).q != vp_rat(q, p)
        else:
            ctx = LaurentCtx(F5, 15)
            L = make_extension(ctx, [-rand_ratfunc(rng, F5), 1])
            r = rand_ratfunc(rng, F5, nonzero=True)
            bad += add_val_ext(L.embed_base(ctx(r))).q != r.x_order()
    report(7, bad == 0, f"degree-1 moduli: w equals the base valuation on 200 elements, {bad} failures")


# -- 8 -------------------------------------------------------------------------

def test_criterion_8_integral_closure(report):
    rng = random.Random(SEED)
    bad = closure = 0
    for i in range(300):
        p = (2, 3, 5, 7)[i % 4]
        f = [[-p, 0, 1], UNRAMIFIED_QUADRATIC[p], [-p, 0, 0, 1], UNRAMIFIED_CUBIC[p]][(i // 4) % 4]
        L = make_extension(PAdicCtx(p), f)
        x = L.element([rand_rational(rng, p) for _ in range(L.n)])
        y = L.element([rand_rational(rng, p) for _ in range(L.n)])
        if x.is_exact_zero():
            continue
        bad += is_integral(x) != (add_val_ext(x).q >= 0)
        if is_integral(x) and is_integral(y):
            closure += 1
            bad += not (is_integral(x + y) and is_integral(x * y))
    report(8, bad == 0, f"is_integral(x) iff w(x) >= 0 on 300 elements, {closure} integral pairs "
                        f"closed under + and *, {bad} failures")


# -- 9 -------------------------------------------------------------------------

def field_axioms(K):
    E = list(K.elements())
    z, o = K.zero(), K.one()
    for a in E:
        if a + z != a or a * o != a or a + (-a) != z:
            return False
        if a != z and a * a.inv() != o:
            return False
        for b in E:
            if a + b != b + a or a * b != b * a:
                return False
            for c in E:
                if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
                    return False
    return len(set(E)) == K.order


def test_criterion_9_finite_fields(report):
    mism = total = 0
    for p in (2, 3, 5):
        for d in range(1, 5):
            for f in monic_polys(p, d):
                total += 1
                mism += is_irreducible(FpPoly(p, f)) != is_irreducible_bruteforce(f, p)
    tables = field_axioms(FiniteField(FpPoly(3, (1, 0, 1)))) and field_axioms(FiniteField(FpPoly(5, (2, 0, 1))))
    L = make_extension(PAdicCtx(5, 6), [-2, 0, 1])
    lifts = [L.element([a, b]) for a, b in itertools.product(range(5), repeat=2)]
    img = [residue_map(L, x) for x in lifts]
    hom = len(set(img)) == 25 and all(
        residue_map(L, x + y) == rx + ry and residue_map(L, x * y) == rx * ry
        for x, rx in zip(lifts, img) for y, ry in zip(lifts, img))
    kernel = all(
        residue_map(L, L.element([a, b])).is_zero() == normalized_val(L.element([a, b])).is_ge(1)
        for a, b in itertools.product(range(-5, 10), repeat=2) if (a, b) != (0, 0))
    report(9, mism == 0 and tables and hom and kernel,
           f"irreducibility matches factorization on {total} polynomials ({mism} mismatches); "
           f"F9/F25 field axioms: {tables}; residue map onto F25 is a homomorphism: {hom}, "
           f"kernel = maximal ideal: {kernel}")


# -- 10 ------------------------------------------------------------------------

def test_criterion_10_cli(report):
    golden_bad = [argv for argv, want in GOLDENS if call(*argv) != (0, want, "")]
    exit_bad = [argv for code, argv in EXIT_MATRIX if call(*argv)[0] != code]
    report(10, not golden_bad and not exit_bad,
           f"{len(GOLDENS) - len(golden_bad)}/{len(GOLDENS)} goldens byte-exact, "
           f"{len(EXIT_MATRIX) - len(exit_bad)}/{len(EXIT_MATRIX)} exit codes correct")
