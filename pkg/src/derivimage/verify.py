"""Deterministic self-verification suites behind the `verify` command.

Each case draws its randomness from a stream keyed by (seed, case id), so
reports are byte-identical across runs with the same seed and limits and
do not depend on execution order.  Scan cases whose mathematical content
is "a finite window found nothing" are report-only: they never flip the
exit status, because a finite window proves nothing by itself.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Callable, Optional

from . import bernoulli as bern
from . import derivations as der
from . import ederivations as ed
from . import mathieu as ms
from . import translation as tr
from .numthy import vp
from .poly import Polynomial

PASS = "pass"
FAIL = "fail"
REPORT_ONLY = "report-only"

SUITE_NAMES = (
    "bernoulli",
    "cvs",
    "derivations",
    "ederivations",
    "translation",
    "mathieu",
)

IDENTITY_BOUND = 64
CVS_BOUND = 400
PRIME_BOUND = 53


@dataclass(frozen=True)
class Limits:
    """Optional overrides; None means each case's documented default."""

    max_degree: Optional[int] = None
    window: Optional[int] = None
    sample_count: Optional[int] = None

    def degree(self, default: int) -> int:
        return self.max_degree if self.max_degree is not None else default

    def win(self, default: int) -> int:
        return self.window if self.window is not None else default

    def samples(self, default: int) -> int:
        return self.sample_count if self.sample_count is not None else default


@dataclass(frozen=True)
class CaseResult:
    id: str
    status: str
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    seed: int
    limits: Limits
    cases: tuple

    @property
    def totals(self) -> dict:
        counts = {PASS: 0, FAIL: 0, REPORT_ONLY: 0}
        for case in self.cases:
            counts[case.status] += 1
        return {
            "pass": counts[PASS],
            "fail": counts[FAIL],
            "report_only": counts[REPORT_ONLY],
        }

    @property
    def failed(self) -> bool:
        return any(case.status == FAIL for case in self.cases)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "limits": {
                "max_degree": self.limits.max_degree,
                "window": self.limits.window,
                "sample_count": self.limits.sample_count,
            },
            "cases": [
                {"id": c.id, "status": c.status, "detail": c.detail}
                for c in self.cases
            ],
            "totals": self.totals,
        }


# -- randomness helpers -------------------------------------------------


def _rng_for(seed: int, case_id: str) -> Random:
    digest = hashlib.sha256(("%d:%s" % (seed, case_id)).encode()).digest()
    return Random(int.from_bytes(digest[:8], "big"))


def _rational(rng, span=3, dens=(1, 2)) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice(dens))


def _nonzero_rational(rng, span=3, dens=(1, 2)) -> Fraction:
    while True:
        q = _rational(rng, span, dens)
        if q:
            return q


def _poly(rng, max_degree, span=3) -> Polynomial:
    deg = rng.randint(0, max_degree)
    return Polynomial([rng.randint(-span, span) for _ in range(deg + 1)])


def _nonzero_poly(rng, max_degree, span=3) -> Polynomial:
    while True:
        p = _poly(rng, max_degree, span)
        if not p.is_zero:
            return p


def _check(ok: bool, detail: str):
    return (PASS if ok else FAIL), detail


# -- bernoulli suite ----------------------------------------------------


def _case_fixed_small(rng, limits):
    expected = [
        Polynomial("1"),
        Polynomial("x - 1/2"),
        Polynomial("x^2 - x + 1/6"),
        Polynomial("x^3 - 3/2*x^2 + 1/2*x"),
    ]
    ok = all(bern.bernoulli_poly(n) == expected[n] for n in range(4))
    return _check(ok, "indices 0..3 match their closed forms")


def _case_forward_difference(rng, limits):
    t1 = Polynomial("x + 1")
    bad = []
    for n in range(IDENTITY_BOUND + 1):
        lhs = bern.bernoulli_poly(n).compose(t1) - bern.bernoulli_poly(n)
        rhs = Polynomial.monomial(n - 1, n) if n >= 1 else Polynomial.zero()
        if lhs != rhs:
            bad.append(n)
    return _check(not bad, "difference identity for n <= %d" % IDENTITY_BOUND)


def _case_derivative(rng, limits):
    bad = [
        n
        for n in range(IDENTITY_BOUND + 1)
        if bern.bernoulli_poly(n + 1).derivative() != (n + 1) * bern.bernoulli_poly(n)
    ]
    return _check(not bad, "derivative identity for n <= %d" % IDENTITY_BOUND)


def _case_binomial_recurrence(rng, limits):
    bad = []
    for n in range(IDENTITY_BOUND + 1):
        row = bern.binomial_row(n + 1)
        total = Polynomial.zero()
        for k in range(n + 1):
            total = total + row[k] * bern.bernoulli_poly(k)
        if total != Polynomial.monomial(n, n + 1):
            bad.append(n)
    return _check(not bad, "binomial recurrence for n <= %d" % IDENTITY_BOUND)


def _case_reflection(rng, limits):
    neg = Polynomial("-x")
    bad = []
    for n in range(IDENTITY_BOUND + 1):
        p = bern.bernoulli_poly(n)
        lhs = (-1) ** n * p.compose(neg)
        rhs = p + (Polynomial.monomial(n - 1, n) if n >= 1 else Polynomial.zero())
        if lhs != rhs:
            bad.append(n)
    return _check(not bad, "reflection identity for n <= %d" % IDENTITY_BOUND)


def _case_unit_integral(rng, limits):
    bad = []
    for n in range(1, IDENTITY_BOUND + 1):
        antider = bern.bernoulli_poly(n).antiderivative()
        if antider(1) - antider(0) != 0:
            bad.append(n)
    return _check(not bad, "zero unit-interval integral for 1 <= n <= %d" % IDENTITY_BOUND)


def _case_reduction_binomial_sum(rng, limits):
    bad = []
    for n in range(IDENTITY_BOUND + 1):
        row = bern.binomial_row(n + 1)
        total = Polynomial.zero()
        for k in range(n + 1):
            total = total + row[k] * bern.d_poly(k)
        if total != Polynomial.monomial(n):
            bad.append(n)
    return _check(not bad, "reduction binomial sum for n <= %d" % IDENTITY_BOUND)


def _case_reduction_quotient(rng, limits):
    bad = []
    for n in range(IDENTITY_BOUND + 1):
        numer = bern.bernoulli_poly(n + 1) - bern.bernoulli_number(n + 1)
        if numer.constant_term != 0:
            bad.append(n)
            continue
        quotient = Polynomial(numer.coeffs[1:]) / (n + 1)
        if quotient != bern.d_poly(n):
            bad.append(n)
    return _check(not bad, "closed form equals exact quotient for n <= %d" % IDENTITY_BOUND)


def _case_reduction_special_values(rng, limits):
    bad = []
    for k in range(1, IDENTITY_BOUND + 1):
        p = bern.d_poly(k)
        if p(1) != 0 or p(-1) != (-1) ** k or p(0) != bern.bernoulli_number(k):
            bad.append(k)
    return _check(not bad, "values at 1, -1, 0 for 1 <= k <= %d" % IDENTITY_BOUND)


def _case_basis_roundtrip(rng, limits):
    count = limits.samples(200)
    bad = 0
    for _ in range(count):
        f = _poly(rng, 10, span=4)
        coords = bern.v01_coords(f)
        rebuilt = Polynomial.zero()
        for i, c in enumerate(coords):
            if c:
                rebuilt = rebuilt + c * bern.bernoulli_poly(i)
        antider = f.antiderivative()
        integral_zero = antider(1) - antider(0) == 0
        if rebuilt != f or bern.in_v01(f) != integral_zero:
            bad += 1
    return _check(bad == 0, "%d random reconstructions and integral checks" % count)


def _bernoulli_cases():
    return [
        ("bernoulli/fixed-small-polynomials", _case_fixed_small),
        ("bernoulli/forward-difference", _case_forward_difference),
        ("bernoulli/derivative", _case_derivative),
        ("bernoulli/binomial-recurrence", _case_binomial_recurrence),
        ("bernoulli/reflection", _case_reflection),
        ("bernoulli/unit-integral", _case_unit_integral),
        ("bernoulli/reduction-binomial-sum", _case_reduction_binomial_sum),
        ("bernoulli/reduction-quotient-agreement", _case_reduction_quotient),
        ("bernoulli/reduction-special-values", _case_reduction_special_values),
        ("bernoulli/basis-roundtrip", _case_basis_roundtrip),
    ]


# -- cvs suite ----------------------------------------------------------


def _case_cvs_integrality(rng, limits):
    bad = [
        n
        for n in range(2, CVS_BOUND + 1, 2)
        if bern.clausen_staudt_defect(n).denominator != 1
    ]
    return _check(not bad, "integer defect for all even n <= %d" % CVS_BOUND)


def _case_cvs_valuations(rng, limits):
    primes = [p for p in range(3, PRIME_BOUND + 1) if _is_odd_prime(p)]
    bad = []
    for p in primes:
        for n in range(1, p - 1):
            if vp(bern.bernoulli_number(n), p) < 0:
                bad.append((p, n))
        if vp(bern.bernoulli_number(p - 1), p) != -1:
            bad.append((p, p - 1))
    return _check(not bad, "valuations for odd primes up to %d" % PRIME_BOUND)


def _is_odd_prime(p):
    from .numthy import is_prime

    return p % 2 == 1 and is_prime(p)


def _cvs_cases():
    return [
        ("cvs/integrality", _case_cvs_integrality),
        ("cvs/odd-prime-valuations", _case_cvs_valuations),
    ]


# -- derivations suite ---------------------------------------------------


def _derivative_ideal_oracle(u: Polynomial, f: Polynomial) -> bool:
    # independent route: f = (u*g)' is linear in the coefficients of g
    from .linsolve import solve_linear

    if f.is_zero:
        return True
    gdeg = f.degree + 1 - u.degree
    if gdeg < 0:
        return False
    columns = [(u * Polynomial.monomial(j)).derivative() for j in range(gdeg + 1)]
    nrows = f.degree + 1
    for col in columns:
        if not col.is_zero:
            nrows = max(nrows, col.degree + 1)
    matrix = [[col.coefficient(r) for col in columns] for r in range(nrows)]
    rhs = [f.coefficient(r) for r in range(nrows)]
    return solve_linear(matrix, rhs).solvable


def _case_der_vs_linear_solve(rng, limits):
    count = limits.samples(500)
    members = 0
    for i in range(count):
        u = _nonzero_poly(rng, 4)
        if u.degree == 0:
            u = u + Polynomial.x() * rng.choice([1, 2])
        f = _poly(rng, 10)
        if i % 3 == 0:
            f = (u * _poly(rng, 5)).derivative()
        got = der.derivative_ideal_member(u, f).member
        if got != _derivative_ideal_oracle(u, f):
            return FAIL, "disagreement at u=%s f=%s" % (u, f)
        members += got
    return PASS, "%d samples agree (%d members)" % (count, members)


def _case_der_linear_power_shapes(rng, limits):
    from .images import ShapeKind

    count = limits.samples(200)
    for n in range(2, 7):
        for c in (0, 1, -2):
            factor = Polynomial((-Fraction(c), Fraction(1)))
            u = factor**n
            shape = der.derivative_ideal_shape(u)
            if shape.kind is not ShapeKind.PRINCIPAL_IDEAL or shape.generator != factor ** (n - 1):
                return FAIL, "wrong shape for exponent %d, root %d" % (n, c)
            gen = factor ** (n - 1)
            for i in range(count):
                f = _poly(rng, 8)
                if i % 2 == 0:
                    f = gen * _poly(rng, 3)
                if der.derivative_ideal_member(u, f).member != (
                    f.is_zero or gen.divides(f)
                ):
                    return FAIL, "membership/divisibility split at n=%d c=%d" % (n, c)
    return PASS, "15 linear-power ideals, %d samples each" % count


def _case_der_counterexample(rng, limits):
    a = Polynomial.x()
    u = Polynomial("x^2 - 1")
    for m in range(1, 21):
        if not der.derivation_ideal_member(a, u, Polynomial.monomial(2 * m)).member:
            return FAIL, "even exponent %d missing from the image" % (2 * m)
        if der.derivation_ideal_member(a, u, Polynomial.monomial(2 * m + 1)).member:
            return FAIL, "odd exponent %d wrongly inside the image" % (2 * m + 1)
    probe = ms.truncated_ms_check(
        lambda f: der.derivation_ideal_member(a, u, f).member,
        [Polynomial.monomial(2)],
        12,
        6,
    )
    ok = any(
        v.candidate == Polynomial.monomial(2) and v.multiplier == Polynomial.x()
        for v in probe.violations
    )
    return _check(ok, "even powers in, odd powers out (m <= 20); violation flagged")


def _case_der_two_root_scan(rng, limits):
    u = Polynomial("x^2 - 1")
    report = ms.radical_scan(
        lambda f: der.derivative_ideal_member(u, f).member,
        limits.degree(3),
        range(-2, 3),
        limits.win(10),
    )
    return REPORT_ONLY, "%d survivors of %d candidates (window %d)" % (
        len(report.survivors),
        report.candidates_checked,
        report.power_window,
    )


def _case_der_witnesses(rng, limits):
    count = limits.samples(100)
    for _ in range(count):
        a = _nonzero_poly(rng, 2)
        u = _nonzero_poly(rng, 3)
        g = _poly(rng, 4)
        f = a * (u * g).derivative()
        got = der.derivation_ideal_member(a, u, f)
        if not got.member or a * (u * got.witness).derivative() != f:
            return FAIL, "witness failed at a=%s u=%s g=%s" % (a, u, g)
    return PASS, "%d constructed members re-verified" % count


def _derivations_cases():
    return [
        ("derivations/ideal-vs-linear-solve", _case_der_vs_linear_solve),
        ("derivations/linear-power-shapes", _case_der_linear_power_shapes),
        ("derivations/scaled-image-counterexample", _case_der_counterexample),
        ("derivations/two-root-radical-scan", _case_der_two_root_scan),
        ("derivations/witness-reverification", _case_der_witnesses),
    ]


# -- ederivations suite ---------------------------------------------------


def _random_w(rng) -> Polynomial:
    kind = rng.randint(0, 4)
    if kind == 0:
        return Polynomial([rng.randint(-3, 3)])
    if kind == 1:
        return Polynomial([_rational(rng, span=4), 1])
    if kind == 2:
        return Polynomial([0, rng.choice([2, -1, 3, Fraction(1, 2), -2])])
    if kind == 3:
        return Polynomial([rng.randint(-2, 2), rng.choice([2, -1, 3, -2])])
    coeffs = [rng.randint(-2, 2), rng.randint(-2, 2), rng.choice([1, 2, -1])]
    if rng.random() < 0.5:
        coeffs.append(rng.choice([1, -1]))
    return Polynomial(coeffs)


def _case_ed_product_rule(rng, limits):
    count = limits.samples(200)
    for _ in range(count):
        w = _random_w(rng)
        delta = ed.EDerivation(w)
        f = _poly(rng, 5)
        g = _poly(rng, 5)
        df, dg = delta.apply(f), delta.apply(g)
        if delta.apply(f * g) != df * g + f * dg - df * dg:
            return FAIL, "twisted product rule broke at w=%s" % (w,)
    return PASS, "%d random triples" % count


def _case_ed_member_vs_oracle(rng, limits):
    count = limits.samples(500)
    members = 0
    for i in range(count):
        w = _random_w(rng)
        f = _poly(rng, 6, span=2)
        if i % 3 == 0 and not f.is_zero:
            f = f - f.compose(w)
        got = ed.image_member(w, f).member
        oracle = ed.ideal_image_member(w, Polynomial.one(), f).member
        if got != oracle:
            return FAIL, "disagreement at w=%s f=%s" % (w, f)
        members += got
    return PASS, "%d samples agree (%d members)" % (count, members)


def _case_ed_power_obstruction(rng, limits):
    count = limits.samples(200)
    one = Polynomial.one()
    for wtxt in ("x^2", "x^2 + x", "2x^3 - 1"):
        w = Polynomial(wtxt)
        for _ in range(count):
            f = _nonzero_poly(rng, 8)
            verdicts = []
            for i in (1, 2, 3):
                power = f**i
                got = ed.image_member(w, power).member
                if got != ed.ideal_image_member(w, one, power).member:
                    return FAIL, "oracle disagreement at w=%s f=%s i=%d" % (w, f, i)
                verdicts.append(got)
            if all(verdicts):
                return FAIL, "all of f, f^2, f^3 inside the image at w=%s f=%s" % (w, f)
    return PASS, "3 maps, %d samples each, oracle-confirmed" % count


def _case_ed_tower_transport(rng, limits):
    count = limits.samples(100)
    for _ in range(count):
        w = Polynomial([rng.randint(-2, 2), rng.randint(-2, 2), rng.choice([1, -1, 2])])
        inner = _nonzero_poly(rng, 3)
        u = inner.compose(w)
        f = u - u.compose(w)
        if f.is_zero:
            continue
        got = ed.image_member(w, f)
        if not got.member:
            return FAIL, "constructed member rejected at w=%s" % (w,)
        dec_f = ed.decompose_by_w(w, f)
        dec_u = ed.decompose_by_w(w, got.witness)
        if not dec_f.outside.is_zero or not dec_u.outside.is_zero:
            return FAIL, "tower element left the tower at w=%s" % (w,)
        reduced = dec_f.composed
        carrier = dec_u.composed
        if ed.EDerivation(w).apply(carrier) != reduced:
            return FAIL, "transported witness failed at w=%s" % (w,)
        if carrier != reduced + got.witness:
            return FAIL, "carrier identity failed at w=%s" % (w,)
    return PASS, "%d tower members transported" % count


def _case_ed_degree_bound(rng, limits):
    count = limits.samples(150)
    seen = 0
    for _ in range(count):
        w = _nonzero_poly(rng, 3)
        if w.is_zero or w.degree < 2:
            w = Polynomial([rng.randint(-2, 2), rng.randint(-2, 2), 1])
        d = w.degree
        u = _nonzero_poly(rng, 4)
        f = u - u.compose(w)
        if f.is_zero:
            continue
        dec = ed.decompose_by_w(w, f)
        if dec.outside.is_zero:
            continue
        seen += 1
        ell = dec.outside_degree
        if not (f.degree >= d * ell >= d):
            return FAIL, "degree bound broke at w=%s u=%s" % (w, u)
    return PASS, "%d off-tower members obeyed the bound" % seen


def _case_ed_outside_degree(rng, limits):
    count = limits.samples(200)
    for _ in range(count):
        w = Polynomial(
            [rng.randint(-2, 2) for _ in range(rng.randint(2, 3))] + [rng.choice([1, -1, 2])]
        )
        d = w.degree
        f = _nonzero_poly(rng, 9)
        ell = ed.outside_degree(w, f)
        if ell > f.degree:
            return FAIL, "outside part outgrew f at w=%s f=%s" % (w, f)
        if f.degree % d and ell != f.degree:
            return FAIL, "off-grid degree not preserved at w=%s f=%s" % (w, f)
        shifted = f + _poly(rng, 2).compose(w)
        if not shifted.is_zero and ed.outside_degree(w, shifted) != ell:
            return FAIL, "tower congruence changed the outside degree at w=%s" % (w,)
    return PASS, "%d samples" % count


def _case_ed_counterexample(rng, limits):
    w = Polynomial("2x")
    u = Polynomial("x^2 - 1")
    for m in range(1, 21):
        if not ed.ideal_image_member(w, u, Polynomial.monomial(2 * m)).member:
            return FAIL, "even exponent %d missing from the image" % (2 * m)
        if ed.ideal_image_member(w, u, Polynomial.monomial(2 * m + 1)).member:
            return FAIL, "odd exponent %d wrongly inside the image" % (2 * m + 1)
    return PASS, "even powers in, odd powers out (m <= 20)"


def _case_ed_decompose_roundtrip(rng, limits):
    count = limits.samples(200)
    for _ in range(count):
        w = Polynomial(
            [rng.randint(-2, 2) for _ in range(rng.randint(2, 4))] + [rng.choice([1, -1, 2])]
        )
        d = w.degree
        f = _poly(rng, 10)
        dec = ed.decompose_by_w(w, f)
        if dec.outside + dec.composed.compose(w) != f:
            return FAIL, "reconstruction failed at w=%s f=%s" % (w, f)
        if any(c and n % d == 0 for n, c in enumerate(dec.outside.coeffs)):
            return FAIL, "outside part landed on the grid at w=%s f=%s" % (w, f)
        again = ed.decompose_by_w(w, dec.outside)
        if again.outside != dec.outside or not again.composed.is_zero:
            return FAIL, "decomposition not idempotent at w=%s f=%s" % (w, f)
    return PASS, "%d random splits" % count


def _case_ed_affine_centering(rng, limits):
    count = limits.samples(50)
    for _ in range(count):
        a = _nonzero_rational(rng, span=4)
        while a == 1:
            a = _nonzero_rational(rng, span=4)
        b = _rational(rng, span=4)
        s = ed.normalize_affine(a, b)
        w = Polynomial((b, a))
        if w.translate(s) - Polynomial.constant(s) != Polynomial((Fraction(0), a)):
            return FAIL, "centering shift wrong for a=%s b=%s" % (a, b)
    return PASS, "%d random affine maps centered" % count


def _ederivations_cases():
    return [
        ("ederivations/product-rule", _case_ed_product_rule),
        ("ederivations/member-vs-oracle", _case_ed_member_vs_oracle),
        ("ederivations/power-obstruction", _case_ed_power_obstruction),
        ("ederivations/tower-transport", _case_ed_tower_transport),
        ("ederivations/degree-bound", _case_ed_degree_bound),
        ("ederivations/outside-degree", _case_ed_outside_degree),
        ("ederivations/scaling-ideal-counterexample", _case_ed_counterexample),
        ("ederivations/decompose-roundtrip", _case_ed_decompose_roundtrip),
        ("ederivations/affine-centering", _case_ed_affine_centering),
    ]


# -- translation suite ----------------------------------------------------


def _case_tr_monomial_reduction(rng, limits):
    count = limits.samples(500)
    for _ in range(count):
        c = _nonzero_rational(rng)
        a = _rational(rng)
        n = rng.randint(0, 12)
        weight = tr.quadratic_criterion(c, a).weight(n)
        f = Polynomial.monomial(n) - weight
        if f.is_zero:
            continue
        u = Polynomial((Fraction(0), -a, Fraction(1)))
        if not ed.ideal_image_member(Polynomial((c, Fraction(1))), u, f).member:
            return FAIL, "reduced monomial left the image at c=%s a=%s n=%d" % (c, a, n)
    return PASS, "%d reduced monomials confirmed by the oracle" % count


def _case_tr_criterion_vs_oracle(rng, limits):
    count = limits.samples(500)
    members = 0
    for i in range(count):
        c = _nonzero_rational(rng)
        a = _rational(rng)
        u = Polynomial((Fraction(0), -a, Fraction(1)))
        w = Polynomial((c, Fraction(1)))
        f = _poly(rng, 10)
        if i % 3 == 0:
            f = ed.EDerivation(w).apply(u * _poly(rng, 4))
        got = tr.quadratic_member(c, a, f)
        if got != ed.ideal_image_member(w, u, f).member:
            return FAIL, "criterion/oracle split at c=%s a=%s f=%s" % (c, a, f)
        members += got
    return PASS, "%d samples agree (%d members)" % (count, members)


def _case_tr_unit_ratio(rng, limits):
    count = limits.samples(200)
    x = Polynomial.x()
    for i in range(count):
        c = _nonzero_rational(rng)
        f = _poly(rng, 8)
        if i % 2 == 0:
            f = x * _poly(rng, 5)
        if tr.quadratic_member(c, c, f) != (f.is_zero or x.divides(f)):
            return FAIL, "ratio-one membership broke at c=%s f=%s" % (c, f)
    return PASS, "%d samples match divisibility by x" % count


def _case_tr_negative_unit_ratio(rng, limits):
    count = limits.samples(200)
    for i in range(count):
        c = _nonzero_rational(rng)
        a = -c
        gen = Polynomial((-a, Fraction(1)))  # x - a, i.e. x + c
        f = _poly(rng, 8)
        if i % 2 == 0:
            f = gen * _poly(rng, 5)
        if tr.quadratic_member(c, a, f) != (f.is_zero or gen.divides(f)):
            return FAIL, "ratio-minus-one membership broke at c=%s f=%s" % (c, f)
    return PASS, "%d samples match divisibility by x + c" % count


def _case_tr_zero_ratio_scan(rng, limits):
    crit = tr.quadratic_criterion(1, 0)
    report = ms.radical_scan(crit.contains, limits.degree(3), range(-2, 3), limits.win(30))
    return REPORT_ONLY, "%d survivors of %d candidates (window %d)" % (
        len(report.survivors),
        report.candidates_checked,
        report.power_window,
    )


def _case_tr_repeated_root_scan(rng, limits):
    member = lambda f: tr.rational_rooted_member(1, (0, 0, 1), 1, f)
    report = ms.radical_scan(member, limits.degree(3), range(-2, 3), limits.win(30))
    return REPORT_ONLY, "%d survivors of %d candidates (window %d)" % (
        len(report.survivors),
        report.candidates_checked,
        report.power_window,
    )


def _case_tr_preimage(rng, limits):
    count = limits.samples(200)
    for _ in range(count):
        c = _nonzero_rational(rng)
        a = _rational(rng)
        f = _poly(rng, 8, span=4)
        g = tr.preimage_in_linear_ideal(c, a, f)
        if tr.TranslationDelta(c).apply(g) != f:
            return FAIL, "preimage failed at c=%s a=%s f=%s" % (c, a, f)
        if not g.is_zero and not Polynomial((-a, Fraction(1))).divides(g):
            return FAIL, "preimage left the ideal at c=%s a=%s f=%s" % (c, a, f)
    return PASS, "%d preimages verified" % count


def _case_tr_quantum_consistency(rng, limits):
    count = limits.samples(200)
    for _ in range(count):
        c = _nonzero_rational(rng)
        a = _rational(rng)
        u = Polynomial((Fraction(0), -a, Fraction(1)))
        h = u * _poly(rng, 4)
        image = tr.quantum_derivative(c, h)
        if image != tr.TranslationDelta(c).apply(h) / (-c):
            return FAIL, "quantum/difference scaling broke at c=%s" % (c,)
        if not h.is_zero and not tr.quadratic_member(c, a, image * (-c)):
            return FAIL, "quantum image escaped the criterion at c=%s a=%s" % (c, a)
        f = _poly(rng, 6)
        if tr.quadratic_member(c, a, f) != tr.quadratic_member(c, a, f * (-c)):
            return FAIL, "verdicts differ under the scaling at c=%s a=%s" % (c, a)
    return PASS, "%d samples consistent" % count


def _case_tr_difference_conjugation(rng, limits):
    for c in (Fraction(1), Fraction(2), Fraction(-3, 2), Fraction(1, 3)):
        delta = tr.TranslationDelta(c)
        into = Polynomial((Fraction(0), 1 / c))
        back = Polynomial((Fraction(0), c))
        for n in range(33):
            xn = Polynomial.monomial(n)
            conjugated = delta.apply(xn.compose(into)).compose(back)
            if conjugated != -tr.forward_difference(xn):
                return FAIL, "conjugation identity broke at c=%s n=%d" % (c, n)
    return PASS, "identity on monomials up to degree 32, four steps"


def _translation_cases():
    return [
        ("translation/monomial-reduction-vs-oracle", _case_tr_monomial_reduction),
        ("translation/criterion-vs-oracle", _case_tr_criterion_vs_oracle),
        ("translation/unit-ratio-divisibility", _case_tr_unit_ratio),
        ("translation/negative-unit-ratio-divisibility", _case_tr_negative_unit_ratio),
        ("translation/zero-ratio-radical-scan", _case_tr_zero_ratio_scan),
        ("translation/repeated-root-radical-scan", _case_tr_repeated_root_scan),
        ("translation/linear-ideal-preimage", _case_tr_preimage),
        ("translation/quantum-derivation-consistency", _case_tr_quantum_consistency),
        ("translation/difference-conjugation", _case_tr_difference_conjugation),
    ]


# -- mathieu suite --------------------------------------------------------


def curated_exponent_suite():
    """30 named exponent sets with their expected classification.

    Records are (name, set, expected clause, expected ray witness).
    """
    E = ms.ExponentSet
    C = ms.MSClause
    return [
        ("all", E.periodic(1, {0}), C.FULL, None),
        ("odd", E.periodic(2, {1}), C.SPARSE_NO_RAY, None),
        ("tail-from-2", E.periodic(1, {0}, threshold=2), C.COFINITE_NO_ONE, None),
        ("tail-from-5-plus-3", E.periodic(1, {0}, threshold=5, exceptional={3}), C.COFINITE_NO_ONE, None),
        ("tail-from-1", E.periodic(1, {0}, threshold=1), C.COFINITE_NO_ONE, None),
        ("empty", E.from_finite(()), C.FINITE_DIM_NO_ONE, None),
        ("finite-1-2-3", E.from_finite({1, 2, 3}), C.FINITE_DIM_NO_ONE, None),
        ("finite-2-5", E.from_finite({2, 5}), C.FINITE_DIM_NO_ONE, None),
        ("finite-7", E.from_finite({7}), C.FINITE_DIM_NO_ONE, None),
        ("mod4-residues-1-2", E.periodic(4, {1, 2}), C.SPARSE_NO_RAY, None),
        ("mod5-residues-1-4", E.periodic(5, {1, 4}), C.SPARSE_NO_RAY, None),
        ("mod3-residue-1", E.periodic(3, {1}), C.SPARSE_NO_RAY, None),
        ("mod6-residues-1-5", E.periodic(6, {1, 5}), C.SPARSE_NO_RAY, None),
        ("odd-plus-8", E.periodic(2, {1}, exceptional={8}), C.SPARSE_NO_RAY, None),
        ("odd-from-7-plus-2", E.periodic(2, {1}, threshold=7, exceptional={2}), C.SPARSE_NO_RAY, None),
        ("mod9-residues-1-4-7", E.periodic(9, {1, 4, 7}), C.SPARSE_NO_RAY, None),
        ("tail-from-10-plus-3-5", E.periodic(1, {0}, threshold=10, exceptional={3, 5}), C.COFINITE_NO_ONE, None),
        ("mod4-residues-2-3", E.periodic(4, {2, 3}), C.SPARSE_NO_RAY, None),
        ("odd-from-3", E.periodic(2, {1}, threshold=3), C.SPARSE_NO_RAY, None),
        ("multiples-of-3", E.periodic(3, {0}, threshold=1), C.NOT_MS, 3),
        ("multiples-of-2", E.periodic(2, {0}, threshold=1), C.NOT_MS, 2),
        ("multiples-of-5", E.periodic(5, {0}, threshold=1), C.NOT_MS, 5),
        ("one-then-multiples-of-5", E.periodic(5, {0}, threshold=10, exceptional={1}), C.NOT_MS, 10),
        ("multiples-of-3-plus-13", E.periodic(3, {0}, threshold=1, exceptional={13}), C.NOT_MS, 3),
        ("evens-with-0", E.periodic(2, {0}), C.NOT_MS, None),
        ("all-but-5", E.periodic(1, {0}, threshold=6, exceptional={0, 1, 2, 3, 4}), C.NOT_MS, None),
        ("just-0", E.from_finite({0}), C.NOT_MS, None),
        ("finite-0-2", E.from_finite({0, 2}), C.NOT_MS, None),
        ("mod4-residues-0-1", E.periodic(4, {0, 1}), C.NOT_MS, None),
        ("odd-or-multiples-of-4", E.periodic(4, {0, 1, 3}, threshold=1), C.NOT_MS, 4),
    ]


def _candidates_for(s: ms.ExponentSet):
    cands = [Polynomial.one()]
    for e in s.members_below(9):
        if e:
            cands.append(Polynomial.monomial(e))
    ray = ms.smallest_ray(s)
    if ray is not None and ray > 0:
        mono = Polynomial.monomial(ray)
        if mono not in cands:
            cands.append(mono)
    return cands


def _case_ms_membership(rng, limits):
    count = limits.samples(200)
    for _ in range(count):
        modulus = rng.randint(1, 6)
        residues = frozenset(r for r in range(modulus) if rng.random() < 0.45)
        threshold = rng.randint(0, 12)
        exceptional = frozenset(n for n in range(20) if rng.random() < 0.15)
        s = ms.ExponentSet(exceptional, modulus, residues, threshold)
        rebuilt = ms.ExponentSet(s.exceptional, s.modulus, s.residues, s.threshold)
        if rebuilt != s:
            return FAIL, "canonical form not idempotent"
        for n in range(10 * modulus + threshold + 1):
            direct = n in exceptional or (n >= threshold and n % modulus in residues)
            if (n in s) != direct:
                return FAIL, "membership mismatch at n=%d" % n
    return PASS, "%d random sets, direct-loop agreement" % count


def _case_ms_classifier_vs_truncated(rng, limits):
    window = limits.win(12)
    mdeg = 6
    for name, s, clause, ray in curated_exponent_suite():
        verdict = ms.classify_homogeneous(s, 0 in s, s.is_finite)
        if verdict.clause is not clause or verdict.ray_witness != ray:
            return FAIL, "classifier missed on %r (got %s/%s)" % (
                name,
                verdict.clause.value,
                verdict.ray_witness,
            )
        report = ms.truncated_ms_check(ms.span_member(s), _candidates_for(s), window, mdeg)
        if verdict.is_mathieu and not report.clean:
            return FAIL, "qualified set %r showed a violation" % name
        if not verdict.is_mathieu:
            wanted = (
                Polynomial.monomial(verdict.ray_witness)
                if verdict.ray_witness
                else Polynomial.one()
            )
            if not any(v.candidate == wanted for v in report.violations):
                return FAIL, "no violation realized the witness on %r" % name
    return PASS, "30 curated sets, window %d, multipliers up to degree %d" % (window, mdeg)


def _case_ms_ray_equivalence(rng, limits):
    window = limits.win(12)
    checked = 0
    for name, s, clause, ray in curated_exponent_suite():
        if s.is_finite or s.is_cofinite or 0 in s:
            continue
        checked += 1
        report = ms.truncated_ms_check(ms.span_member(s), _candidates_for(s), window, 6)
        if (ms.smallest_ray(s) is None) != report.clean:
            return FAIL, "ray/violation equivalence broke on %r" % name
    return PASS, "%d sparse sets, both directions" % checked


def _case_ms_negative_control(rng, limits):
    x = Polynomial.x()
    report = ms.radical_scan(
        lambda f: f.is_zero or x.divides(f), limits.degree(3), range(-2, 3), limits.win(8)
    )
    ok = x in report.survivors and report.survivors
    return _check(bool(ok), "generator x reported among %d survivors" % len(report.survivors))


def _case_ms_basis_span_scan(rng, limits):
    def member(f: Polynomial) -> bool:
        coords = bern.v01_coords(f)
        return all(c == 0 for i, c in enumerate(coords) if i not in (1, 2, 3))

    report = ms.radical_scan(member, limits.degree(3), range(-2, 3), limits.win(8))
    return REPORT_ONLY, "%d survivors of %d candidates (window %d)" % (
        len(report.survivors),
        report.candidates_checked,
        report.power_window,
    )


def _mathieu_cases():
    return [
        ("mathieu/exponent-set-membership", _case_ms_membership),
        ("mathieu/classifier-vs-truncated", _case_ms_classifier_vs_truncated),
        ("mathieu/ray-equivalence", _case_ms_ray_equivalence),
        ("mathieu/ideal-negative-control", _case_ms_negative_control),
        ("mathieu/basis-span-radical-scan", _case_ms_basis_span_scan),
    ]


# -- runner ---------------------------------------------------------------

_SUITE_BUILDERS = {
    "bernoulli": _bernoulli_cases,
    "cvs": _cvs_cases,
    "derivations": _derivations_cases,
    "ederivations": _ederivations_cases,
    "translation": _translation_cases,
    "mathieu": _mathieu_cases,
}


def _thread_cap() -> int:
    raw = os.environ.get("DERIVIMAGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_verify(suite: str, seed: int = 0, limits: Optional[Limits] = None) -> VerifyReport:
    """Run one suite (or "all"); deterministic given (seed, limits)."""
    limits = limits or Limits()
    if suite == "all":
        names = SUITE_NAMES
    elif suite in _SUITE_BUILDERS:
        names = (suite,)
    else:
        raise ValueError("unknown suite %r (expected one of %s or 'all')"
                         % (suite, ", ".join(SUITE_NAMES)))
    items = []
    for name in names:
        items.extend(_SUITE_BUILDERS[name]())

    def run_one(item):
        case_id, fn = item
        rng = _rng_for(seed, case_id)
        try:
            status, detail = fn(rng, limits)
        except Exception as exc:
            status, detail = FAIL, "unexpected error: %r" % (exc,)
        return CaseResult(case_id, status, detail)

    workers = min(_thread_cap(), len(items)) if items else 1
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_one, items))
    else:
        results = [run_one(item) for item in items]
    results.sort(key=lambda case: case.id)
    return VerifyReport(suite, seed, limits, tuple(results))
