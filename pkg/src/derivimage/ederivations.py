"""E-derivations of Q[x]: maps f -> f - f(w(x)).

Every algebra endomorphism of Q[x] is substitution by some w, and the
image of the associated E-derivation falls into one of four regimes by
the shape of w: constant, translation x + c, scaling q*x (a general
affine map is centered into a scaling by a conjugating shift), and
degree >= 2.  Membership in the image is decided per regime; membership
in the image of an ideal has a universal linear-algebra oracle.

Over Q the only roots of unity are 1 and -1, so the root-of-unity branch
of the scaling regime exists only for q = -1; scalings by other roots of
unity would need an extension field and are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .images import Membership
from .linsolve import solve_linear
from .poly import Polynomial


class CaseKind(Enum):
    CONSTANT = "constant"
    TRANSLATION = "translation"
    SCALING = "scaling"
    HIGH_DEGREE = "high-degree"


@dataclass(frozen=True)
class CaseTag:
    """Regime of w: value is c, c, q, or deg w respectively.

    A general affine w = a*x + b (a outside {0, 1}) is tagged SCALING and
    carries the centering shift s with (x+s) after (x -> ax+b) after
    (x-s) acting as x -> a*x.
    """

    kind: CaseKind
    value: Union[Fraction, int]
    shift: Optional[Fraction] = None

    def to_json_dict(self) -> dict:
        out = {"kind": self.kind.value, "value": str(self.value)}
        if self.shift is not None:
            out["shift"] = str(self.shift)
        return out


@dataclass(frozen=True)
class EDerivation:
    """delta = identity minus substitution by w."""

    w: Polynomial

    def apply(self, f: Polynomial) -> Polynomial:
        return f - f.compose(self.w)


def normalize_affine(a: Fraction, b: Fraction) -> Fraction:
    """Centering shift for x -> a*x + b with a outside {0, 1}.

    Conjugating the substitution by x -> x + s kills the constant part:
    w(x + s) - s == a*x.  The identity is checked before returning.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or a == 1:
        raise ValueError("affine centering requires a scaling factor outside {0, 1}")
    s = b / (1 - a)
    w = Polynomial((b, a))
    if w.translate(s) - Polynomial.constant(s) != Polynomial((Fraction(0), a)):
        raise RuntimeError("affine centering failed its composition check")
    return s


def classify_case(w: Polynomial) -> CaseTag:
    """Exactly one regime per w."""
    if w.is_zero or w.degree == 0:
        return CaseTag(CaseKind.CONSTANT, w.constant_term)
    if w.degree == 1:
        a = w.coefficient(1)
        b = w.coefficient(0)
        if a == 1:
            return CaseTag(CaseKind.TRANSLATION, b)
        if b == 0:
            return CaseTag(CaseKind.SCALING, a)
        return CaseTag(CaseKind.SCALING, a, shift=normalize_affine(a, b))
    return CaseTag(CaseKind.HIGH_DEGREE, w.degree)


def _verified(w: Polynomial, preimage: Polynomial, f: Polynomial) -> Membership:
    if EDerivation(w).apply(preimage) != f:
        raise RuntimeError("image membership witness failed re-verification")
    return Membership(True, preimage)


def _translation_preimage(c: Fraction, f: Polynomial) -> Polynomial:
    # peel the top degree; delta applied to x^(n+1) has leading term
    # -(n+1)*c*x^n, so each pass strictly lowers the residual degree
    shift = Polynomial((c, Fraction(1)))
    preimage = Polynomial.zero()
    residual = f
    while not residual.is_zero:
        n = residual.degree
        step = Polynomial.monomial(
            n + 1, -residual.leading_coefficient / ((n + 1) * c)
        )
        preimage = preimage + step
        residual = residual - (step - step.compose(shift))
    return preimage


def image_member(w: Polynomial, f: Polynomial) -> Membership:
    """Decide f in Im(delta) for delta = I - (x -> w), witness included."""
    tag = classify_case(w)
    if tag.kind is CaseKind.CONSTANT:
        # image is the kernel of the substitution: everything vanishing at c
        if f(tag.value) == 0:
            return _verified(w, f, f)
        return Membership(False)
    if tag.kind is CaseKind.TRANSLATION:
        c = tag.value
        if c == 0:
            return Membership(True, Polynomial.zero()) if f.is_zero else Membership(False)
        return _verified(w, _translation_preimage(c, f), f)
    if tag.kind is CaseKind.SCALING:
        if tag.shift is not None:
            centered = Polynomial((Fraction(0), tag.value))
            inner = image_member(centered, f.translate(tag.shift))
            if not inner.member:
                return Membership(False)
            return _verified(w, inner.witness.translate(-tag.shift), f)
        q = tag.value
        if q == -1:
            if any(c for i, c in enumerate(f.coeffs) if i % 2 == 0):
                return Membership(False)
            preimage = Polynomial(
                c / 2 if i % 2 else Fraction(0) for i, c in enumerate(f.coeffs)
            )
            return _verified(w, preimage, f)
        # q is not a root of unity: the image is x*Q[x]
        if f.constant_term:
            return Membership(False)
        preimage = Polynomial(
            c / (1 - q**i) if i else Fraction(0) for i, c in enumerate(f.coeffs)
        )
        return _verified(w, preimage, f)
    return _high_degree_member(w, f)


def _high_degree_member(w: Polynomial, f: Polynomial) -> Membership:
    # triangular solve: the preimage sum(u_j x^j) is read off top-down from
    # the coefficients of f at the multiples of deg w
    if f.is_zero:
        return Membership(True, Polynomial.zero())
    d = w.degree
    if f.degree == 0 or f.degree % d:
        return Membership(False)
    lc = w.leading_coefficient
    top = f.degree // d
    powers = [Polynomial.one()]
    for _ in range(top):
        powers.append(powers[-1] * w)
    residual = f
    coeffs = [Fraction(0)] * (top + 1)
    for j in range(top, 0, -1):
        cj = residual.coefficient(d * j)
        if cj:
            uj = -cj / lc**j
            coeffs[j] = uj
            residual = residual - uj * (Polynomial.monomial(j) - powers[j])
    if not residual.is_zero:
        return Membership(False)
    return _verified(w, Polynomial(coeffs), f)


@dataclass(frozen=True)
class WDecomposition:
    """Split of f along the subalgebra generated by w (deg w >= 2).

    f == outside + composed(w(x)), where every exponent of `outside` lies
    outside the multiples of deg w; the split is unique.
    """

    outside: Polynomial
    composed: Polynomial
    outside_degree: int


def decompose_by_w(w: Polynomial, f: Polynomial) -> WDecomposition:
    if w.is_zero or w.degree < 2:
        raise ValueError("the decomposition needs deg w >= 2")
    d = w.degree
    lc = w.leading_coefficient
    powers = {0: Polynomial.one()}
    outside = Polynomial.zero()
    composed = []
    residual = f
    while not residual.is_zero:
        n = residual.degree
        t = residual.leading_coefficient
        if n % d == 0:
            j = n // d
            if j not in powers:
                base = max(k for k in powers if k <= j)
                power = powers[base]
                for k in range(base + 1, j + 1):
                    power = power * w
                    powers[k] = power
            coeff = t / lc**j
            composed.append((j, coeff))
            residual = residual - coeff * powers[j]
        else:
            term = Polynomial.monomial(n, t)
            outside = outside + term
            residual = residual - term
    size = max((j for j, _ in composed), default=-1) + 1
    inner = [Fraction(0)] * size
    for j, coeff in composed:
        inner[j] = coeff
    composed_poly = Polynomial(inner)
    return WDecomposition(
        outside, composed_poly, outside.degree if not outside.is_zero else 0
    )


def outside_degree(w: Polynomial, f: Polynomial) -> int:
    """Degree of the component of f outside the subalgebra generated by w."""
    return decompose_by_w(w, f).outside_degree


def default_degree_bound(w: Polynomial, u: Polynomial, f: Polynomial) -> int:
    """Preimage-degree cap for the ideal-image solve, from degree bookkeeping.

    Negative means no preimage degree is possible at all.  The involution
    q = -1 (and its affine conjugates) can cancel arbitrarily many leading
    terms, so that case gets the additive bound deg f + deg u + 2 instead
    of the subtractive one.
    """
    tag = classify_case(w)
    du = u.degree
    df = f.degree
    if tag.kind is CaseKind.TRANSLATION:
        return df + 1 - du
    if tag.kind is CaseKind.HIGH_DEGREE:
        if df % tag.value:
            return -1
        return df // tag.value - du
    if tag.kind is CaseKind.SCALING and tag.value == -1:
        return df + du + 2
    return df - du + 2


def ideal_image_member(
    w: Polynomial,
    u: Polynomial,
    f: Polynomial,
    degree_bound: Optional[int] = None,
) -> Membership:
    """Decide f in delta(u*Q[x]) by exact linear solving.

    f is a member exactly when f = u*g - u(w)*g(w) for some g; for each
    candidate degree of g up to the bound this is a linear system in the
    coefficients of g.  Witnesses are re-verified before returning.
    """
    if u.is_zero:
        raise ValueError("the ideal generator must be nonzero")
    if degree_bound is not None and degree_bound < 0:
        raise ValueError("the preimage degree bound must be nonnegative")
    if f.is_zero:
        return Membership(True, Polynomial.zero())
    if degree_bound is None:
        degree_bound = default_degree_bound(w, u, f)
        if degree_bound < 0:
            return Membership(False)
    uw = u.compose(w)
    columns = []
    w_power = Polynomial.one()
    for j in range(degree_bound + 1):
        columns.append(Polynomial.monomial(j) * u - uw * w_power)
        w_power = w_power * w
    for gdeg in range(degree_bound + 1):
        cols = columns[: gdeg + 1]
        nrows = f.degree + 1
        for col in cols:
            if not col.is_zero:
                nrows = max(nrows, col.degree + 1)
        matrix = [[col.coefficient(r) for col in cols] for r in range(nrows)]
        rhs = [f.coefficient(r) for r in range(nrows)]
        outcome = solve_linear(matrix, rhs)
        if outcome.solvable:
            g = Polynomial(outcome.solution)
            if u * g - uw * g.compose(w) != f:
                raise RuntimeError("ideal membership witness failed re-verification")
            return Membership(True, g)
    return Membership(False)
