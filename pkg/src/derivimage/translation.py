"""Images of ideals under the shift difference delta(f) = f - f(x + c).

This is the locally nilpotent E-derivation regime (c nonzero): delta drops
degree by exactly one.  Images of degree <= 1 ideals are everything, with
constructive preimages.  For the quadratic ideal (x^2 - a*x) every f is
congruent modulo the image to the single constant

    sum(f_i * R_i(a/c) * c^i)

where R_i is the reduction polynomial from the `bernoulli` module, and
membership means that constant vanishes.  Ideals generated by a product
of rational linear factors reduce to quadratic tests over root pairs.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .bernoulli import d_poly
from .images import ImageShape, ShapeKind
from .poly import Polynomial


@dataclass(frozen=True)
class TranslationDelta:
    """delta = I - (x -> x + c) with c nonzero."""

    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        if self.c == 0:
            raise ValueError("the translation step must be nonzero")

    @property
    def w(self) -> Polynomial:
        return Polynomial((self.c, Fraction(1)))

    def apply(self, f: Polynomial) -> Polynomial:
        return f - f.compose(self.w)


def preimage_in_linear_ideal(c, a, f: Polynomial) -> Polynomial:
    """Solve delta(g) = f with g inside (x - a)*Q[x].

    Builds g by peeling the top degree of the residual against
    delta((x - a)^(n+1)), whose leading term is -(n+1)*c*x^n; the result
    is re-verified and divisible by (x - a) by construction.
    """
    delta = TranslationDelta(c)
    a = Fraction(a)
    base = Polynomial((-a, Fraction(1)))
    powers = [Polynomial.one()]
    g = Polynomial.zero()
    residual = f
    while not residual.is_zero:
        n = residual.degree
        while len(powers) <= n + 1:
            powers.append(powers[-1] * base)
        step_image = delta.apply(powers[n + 1])
        alpha = residual.leading_coefficient / step_image.leading_coefficient
        g = g + alpha * powers[n + 1]
        residual = residual - alpha * step_image
    if delta.apply(g) != f or not (base.divides(g) or g.is_zero):
        raise RuntimeError("linear-ideal preimage failed re-verification")
    return g


class QuadraticCriterion:
    """Memoized weights for membership in delta((x^2 - a*x)*Q[x]).

    weight(i) = R_i(a/c) * c^i; the reduction of f is the inner product of
    f's coefficients with the weights, and f is a member exactly when the
    reduction vanishes.
    """

    def __init__(self, c, a):
        self.c = Fraction(c)
        self.a = Fraction(a)
        if self.c == 0:
            raise ValueError("the translation step must be nonzero")
        self.ratio = self.a / self.c
        self._weights = [Fraction(1)]
        self._lock = threading.Lock()

    def weight(self, i: int) -> Fraction:
        if i >= len(self._weights):
            with self._lock:
                while len(self._weights) <= i:
                    n = len(self._weights)
                    self._weights.append(d_poly(n)(self.ratio) * self.c**n)
        return self._weights[i]

    def reduce(self, f: Polynomial) -> Fraction:
        total = Fraction(0)
        for i, coeff in enumerate(f.coeffs):
            if coeff:
                total += coeff * self.weight(i)
        return total

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f) == 0


_criteria: dict = {}
_criteria_lock = threading.Lock()


def quadratic_criterion(c, a) -> QuadraticCriterion:
    key = (Fraction(c), Fraction(a))
    crit = _criteria.get(key)
    if crit is None:
        with _criteria_lock:
            crit = _criteria.setdefault(key, QuadraticCriterion(*key))
    return crit


def reduce_mod_quadratic(c, a, f: Polynomial) -> Fraction:
    """The unique constant congruent to f modulo delta((x^2 - a*x)*Q[x])."""
    return quadratic_criterion(c, a).reduce(f)


def quadratic_member(c, a, f: Polynomial) -> bool:
    """Whether f lies in delta((x^2 - a*x)*Q[x])."""
    return reduce_mod_quadratic(c, a, f) == 0


def quadratic_shape(c, a) -> ImageShape:
    """Closed-form shape of delta((x^2 - a*x)*Q[x]) where one is known.

    ratio a/c = 1 gives the ideal (x); ratio -1 gives (x - a), that is
    (x + c), since the reduction weights there are (-c)^i and the
    criterion says f(-c) = 0; ratio 0 has trivial radical with no
    membership formula; every other ratio is open, though membership
    stays decidable through `quadratic_member`.
    """
    crit = quadratic_criterion(c, a)
    if crit.ratio == 1:
        return ImageShape(ShapeKind.PRINCIPAL_IDEAL, Polynomial.x())
    if crit.ratio == -1:
        return ImageShape(
            ShapeKind.PRINCIPAL_IDEAL, Polynomial((-crit.a, Fraction(1)))
        )
    if crit.ratio == 0:
        return ImageShape(ShapeKind.RADICAL_ZERO_CLAIMED)
    return ImageShape(ShapeKind.UNCLASSIFIED)


def rational_rooted_member(
    c,
    roots: Sequence,
    scale,
    f: Polynomial,
    generator: Optional[Polynomial] = None,
) -> bool:
    """Membership in delta(u*Q[x]) for u = scale * prod(x - r_i), r_i rational.

    The image is the intersection over root pairs i < j of the images of
    the quadratic ideals ((x - r_i)(x - r_j)); each pair is tested by
    translating f by r_i and applying the quadratic criterion with
    a = r_j - r_i.  Repeated roots contribute a = 0 pairs.  The caller
    supplies the full root list (with multiplicity); when the generator is
    passed as well it is validated against the roots, no factorization is
    attempted.
    """
    c = Fraction(c)
    if c == 0:
        raise ValueError("the translation step must be nonzero")
    root_list = [Fraction(r) for r in roots]
    if len(root_list) < 2:
        raise ValueError("need at least two roots (the generator must have degree >= 2)")
    scale = Fraction(scale)
    if scale == 0:
        raise ValueError("the leading coefficient must be nonzero")
    if generator is not None:
        rebuilt = Polynomial.from_roots(root_list, scale)
        if rebuilt != generator:
            raise ValueError("the root list does not rebuild the stated generator")
    translated = {}
    for i, ri in enumerate(root_list):
        if ri not in translated:
            translated[ri] = f.translate(ri)
        for j in range(i + 1, len(root_list)):
            if not quadratic_member(c, root_list[j] - ri, translated[ri]):
                return False
    return True


def quantum_derivative(h, f: Polynomial) -> Polynomial:
    """(f(x + h) - f(x)) / h; equals -(1/h) times the shift difference."""
    h = Fraction(h)
    if h == 0:
        raise ValueError("the quantum step must be nonzero")
    return (f.translate(h) - f) / h


def forward_difference(f: Polynomial) -> Polynomial:
    """f(x + 1) - f(x)."""
    return f.translate(1) - f
