"""Images of ideals of Q[x] under derivations a(x) * d/dx.

The image of the whole algebra is the principal ideal generated by a.
For the plain derivative acting on an ideal (u), membership has a closed
decision: f lies in the image exactly when the antiderivative of f is
constant modulo u.  A general derivation a*d/dx applied to (u) factors
through that test, since a*(u*g)' must be divisible by a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .images import ImageShape, Membership, ShapeKind
from .poly import Polynomial, as_linear_power


@dataclass(frozen=True)
class Derivation:
    """The derivation a(x) * d/dx of Q[x]."""

    a: Polynomial

    @property
    def is_locally_finite(self) -> bool:
        return self.a.is_zero or self.a.degree <= 1

    @property
    def is_locally_nilpotent(self) -> bool:
        return self.a.is_zero or self.a.degree == 0

    def apply(self, f: Polynomial) -> Polynomial:
        return self.a * f.derivative()


def image_member(d: Derivation, f: Polynomial) -> bool:
    """Whether f lies in the image of the derivation, which is a*Q[x]."""
    if d.a.is_zero:
        return f.is_zero
    return d.a.divides(f)


def _checked(applied: Polynomial, expected: Polynomial, witness: Polynomial):
    if applied != expected:
        raise RuntimeError("membership witness failed re-verification")
    return Membership(True, witness)


def derivative_ideal_member(u: Polynomial, f: Polynomial) -> Membership:
    """Decide f in (d/dx)(u*Q[x]), with a verified witness.

    f = (u*g)' for some g exactly when the zero-constant antiderivative of
    f is congruent to a constant modulo u; the witness g is the quotient.
    """
    if u.is_zero:
        raise ValueError("the ideal generator must be nonzero")
    quotient, remainder = divmod(f.antiderivative(), u)
    if remainder.is_zero or remainder.degree == 0:
        return _checked((u * quotient).derivative(), f, quotient)
    return Membership(False)


def derivative_ideal_shape(u: Polynomial) -> ImageShape:
    """Shape of (d/dx)(u*Q[x]).

    For u a rational linear power (x - c)^n the image is the whole algebra
    (n <= 1) or the principal ideal generated by (x - c)^(n-1); any other
    generator leaves an image with trivial radical and no membership
    formula, so `derivative_ideal_member` stays the oracle.
    """
    if u.is_zero:
        raise ValueError("the ideal generator must be nonzero")
    lp = as_linear_power(u)
    if lp is None:
        return ImageShape(ShapeKind.RADICAL_ZERO_CLAIMED)
    if lp.exponent <= 1:
        return ImageShape(ShapeKind.FULL_ALGEBRA)
    gen = Polynomial((-lp.root, Fraction(1))) ** (lp.exponent - 1)
    return ImageShape(ShapeKind.PRINCIPAL_IDEAL, gen)


def derivation_ideal_member(
    a: Polynomial, u: Polynomial, f: Polynomial
) -> Membership:
    """Decide f in D(u*Q[x]) for D = a(x)*d/dx, with a verified witness.

    D(u*g) = a*(u*g)', so f is a member exactly when a divides f and f/a
    lies in the derivative image of the ideal.
    """
    if a.is_zero or u.is_zero:
        raise ValueError("the weight and the ideal generator must be nonzero")
    if f.is_zero:
        return Membership(True, Polynomial.zero())
    quotient, remainder = divmod(f, a)
    if not remainder.is_zero:
        return Membership(False)
    inner = derivative_ideal_member(u, quotient)
    if not inner.member:
        return Membership(False)
    return _checked(a * (u * inner.witness).derivative(), f, inner.witness)
