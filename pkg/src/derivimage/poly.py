"""Dense univariate polynomials over exact rationals.

Coefficients are `fractions.Fraction` values stored ascending by power.
The zero polynomial is the empty coefficient tuple and its degree is
deliberately undefined: callers branch on `is_zero` instead of relying on
a -1 sentinel leaking into arithmetic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Union

from ._backend import poly_mul as _poly_mul

Scalar = Union[int, Fraction]

# Fraction exposes its reduced parts via slots; building results directly
# skips a redundant gcd on pairs the kernel already reduced.
try:
    _probe = Fraction.__new__(Fraction)
    _probe._numerator = 1
    _probe._denominator = 2
    _FAST_FRACTION = _probe == Fraction(1, 2)
except (AttributeError, TypeError):  # pragma: no cover
    _FAST_FRACTION = False


def _fraction(num: int, den: int) -> Fraction:
    if _FAST_FRACTION:
        f = Fraction.__new__(Fraction)
        f._numerator = num
        f._denominator = den
        return f
    return Fraction(num, den)  # pragma: no cover


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(
        "polynomial coefficients must be exact (int or Fraction), got %s"
        % type(value).__name__
    )


class Polynomial:
    """Immutable element of Q[x]."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Union[str, Iterable[Scalar]] = ()):
        if isinstance(coeffs, str):
            self._coeffs = parse_polynomial(coeffs)._coeffs
            return
        items = [_coerce(c) for c in coeffs]
        while items and not items[-1]:
            items.pop()
        self._coeffs = tuple(items)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> Polynomial:
        return _ZERO

    @classmethod
    def one(cls) -> Polynomial:
        return _ONE

    @classmethod
    def x(cls) -> Polynomial:
        return _X

    @classmethod
    def constant(cls, value: Scalar) -> Polynomial:
        return cls((_coerce(value),))

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> Polynomial:
        if exponent < 0:
            raise ValueError("monomial exponent must be nonnegative")
        c = _coerce(coeff)
        if not c:
            return _ZERO
        return cls((Fraction(0),) * exponent + (c,))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], scale: Scalar = 1) -> Polynomial:
        result = cls.constant(scale)
        for r in roots:
            result = result * cls((-_coerce(r), Fraction(1)))
        return result

    @classmethod
    def _raw(cls, coeffs: tuple) -> Polynomial:
        p = cls.__new__(cls)
        p._coeffs = coeffs
        return p

    # -- structure ----------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        """Coefficients ascending by power (empty for the zero polynomial)."""
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @property
    def constant_term(self) -> Fraction:
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        if i < 0:
            raise ValueError("coefficient index must be nonnegative")
        if i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return "Polynomial(%r)" % (format_polynomial(self),)

    def __str__(self):
        return format_polynomial(self)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        items = [x + y for x, y in itertools.zip_longest(a, b, fillvalue=Fraction(0))]
        while items and not items[-1]:
            items.pop()
        return Polynomial._raw(tuple(items))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self._coeffs))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            a, b = self._coeffs, other._coeffs
            if not a or not b:
                return _ZERO
            rn, rd = _poly_mul(
                [c.numerator for c in a],
                [c.denominator for c in a],
                [c.numerator for c in b],
                [c.denominator for c in b],
            )
            return Polynomial._raw(tuple(map(_fraction, rn, rd)))
        if isinstance(other, (int, Fraction)):
            k = _coerce(other)
            if not k:
                return _ZERO
            return Polynomial._raw(tuple(c * k for c in self._coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            k = _coerce(scalar)
            if not k:
                raise ZeroDivisionError("division of a polynomial by zero")
            return self * (1 / k)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        if self.is_zero or len(self._coeffs) < len(other._coeffs):
            return _ZERO, self
        rem = list(self._coeffs)
        db = len(other._coeffs) - 1
        inv_lc = 1 / other._coeffs[-1]
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db] * inv_lc
            if c:
                quot[k] = c
                for j, bj in enumerate(other._coeffs):
                    rem[k + j] -= c * bj
        while rem and not rem[-1]:
            rem.pop()
        while quot and not quot[-1]:
            quot.pop()
        return Polynomial._raw(tuple(quot)), Polynomial._raw(tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: Polynomial) -> bool:
        """Whether self divides other exactly (self nonzero)."""
        return (other % self).is_zero

    # -- calculus and composition --------------------------------------

    def derivative(self) -> Polynomial:
        c = self._coeffs
        return Polynomial._raw(tuple(c[i] * i for i in range(1, len(c))))

    def antiderivative(self) -> Polynomial:
        """The antiderivative with zero constant term."""
        c = self._coeffs
        if not c:
            return _ZERO
        return Polynomial._raw(
            (Fraction(0),) + tuple(c[i] / (i + 1) for i in range(len(c)))
        )

    def compose(self, inner: Polynomial) -> Polynomial:
        """self(inner(x)) by Horner's scheme."""
        if self.is_zero:
            return _ZERO
        result = Polynomial.constant(self._coeffs[-1])
        for c in reversed(self._coeffs[:-1]):
            result = result * inner
            if c:
                result = result + Polynomial.constant(c)
        return result

    def translate(self, shift: Scalar) -> Polynomial:
        """self(x + shift)."""
        return self.compose(Polynomial((_coerce(shift), Fraction(1))))

    def __call__(self, point: Scalar) -> Fraction:
        x = _coerce(point)
        value = Fraction(0)
        for c in reversed(self._coeffs):
            value = value * x + c
        return value

    def monic(self) -> Polynomial:
        if self.is_zero:
            raise ValueError("the zero polynomial cannot be made monic")
        lc = self._coeffs[-1]
        if lc == 1:
            return self
        return self / lc

    # -- serialization --------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json_dict(cls, obj) -> Polynomial:
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError("polynomial JSON form is {\"coeffs\": [...]}")
        return cls(Fraction(str(c)) for c in obj["coeffs"])


def _as_poly(value) -> Optional[Polynomial]:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return None


_ZERO = Polynomial._raw(())
_ONE = Polynomial._raw((Fraction(1),))
_X = Polynomial._raw((Fraction(0), Fraction(1)))


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor; raises when both inputs are zero."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def has_repeated_root(u: Polynomial) -> bool:
    """Whether u has a repeated root in the algebraic closure.

    Equivalent to gcd(u, u') being nonconstant; requires deg u >= 1.
    """
    if u.is_zero or u.degree < 1:
        raise ValueError("repeated-root test needs a nonconstant polynomial")
    return gcd(u, u.derivative()).degree >= 1


class LinearPower(NamedTuple):
    """u = scale * (x - root)^exponent."""

    root: Fraction
    exponent: int
    scale: Fraction


def as_linear_power(u: Polynomial) -> Optional[LinearPower]:
    """Recognize u as scale*(x - c)^n with rational c, if possible.

    Constants report exponent 0 with root 0 by convention.  Polynomials
    that are powers of a linear factor only over an extension field (or not
    at all) return None.
    """
    if u.is_zero:
        raise ValueError("the zero polynomial is not a linear power")
    n = u.degree
    scale = u.leading_coefficient
    if n == 0:
        return LinearPower(Fraction(0), 0, scale)
    m = u.monic()
    root = -m.coefficient(n - 1) / n
    if Polynomial((-root, Fraction(1))) ** n == m:
        return LinearPower(root, n, scale)
    return None


# -- text form --------------------------------------------------------
#
# poly  := term (("+"|"-") term)*
# term  := coeff | coeff "*"? var | var
# var   := "x" ("^" uint)?
# coeff := ("-")? uint ("/" uint)?
#
# The parser additionally accepts a sign directly before a bare variable
# term ("-x^2 + x"), which the canonical printer emits for a negative
# leading term of unit magnitude.


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


def parse_polynomial(text: str) -> Polynomial:
    s = text
    n = len(s)
    pos = 0
    totals: dict = {}

    def skip_ws():
        nonlocal pos
        while pos < n and s[pos].isspace():
            pos += 1

    def read_uint() -> int:
        nonlocal pos
        start = pos
        while pos < n and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise PolynomialSyntaxError("expected digits", start)
        return int(s[start:pos])

    skip_ws()
    if pos == n:
        raise PolynomialSyntaxError("empty polynomial", pos)
    pending = 1  # sign from the separator before the current term
    while True:
        skip_ws()
        sign = pending
        if pos < n and s[pos] == "-":
            sign = -sign
            pos += 1
            skip_ws()
        if pos == n:
            raise PolynomialSyntaxError("expected a term", pos)
        coeff = Fraction(1)
        saw_coeff = False
        if s[pos].isdigit():
            saw_coeff = True
            num = read_uint()
            den = 1
            if pos < n and s[pos] == "/":
                pos += 1
                den_pos = pos
                den = read_uint()
                if den == 0:
                    raise PolynomialSyntaxError("zero denominator", den_pos)
            coeff = Fraction(num, den)
            mark = pos
            skip_ws()
            if pos < n and s[pos] == "*":
                pos += 1
                skip_ws()
                if pos == n or s[pos] != "x":
                    raise PolynomialSyntaxError("expected 'x' after '*'", pos)
            elif pos == n or s[pos] != "x":
                pos = mark
        exponent = 0
        if pos < n and s[pos] == "x":
            pos += 1
            exponent = 1
            mark = pos
            skip_ws()
            if pos < n and s[pos] == "^":
                pos += 1
                skip_ws()
                exponent = read_uint()
            else:
                pos = mark
        elif not saw_coeff:
            raise PolynomialSyntaxError("expected a coefficient or 'x'", pos)
        totals[exponent] = totals.get(exponent, Fraction(0)) + sign * coeff
        skip_ws()
        if pos == n:
            break
        if s[pos] == "+":
            pending = 1
            pos += 1
        elif s[pos] == "-":
            pending = -1
            pos += 1
        else:
            raise PolynomialSyntaxError("unexpected character %r" % s[pos], pos)
    size = max(totals) + 1 if totals else 0
    coeffs = [Fraction(0)] * size
    for e, c in totals.items():
        coeffs[e] = c
    return Polynomial(coeffs)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: descending powers, reduced fractions, "0" for zero."""
    if p.is_zero:
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coefficient(e)
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "x" if e == 1 else "x^%d" % e
            body = var if mag == 1 else "%s*%s" % (mag, var)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError("not a rational number: %r" % (text,)) from exc
