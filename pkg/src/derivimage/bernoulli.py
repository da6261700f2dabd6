"""Exact Bernoulli numbers and polynomials, plus their reduction family.

The numbers come from the binomial recurrence

    sum(C(n+1, k) * B_k for k in 0..n) == 0   (n >= 1),   B_0 = 1,

memoized because the reduction polynomials and the translation-image
criteria keep asking for overlapping prefixes.  The reduction polynomial
of index n is the degree-n polynomial

    R_n(t) = (1/(n+1)) * sum(C(n+1, i) * B_i * t^(n-i) for i in 0..n),

which also equals the exact quotient (P_{n+1}(t) - B_{n+1}) / ((n+1) t)
where P_n is the n-th Bernoulli polynomial; both routes are computed and
compared, a mismatch being an internal error rather than a user error.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .numthy import is_prime
from .poly import Polynomial

_lock = threading.Lock()
_pascal_rows: list = [(1,)]
_numbers: list = [Fraction(1)]

_poly_cache: dict = {}
_d_poly_cache: dict = {}


def binomial_row(n: int) -> tuple:
    """Row n of Pascal's triangle: (C(n,0), ..., C(n,n))."""
    if n < 0:
        raise ValueError("binomial row index must be nonnegative")
    if n < len(_pascal_rows):
        return _pascal_rows[n]
    with _lock:
        while len(_pascal_rows) <= n:
            prev = _pascal_rows[-1]
            row = (1,) + tuple(
                prev[i] + prev[i + 1] for i in range(len(prev) - 1)
            ) + (1,)
            _pascal_rows.append(row)
    return _pascal_rows[n]


def bernoulli_number(n: int) -> Fraction:
    """The n-th Bernoulli number, exactly (memoized, compute once)."""
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if n < len(_numbers):
        return _numbers[n]
    with _lock:
        while len(_numbers) <= n:
            m = len(_numbers)
            row = _nolock_row(m + 1)
            acc = Fraction(0)
            for k in range(m):
                bk = _numbers[k]
                if bk:
                    acc += row[k] * bk
            _numbers.append(-acc / (m + 1))
    return _numbers[n]


def _nolock_row(n: int) -> tuple:
    # caller already holds _lock
    while len(_pascal_rows) <= n:
        prev = _pascal_rows[-1]
        _pascal_rows.append(
            (1,) + tuple(prev[i] + prev[i + 1] for i in range(len(prev) - 1)) + (1,)
        )
    return _pascal_rows[n]


def bernoulli_poly(n: int) -> Polynomial:
    """The n-th Bernoulli polynomial: monic, degree n."""
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    cached = _poly_cache.get(n)
    if cached is None:
        row = binomial_row(n)
        coeffs = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            bk = bernoulli_number(k)
            if bk:
                coeffs[n - k] = row[k] * bk
        cached = Polynomial(coeffs)
        _poly_cache[n] = cached
    return cached


def d_poly(n: int) -> Polynomial:
    """Reduction polynomial of index n (degree n, value 1 at n = 0)."""
    if n < 0:
        raise ValueError("reduction polynomial index must be nonnegative")
    cached = _d_poly_cache.get(n)
    if cached is None:
        row = binomial_row(n + 1)
        coeffs = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            bi = bernoulli_number(i)
            if bi:
                coeffs[n - i] = Fraction(row[i], n + 1) * bi
        cached = Polynomial(coeffs)
        quotient = _d_poly_quotient(n)
        if quotient != cached:
            raise RuntimeError(
                "internal inconsistency: the two reduction-polynomial routes "
                "disagree at index %d" % n
            )
        _d_poly_cache[n] = cached
    return cached


def _d_poly_quotient(n: int) -> Polynomial:
    # (P_{n+1}(t) - P_{n+1}(0)) / ((n+1) t); divisibility by t is exact by
    # construction, anything else is a bug
    numer = bernoulli_poly(n + 1) - bernoulli_number(n + 1)
    if numer.constant_term:
        raise RuntimeError(
            "internal inconsistency: reduction numerator has a constant term "
            "at index %d" % n
        )
    shifted = Polynomial(numer.coeffs[1:])
    return shifted / (n + 1)


def clausen_staudt_defect(n: int) -> Fraction:
    """B_n plus the sum of 1/q over primes q with (q-1) | n, for even n.

    The classical integrality statement says this value is an integer; the
    function only returns the value, callers assert integrality.
    """
    if n <= 0 or n % 2:
        raise ValueError("the defect is defined for positive even indices")
    total = bernoulli_number(n)
    d = 1
    while d * d <= n:
        if n % d == 0:
            for divisor in {d, n // d}:
                q = divisor + 1
                if is_prime(q):
                    total += Fraction(1, q)
        d += 1
    return total


def v01_coords(f: Polynomial) -> list:
    """Coordinates of f in the Bernoulli-polynomial basis, ascending.

    Unique because the basis polynomial of index i is monic of degree i;
    computed by back-substitution from the top coefficient down.  The zero
    polynomial has empty coordinates.
    """
    if f.is_zero:
        return []
    rest = f
    coords = [Fraction(0)] * (f.degree + 1)
    for i in range(f.degree, -1, -1):
        ci = rest.coefficient(i)
        if ci:
            coords[i] = ci
            rest = rest - ci * bernoulli_poly(i)
    return coords


def in_v01(f: Polynomial) -> bool:
    """Whether f has vanishing integral over [0, 1].

    Equivalent to a zero index-0 coordinate in the Bernoulli basis (every
    higher basis polynomial integrates to zero over the unit interval).
    """
    coords = v01_coords(f)
    return not coords or coords[0] == 0
