"""Primality testing and p-adic valuations of rationals."""

import math
from fractions import Fraction

_TRIAL_LIMIT = 1_000_000
# deterministic Miller-Rabin witness set, complete below 3.3e14
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17)


def _miller_rabin(n: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Trial division up to 1e6, then Miller-Rabin with a witness set that is
    exhaustive below 3.3e14 (far beyond anything this library asks for).
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    limit = min(math.isqrt(n), _TRIAL_LIMIT)
    f = 5
    while f <= limit:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    if math.isqrt(n) <= _TRIAL_LIMIT:
        return True
    return _miller_rabin(n)


def vp(value, p: int):
    """p-adic valuation of a rational; math.inf for zero.

    Raises ValueError when p is not prime.
    """
    if not is_prime(p):
        raise ValueError("%r is not prime" % (p,))
    q = Fraction(value)
    if q == 0:
        return math.inf
    v = 0
    num = q.numerator
    while num % p == 0:
        num //= p
        v += 1
    den = q.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v
