import math
from fractions import Fraction

import pytest

from derivimage.numthy import is_prime, vp


def test_vp_examples():
    assert vp(Fraction(1, 6), 3) == -1
    assert vp(Fraction(9, 4), 3) == 2
    assert vp(Fraction(-1, 30), 5) == -1
    assert vp(Fraction(8), 2) == 3
    assert vp(7, 5) == 0


def test_vp_zero_is_infinite():
    assert vp(Fraction(0), 7) == math.inf


def test_vp_rejects_composite_modulus():
    with pytest.raises(ValueError):
        vp(Fraction(1, 2), 4)
    with pytest.raises(ValueError):
        vp(Fraction(1, 2), 1)


def test_small_primes():
    known = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53}
    assert {n for n in range(2, 54) if is_prime(n)} == known
    assert not is_prime(0) and not is_prime(1) and not is_prime(-7)


def test_trial_division_boundary():
    assert is_prime(999983)  # largest prime below 1e6
    assert not is_prime(999983 * 999979)


def test_miller_rabin_branch_against_trial_division():
    # past 1e12 the tester switches to Miller-Rabin; check it against an
    # independent full trial division for a window of candidates
    def slow_is_prime(n):
        if n % 2 == 0:
            return False
        f = 3
        while f * f <= n:
            if n % f == 0:
                return False
            f += 2
        return True

    start = 2 * 10**12 + 1
    for n in range(start, start + 60, 2):
        assert is_prime(n) == slow_is_prime(n)
