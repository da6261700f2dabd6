"""The two kernels implement the same protocol; compare them directly."""

import random
from fractions import Fraction

import pytest

from derivimage import _kernel_py

try:
    from derivimage import _kernel_c
except ImportError:
    _kernel_c = None

needs_compiled = pytest.mark.skipif(
    _kernel_c is None, reason="compiled kernel not built"
)


def _pairs(values):
    fractions = [Fraction(v) for v in values]
    return [f.numerator for f in fractions], [f.denominator for f in fractions]


def _random_vector(rng, size):
    return [
        Fraction(rng.randint(-9, 9), rng.choice([1, 2, 3, 4])) for _ in range(size)
    ]


def test_pure_poly_mul_matches_fraction_arithmetic():
    rng = random.Random(42)
    for _ in range(200):
        a = _random_vector(rng, rng.randint(1, 8))
        b = _random_vector(rng, rng.randint(1, 8))
        if not a[-1]:
            a[-1] = Fraction(1)
        if not b[-1]:
            b[-1] = Fraction(1)
        expected = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                expected[i + j] += ai * bj
        rn, rd = _kernel_py.poly_mul(*_pairs(a), *_pairs(b))
        got = [Fraction(n, d) for n, d in zip(rn, rd)]
        assert got == expected
        assert all(d > 0 for d in rd)
        from math import gcd

        assert all(gcd(n, d) == 1 for n, d in zip(rn, rd) if n)


def test_pure_solver_solutions_substitute_back():
    rng = random.Random(43)
    for _ in range(200):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        matrix = [_random_vector(rng, ncols) for _ in range(nrows)]
        rhs = _random_vector(rng, nrows)
        rows_num = [[v.numerator for v in row + [b]] for row, b in zip(matrix, rhs)]
        rows_den = [[v.denominator for v in row + [b]] for row, b in zip(matrix, rhs)]
        status, sol_num, sol_den = _kernel_py.solve_augmented(rows_num, rows_den, ncols)
        if status == _kernel_py.SOLVE_INCONSISTENT:
            continue
        sol = [Fraction(n, d) for n, d in zip(sol_num, sol_den)]
        for row, b in zip(matrix, rhs):
            assert sum(r * x for r, x in zip(row, sol)) == b


@needs_compiled
def test_kernels_agree_on_poly_mul():
    rng = random.Random(44)
    for _ in range(300):
        a = _random_vector(rng, rng.randint(0, 9))
        b = _random_vector(rng, rng.randint(0, 9))
        args = (*_pairs(a), *_pairs(b))
        assert _kernel_c.poly_mul(*args) == _kernel_py.poly_mul(*args)


@needs_compiled
def test_kernels_agree_on_solve():
    rng = random.Random(45)
    for _ in range(300):
        nrows = rng.randint(1, 7)
        ncols = rng.randint(1, 7)
        rows = [_random_vector(rng, ncols + 1) for _ in range(nrows)]
        if rng.random() < 0.3:
            # force rank deficiency to hit the underdetermined branch
            scale = Fraction(rng.randint(-3, 3))
            rows[-1] = [scale * v for v in rows[0]]
        rows_num = [[v.numerator for v in row] for row in rows]
        rows_den = [[v.denominator for v in row] for row in rows]
        got_c = _kernel_c.solve_augmented(
            [list(r) for r in rows_num], [list(r) for r in rows_den], ncols
        )
        got_py = _kernel_py.solve_augmented(rows_num, rows_den, ncols)
        assert got_c == got_py
