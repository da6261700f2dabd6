import random
from fractions import Fraction

import pytest

from derivimage.linsolve import INCONSISTENT, UNDERDETERMINED, UNIQUE, solve_linear


def test_identity_system():
    result = solve_linear([[1, 0], [0, 1]], [1, 2])
    assert result.status == UNIQUE
    assert result.solution == (Fraction(1), Fraction(2))


def test_inconsistent_system():
    result = solve_linear([[1, 1], [2, 2]], [1, 3])
    assert result.status == INCONSISTENT
    assert result.solution is None
    assert not result.solvable


def test_underdetermined_witness():
    result = solve_linear([[1, 1], [2, 2]], [1, 2])
    assert result.status == UNDERDETERMINED
    x, y = result.solution
    assert x + y == 1 and 2 * x + 2 * y == 2


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_linear([[1, 2]], [1, 2])
    with pytest.raises(ValueError):
        solve_linear([[1, 2], [1]], [1, 2])


def test_empty_system():
    assert solve_linear([], []).status == UNIQUE


def test_rectangular_and_fractional():
    result = solve_linear(
        [[Fraction(1, 2), 1], [1, Fraction(1, 3)], [0, 1]],
        [Fraction(5, 2), Fraction(5, 3), 2],
    )
    assert result.status == UNIQUE
    assert result.solution == (Fraction(1), Fraction(2))


def test_random_solutions_substitute_back():
    rng = random.Random(2024)
    statuses = set()
    for _ in range(400):
        nrows = rng.randint(1, 7)
        ncols = rng.randint(1, 7)
        matrix = [
            [Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3])) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        if rng.random() < 0.35 and nrows >= 2:
            k = Fraction(rng.randint(-2, 2))
            matrix[-1] = [k * v for v in matrix[0]]
        rhs = [Fraction(rng.randint(-6, 6), rng.choice([1, 2])) for _ in range(nrows)]
        result = solve_linear(matrix, rhs)
        statuses.add(result.status)
        if result.solvable:
            for row, b in zip(matrix, rhs):
                assert sum(c * x for c, x in zip(row, result.solution)) == b
    assert statuses == {UNIQUE, INCONSISTENT, UNDERDETERMINED}
