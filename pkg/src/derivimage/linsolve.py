"""Exact linear solving over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import _backend

UNIQUE = "unique"
INCONSISTENT = "inconsistent"
UNDERDETERMINED = "underdetermined"

_STATUS = {
    _backend.SOLVE_UNIQUE: UNIQUE,
    _backend.SOLVE_INCONSISTENT: INCONSISTENT,
    _backend.SOLVE_UNDERDETERMINED: UNDERDETERMINED,
}


@dataclass(frozen=True)
class LinearSolveResult:
    """Outcome of an exact solve.

    `solution` is None exactly when the system is inconsistent; in the
    underdetermined case it is one witness solution (free variables zero).
    """

    status: str
    solution: Optional[tuple]

    @property
    def solvable(self) -> bool:
        return self.solution is not None


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> LinearSolveResult:
    """Solve matrix * x = rhs exactly over Q.

    Raises ValueError on inconsistent dimensions.  Any returned solution
    substitutes back exactly.
    """
    nrows = len(matrix)
    if nrows != len(rhs):
        raise ValueError(
            "matrix has %d rows but right-hand side has %d entries"
            % (nrows, len(rhs))
        )
    if nrows == 0:
        return LinearSolveResult(UNIQUE, ())
    ncols = len(matrix[0])
    rows_num = []
    rows_den = []
    for row, b in zip(matrix, rhs):
        if len(row) != ncols:
            raise ValueError("matrix rows have inconsistent lengths")
        entries = [Fraction(v) for v in row] + [Fraction(b)]
        rows_num.append([e.numerator for e in entries])
        rows_den.append([e.denominator for e in entries])
    code, sol_num, sol_den = _backend.solve_augmented(rows_num, rows_den, ncols)
    status = _STATUS[code]
    if status == INCONSISTENT:
        return LinearSolveResult(status, None)
    solution = tuple(Fraction(n, d) for n, d in zip(sol_num, sol_den))
    return LinearSolveResult(status, solution)
