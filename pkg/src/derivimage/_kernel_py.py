"""Pure-Python twin of the compiled arithmetic kernel.

Both kernels speak the same low-level protocol: rational vectors travel as
parallel lists of integer numerators and positive integer denominators in
lowest terms.  The hot loops work on raw integers after clearing
denominators (one gcd per emitted entry instead of one per intermediate),
which keeps this fallback usable; `_kernel_c.pyx` runs the same algorithms
without interpreter overhead.
"""

from math import gcd

SOLVE_UNIQUE = 0
SOLVE_INCONSISTENT = 1
SOLVE_UNDERDETERMINED = 2


def _clear_denominators(nums, dens):
    """Scale a rational vector to integers; returns (ints, common denominator)."""
    common = 1
    for d in dens:
        common = common // gcd(common, d) * d
    return [n * (common // d) for n, d in zip(nums, dens)], common


def poly_mul(a_num, a_den, b_num, b_den):
    """Convolve two rational coefficient vectors; returns reduced pairs."""
    if not a_num or not b_num:
        return [], []
    an, ad = _clear_denominators(a_num, a_den)
    bn, bd = _clear_denominators(b_num, b_den)
    out = [0] * (len(an) + len(bn) - 1)
    for i in range(len(an)):
        ai = an[i]
        if not ai:
            continue
        for j in range(len(bn)):
            bj = bn[j]
            if bj:
                out[i + j] += ai * bj
    den = ad * bd
    r_num = []
    r_den = []
    for v in out:
        if v:
            g = gcd(v, den)
            r_num.append(v // g)
            r_den.append(den // g)
        else:
            r_num.append(0)
            r_den.append(1)
    return r_num, r_den


def _integerized_rows(rows_num, rows_den):
    rows = []
    for nums, dens in zip(rows_num, rows_den):
        ints, _ = _clear_denominators(nums, dens)
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        rows.append(ints)
    return rows


def solve_augmented(rows_num, rows_den, ncols):
    """Solve an augmented linear system exactly.

    Each row has ncols coefficients plus the right-hand side entry.
    Returns (status, sol_num, sol_den); the solution lists are empty when
    the system is inconsistent, and free variables are pinned to zero in
    the underdetermined case.
    """
    rows = _integerized_rows(rows_num, rows_den)
    nrows = len(rows)
    width = ncols + 1
    pivot_cols = []
    r = 0
    for c in range(ncols):
        # smallest nonzero pivot keeps the cross-multiplied entries small
        best = -1
        for i in range(r, nrows):
            v = rows[i][c]
            if v and (best < 0 or abs(v) < abs(rows[best][c])):
                best = i
        if best < 0:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        piv = prow[c]
        for i in range(r + 1, nrows):
            v = rows[i][c]
            if not v:
                continue
            row = rows[i]
            new = [row[k] * piv - prow[k] * v for k in range(width)]
            g = 0
            for u in new:
                g = gcd(g, u)
            if g > 1:
                new = [u // g for u in new]
            rows[i] = new
        pivot_cols.append(c)
        r += 1
    rank = r
    for i in range(rank, nrows):
        if rows[i][ncols]:
            return SOLVE_INCONSISTENT, [], []
    sol_num = [0] * ncols
    sol_den = [1] * ncols
    for k in range(rank - 1, -1, -1):
        c = pivot_cols[k]
        row = rows[k]
        num = row[ncols]
        den = 1
        for j in range(c + 1, ncols):
            v = row[j]
            if v and sol_num[j]:
                num = num * sol_den[j] - v * sol_num[j] * den
                den = den * sol_den[j]
        den = den * row[c]
        if num == 0:
            den = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = gcd(num, den)
            num //= g
            den //= g
        sol_num[c] = num
        sol_den[c] = den
    status = SOLVE_UNIQUE if rank == ncols else SOLVE_UNDERDETERMINED
    return status, sol_num, sol_den
