# cython: language_level=3
"""Compiled twin of `_kernel_py` (same protocol, same algorithms).

Values stay arbitrary-precision Python integers; the win over the pure
twin is compiled loop and list-access machinery around them.
"""

from math import gcd

SOLVE_UNIQUE = 0
SOLVE_INCONSISTENT = 1
SOLVE_UNDERDETERMINED = 2


cdef tuple _clear_denominators(list nums, list dens):
    cdef Py_ssize_t i, n = len(dens)
    common = 1
    for i in range(n):
        d = dens[i]
        common = common // gcd(common, d) * d
    cdef list ints = [0] * n
    for i in range(n):
        ints[i] = nums[i] * (common // dens[i])
    return ints, common


def poly_mul(list a_num, list a_den, list b_num, list b_den):
    """Convolve two rational coefficient vectors; returns reduced pairs."""
    cdef Py_ssize_t i, j, la = len(a_num), lb = len(b_num)
    if la == 0 or lb == 0:
        return [], []
    an, ad = _clear_denominators(a_num, a_den)
    bn, bd = _clear_denominators(b_num, b_den)
    cdef list out = [0] * (la + lb - 1)
    for i in range(la):
        ai = an[i]
        if not ai:
            continue
        for j in range(lb):
            bj = bn[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    den = ad * bd
    cdef list r_num = [], r_den = []
    for i in range(la + lb - 1):
        v = out[i]
        if v:
            g = gcd(v, den)
            r_num.append(v // g)
            r_den.append(den // g)
        else:
            r_num.append(0)
            r_den.append(1)
    return r_num, r_den


cdef list _integerized_rows(list rows_num, list rows_den):
    cdef Py_ssize_t i, n = len(rows_num)
    cdef list rows = []
    for i in range(n):
        ints, _ = _clear_denominators(rows_num[i], rows_den[i])
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        rows.append(ints)
    return rows


def solve_augmented(list rows_num, list rows_den, Py_ssize_t ncols):
    """Solve an augmented linear system exactly (see `_kernel_py`)."""
    cdef list rows = _integerized_rows(rows_num, rows_den)
    cdef Py_ssize_t nrows = len(rows), width = ncols + 1
    cdef Py_ssize_t r = 0, c, i, k, best, rank
    cdef list pivot_cols = []
    cdef list row, prow, new
    for c in range(ncols):
        best = -1
        for i in range(r, nrows):
            v = (<list>rows[i])[c]
            if v and (best < 0 or abs(v) < abs((<list>rows[best])[c])):
                best = i
        if best < 0:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        piv = prow[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            v = row[c]
            if not v:
                continue
            new = [0] * width
            for k in range(width):
                new[k] = row[k] * piv - prow[k] * v
            g = 0
            for u in new:
                g = gcd(g, u)
            if g > 1:
                for k in range(width):
                    new[k] = new[k] // g
            rows[i] = new
        pivot_cols.append(c)
        r += 1
    rank = r
    for i in range(rank, nrows):
        if (<list>rows[i])[ncols]:
            return SOLVE_INCONSISTENT, [], []
    cdef list sol_num = [0] * ncols
    cdef list sol_den = [1] * ncols
    cdef Py_ssize_t j
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
