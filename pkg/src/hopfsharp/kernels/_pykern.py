"""Pure-Python kernels: the hot inner loops of the package.

Exact arbitrary-precision integers throughout.  The compiled extension
``_ckern`` implements the same four functions with typed loops; either
implementation may be selected at import time (see ``kernels.__init__``).
"""

from math import gcd

IMPL = "python"


def convolve(table, xi, xn, yi, yn, size):
    """Group-algebra convolution with integer coefficients.

    table[i][j] is the index of the product of basis elements i and j;
    (xi, xn) and (yi, yn) are parallel index/numerator lists.  Returns a
    dense list z of length ``size`` with z[table[i][j]] += xn * yn.
    """
    z = [0] * size
    for i, a in zip(xi, xn):
        row = table[i]
        for j, b in zip(yi, yn):
            z[row[j]] += a * b
    return z


def pack_pair(u, v):
    """Pack a biword by the lexicographic order on its biletters."""
    pairs = sorted(set(zip(u, v)))
    rank = {b: k for k, b in enumerate(pairs, start=1)}
    return tuple(rank[b] for b in zip(u, v))


def int_rank(rows):
    """Exact rank of an integer matrix over Q.

    Fraction-free elimination; every updated row is divided by its gcd to
    keep entries small.  Row operations preserve the row space, so the count
    of pivots is the exact rank.
    """
    rows = [_reduce_row(list(r)) for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank_ = 0
    for col in range(ncols):
        pivot = -1
        best = None
        for r in range(rank_, len(rows)):
            val = rows[r][col]
            if val:
                key = abs(val)
                if best is None or key < best:
                    best, pivot = key, r
                    if key == 1:
                        break
        if pivot < 0:
            continue
        rows[rank_], rows[pivot] = rows[pivot], rows[rank_]
        prow = rows[rank_]
        pval = prow[col]
        for r in range(rank_ + 1, len(rows)):
            row = rows[r]
            f = row[col]
            if not f:
                continue
            for c in range(col, ncols):
                row[c] = row[c] * pval - prow[c] * f
            _reduce_row(row)
        rank_ += 1
        if rank_ == len(rows):
            break
    return rank_


def _reduce_row(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        for c, x in enumerate(row):
            if x:
                row[c] = x // g
    return row


def mod_rank(rows, p):
    """Rank of an integer matrix over the field Z/p (p prime)."""
    rows = [[x % p for x in r] for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank_ = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank_, len(rows)) if rows[r][col]), -1)
        if pivot < 0:
            continue
        rows[rank_], rows[pivot] = rows[pivot], rows[rank_]
        prow = rows[rank_]
        inv = pow(prow[col], p - 2, p)
        for c in range(col, ncols):
            prow[c] = prow[c] * inv % p
        for r in range(rank_ + 1, len(rows)):
            row = rows[r]
            f = row[col]
            if f:
                for c in range(col, ncols):
                    row[c] = (row[c] - f * prow[c]) % p
        rank_ += 1
        if rank_ == len(rows):
            break
    return rank_
