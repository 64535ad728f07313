"""Reference implementation of the dense rational row-reduction kernel.

Pure Python over ``fractions.Fraction``.  The compiled twin in
``_rowreduce.pyx`` runs the same elimination order on bare integer pairs;
both produce bit-identical output because the arithmetic is exact and the
pivot choice (first nonzero entry at or below the working row, columns
swept left to right) is fixed.
"""

from fractions import Fraction

BACKEND_NAME = "python"


def rref(entries):
    """Reduced row echelon form.

    `entries` is a list of row lists of Fractions.  Returns ``(rows,
    pivots)`` where `rows` is a fresh list of row lists in RREF and
    `pivots` is the strictly increasing list of pivot column indices.
    """
    m = [list(row) for row in entries]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        i = r
        while i < nrows and m[i][c] == 0:
            i += 1
        if i == nrows:
            continue
        if i != r:
            m[r], m[i] = m[i], m[r]
        pivot = m[r][c]
        if pivot != 1:
            inv = Fraction(1) / pivot
            row = m[r]
            for k in range(c, ncols):
                if row[k]:
                    row[k] = row[k] * inv
        row = m[r]
        for j in range(nrows):
            if j == r:
                continue
            factor = m[j][c]
            if factor == 0:
                continue
            other = m[j]
            for k in range(c, ncols):
                if row[k]:
                    other[k] = other[k] - factor * row[k]
        pivots.append(c)
        r += 1
    return m, pivots


def matmul(a, b):
    """Exact product of two row-list matrices (inner dimensions must agree)."""
    n = len(a)
    inner = len(b)
    ncols = len(b[0]) if inner else 0
    zero = Fraction(0)
    out = []
    for i in range(n):
        arow = a[i]
        row = [zero] * ncols
        for k in range(inner):
            aik = arow[k]
            if aik == 0:
                continue
            brow = b[k]
            for j in range(ncols):
                if brow[j]:
                    row[j] = row[j] + aik * brow[j]
        out.append(row)
    return out
