# cython: language_level=3
"""Compiled twin of lefcon._rowreduce_py.

Same elimination order, same pivot choice, bit-identical output.  Entries
are carried as separate numerator/denominator Python integers (arbitrary
precision) and normalised with math.gcd after every operation, exactly as
fractions.Fraction does, so converting back never re-reduces.
"""

from math import gcd

from fractions import Fraction

BACKEND_NAME = "compiled"


cdef inline tuple _norm(num, den):
    # canonical form: den > 0, gcd(|num|, den) == 1
    if num == 0:
        return (0, 1)
    if den < 0:
        num = -num
        den = -den
    g = gcd(num, den)
    if g != 1:
        num //= g
        den //= g
    return (num, den)


def rref(entries):
    cdef Py_ssize_t nrows = len(entries)
    cdef Py_ssize_t ncols = len(entries[0]) if nrows else 0
    cdef Py_ssize_t r, c, i, j, k
    cdef list num = [None] * nrows
    cdef list den = [None] * nrows
    cdef list nrow, drow, onum, oden
    for i in range(nrows):
        nrow = [0] * ncols
        drow = [1] * ncols
        row = entries[i]
        for j in range(ncols):
            x = row[j]
            nrow[j] = x.numerator
            drow[j] = x.denominator
        num[i] = nrow
        den[i] = drow

    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        i = r
        while i < nrows and (<list> num[i])[c] == 0:
            i += 1
        if i == nrows:
            continue
        if i != r:
            num[r], num[i] = num[i], num[r]
            den[r], den[i] = den[i], den[r]
        nrow = <list> num[r]
        drow = <list> den[r]
        pn = nrow[c]
        pd = drow[c]
        if pn != pd:
            # scale row r by pd/pn
            for k in range(c, ncols):
                if nrow[k] != 0:
                    nrow[k], drow[k] = _norm(nrow[k] * pd, drow[k] * pn)
        for j in range(nrows):
            if j == r:
                continue
            onum = <list> num[j]
            oden = <list> den[j]
            fn = onum[c]
            if fn == 0:
                continue
            fd = oden[c]
            for k in range(c, ncols):
                if nrow[k] == 0:
                    continue
                # onum[k]/oden[k] -= (fn/fd) * (nrow[k]/drow[k])
                a = onum[k] * fd * drow[k] - fn * nrow[k] * oden[k]
                b = oden[k] * fd * drow[k]
                onum[k], oden[k] = _norm(a, b)
        pivots.append(c)
        r += 1

    out = []
    for i in range(nrows):
        nrow = <list> num[i]
        drow = <list> den[i]
        out.append(
            [Fraction(nrow[j], drow[j]) for j in range(ncols)]
        )
    return out, pivots


def matmul(a, b):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t inner = len(b)
    cdef Py_ssize_t ncols = len(b[0]) if inner else 0
    cdef Py_ssize_t i, j, k
    cdef list bn = [None] * inner
    cdef list bd = [None] * inner
    cdef list nrow, drow, rn, rd
    for k in range(inner):
        row = b[k]
        nrow = [0] * ncols
        drow = [1] * ncols
        for j in range(ncols):
            x = row[j]
            nrow[j] = x.numerator
            drow[j] = x.denominator
        bn[k] = nrow
        bd[k] = drow

    out = []
    for i in range(n):
        arow = a[i]
        rn = [0] * ncols
        rd = [1] * ncols
        for k in range(inner):
            x = arow[k]
            an = x.numerator
            if an == 0:
                continue
            ad = x.denominator
            nrow = <list> bn[k]
            drow = <list> bd[k]
            for j in range(ncols):
                if nrow[j] == 0:
                    continue
                p = an * nrow[j]
                q = ad * drow[j]
                nj = rn[j] * q + p * rd[j]
                dj = rd[j] * q
                rn[j], rd[j] = _norm(nj, dj)
        out.append([Fraction(rn[j], rd[j]) for j in range(ncols)])
    return out
