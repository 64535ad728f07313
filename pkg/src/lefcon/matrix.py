"""Exact dense linear algebra over the rationals.

Every boundary operator, induced map and duality matrix in the engine is a
``RationalMatrix``.  Matrices are immutable; all operations return fresh
values, so concurrent reads are safe.  Basis choices are deterministic
(free columns ascending, free variables zeroed) to keep every downstream
homology basis reproducible bit-for-bit.
"""

from fractions import Fraction

from . import kernel
from .errors import DimensionError

ZERO = Fraction(0)
ONE = Fraction(1)


def _q(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, shape=None):
        rows = tuple(tuple(_q(x) for x in row) for row in entries)
        if shape is not None:
            nrows, ncols = shape
        else:
            nrows = len(rows)
            ncols = len(rows[0]) if rows else 0
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise DimensionError("ragged or mis-shaped matrix data")
        object.__setattr__(self, "rows", nrows)
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def zeros(cls, nrows, ncols):
        row = (ZERO,) * ncols
        return cls([row] * nrows, shape=(nrows, ncols))

    @classmethod
    def identity(cls, n):
        return cls(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)],
            shape=(n, n),
        )

    @classmethod
    def from_columns(cls, columns, nrows):
        """Matrix whose j-th column is ``columns[j]`` (a length-`nrows` vector)."""
        cols = [tuple(_q(x) for x in col) for col in columns]
        if any(len(c) != nrows for c in cols):
            raise DimensionError("column length mismatch")
        return cls(
            [[cols[j][i] for j in range(len(cols))] for i in range(nrows)],
            shape=(nrows, len(cols)),
        )

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "RationalMatrix(%d x %d)" % (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def is_zero(self):
        return all(x == 0 for row in self.entries for x in row)

    def transpose(self):
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            shape=(self.cols, self.rows),
        )

    def mul(self, other):
        if self.cols != other.rows:
            raise DimensionError(
                "cannot multiply %dx%d by %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return RationalMatrix.zeros(self.rows, other.cols)
        data = kernel.matmul(
            [list(r) for r in self.entries], [list(r) for r in other.entries]
        )
        return RationalMatrix(data, shape=(self.rows, other.cols))

    __matmul__ = mul

    def mul_vector(self, vec):
        if len(vec) != self.cols:
            raise DimensionError("vector length %d != cols %d" % (len(vec), self.cols))
        return tuple(
            sum((row[j] * vec[j] for j in range(self.cols) if vec[j]), ZERO)
            for row in self.entries
        )

    def scale(self, c):
        c = _q(c)
        return RationalMatrix(
            [[x * c for x in row] for row in self.entries],
            shape=(self.rows, self.cols),
        )

    def add(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in add")
        return RationalMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
            shape=(self.rows, self.cols),
        )


class RrefResult:
    __slots__ = ("reduced", "pivots", "rank")

    def __init__(self, reduced, pivots):
        self.reduced = reduced
        self.pivots = pivots
        self.rank = len(pivots)


def rref(m):
    """Unique reduced row echelon form with strictly increasing pivot columns."""
    if m.rows == 0 or m.cols == 0:
        return RrefResult(m, [])
    data, pivots = kernel.rref([list(r) for r in m.entries])
    return RrefResult(RationalMatrix(data, shape=(m.rows, m.cols)), pivots)


def kernel_basis(m):
    """Deterministic basis of the null space of `m`.

    One vector per free column, taken in ascending column order, with the
    free variable set to 1 and all other free variables zero.
    """
    if m.cols == 0:
        return []
    if m.rows == 0:
        basis = []
        for j in range(m.cols):
            v = [ZERO] * m.cols
            v[j] = ONE
            basis.append(tuple(v))
        return basis
    res = rref(m)
    pivot_set = set(res.pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    red = res.reduced.entries
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, pc in enumerate(res.pivots):
            v[pc] = -red[r][f]
        basis.append(tuple(v))
    return basis


def solve(m, b):
    """Deterministic particular solution of ``m x = b`` or None if inconsistent.

    Free variables are set to zero.
    """
    if len(b) != m.rows:
        raise DimensionError("rhs length %d != rows %d" % (len(b), m.rows))
    if m.cols == 0:
        return () if all(x == 0 for x in b) else None
    aug = RationalMatrix(
        [list(m.entries[i]) + [_q(b[i])] for i in range(m.rows)],
        shape=(m.rows, m.cols + 1),
    )
    res = rref(aug)
    if res.pivots and res.pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    red = res.reduced.entries
    for r, pc in enumerate(res.pivots):
        x[pc] = red[r][m.cols]
    return tuple(x)


def trace(m):
    if m.rows != m.cols:
        raise DimensionError("trace of non-square %dx%d matrix" % (m.rows, m.cols))
    return sum((m.entries[i][i] for i in range(m.rows)), ZERO)


def rank(m):
    return rref(m).rank


def column_space_basis(m):
    """Columns of `m` at the pivot positions of its RREF (a deterministic
    basis of the column space)."""
    res = rref(m)
    return [m.column(j) for j in res.pivots]


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(u, c):
    c = _q(c)
    return tuple(a * c for a in u)


def vec_dot(u, v):
    return sum((a * b for a, b in zip(u, v, strict=True) if a and b), ZERO)


def vec_is_zero(u):
    return all(a == 0 for a in u)


def zero_vector(n):
    return (ZERO,) * n
