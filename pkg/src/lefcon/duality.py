"""Fundamental classes, cap products, Poincaré duality, cross products, and
topological degree.

Orientation is propagated across shared interior faces from the
lexicographically least top simplex (seeded +1), so the fundamental cycle
and every sign downstream are deterministic.  The cap product uses the
Alexander-Whitney diagonal: a k-cocycle is evaluated on the back k-face and
the front (m-k)-face survives, with sign (-1)^{k(m-k)}; the convention is
frozen and validated by the pairing identity in the test suite.
"""

from collections import deque
from fractions import Fraction

from .errors import (
    DimensionError,
    DisconnectedError,
    NonManifoldError,
    NonOrientableError,
    SingularDualityError,
)
from .homology import HomologyBasis
from .maps import push_chain
from .matrix import RationalMatrix, ZERO, solve, vec_dot


class FundamentalClassData:
    """Coherent orientation of a pure n-dimensional manifold pair.

    Holds the top cycle (coefficients +-1 on every n-simplex), the dual
    cocycle pairing to 1 with it, and cached homology bases of the pair and
    of the underlying absolute complex.
    """

    __slots__ = (
        "pair",
        "dimension",
        "orientation",
        "top_cycle",
        "dual_cocycle",
        "basis",
        "_duality",
    )

    def __init__(self, pair, dimension, orientation, basis):
        object.__setattr__(self, "pair", pair)
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "orientation", orientation)
        object.__setattr__(self, "basis", basis)
        chain = basis.chain
        vec = [ZERO] * chain.rank(dimension)
        for s, sign in orientation.items():
            vec[chain.index[s]] = Fraction(sign)
        object.__setattr__(self, "top_cycle", tuple(vec))
        seed = chain.generators[dimension][0]
        dual = [ZERO] * chain.rank(dimension)
        dual[chain.index[seed]] = Fraction(orientation[seed])
        object.__setattr__(self, "dual_cocycle", tuple(dual))
        object.__setattr__(self, "_duality", {})

    def __setattr__(self, name, value):
        raise AttributeError("FundamentalClassData is immutable")

    @property
    def absolute_basis(self):
        return self.basis.absolute

    def top_class(self):
        """Coordinates of [O] in the degree-n basis of the pair."""
        return self.basis.express_cycle(self.dimension, self.top_cycle)


def orient(pair, n):
    """Coherently orient a pure n-dimensional manifold pair.

    Every (n-1)-simplex outside the sub must have exactly two n-cofaces and
    every (n-1)-simplex of the sub exactly one; the top skeleton must be
    connected; orientation propagation must not contradict itself.
    """
    total, sub = pair.total, pair.sub
    if total.dimension != n:
        raise NonManifoldError(
            "complex dimension %d != requested %d" % (total.dimension, n)
        )
    top = total.simplices_of_dim(n)
    if not top:
        raise NonManifoldError("no simplices in dimension %d" % n)
    # purity: every simplex is a face of a top simplex
    top_faces = set(top)
    for s in top:
        stack = [s]
        while stack:
            t = stack.pop()
            for i in range(len(t)):
                f = t[:i] + t[i + 1 :]
                if f and f not in top_faces:
                    top_faces.add(f)
                    stack.append(f)
    for s in total.all_simplices():
        if s not in top_faces:
            raise NonManifoldError("simplex %r is not a face of a top simplex" % (s,))

    cofaces = {}
    for s in top:
        for i in range(len(s)):
            f = s[:i] + s[i + 1 :]
            cofaces.setdefault(f, []).append((s, -1 if i % 2 else 1))
    for f, cf in sorted(cofaces.items()):
        if f in sub:
            if len(cf) != 1:
                raise NonManifoldError(
                    "boundary face %r has %d cofaces" % (f, len(cf))
                )
        else:
            if len(cf) != 2:
                raise NonManifoldError(
                    "interior face %r has %d cofaces" % (f, len(cf))
                )

    orientation = {top[0]: 1}
    queue = deque([top[0]])
    while queue:
        s = queue.popleft()
        for i in range(len(s)):
            f = s[:i] + s[i + 1 :]
            pairings = cofaces[f]
            if len(pairings) != 2:
                continue
            (s1, sg1), (s2, sg2) = pairings
            other, sg_other, sg_self = (
                (s2, sg2, sg1) if s1 == s else (s1, sg1, sg2)
            )
            required = -orientation[s] * sg_self * sg_other
            if other in orientation:
                if orientation[other] != required:
                    raise NonOrientableError(
                        "orientation contradiction across face %r" % (f,)
                    )
            else:
                orientation[other] = required
                queue.append(other)
    if len(orientation) != len(top):
        raise DisconnectedError("top-dimensional skeleton is not connected")

    basis = HomologyBasis(pair)
    fc = FundamentalClassData(pair, n, orientation, basis)
    chain = basis.chain
    assert all(
        x == 0 for x in chain.boundary_matrix(n).mul_vector(fc.top_cycle)
    ), "fundamental cycle has nonzero relative boundary"
    assert kronecker(fc.dual_cocycle, fc.top_cycle) == 1
    return fc


def kronecker(x, a):
    """Evaluation of a cochain on a chain of the same degree."""
    if len(x) != len(a):
        raise DimensionError(
            "cochain length %d != chain length %d" % (len(x), len(a))
        )
    return vec_dot(x, a)


def cap_chain(pair_chain, abs_chain, k, x, m, a):
    """Chain-level cap product of a relative k-cocycle with a relative
    m-chain, landing in the absolute (m-k)-chains.

    On a generator [v_0..v_m] the cocycle is evaluated on the back k-face
    and the front (m-k)-face survives, with sign (-1)^{k(m-k)}; back faces
    lying in the sub evaluate to zero (the cocycle extends by zero).
    """
    if k < 0 or m < 0 or k > m:
        raise DimensionError("cap degrees k=%d, m=%d violate 0 <= k <= m" % (k, m))
    if len(x) != pair_chain.rank(k) or len(a) != pair_chain.rank(m):
        raise DimensionError("cap operand length mismatch")
    sign = -1 if (k * (m - k)) % 2 else 1
    out = [ZERO] * abs_chain.rank(m - k)
    gens_m = pair_chain.generators[m] if m <= pair_chain.dimension else ()
    sub = pair_chain.pair.sub
    for idx, c in enumerate(a):
        if c == 0:
            continue
        s = gens_m[idx]
        back = s[m - k :]
        if back in sub:
            continue
        xval = x[pair_chain.index[back]]
        if xval == 0:
            continue
        front = s[: m - k + 1]
        j = abs_chain.index[front]
        out[j] = out[j] + sign * c * xval
    return tuple(out)


def cap(basis, k, x, m, a):
    """Cap product at class level: coordinates in H_{m-k} of the absolute
    complex of the cap of a relative cocycle with a relative cycle."""
    absolute = basis.absolute
    vec = cap_chain(basis.chain, absolute.chain, k, x, m, a)
    return absolute.express_cycle(m - k, vec)


def poincare_dual(fc, k, x_coords):
    """D(x) = x cap O expressed in the absolute H_{n-k} basis.

    `x_coords` are coordinates in the dual basis of H^k(pair)."""
    n = fc.dimension
    if k < 0 or k > n:
        raise DimensionError("degree %d out of range 0..%d" % (k, n))
    x = fc.basis.cochain_of(k, x_coords)
    return cap(fc.basis, k, x, n, fc.top_cycle)


def duality_matrix(fc, k):
    """Matrix of D: H^k(pair) -> H_{n-k}(absolute) in the chosen bases."""
    cached = fc._duality.get(k)
    if cached is not None:
        return cached
    n = fc.dimension
    cols = []
    for j in range(fc.basis.dim(k)):
        coords = [ZERO] * fc.basis.dim(k)
        coords[j] = Fraction(1)
        cols.append(poincare_dual(fc, k, coords))
    m = RationalMatrix.from_columns(cols, fc.absolute_basis.dim(n - k))
    fc._duality[k] = m
    return m


def poincare_dual_inverse(fc, k, a_coords):
    """Exact solve of the duality system: the class in H^k(pair) capping to
    the given absolute H_{n-k} class."""
    m = duality_matrix(fc, k)
    if len(a_coords) != m.rows:
        raise DimensionError("expected %d coordinates" % m.rows)
    x = solve(m, a_coords)
    if x is None or m.rows != m.cols:
        raise SingularDualityError(
            "duality matrix is singular in degree %d" % k
        )
    return x


def cross(prod, i, a_coords, j, b_coords, relative=True):
    """Cross product of classes of the factors, expressed in the product
    homology basis."""
    basis_a = HomologyBasis(prod.factor_a if relative else prod.factor_a.absolute())
    basis_b = HomologyBasis(prod.factor_b if relative else prod.factor_b.absolute())
    vec_a = basis_a.chain_of(i, a_coords)
    vec_b = basis_b.chain_of(j, b_coords)
    target = prod if relative else prod.absolute
    vec = prod.shuffle_chain(i, vec_a, j, vec_b, relative=relative)
    return target.basis.express_cycle(i + j, vec)


def degree(f, fc_src, fc_tgt):
    """The scalar by which f multiplies the fundamental class."""
    if fc_src.dimension != fc_tgt.dimension:
        raise DimensionError("degree needs equal dimensions")
    n = fc_src.dimension
    pushed = push_chain(
        f, fc_src.basis.chain, fc_tgt.basis.chain, n, fc_src.top_cycle
    )
    img = fc_tgt.basis.express_cycle(n, pushed)
    top = fc_tgt.top_class()
    # H_n of a connected oriented manifold pair is one-dimensional
    for c_img, c_top in zip(img, top):
        if c_top != 0:
            return c_img / c_top
    raise SingularDualityError("target fundamental class expresses to zero")
