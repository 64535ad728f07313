"""Lefschetz invariants: classical fixed-point and coincidence numbers, the
graded Lefschetz class, the Lefschetz homomorphism, and an exact
brute-force coincidence oracle.

The graded class of an endomorphism h of degree m is

    L(h) = sum_k (-1)^{k(k+m)} sum_j  x_j^k cap h(a_j^k)   in  H_m,

which collapses to the alternating trace when m = 0.  For a boundary
preserving map f and any map g out of the same space, the endomorphism

    h_fg^z(x) = g_*((f^* D^{-1}(x)) cap z)

has degree s - n for z of degree s, and a nonzero value of L(h_fg^z) for
any z certifies a coincidence of every pair homotopic to (f, g).
"""

import itertools
from fractions import Fraction

from .duality import cap_chain, duality_matrix
from .errors import DimensionError, SoundnessViolationError
from .homology import HomologyBasis
from .maps import induced_cohomology_map, induced_homology_map
from .matrix import RationalMatrix, ZERO, rref, solve, trace

ORACLE_FOUND = "found"
ORACLE_NOT_FOUND = "not found"
ORACLE_SKIPPED = "skipped"


class GradedEndomorphism:
    """Degree-m endomorphism of the graded homology of one space, one
    matrix H_k -> H_{k+m} per source degree."""

    __slots__ = ("shift", "blocks")

    def __init__(self, shift, blocks):
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "blocks", dict(blocks))

    def __setattr__(self, name, value):
        raise AttributeError("GradedEndomorphism is immutable")

    def block(self, k, basis):
        m = self.blocks.get(k)
        if m is None:
            return RationalMatrix.zeros(basis.dim(k + self.shift), basis.dim(k))
        return m

    @classmethod
    def of_map(cls, f, basis):
        """Degree-0 endomorphism induced by a self-map."""
        blocks = {
            k: induced_homology_map(f, basis, basis, k)
            for k in range(basis.chain.dimension + 1)
        }
        return cls(0, blocks)


class CoincidenceVerdict:
    """Certificate outcome plus its oracle cross-check.

    The construction enforces the one soundness rule of the whole engine:
    a nonzero certificate whose oracle ran and found nothing is a
    contradiction and raises immediately.
    """

    __slots__ = ("criterion", "value", "nonzero", "oracle", "witness")

    def __init__(self, criterion, value, nonzero, oracle, witness=None):
        if isinstance(value, tuple):
            value_nonzero = any(c != 0 for c in value)
        elif isinstance(value, RationalMatrix):
            value_nonzero = not value.is_zero()
        else:
            value_nonzero = value is not None
        if nonzero != value_nonzero:
            raise SoundnessViolationError(
                "%s: nonzero flag disagrees with the certificate value"
                % criterion
            )
        if nonzero and oracle == ORACLE_NOT_FOUND:
            raise SoundnessViolationError(
                "%s: certificate nonzero but oracle found no coincidence"
                % criterion
            )
        object.__setattr__(self, "criterion", criterion)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "nonzero", nonzero)
        object.__setattr__(self, "oracle", oracle)
        object.__setattr__(self, "witness", witness)

    def __setattr__(self, name, value):
        raise AttributeError("CoincidenceVerdict is immutable")

    def __repr__(self):
        return "CoincidenceVerdict(%s, nonzero=%s, oracle=%s)" % (
            self.criterion,
            self.nonzero,
            self.oracle,
        )


def lefschetz_number_self(f, basis=None):
    """Alternating trace sum of the induced maps of a self-map."""
    if f.source != f.target:
        raise DimensionError("lefschetz number needs a self-map of one pair")
    if basis is None:
        basis = HomologyBasis(f.source.absolute())
    total = Fraction(0)
    for k in range(basis.chain.dimension + 1):
        m = induced_homology_map(f, basis, basis, k)
        total += (-1) ** k * trace(m)
    return total


def lefschetz_class(h, basis):
    """L(h) as coordinates in H_m of the (absolute) basis, m = h.shift."""
    m = h.shift
    dim = basis.chain.dimension
    if m < 0 or m > dim:
        return ()
    chain = basis.chain
    acc = [ZERO] * chain.rank(m)
    for k in range(dim + 1):
        if basis.dim(k) == 0 or k + m > dim:
            continue
        block = h.block(k, basis)
        if block.rows != basis.dim(k + m) or block.cols != basis.dim(k):
            raise DimensionError(
                "block at degree %d has shape %dx%d, expected %dx%d"
                % (k, block.rows, block.cols, basis.dim(k + m), basis.dim(k))
            )
        sign = -1 if (k * (k + m)) % 2 else 1
        for j in range(basis.dim(k)):
            img = block.column(j)
            if all(c == 0 for c in img):
                continue
            c_chain = basis.chain_of(k + m, img)
            capped = cap_chain(chain, chain, k, basis.cocycles[k][j], k + m, c_chain)
            for t in range(len(acc)):
                if capped[t]:
                    acc[t] = acc[t] + sign * capped[t]
    return basis.express_cycle(m, tuple(acc))


def duality_inverse_matrix(fc, k):
    """Matrix of D^{-1}: H_{n-k}(absolute) -> H^k(pair)."""
    d = duality_matrix(fc, k)
    if d.rows != d.cols:
        raise DimensionError("duality matrix is not square in degree %d" % k)
    cols = []
    for j in range(d.rows):
        e = [ZERO] * d.rows
        e[j] = Fraction(1)
        x = solve(d, e)
        assert x is not None, "duality matrix is singular"
        cols.append(x)
    return RationalMatrix.from_columns(cols, d.cols)


def cap_with_class_matrix(basis, k, s, z_coords):
    """Matrix of (- cap z): H^k(pair) -> H_{s-k}(absolute) for a fixed
    degree-s class z of the pair."""
    absolute = basis.absolute
    t = s - k
    rows = absolute.dim(t)
    cols = []
    z_chain = basis.chain_of(s, z_coords)
    for x in basis.dual_representatives(k):
        if t < 0 or t > absolute.chain.dimension:
            cols.append([ZERO] * rows)
            continue
        capped = cap_chain(basis.chain, absolute.chain, k, x, s, z_chain)
        cols.append(absolute.express_cycle(t, capped))
    return RationalMatrix.from_columns(cols, rows)


def coincidence_endomorphism(f, g, z_degree, z_coords, fc_target,
                             basis_src=None, basis_src_abs=None,
                             basis_tgt_abs=None):
    """The graded endomorphism h_fg^z of H_*(M).

    `f` must be a map of pairs (N, A) -> (M, boundary M); `g` only needs to
    be simplicial on the total complexes.  `z_coords` are coordinates in
    degree `z_degree` of the source pair basis.
    """
    basis_src = basis_src or HomologyBasis(f.source)
    basis_src_abs = basis_src_abs or basis_src.absolute
    basis_tgt_abs = basis_tgt_abs or fc_target.absolute_basis
    if f.source.total != g.source.total or f.target.total != g.target.total:
        raise DimensionError("f and g must share source and target complexes")
    n = fc_target.dimension
    s = z_degree
    m = s - n
    blocks = {}
    for i in range(basis_tgt_abs.chain.dimension + 1):
        di = basis_tgt_abs.dim(i)
        ti = s - n + i
        rows = basis_tgt_abs.dim(ti) if 0 <= ti else 0
        if di == 0:
            blocks[i] = RationalMatrix.zeros(rows, 0)
            continue
        if n - i < 0 or fc_target.basis.dim(n - i) == 0 or rows == 0:
            blocks[i] = RationalMatrix.zeros(rows, di)
            continue
        d_inv = duality_inverse_matrix(fc_target, n - i)
        f_star = induced_cohomology_map(
            f, basis_src, fc_target.basis, n - i
        )
        cap_z = cap_with_class_matrix(basis_src, n - i, s, z_coords)
        g_star = induced_homology_map(g, basis_src_abs, basis_tgt_abs, ti)
        blocks[i] = g_star.mul(cap_z).mul(f_star).mul(d_inv)
    return GradedEndomorphism(m, blocks)


def lefschetz_homomorphism(f, g, z_degree, z_coords, fc_target, **bases):
    """Lambda_fg(z) = L(h_fg^z), a class in H_{s-n} of the target."""
    h = coincidence_endomorphism(f, g, z_degree, z_coords, fc_target, **bases)
    return lefschetz_class(h, bases.get("basis_tgt_abs") or fc_target.absolute_basis)


def lefschetz_coincidence_number(f, g, fc_src, fc_target):
    """Classical coincidence number of an equal-dimension pair, computed
    directly from g_* D_N f^* D_M^{-1}."""
    if fc_src.dimension != fc_target.dimension:
        raise DimensionError("coincidence number needs equal dimensions")
    n = fc_target.dimension
    basis_n = fc_src.basis
    basis_n_abs = fc_src.absolute_basis
    basis_m_abs = fc_target.absolute_basis
    total = Fraction(0)
    for k in range(basis_m_abs.chain.dimension + 1):
        if basis_m_abs.dim(k) == 0:
            continue
        if fc_target.basis.dim(n - k) == 0:
            continue
        d_inv = duality_inverse_matrix(fc_target, n - k)
        f_star = induced_cohomology_map(f, basis_n, fc_target.basis, n - k)
        d_n = duality_matrix(fc_src, n - k)
        g_star = induced_homology_map(g, basis_n_abs, basis_m_abs, k)
        endo = g_star.mul(d_n).mul(f_star).mul(d_inv)
        total += (-1) ** k * trace(endo)
    return total


def coincidence_certificate(f, g, fc_target, zs=None, run_oracle=True):
    """Evaluate the Lefschetz homomorphism over the supplied classes of
    H_*(source pair), defaulting to the full homology basis; optionally
    cross-check with the exact coincidence oracle."""
    basis_src = HomologyBasis(f.source)
    basis_src_abs = basis_src.absolute
    basis_tgt_abs = fc_target.absolute_basis
    if zs is None:
        zs = []
        for s in range(basis_src.chain.dimension + 1):
            for j in range(basis_src.dim(s)):
                coords = tuple(
                    Fraction(1 if t == j else 0) for t in range(basis_src.dim(s))
                )
                zs.append((s, coords))
    entries = []
    first_nonzero = None
    for s, coords in zs:
        value = lefschetz_homomorphism(
            f,
            g,
            s,
            coords,
            fc_target,
            basis_src=basis_src,
            basis_src_abs=basis_src_abs,
            basis_tgt_abs=basis_tgt_abs,
        )
        nz = any(c != 0 for c in value)
        entries.append({"degree": s, "z": coords, "value": value, "nonzero": nz})
        if nz and first_nonzero is None:
            first_nonzero = entries[-1]
    nonzero = first_nonzero is not None
    witness_point = None
    oracle = ORACLE_SKIPPED
    if run_oracle:
        witness_point = coincidence_oracle(f, g)
        oracle = ORACLE_FOUND if witness_point is not None else ORACLE_NOT_FOUND
    return CoincidenceVerdict(
        criterion="lefschetz-homomorphism",
        value=first_nonzero["value"] if nonzero else None,
        nonzero=nonzero,
        oracle=oracle,
        witness={
            "entries": entries,
            "nonzero_class": first_nonzero,
            "point": witness_point,
        },
    )


class CoincidenceWitness:
    """Exact barycentric point where two simplicial maps agree."""

    __slots__ = ("simplex", "coords", "image")

    def __init__(self, simplex, coords, image):
        object.__setattr__(self, "simplex", simplex)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "image", image)

    def __setattr__(self, name, value):
        raise AttributeError("CoincidenceWitness is immutable")

    def __repr__(self):
        return "CoincidenceWitness(%r, %r)" % (self.simplex, self.coords)


def _affine_image(vertex_images, coords):
    point = {}
    for w, lam in zip(vertex_images, coords):
        if lam:
            point[w] = point.get(w, ZERO) + lam
    return {w: c for w, c in sorted(point.items()) if c != 0}


def coincidence_oracle(f, g):
    """Search for an exact point with f = g.

    Both maps restrict to affine maps on every closed simplex; a
    coincidence inside one exists iff for some support face the linear
    system 'equal coefficients on every target vertex, coordinates sum to
    one' has a unique nonnegative solution (a vertex of the solution
    polytope).  Returns the first witness in (dimension, simplex, support)
    order, or None.
    """
    if f.source.total != g.source.total:
        raise DimensionError("oracle needs maps on one source complex")
    source = f.source.total
    for d in range(source.dimension + 1):
        for simplex in source.simplices_of_dim(d):
            fa = [f.vertex_map[v] for v in simplex]
            ga = [g.vertex_map[v] for v in simplex]
            witness = _simplex_coincidence(simplex, fa, ga)
            if witness is not None:
                return witness
    return None


def _simplex_coincidence(simplex, fa, ga):
    nverts = len(simplex)
    targets = sorted(set(fa) | set(ga))
    for size in range(1, nverts + 1):
        for support in itertools.combinations(range(nverts), size):
            rows = []
            rhs = []
            for w in targets:
                row = []
                for i in support:
                    c = (1 if fa[i] == w else 0) - (1 if ga[i] == w else 0)
                    row.append(Fraction(c))
                rows.append(row)
                rhs.append(ZERO)
            rows.append([Fraction(1)] * size)
            rhs.append(Fraction(1))
            m = RationalMatrix(rows, shape=(len(rows), size))
            if rref(m).rank != size:
                continue
            sol = solve(m, tuple(rhs))
            if sol is None:
                continue
            if any(c < 0 for c in sol):
                continue
            coords = [ZERO] * nverts
            for lam, i in zip(sol, support):
                coords[i] = lam
            image_f = _affine_image(fa, coords)
            image_g = _affine_image(ga, coords)
            assert image_f == image_g, "oracle witness fails substitution"
            return CoincidenceWitness(simplex, tuple(coords), image_f)
    return None
