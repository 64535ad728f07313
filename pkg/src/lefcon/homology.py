"""Homology and cohomology bases of simplicial pairs.

For each degree k the basis holds cycle representatives completing an
image-basis of im ∂_{k+1} to a kernel-basis of ker ∂_k, plus Kronecker-dual
cocycles: the pairing matrix <x_i, a_j> is exactly the identity.  All
choices are deterministic, so repeated runs give identical coordinates.
"""

from fractions import Fraction

from .complexes import ChainComplexData, SimplicialPair
from .errors import DimensionError
from .matrix import (
    RationalMatrix,
    ZERO,
    column_space_basis,
    kernel_basis,
    rref,
    solve,
    vec_dot,
)


class HomologyBasis:
    """Cycle representatives a_j^k, dual cocycles x_j^k, and the boundary
    bases needed to express arbitrary cycles in class coordinates."""

    __slots__ = (
        "pair",
        "chain",
        "cycles",
        "cocycles",
        "boundaries",
        "_express",
        "_absolute",
    )

    def __init__(self, pair, chain=None):
        object.__setattr__(self, "pair", pair)
        object.__setattr__(
            self, "chain", chain if chain is not None else ChainComplexData(pair)
        )
        cycles = []
        cocycles = []
        boundaries = []
        express = []
        for k in range(self.chain.dimension + 1):
            reps, duals, bnd = self._degree_basis(k)
            cycles.append(tuple(reps))
            cocycles.append(tuple(duals))
            boundaries.append(tuple(bnd))
            express.append(None)
        object.__setattr__(self, "cycles", tuple(cycles))
        object.__setattr__(self, "cocycles", tuple(cocycles))
        object.__setattr__(self, "boundaries", tuple(boundaries))
        object.__setattr__(self, "_express", express)
        object.__setattr__(self, "_absolute", None)
        for k in range(self.chain.dimension + 1):
            for i, x in enumerate(self.cocycles[k]):
                for j, a in enumerate(self.cycles[k]):
                    assert vec_dot(x, a) == (1 if i == j else 0), (
                        "Kronecker pairing is not the identity in degree %d" % k
                    )

    def __setattr__(self, name, value):
        raise AttributeError("HomologyBasis is immutable")

    def _degree_basis(self, k):
        dk = self.chain.boundary_matrix(k)
        dk1 = self.chain.boundary_matrix(k + 1)
        n_k = self.chain.rank(k)
        if n_k == 0:
            return [], [], []
        z_basis = kernel_basis(dk)
        b_basis = column_space_basis(dk1)
        # complete the boundary basis to a basis of the cycle space;
        # rref pivots pick the earliest independent kernel vectors
        combined = RationalMatrix.from_columns(
            [list(v) for v in b_basis] + [list(v) for v in z_basis], n_k
        )
        pivots = rref(combined).pivots
        reps = [z_basis[j - len(b_basis)] for j in pivots if j >= len(b_basis)]

        # dual cocycles: relative cocycles (ker of the transposed boundary
        # from degree k+1) with prescribed values on the representatives
        duals = []
        if reps:
            coc_basis = kernel_basis(dk1.transpose())
            pairing = RationalMatrix(
                [[vec_dot(x, a) for x in coc_basis] for a in reps],
                shape=(len(reps), len(coc_basis)),
            )
            for i in range(len(reps)):
                rhs = [ZERO] * len(reps)
                rhs[i] = Fraction(1)
                coeffs = solve(pairing, rhs)
                assert coeffs is not None, "dual basis system is inconsistent"
                x = [ZERO] * n_k
                for c, v in zip(coeffs, coc_basis):
                    if c:
                        for t in range(n_k):
                            if v[t]:
                                x[t] = x[t] + c * v[t]
                duals.append(tuple(x))
        return reps, duals, b_basis

    def dim(self, k):
        """Betti number of the pair in degree k."""
        if 0 <= k <= self.chain.dimension:
            return len(self.cycles[k])
        return 0

    def representatives(self, k):
        if 0 <= k <= self.chain.dimension:
            return self.cycles[k]
        return ()

    def dual_representatives(self, k):
        if 0 <= k <= self.chain.dimension:
            return self.cocycles[k]
        return ()

    def betti(self):
        return tuple(self.dim(k) for k in range(self.chain.dimension + 1))

    def euler(self):
        return sum((-1) ** k * self.dim(k) for k in range(self.chain.dimension + 1))

    def zero_class(self, k):
        return (ZERO,) * self.dim(k)

    def express_cycle(self, k, vec):
        """Coordinates of the class of the cycle `vec` in the degree-k basis.

        Raises if `vec` is not a cycle (not in the span of representatives
        and boundaries).
        """
        if k < 0 or k > self.chain.dimension:
            if all(x == 0 for x in vec):
                return ()
            raise DimensionError("nonzero chain outside complex dimensions")
        if len(vec) != self.chain.rank(k):
            raise DimensionError(
                "chain length %d != rank %d in degree %d"
                % (len(vec), self.chain.rank(k), k)
            )
        m = self._express[k]
        if m is None:
            m = RationalMatrix.from_columns(
                [list(v) for v in self.cycles[k]]
                + [list(v) for v in self.boundaries[k]],
                self.chain.rank(k),
            )
            self._express[k] = m
        coords = solve(m, vec)
        if coords is None:
            raise DimensionError("chain is not a cycle in degree %d" % k)
        return tuple(coords[: self.dim(k)])

    def chain_of(self, k, coords):
        """Representative cycle of the class with the given coordinates."""
        if len(coords) != self.dim(k):
            raise DimensionError("expected %d coordinates" % self.dim(k))
        vec = [ZERO] * self.chain.rank(k)
        for c, rep in zip(coords, self.cycles[k]):
            if c:
                for t in range(len(vec)):
                    if rep[t]:
                        vec[t] = vec[t] + Fraction(c) * rep[t]
        return tuple(vec)

    def cochain_of(self, k, coords):
        """Representative cocycle of the dual class with the given coordinates."""
        if len(coords) != self.dim(k):
            raise DimensionError("expected %d coordinates" % self.dim(k))
        vec = [ZERO] * self.chain.rank(k)
        for c, rep in zip(coords, self.cocycles[k]):
            if c:
                for t in range(len(vec)):
                    if rep[t]:
                        vec[t] = vec[t] + Fraction(c) * rep[t]
        return tuple(vec)

    def express_cocycle(self, k, vec):
        """Coordinates of the class of a cocycle in the dual basis: its
        values on the cycle representatives."""
        if len(vec) != self.chain.rank(k):
            raise DimensionError("cochain length mismatch in degree %d" % k)
        return tuple(vec_dot(vec, a) for a in self.cycles[k])

    @property
    def absolute(self):
        """Basis of the total complex with empty subcomplex (self if the
        pair is already absolute)."""
        if self.pair.sub.dimension == -1:
            return self
        if self._absolute is None:
            # idempotent cache fill; bypasses the immutability guard
            object.__setattr__(self, "_absolute", HomologyBasis(self.pair.absolute()))
        return self._absolute


def homology_basis(pair):
    return HomologyBasis(pair)


def betti_numbers(pair_or_complex):
    if not isinstance(pair_or_complex, SimplicialPair):
        pair_or_complex = SimplicialPair(pair_or_complex)
    return HomologyBasis(pair_or_complex).betti()
