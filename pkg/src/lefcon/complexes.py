"""Finite simplicial complexes, pairs, and their relative chain complexes.

Simplices are strictly increasing tuples of vertex labels; labels only need
to be mutually comparable (strings, ints, or tuples of such for product
complexes).  Everything is sorted, so two complexes built from the same
simplices compare equal and all downstream bases are reproducible.
"""

import itertools
from fractions import Fraction

from .errors import FaceClosureError, SubcomplexError, VertexOrderError
from .matrix import RationalMatrix, ZERO, ONE

def faces_of(simplex):
    """All proper faces of a simplex tuple, every dimension."""
    out = []
    for k in range(1, len(simplex)):
        out.extend(itertools.combinations(simplex, k))
    return out


class SimplicialComplex:
    """A finite simplicial complex given by per-dimension simplex lists."""

    __slots__ = ("simplices", "dimension", "_sset")

    def __init__(self, simplices, check=True):
        """`simplices` is an iterable of vertex tuples (all faces included
        unless built via :meth:`from_maximal`)."""
        sset = set()
        for s in simplices:
            t = tuple(s)
            if check:
                for a, b in zip(t, t[1:]):
                    if not a < b:
                        raise VertexOrderError(
                            "simplex %r is not strictly increasing" % (t,)
                        )
            sset.add(t)
        by_dim = {}
        for s in sset:
            by_dim.setdefault(len(s) - 1, []).append(s)
        dim = max(by_dim) if by_dim else -1
        object.__setattr__(
            self,
            "simplices",
            tuple(tuple(sorted(by_dim.get(k, ()))) for k in range(dim + 1)),
        )
        object.__setattr__(self, "dimension", dim)
        object.__setattr__(self, "_sset", frozenset(sset))
        if check:
            self._check_closure()

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def from_maximal(cls, maximal):
        """Close the given simplices under faces."""
        sset = set()
        for s in maximal:
            t = tuple(sorted(set(s)))
            if len(t) != len(tuple(s)):
                raise VertexOrderError("simplex %r has repeated vertices" % (s,))
            sset.add(t)
            sset.update(faces_of(t))
        return cls(sset, check=True)

    @classmethod
    def empty(cls):
        return cls((), check=False)

    def _check_closure(self):
        for s in self._sset:
            if len(s) > 1:
                for f in itertools.combinations(s, len(s) - 1):
                    if f not in self._sset:
                        raise FaceClosureError(
                            "face %r of %r is missing" % (f, s)
                        )

    def __contains__(self, simplex):
        return tuple(simplex) in self._sset

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._sset == other._sset

    def __hash__(self):
        return hash(self._sset)

    def __repr__(self):
        counts = ",".join(str(len(s)) for s in self.simplices)
        return "SimplicialComplex(dim=%d, counts=[%s])" % (self.dimension, counts)

    def simplices_of_dim(self, k):
        if 0 <= k <= self.dimension:
            return self.simplices[k]
        return ()

    def all_simplices(self):
        for k in range(self.dimension + 1):
            yield from self.simplices[k]

    @property
    def vertices(self):
        return tuple(s[0] for s in self.simplices_of_dim(0))

    def maximal_simplices(self):
        # face closure makes it enough to look one dimension up
        out = []
        for k in range(self.dimension + 1):
            cofaces = self.simplices_of_dim(k + 1)
            for s in self.simplices[k]:
                sv = set(s)
                if not any(sv <= set(t) for t in cofaces):
                    out.append(s)
        return out

    def is_subcomplex_of(self, other):
        return self._sset <= other._sset

    def simplex_count(self):
        return sum(len(s) for s in self.simplices)


class SimplicialPair:
    """A complex with a distinguished subcomplex."""

    __slots__ = ("total", "sub")

    def __init__(self, total, sub=None):
        if sub is None:
            sub = SimplicialComplex.empty()
        object.__setattr__(self, "total", total)
        object.__setattr__(self, "sub", sub)
        validate_pair(self)

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialPair is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialPair)
            and self.total == other.total
            and self.sub == other.sub
        )

    def __hash__(self):
        return hash((self.total, self.sub))

    def __repr__(self):
        return "SimplicialPair(%r, %r)" % (self.total, self.sub)

    @property
    def dimension(self):
        return self.total.dimension

    def absolute(self):
        """The same total complex with empty subcomplex."""
        if self.sub.dimension == -1:
            return self
        return SimplicialPair(self.total, SimplicialComplex.empty())


def validate_pair(p):
    """Raise a named error for any violated pair invariant.

    Face closure and vertex ordering of both complexes are enforced at
    construction; this re-checks them and the subcomplex condition.
    """
    p.total._check_closure()
    p.sub._check_closure()
    if not p.sub.is_subcomplex_of(p.total):
        bad = sorted(p.sub._sset - p.total._sset)[0]
        raise SubcomplexError("simplex %r of sub is not in total" % (bad,))


class ChainComplexData:
    """Relative chain complex of a pair: generators and boundary matrices.

    Generators in degree k are the k-simplices of `total` not in `sub`.
    ``boundary[k]`` maps C_k to C_{k-1} with the alternating-sign face
    formula, faces lying in `sub` dropped; ``boundary[0]`` has zero rows.
    """

    __slots__ = ("pair", "generators", "index", "boundary")

    def __init__(self, pair):
        object.__setattr__(self, "pair", pair)
        total, sub = pair.total, pair.sub
        dim = total.dimension
        gens = []
        index = {}
        for k in range(dim + 1):
            row = tuple(s for s in total.simplices_of_dim(k) if s not in sub)
            for i, s in enumerate(row):
                index[s] = i
            gens.append(row)
        boundaries = []
        for k in range(dim + 1):
            if k == 0:
                boundaries.append(RationalMatrix.zeros(0, len(gens[0])))
                continue
            rows = len(gens[k - 1])
            cols = len(gens[k])
            data = [[ZERO] * cols for _ in range(rows)]
            for j, s in enumerate(gens[k]):
                sign = ONE
                for i in range(len(s)):
                    face = s[:i] + s[i + 1 :]
                    if face not in sub:
                        data[index[face]][j] = sign
                    sign = -sign
            boundaries.append(RationalMatrix(data, shape=(rows, cols)))
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "boundary", tuple(boundaries))
        for k in range(1, dim + 1):
            assert self.boundary[k - 1].mul(self.boundary[k]).is_zero(), (
                "boundary of boundary is nonzero in degree %d" % k
            )

    def __setattr__(self, name, value):
        raise AttributeError("ChainComplexData is immutable")

    @property
    def dimension(self):
        return self.pair.total.dimension

    def rank(self, k):
        if 0 <= k <= self.dimension:
            return len(self.generators[k])
        return 0

    def boundary_matrix(self, k):
        """∂_k, with sensible empty matrices outside the complex dimension."""
        if 1 <= k <= self.dimension:
            return self.boundary[k]
        if k == 0:
            return self.boundary[0]
        if k == self.dimension + 1:
            return RationalMatrix.zeros(self.rank(self.dimension), 0)
        return RationalMatrix.zeros(0, 0)

    def zero_chain(self, k):
        return (ZERO,) * self.rank(k)

    def chain_from_dict(self, k, coeffs):
        """Chain vector from a {simplex: coefficient} mapping (entries for
        sub simplices or foreign degrees are rejected)."""
        vec = [ZERO] * self.rank(k)
        gens = self.generators[k] if 0 <= k <= self.dimension else ()
        pos = {s: i for i, s in enumerate(gens)}
        for s, c in coeffs.items():
            s = tuple(s)
            if s not in pos:
                raise KeyError("%r is not a degree-%d generator" % (s, k))
            vec[pos[s]] = vec[pos[s]] + Fraction(c)
        return tuple(vec)


def chain_complex(pair):
    return ChainComplexData(pair)


def euler_characteristic(complex_):
    """Alternating sum of simplex counts."""
    return sum(
        (-1) ** k * len(complex_.simplices_of_dim(k))
        for k in range(complex_.dimension + 1)
    )
