"""Staircase products of simplicial pairs and the shuffle chain map.

The product of complexes with ordered vertices is triangulated by chains in
the vertex-pair poset: a set of pairwise comparable (u, v) pairs is a
simplex exactly when both coordinate projections span simplices of the
factors.  Maximal simplices over a cell σ x τ are the monotone staircase
paths, one per (i, j)-shuffle; the shuffle chain map sends a generator pair
to the signed sum of those paths, with the usual (-1)^inversions sign that
makes cross products of cycles cycles.
"""

import itertools

from .complexes import SimplicialComplex, SimplicialPair
from .errors import DimensionError
from .homology import HomologyBasis
from .maps import SimplicialMapSpec
from .matrix import ZERO


def _staircase_paths(sigma, tau):
    """All shuffle paths through the grid sigma x tau with their signs.

    A path is described by the multiset of steps: positions of the
    'advance in sigma' moves among i+j steps.  Sign is (-1)^inversions
    where an inversion is a tau-step occurring before a sigma-step.
    """
    i = len(sigma) - 1
    j = len(tau) - 1
    out = []
    for sigma_positions in itertools.combinations(range(i + j), i):
        path = [(sigma[0], tau[0])]
        a = b = 0
        inversions = 0
        spos = set(sigma_positions)
        for step in range(i + j):
            if step in spos:
                a += 1
                inversions += b
            else:
                b += 1
            path.append((sigma[a], tau[b]))
        sign = -1 if inversions % 2 else 1
        out.append((tuple(path), sign))
    return out


class ProductData:
    """The staircase product pair of two pairs, its projections, and the
    shuffle chain map."""

    __slots__ = (
        "factor_a",
        "factor_b",
        "pair",
        "proj_a",
        "proj_b",
        "_basis",
        "_absolute",
    )

    def __init__(self, a, b):
        object.__setattr__(self, "factor_a", a)
        object.__setattr__(self, "factor_b", b)

        simplices = set()
        for sigma in a.total.all_simplices():
            for tau in b.total.all_simplices():
                for path, _sign in _staircase_paths(sigma, tau):
                    simplices.add(path)
                    # face closure: every subset of a chain is a chain
                    for k in range(1, len(path)):
                        simplices.update(itertools.combinations(path, k))
        total = SimplicialComplex(simplices, check=False)

        sub_simplices = [
            s
            for s in simplices
            if tuple(sorted(set(u for u, _ in s))) in a.sub
            or tuple(sorted(set(v for _, v in s))) in b.sub
        ]
        sub = SimplicialComplex(sub_simplices, check=False)
        object.__setattr__(self, "pair", SimplicialPair(total, sub))

        proj_a = self._projection(0, a)
        proj_b = self._projection(1, b)
        object.__setattr__(self, "proj_a", proj_a)
        object.__setattr__(self, "proj_b", proj_b)
        object.__setattr__(self, "_basis", None)
        object.__setattr__(self, "_absolute", None)

    def __setattr__(self, name, value):
        raise AttributeError("ProductData is immutable")

    def _projection(self, coord, factor):
        from .errors import InvalidMapError

        vm = {v: v[coord] for v in self.pair.total.vertices}
        try:
            return SimplicialMapSpec(
                self.pair, factor, vm, name="proj_%d" % coord
            )
        except InvalidMapError:
            # with both subs nonempty the full product sub need not map into
            # the factor sub; restrict the source sub to the part that does
            src_sub = SimplicialComplex(
                [
                    s
                    for s in self.pair.sub.all_simplices()
                    if tuple(sorted(set(p[coord] for p in s))) in factor.sub
                ],
                check=False,
            )
            source = SimplicialPair(self.pair.total, src_sub)
            return SimplicialMapSpec(source, factor, vm, name="proj_%d" % coord)

    @property
    def basis(self):
        if self._basis is None:
            object.__setattr__(self, "_basis", HomologyBasis(self.pair))
        return self._basis

    @property
    def absolute(self):
        """Product of the absolute factors; shares the same total complex."""
        if self.factor_a.sub.dimension == -1 and self.factor_b.sub.dimension == -1:
            return self
        if self._absolute is None:
            object.__setattr__(
                self,
                "_absolute",
                ProductData(self.factor_a.absolute(), self.factor_b.absolute()),
            )
        return self._absolute

    def shuffle_chain(self, i, vec_a, j, vec_b, relative=True):
        """Image of a pair of relative chains under the shuffle chain map.

        `vec_a` is a degree-i chain of factor_a, `vec_b` a degree-j chain
        of factor_b; the result is a degree-(i+j) chain of the product
        (relative if `relative`, absolute otherwise).
        """
        target = self if relative else self.absolute
        chain_tgt = target.basis.chain
        fa = self.factor_a if relative else self.factor_a.absolute()
        fb = self.factor_b if relative else self.factor_b.absolute()
        gens_a = [s for s in fa.total.simplices_of_dim(i) if s not in fa.sub]
        gens_b = [s for s in fb.total.simplices_of_dim(j) if s not in fb.sub]
        if len(vec_a) != len(gens_a) or len(vec_b) != len(gens_b):
            raise DimensionError("factor chain length mismatch in shuffle")
        out = [ZERO] * chain_tgt.rank(i + j)
        for ia, ca in enumerate(vec_a):
            if ca == 0:
                continue
            sigma = gens_a[ia]
            for ib, cb in enumerate(vec_b):
                if cb == 0:
                    continue
                tau = gens_b[ib]
                c = ca * cb
                for path, sign in _staircase_paths(sigma, tau):
                    idx = chain_tgt.index.get(path)
                    if idx is None:
                        continue
                    out[idx] = out[idx] + c * sign
        return tuple(out)


def product_pair(a, b):
    """Staircase product of two pairs.

    Returns the bundle holding the product pair, the two projections, and
    the shuffle chain map.
    """
    return ProductData(a, b)
