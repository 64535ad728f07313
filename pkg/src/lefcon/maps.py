"""Simplicial maps of pairs and their induced (co)homology homomorphisms.

A map is a total vertex assignment on the source; the image of every
simplex must span a simplex of the target, and simplices of the source
subcomplex must land in the target subcomplex.  Degenerate images (repeated
vertices) contribute zero chains, which is what makes constant maps induce
zero in positive degrees.
"""

from .errors import DimensionError, InvalidMapError
from .matrix import RationalMatrix, ZERO


def _sort_permutation_sign(seq):
    """Sign of the permutation sorting `seq` (None if entries repeat)."""
    n = len(seq)
    if len(set(seq)) != n:
        return None
    inv = 0
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


class SimplicialMapSpec:
    """Vertex assignment realizing a simplicial map of pairs."""

    __slots__ = ("source", "target", "vertex_map", "name")

    def __init__(self, source, target, vertex_map, name=None, check_pair=True):
        vm = dict(vertex_map)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "vertex_map", vm)
        object.__setattr__(self, "name", name or "map")
        missing = [v for v in source.total.vertices if v not in vm]
        if missing:
            raise InvalidMapError(
                "%s: no image for vertex %r" % (self.name, missing[0])
            )
        for s in source.total.all_simplices():
            img = tuple(sorted(set(vm[v] for v in s)))
            if img not in target.total:
                raise InvalidMapError(
                    "%s: image %r of simplex %r is not a target simplex"
                    % (self.name, img, s)
                )
        if check_pair:
            for s in source.sub.all_simplices():
                img = tuple(sorted(set(vm[v] for v in s)))
                if img not in target.sub:
                    raise InvalidMapError(
                        "%s: sub simplex %r maps to %r outside the target sub"
                        % (self.name, s, img)
                    )

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialMapSpec is immutable")

    def __call__(self, vertex):
        return self.vertex_map[vertex]

    def image_simplex(self, simplex):
        return tuple(sorted(set(self.vertex_map[v] for v in simplex)))

    def is_map_of_pairs(self):
        for s in self.source.sub.all_simplices():
            if self.image_simplex(s) not in self.target.sub:
                return False
        return True

    def compose(self, other, name=None):
        """self after other (other's target total must embed in self's source)."""
        vm = {v: self.vertex_map[w] for v, w in other.vertex_map.items()}
        return SimplicialMapSpec(
            other.source,
            self.target,
            vm,
            name=name or ("%s*%s" % (self.name, other.name)),
            check_pair=False,
        )


def identity_map(pair):
    return SimplicialMapSpec(
        pair, pair, {v: v for v in pair.total.vertices}, name="id"
    )


def constant_map(source, target, vertex, name=None):
    if (vertex,) not in target.total:
        raise InvalidMapError("constant value %r is not a target vertex" % (vertex,))
    return SimplicialMapSpec(
        source,
        target,
        {v: vertex for v in source.total.vertices},
        name=name or ("const_%s" % (vertex,)),
        check_pair=False,
    )


def push_chain(f, chain_src, chain_tgt, k, vec):
    """Image of a degree-k relative chain under the chain map of `f`.

    Degenerate image simplices vanish; image simplices inside the target
    sub are dropped by the relative structure.
    """
    if len(vec) != chain_src.rank(k):
        raise DimensionError("chain length mismatch in degree %d" % k)
    out = [ZERO] * chain_tgt.rank(k)
    gens = chain_src.generators[k] if 0 <= k <= chain_src.dimension else ()
    for idx, c in enumerate(vec):
        if c == 0:
            continue
        s = gens[idx]
        img_seq = tuple(f.vertex_map[v] for v in s)
        sign = _sort_permutation_sign(img_seq)
        if sign is None:
            continue
        img = tuple(sorted(img_seq))
        j = chain_tgt.index.get(img)
        if j is None:
            # lies in the target sub; gone in the relative complex
            continue
        out[j] = out[j] + c * sign
    return tuple(out)


def induced_homology_map(f, basis_src, basis_tgt, k):
    """Matrix of f_*: H_k(source) -> H_k(target) in the chosen bases."""
    cols = []
    for a in basis_src.representatives(k):
        img = push_chain(f, basis_src.chain, basis_tgt.chain, k, a)
        cols.append(basis_tgt.express_cycle(k, img))
    return RationalMatrix.from_columns(cols, basis_tgt.dim(k))


def induced_cohomology_map(f, basis_src, basis_tgt, k):
    """Matrix of f^*: H^k(target) -> H^k(source) in the Kronecker-dual bases.

    Computed by pulling cochains back along the chain map; in dual bases it
    is the transpose of the homology matrix.
    """
    images = [
        push_chain(f, basis_src.chain, basis_tgt.chain, k, a)
        for a in basis_src.representatives(k)
    ]
    cols = []
    for x in basis_tgt.dual_representatives(k):
        # <f^* x, a_i> = <x, f_# a_i>
        cols.append(
            [
                sum((x[t] * img[t] for t in range(len(img)) if img[t]), ZERO)
                for img in images
            ]
        )
    return RationalMatrix.from_columns(cols, basis_src.dim(k))


def graded_induced_maps(f, basis_src, basis_tgt):
    """All induced homology matrices of `f`, degree by degree."""
    top = max(basis_src.chain.dimension, basis_tgt.chain.dimension)
    return {
        k: induced_homology_map(f, basis_src, basis_tgt, k) for k in range(top + 1)
    }
