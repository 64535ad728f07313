"""Shared fixture maps for the test suite."""

from lefcon import fixtures
from lefcon.duality import orient
from lefcon.maps import SimplicialMapSpec, constant_map, identity_map


def circle3_pair():
    return fixtures.circle_pair()


def circle6_pair():
    return fixtures.circle_pair(fixtures.circle6())


def double_cover(src=None, tgt=None):
    """Hexagon onto hollow triangle, v -> v mod 3 (degree 2)."""
    src = src or circle6_pair()
    tgt = tgt or circle3_pair()
    return SimplicialMapSpec(src, tgt, {v: v % 3 for v in range(6)}, name="dbl")


def collapse_one(src=None, tgt=None):
    """Hexagon onto hollow triangle of degree 1: 0,1,2,3,4,5 -> 0,1,2,0,0,0."""
    src = src or circle6_pair()
    tgt = tgt or circle3_pair()
    vm = {0: 0, 1: 1, 2: 2, 3: 0, 4: 0, 5: 0}
    return SimplicialMapSpec(src, tgt, vm, name="collapse1")


def rotation6(steps=3, pair=None):
    pair = pair or circle6_pair()
    return SimplicialMapSpec(
        pair, pair, {v: (v + steps) % 6 for v in range(6)}, name="rot%d" % steps
    )


def rotation3(pair=None):
    pair = pair or circle3_pair()
    return SimplicialMapSpec(
        pair, pair, {v: (v + 1) % 3 for v in range(3)}, name="rot1"
    )


def reflection3(pair=None):
    pair = pair or circle3_pair()
    return SimplicialMapSpec(pair, pair, {0: 1, 1: 0, 2: 2}, name="refl3")


def reflection6(pair=None):
    """v -> 1 - v mod 6; fixed points at edge midpoints only."""
    pair = pair or circle6_pair()
    return SimplicialMapSpec(
        pair, pair, {v: (1 - v) % 6 for v in range(6)}, name="refl6"
    )


def sphere_rotation(pair=None):
    """Three-cycle on the tetrahedron boundary (degree +1, fixes vertex 3)."""
    pair = pair or fixtures.sphere2_pair()
    return SimplicialMapSpec(pair, pair, {0: 1, 1: 2, 2: 0, 3: 3}, name="rot012")


def sphere_reflection(pair=None):
    """Transposition on the tetrahedron boundary (degree -1)."""
    pair = pair or fixtures.sphere2_pair()
    return SimplicialMapSpec(pair, pair, {0: 1, 1: 0, 2: 2, 3: 3}, name="refl01")


def torus_swap(prod=None):
    """Factor swap on the staircase torus (degree -1)."""
    prod = prod or fixtures.torus_product()
    pair = prod.pair
    return SimplicialMapSpec(
        pair, pair, {(a, b): (b, a) for (a, b) in pair.total.vertices}, name="swap"
    )


def torus_projection(coord, prod=None):
    """Coordinate projection of the staircase torus onto the circle."""
    prod = prod or fixtures.torus_product()
    pair = prod.pair
    return SimplicialMapSpec(
        pair,
        circle3_pair(),
        {v: v[coord] for v in pair.total.vertices},
        name="proj%d" % coord,
    )


def mixed_dimension_pairs():
    """(f, g, target orientation) triples with dim source > dim target,
    exercising the graded certificate machinery."""
    fc3 = orient(circle3_pair(), 1)
    prod = fixtures.torus_product()
    p1 = torus_projection(0, prod)
    p2 = torus_projection(1, prod)
    const = constant_map(prod.pair, circle3_pair(), 0, name="tc_const")
    return [
        (p1, p2, fc3),
        (p1, p1, fc3),
        (p1, const, fc3),
        (p2, p1, fc3),
    ]


def classical_pairs():
    """Equal-dimension (f, g, orientation_src, orientation_tgt) fixture
    pairs for coincidence sweeps."""
    c3 = circle3_pair()
    c6 = circle6_pair()
    s2 = fixtures.sphere2_pair()
    t2 = fixtures.torus_product_pair()
    fc3 = orient(c3, 1)
    fc6 = orient(c6, 1)
    fcs = orient(s2, 2)
    fct = orient(t2, 2)
    return [
        (identity_map(c3), identity_map(c3), fc3, fc3),
        (identity_map(c3), rotation3(), fc3, fc3),
        (identity_map(c3), reflection3(), fc3, fc3),
        (identity_map(c3), constant_map(c3, c3, 0), fc3, fc3),
        (identity_map(c6), rotation6(), fc6, fc6),
        (identity_map(c6), reflection6(), fc6, fc6),
        (collapse_one(), double_cover(), fc6, fc3),
        (double_cover(), collapse_one(), fc6, fc3),
        (identity_map(s2), sphere_rotation(), fcs, fcs),
        (identity_map(s2), sphere_reflection(), fcs, fcs),
        (identity_map(s2), constant_map(s2, s2, 0), fcs, fcs),
        (constant_map(t2, t2, (0, 0)), identity_map(t2), fct, fct),
        (identity_map(t2), torus_swap(), fct, fct),
        (identity_map(t2), constant_map(t2, t2, (0, 0)), fct, fct),
    ]
