from fractions import Fraction

import pytest

import helpers
from lefcon import fixtures
from lefcon.complexes import SimplicialComplex
from lefcon.control import (
    boundary_input_subcomplex,
    check_boundary_condition,
    compose_system_map,
    controllability_chain_search,
    equilibrium_certificate,
    fixed_point_class,
    projection_system,
    reachability_oracle,
    removability_precondition,
    slice_degree,
    sphere_criteria,
    surjectivity_certificate,
    surjectivity_oracle,
)
from lefcon.duality import cross, orient
from lefcon.errors import InputError, SphereSignatureError
from lefcon.homology import HomologyBasis
from lefcon.lefschetz import ORACLE_FOUND
from lefcon.maps import SimplicialMapSpec, constant_map, identity_map, induced_homology_map
from lefcon.matrix import RationalMatrix
from lefcon.products import product_pair

F = Fraction


def unit(basis, k=0):
    return tuple(F(1) if t == 0 else F(0) for t in range(basis.dim(k)))


# ---------------------------------------------------------------- U'


def test_boundary_inputs_empty_for_closed_state():
    sys = fixtures.projection_system_on("circle", input_complex=fixtures.circle3())
    assert boundary_input_subcomplex(sys).dimension == -1


def test_boundary_inputs_everything_when_all_to_boundary():
    fc = orient(fixtures.cylinder_pair(), 2)
    u = fixtures.two_points()
    vm = {}
    for (v, t) in fc.pair.total.vertices:
        vm[((v, t), 0)] = (v, 0)
        vm[((v, t), 1)] = (v, 1)
    from lefcon.control import DiscreteSystem

    sys = DiscreteSystem(fc, u, vm, name="all-to-boundary")
    assert boundary_input_subcomplex(sys) == u


def test_boundary_inputs_single_vertex():
    sys = fixtures.boundary_probe_system()
    u_prime = boundary_input_subcomplex(sys)
    assert [s for s in u_prime.all_simplices()] == [(0,)]


# ------------------------------------------------- equilibrium classes


def test_projection_system_gives_euler_class():
    for name, chi in (
        ("circle", 0),
        ("sphere", 2),
        ("torus", 0),
        ("cylinder", 0),
    ):
        sys = fixtures.projection_system_on(name)
        value = fixed_point_class(sys, 0, unit(sys.input_basis))
        assert value == (F(chi),), name


def test_top_input_class_killed_by_projection():
    sys = fixtures.projection_system_on("circle", input_complex=fixtures.circle3())
    basis_u = sys.input_basis
    v = tuple(F(1) for _ in range(basis_u.dim(1)))
    assert fixed_point_class(sys, 1, v) == (F(0),)


def test_doubling_system_class_is_minus_one():
    sys = fixtures.doubling_system()
    assert slice_degree(sys) == 2
    value = fixed_point_class(sys, 0, unit(sys.input_basis))
    assert value == (F(-1),)


def test_equilibrium_certificates():
    sys = fixtures.projection_system_on("sphere")
    verdict = equilibrium_certificate(sys)
    assert verdict.nonzero and verdict.value == (F(2),)
    assert verdict.oracle == ORACLE_FOUND

    flat = fixtures.projection_system_on("torus")
    verdict = equilibrium_certificate(flat)
    assert not verdict.nonzero

    doubling = fixtures.doubling_system()
    verdict = equilibrium_certificate(doubling)
    assert verdict.nonzero and verdict.value == (F(-1),)
    assert verdict.oracle == ORACLE_FOUND
    point = verdict.witness["point"]
    assert point is not None


def test_equilibrium_of_robot_arms():
    for n in (1, 2):
        sys = fixtures.robot_arm_system(n)
        verdict = equilibrium_certificate(sys)
        assert verdict.nonzero
        assert verdict.oracle == ORACLE_FOUND


# ------------------------------------------------------ sphere criteria


def test_sphere_criteria_identity_slice_fails_condition_one():
    sys = fixtures.projection_system_on("circle", input_complex=fixtures.circle3())
    report = sphere_criteria(sys)
    assert report["slice_degree"] == 1
    assert report["threshold"] == 1
    assert not report["condition1"]
    assert not report["condition2"]
    assert not report["equilibrium"]


def test_sphere_criteria_degree_two_slice():
    report = sphere_criteria(fixtures.doubling_system())
    assert report["slice_degree"] == 2
    assert report["condition1"]
    assert report["equilibrium"]


def test_sphere_criteria_trivial_top_input():
    sys = fixtures.projection_system_on("sphere", input_complex=fixtures.circle3())
    report = sphere_criteria(sys)
    assert not report["condition2"]
    assert report["condition1"]  # slice degree 1 != (-1)^3


def test_sphere_slice_degree_formula():
    # slice of degree d0 on the two-sphere gives the class (1 + d0)
    from lefcon.control import DiscreteSystem

    u = fixtures.point()
    slices = {
        "rotation": ({0: 1, 1: 2, 2: 0, 3: 3}, 1),
        "reflection": ({0: 1, 1: 0, 2: 2, 3: 3}, -1),
        "constant": ({0: 0, 1: 0, 2: 0, 3: 0}, 0),
    }
    for name, (vm_state, d0) in slices.items():
        fc = orient(fixtures.sphere2_pair(), 2)
        sys = DiscreteSystem(
            fc, u, {(x, 0): vm_state[x] for x in range(4)}, name=name
        )
        assert slice_degree(sys) == d0
        value = fixed_point_class(sys, 0, unit(sys.input_basis))
        assert value == (F(1 + d0),), name


def test_sphere_criteria_rejects_torus():
    with pytest.raises(SphereSignatureError):
        sphere_criteria(fixtures.projection_system_on("torus"))


def test_sphere_criteria_agrees_with_certificate():
    systems = [
        fixtures.projection_system_on("circle", input_complex=fixtures.circle3()),
        fixtures.projection_system_on("sphere"),
        fixtures.doubling_system(),
        fixtures.robot_arm_system(1),
    ]
    for sys in systems:
        if sys.fc.absolute_basis.betti() not in ((1, 1), (1, 0, 1)):
            continue
        report = sphere_criteria(sys)
        verdict = equilibrium_certificate(sys, run_oracle=False)
        assert report["equilibrium"] == verdict.nonzero, sys.name


# --------------------------------------------------------- surjectivity


def test_surjectivity_identity_and_constant():
    pair = fixtures.circle_pair()
    fc = orient(pair, 1)
    v = surjectivity_certificate(identity_map(pair), fc)
    assert v.nonzero and v.oracle == ORACLE_FOUND
    v = surjectivity_certificate(constant_map(pair, pair, 0), fc)
    assert not v.nonzero
    assert v.witness["onto"] is False


def test_surjectivity_double_cover():
    fc3 = orient(fixtures.circle_pair(), 1)
    v = surjectivity_certificate(helpers.double_cover(), fc3)
    assert v.nonzero and v.oracle == ORACLE_FOUND
    assert surjectivity_oracle(helpers.double_cover())


# ------------------------------------------------------ controllability


def point_complex(vertex):
    return SimplicialComplex.from_maximal([(vertex,)])


def test_arm_one_chain():
    sys = fixtures.robot_arm_system(1)
    chain = controllability_chain_search(sys, point_complex(0))
    assert chain is not None
    assert chain.steps == 1
    assert chain.start_degree == 0
    assert chain.inputs == ((1, 0),)
    assert chain.classes[-1][0] == 1
    composed = compose_system_map(sys, point_complex(0), 1)
    assert surjectivity_oracle(composed)


def test_arm_two_chain():
    sys = fixtures.robot_arm_system(2)
    chain = controllability_chain_search(sys, point_complex((0, 0)), r_max=2)
    assert chain is not None
    assert chain.steps == 2
    assert chain.start_degree == 0
    # the input classes climb by the circle generator twice
    assert chain.inputs == ((1, 0), (1, 0))
    degrees = [d for d, _ in chain.classes]
    assert degrees == [1, 2]
    composed = compose_system_map(sys, point_complex((0, 0)), 2)
    assert surjectivity_oracle(composed)


def test_two_factor_chain():
    sys = fixtures.two_factor_system()
    chain = controllability_chain_search(sys, point_complex((0, 0)))
    assert chain is not None
    assert chain.steps == 2
    composed = compose_system_map(sys, point_complex((0, 0)), chain.steps)
    assert surjectivity_oracle(composed)


def test_projection_not_controllable_from_point():
    sys = fixtures.projection_system_on("circle", input_complex=fixtures.circle3())
    assert controllability_chain_search(sys, point_complex(0), r_max=4) is None


def test_projection_trivially_controllable_from_everything():
    # from the whole state space the top class itself closes the chain in
    # one step
    sys = fixtures.projection_system_on("circle", input_complex=fixtures.circle3())
    chain = controllability_chain_search(sys, sys.state.total)
    assert chain is not None
    assert chain.steps == 1
    assert chain.start_degree == 1


def test_chain_degree_bookkeeping():
    sys = fixtures.robot_arm_system(2)
    chain = controllability_chain_search(sys, point_complex((0, 0)))
    assert chain is not None
    degree = chain.start_degree
    for (s, _), (d, coords) in zip(chain.inputs, chain.classes):
        degree += s
        assert d == degree
        assert any(c != 0 for c in coords)
    assert degree == sys.dimension


def test_pipeline_matches_tensor_endomorphism():
    # the coincidence endomorphism of (projection, system map) evaluated at
    # the class of (fundamental cycle x input class) is exactly the
    # tensor endomorphism x -> g_*(x ox v), block by block, and the
    # resulting Lefschetz classes agree
    from lefcon.lefschetz import (
        GradedEndomorphism,
        coincidence_endomorphism,
        lefschetz_class,
    )
    from lefcon.maps import SimplicialMapSpec, push_chain

    for build in (
        lambda: fixtures.projection_system_on("circle", input_complex=fixtures.circle3()),
        lambda: fixtures.projection_system_on("sphere", input_complex=fixtures.circle3()),
        lambda: fixtures.robot_arm_system(1),
        lambda: fixtures.robot_arm_system(2),
        fixtures.two_factor_system,
    ):
        sys = build()
        n = sys.dimension
        fc = sys.fc
        basis_m = fc.absolute_basis
        basis_u = sys.input_basis
        prod = sys.product
        basis_src_pair = HomologyBasis(prod.pair)
        g = SimplicialMapSpec(
            prod.pair, sys.state, dict(sys.map_spec.vertex_map), check_pair=False
        )
        top = fc.top_class()
        for s in range(basis_u.chain.dimension + 1):
            for j in range(basis_u.dim(s)):
                v = tuple(
                    F(1) if t == j else F(0) for t in range(basis_u.dim(s))
                )
                z = cross(prod, n, top, s, v)
                h = coincidence_endomorphism(
                    sys.projection, g, n + s, z, fc, basis_src=basis_src_pair
                )
                v_chain = basis_u.chain_of(s, v)
                blocks = {}
                for k in range(basis_m.chain.dimension + 1):
                    cols = []
                    for i in range(basis_m.dim(k)):
                        e = tuple(
                            F(1) if t == i else F(0)
                            for t in range(basis_m.dim(k))
                        )
                        crossed = prod.shuffle_chain(
                            k, basis_m.chain_of(k, e), s, v_chain, relative=False
                        )
                        pushed = push_chain(
                            g,
                            prod.absolute.basis.chain,
                            basis_m.chain,
                            k + s,
                            crossed,
                        )
                        cols.append(basis_m.express_cycle(k + s, pushed))
                    blocks[k] = RationalMatrix.from_columns(
                        cols, basis_m.dim(k + s)
                    )
                tensor = GradedEndomorphism(s, blocks)
                for k in range(basis_m.chain.dimension + 1):
                    assert h.block(k, basis_m) == tensor.block(k, basis_m), (
                        sys.name,
                        s,
                        k,
                    )
                assert lefschetz_class(h, basis_m) == lefschetz_class(
                    tensor, basis_m
                )


def test_kuenneth_consistency_two_routes():
    # cross-then-induce at chain level equals expression through the
    # product homology basis
    sys = fixtures.robot_arm_system(1)
    state = sys.state
    input_pair = fixtures.circle_pair()
    prod = product_pair(state, input_pair)
    f = SimplicialMapSpec(
        prod.pair, state, dict(sys.map_spec.vertex_map), name="f"
    )
    basis_m = HomologyBasis(state)
    basis_u = HomologyBasis(input_pair)
    crossed = cross(prod, 0, unit(basis_m), 1, unit(basis_u, 1))
    through_basis = induced_homology_map(f, prod.basis, basis_m, 1).mul_vector(crossed)
    from lefcon.maps import push_chain

    direct = push_chain(
        f,
        prod.basis.chain,
        basis_m.chain,
        1,
        prod.shuffle_chain(
            0, basis_m.chain_of(0, unit(basis_m)), 1, basis_u.chain_of(1, unit(basis_u, 1))
        ),
    )
    assert basis_m.express_cycle(1, direct) == tuple(through_basis)


def test_boundary_condition_violation_detected():
    from lefcon.control import DiscreteSystem
    from lefcon.errors import BoundaryConditionError

    fc = orient(fixtures.cylinder_pair(), 2)
    u = fixtures.point()
    # the identity dynamics keeps the boundary invariant
    ok = DiscreteSystem(
        fc, u, {((v, t), 0): (v, t) for (v, t) in fc.pair.total.vertices}, name="hold"
    )
    check_boundary_condition(ok)
    # collapsing everything onto one vertical edge tips a bottom boundary
    # edge onto that interior edge
    squash = {(0, 0): (0, 0), (1, 0): (0, 1), (2, 0): (0, 0),
              (0, 1): (0, 1), (1, 1): (0, 1), (2, 1): (0, 1)}
    bad = DiscreteSystem(
        fc, u, {((v, t), 0): squash[(v, t)] for (v, t) in fc.pair.total.vertices},
        name="squash",
    )
    with pytest.raises(BoundaryConditionError):
        check_boundary_condition(bad)


def test_controllability_rejects_refined_systems():
    with pytest.raises(InputError):
        controllability_chain_search(
            fixtures.doubling_system(), point_complex(0)
        )


# -------------------------------------------------------- removability


def test_removability_surface_clause():
    report = removability_precondition([1, 2], 2, 0)
    assert report.star_clause == "a1"
    assert report.star_ok
    assert report.fstar_zero is None
    assert not report.conclusion


def test_removability_acyclic_clause():
    report = removability_precondition([1, 0, 0, 0], 5, 0)
    assert report.star_clause == "a2"


def test_removability_sphere_clause_table():
    # homology 4-sphere needs ambient dimension at least six
    sphere4 = [1, 0, 0, 0, 1]
    assert removability_precondition(sphere4, 5, 4).star_clause is None
    assert removability_precondition(sphere4, 6, 4).star_clause == "a3"


def test_removability_with_local_map():
    # collapse of the relative disk: induced top map is zero
    disk = fixtures.disk_pair()
    collapse = constant_map(disk, disk, 0)
    report = removability_precondition([1], 2, 0, local_map=collapse)
    assert report.star_clause == "a1"
    assert report.fstar_zero is True
    assert report.conclusion

    ident = identity_map(disk)
    report = removability_precondition([1], 2, 0, local_map=ident)
    assert report.fstar_zero is False
    assert not report.conclusion


def test_removability_rejects_bad_homology():
    with pytest.raises(InputError):
        removability_precondition([1, -1], 3, 1)


# -------------------------------------------------------- reachability


def test_reachability_projection_is_identity():
    sys = fixtures.projection_system_on("circle")
    rel = reachability_oracle(sys, 3)
    verts = sys.state.total.vertices
    for x in verts:
        for y in verts:
            assert rel[(x, y)] == (x == y)


def test_reachability_arm_covers_everything():
    sys = fixtures.robot_arm_system(2)
    rel = reachability_oracle(sys, 2)
    verts = sys.state.total.vertices
    assert all(rel[(x, y)] for x in verts for y in verts)


def test_reachability_two_cycle_orbit():
    sys = fixtures.swap_dynamics_system()
    rel = reachability_oracle(sys, 4)
    assert rel[(0, 1)] and rel[(1, 0)]
    assert rel[(0, 0)] and rel[(1, 1)]
    assert rel[(2, 2)]
    assert not rel[(0, 2)] and not rel[(2, 0)]
    # direct iteration: one step only swaps
    one = reachability_oracle(sys, 1)
    assert one[(0, 1)] and not one[(0, 0)]
