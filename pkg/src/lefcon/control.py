"""Discrete-time control systems on triangulated manifolds and their
homological certificates: equilibrium existence, robust controllability,
surjectivity, and removability preconditions.

A system is a simplicial map g from the staircase product of the state
pair and the input complex back to the state space.  Systems may carry a
refined source model of the state space together with a degree-one
identification map back to the analysis model; slices of the system map
are then free to wind more than once around the coarse model, which a
fixed triangulation cannot do.  Certificates for refined systems are
computed for the pair (identification after projection, system map), whose
coincidences are exact equilibria read in coarse coordinates.
"""

from fractions import Fraction

from .complexes import SimplicialComplex, SimplicialPair
from .errors import (
    BoundaryConditionError,
    DimensionError,
    InputError,
    SphereSignatureError,
)
from .homology import HomologyBasis
from .lefschetz import (
    ORACLE_FOUND,
    ORACLE_NOT_FOUND,
    ORACLE_SKIPPED,
    CoincidenceVerdict,
    coincidence_oracle,
)
from .maps import SimplicialMapSpec, identity_map, induced_homology_map, push_chain
from .matrix import RationalMatrix, ZERO, rank, solve
from .products import product_pair

ONE = Fraction(1)


class DiscreteSystem:
    """Next-state map over a state manifold pair and an input complex."""

    __slots__ = (
        "name",
        "state",
        "fc",
        "input_complex",
        "source_state",
        "ident",
        "product",
        "map_spec",
        "projection",
        "_input_basis",
        "_ident_inverse",
    )

    def __init__(self, fc, input_complex, vertex_map, source_fc=None,
                 ident=None, name="system"):
        state = fc.pair
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "state", state)
        object.__setattr__(self, "fc", fc)
        object.__setattr__(self, "input_complex", input_complex)
        if source_fc is None:
            source_state = state
            ident = identity_map(state)
        else:
            source_state = source_fc.pair
            if ident is None:
                raise InputError(
                    "a refined source model needs an identification map"
                )
            if ident.source != source_state or ident.target != state:
                raise InputError("identification map endpoints mismatch")
        object.__setattr__(self, "source_state", source_state)
        object.__setattr__(self, "ident", ident)

        prod = product_pair(source_state, SimplicialPair(input_complex))
        object.__setattr__(self, "product", prod)
        g = SimplicialMapSpec(
            prod.pair, state, dict(vertex_map), name=name, check_pair=False
        )
        object.__setattr__(self, "map_spec", g)
        proj_vm = {v: ident.vertex_map[v[0]] for v in prod.pair.total.vertices}
        projection = SimplicialMapSpec(
            prod.pair, state, proj_vm, name="state-projection"
        )
        object.__setattr__(self, "projection", projection)
        object.__setattr__(self, "_input_basis", None)
        object.__setattr__(self, "_ident_inverse", None)

    def __setattr__(self, name, value):
        raise AttributeError("DiscreteSystem is immutable")

    @property
    def dimension(self):
        return self.fc.dimension

    @property
    def refined(self):
        return self.source_state != self.state

    @property
    def input_basis(self):
        if self._input_basis is None:
            object.__setattr__(
                self, "_input_basis", HomologyBasis(SimplicialPair(self.input_complex))
            )
        return self._input_basis

    def ident_inverse(self, k):
        """Inverse of the identification isomorphism on absolute H_k."""
        if self._ident_inverse is None:
            object.__setattr__(self, "_ident_inverse", {})
        cached = self._ident_inverse.get(k)
        if cached is not None:
            return cached
        src_basis = HomologyBasis(self.source_state.absolute())
        tgt_basis = self.fc.absolute_basis
        m = induced_homology_map(self.ident, src_basis, tgt_basis, k)
        if m.rows != m.cols or rank(m) != m.rows:
            raise InputError(
                "identification map is not a homology isomorphism in degree %d" % k
            )
        cols = []
        for j in range(m.rows):
            e = [ZERO] * m.rows
            e[j] = ONE
            cols.append(solve(m, e))
        inv = RationalMatrix.from_columns(cols, m.rows)
        self._ident_inverse[k] = inv
        return inv

    def require_unrefined(self, operation):
        if self.refined:
            raise InputError(
                "%s is not defined for systems with a refined source model"
                % operation
            )


def discrete_system(fc, input_complex, vertex_map, **kw):
    return DiscreteSystem(fc, input_complex, vertex_map, **kw)


def projection_system(fc, input_complex, name="projection-system"):
    """The system whose next state is the current state, every input."""
    vm = {}
    for x in fc.pair.total.vertices:
        for u in input_complex.vertices:
            vm[(x, u)] = x
    return DiscreteSystem(fc, input_complex, vm, name=name)


def boundary_input_subcomplex(sys):
    """The maximal subcomplex U' of the inputs sending every state to the
    state boundary.

    Empty boundary means empty U' (no input can reach an empty boundary).
    """
    sub = sys.state.sub
    g = sys.map_spec
    if sub.dimension == -1:
        return SimplicialComplex.empty()
    bad = set()
    for p in sys.product.pair.total.all_simplices():
        if g.image_simplex(p) not in sub:
            tau = tuple(sorted(set(v for _, v in p)))
            bad.add(tau)
    keep = [t for t in sys.input_complex.all_simplices() if t not in bad]
    return SimplicialComplex(keep, check=False)


def fixed_point_class(sys, s, v_coords):
    """The equilibrium class L(g_v) in H_s of the state space:

        (-1)^{ns} sum_k (-1)^k sum_j  x_j^k cap g_*(a_j^k ox v)

    with the tensor realized by the shuffle chain map on the state-input
    product and g_* the induced map of the system."""
    n = sys.dimension
    basis_m = sys.fc.absolute_basis
    basis_u = sys.input_basis
    if len(v_coords) != basis_u.dim(s):
        raise DimensionError("input class has wrong length for degree %d" % s)
    prod_abs = sys.product.absolute
    src_abs_basis = HomologyBasis(sys.source_state.absolute())
    v_chain = basis_u.chain_of(s, v_coords)
    from .duality import cap_chain

    chain_m = basis_m.chain
    acc = [ZERO] * chain_m.rank(s)
    for k in range(basis_m.chain.dimension + 1):
        if basis_m.dim(k) == 0 or k + s > basis_m.chain.dimension:
            continue
        inv = sys.ident_inverse(k)
        for j in range(basis_m.dim(k)):
            e = [ZERO] * basis_m.dim(k)
            e[j] = ONE
            a_src = inv.mul_vector(e)
            a_chain = src_abs_basis.chain_of(k, a_src)
            crossed = sys.product.shuffle_chain(k, a_chain, s, v_chain, relative=False)
            pushed = push_chain(
                sys.map_spec, prod_abs.basis.chain, chain_m, k + s, crossed
            )
            img = basis_m.express_cycle(k + s, pushed)
            if all(c == 0 for c in img):
                continue
            img_chain = basis_m.chain_of(k + s, img)
            capped = cap_chain(
                chain_m, chain_m, k, basis_m.cocycles[k][j], k + s, img_chain
            )
            sign = -1 if k % 2 else 1
            for t in range(len(acc)):
                if capped[t]:
                    acc[t] = acc[t] + sign * capped[t]
    prefactor = -1 if (n * s) % 2 else 1
    if prefactor == -1:
        acc = [-c for c in acc]
    return basis_m.express_cycle(s, tuple(acc))


def equilibrium_certificate(sys, run_oracle=True):
    """Sweep the input homology basis; a nonzero L(g_v) certifies an
    equilibrium of every perturbation of the system.  The oracle searches
    for an exact coincidence of the system map with the state projection."""
    basis_u = sys.input_basis
    entries = []
    first = None
    for s in range(basis_u.chain.dimension + 1):
        for j in range(basis_u.dim(s)):
            coords = tuple(
                ONE if t == j else ZERO for t in range(basis_u.dim(s))
            )
            value = fixed_point_class(sys, s, coords)
            nz = any(c != 0 for c in value)
            entries.append(
                {"degree": s, "input_class": j, "value": value, "nonzero": nz}
            )
            if nz and first is None:
                first = entries[-1]
    witness_point = None
    oracle = ORACLE_SKIPPED
    if run_oracle:
        witness_point = coincidence_oracle(sys.map_spec, sys.projection)
        oracle = ORACLE_FOUND if witness_point is not None else ORACLE_NOT_FOUND
    return CoincidenceVerdict(
        criterion="equilibrium",
        value=first["value"] if first else None,
        nonzero=first is not None,
        oracle=oracle,
        witness={"entries": entries, "nonzero_class": first, "point": witness_point},
    )


def slice_degree(sys):
    """The scalar by which the system, restricted to a basepoint input,
    multiplies the top state class."""
    n = sys.dimension
    basis_m = sys.fc.absolute_basis
    basis_u = sys.input_basis
    if basis_m.dim(n) != 1:
        raise SphereSignatureError("state space has no one-dimensional top homology")
    src_abs_basis = HomologyBasis(sys.source_state.absolute())
    inv = sys.ident_inverse(n)
    d_src = inv.mul_vector((ONE,))
    unit = tuple(ONE if t == 0 else ZERO for t in range(basis_u.dim(0)))
    crossed = sys.product.shuffle_chain(
        n,
        src_abs_basis.chain_of(n, d_src),
        0,
        basis_u.chain_of(0, unit),
        relative=False,
    )
    pushed = push_chain(
        sys.map_spec, sys.product.absolute.basis.chain, basis_m.chain, n, crossed
    )
    return basis_m.express_cycle(n, pushed)[0]


def sphere_criteria(sys):
    """The two sphere-state equilibrium conditions.

    (1) the slice degree differs from (-1)^{n+1}; (2) some top input class
    has nonzero image under g_*(1 ox -).  Either one makes every
    perturbation of the system keep an equilibrium."""
    n = sys.dimension
    basis_m = sys.fc.absolute_basis
    signature = tuple(
        1 if k in (0, n) else 0 for k in range(n + 1)
    )
    if basis_m.betti() != signature:
        raise SphereSignatureError(
            "state homology %r is not a %d-sphere signature"
            % (basis_m.betti(), n)
        )
    d0 = slice_degree(sys)
    threshold = Fraction(-1 if n % 2 == 0 else 1)
    condition1 = d0 != threshold

    basis_u = sys.input_basis
    src_abs_basis = HomologyBasis(sys.source_state.absolute())
    unit_m = src_abs_basis.chain_of(
        0, sys.ident_inverse(0).mul_vector((ONE,))
    )
    condition2 = False
    witness = None
    for j in range(basis_u.dim(n)):
        coords = tuple(ONE if t == j else ZERO for t in range(basis_u.dim(n)))
        crossed = sys.product.shuffle_chain(
            0, unit_m, n, basis_u.chain_of(n, coords), relative=False
        )
        pushed = push_chain(
            sys.map_spec, sys.product.absolute.basis.chain, basis_m.chain, n, crossed
        )
        if any(c != 0 for c in basis_m.express_cycle(n, pushed)):
            condition2 = True
            witness = j
            break
    return {
        "condition1": condition1,
        "slice_degree": d0,
        "threshold": threshold,
        "condition2": condition2,
        "condition2_witness": witness,
        "equilibrium": condition1 or condition2,
    }


def surjectivity_oracle(f):
    """True iff every top simplex of the target is the image of a source
    simplex; exact surjectivity test for simplicial maps onto a pure
    complex."""
    target = f.target.total
    top = target.dimension
    images = set()
    for s in f.source.total.all_simplices():
        images.add(f.image_simplex(s))
    return all(t in images for t in target.simplices_of_dim(top))


def surjectivity_certificate(f, fc_target, run_oracle=True):
    """Nonzero induced map on top relative homology certifies that every
    map homotopic to f is onto."""
    n = fc_target.dimension
    basis_src = HomologyBasis(f.source)
    m = induced_homology_map(f, basis_src, fc_target.basis, n)
    nonzero = not m.is_zero()
    oracle = ORACLE_SKIPPED
    onto = None
    if run_oracle:
        onto = surjectivity_oracle(f)
        oracle = ORACLE_FOUND if onto else ORACLE_NOT_FOUND
    return CoincidenceVerdict(
        criterion="surjectivity",
        value=m,
        nonzero=nonzero,
        oracle=oracle,
        witness={"matrix": m, "onto": onto},
    )


class ControllabilityChain:
    """Witness chain of homology classes climbing to the top degree."""

    __slots__ = ("start_degree", "start_index", "inputs", "classes", "steps")

    def __init__(self, start_degree, start_index, inputs, classes):
        object.__setattr__(self, "start_degree", start_degree)
        object.__setattr__(self, "start_index", start_index)
        object.__setattr__(self, "inputs", tuple(inputs))
        object.__setattr__(self, "classes", tuple(classes))
        object.__setattr__(self, "steps", len(inputs))
        degree = start_degree
        for (s, _j), (d, _c) in zip(self.inputs, self.classes):
            degree += s
            assert d == degree, "chain degree bookkeeping is broken"

    def __setattr__(self, name, value):
        raise AttributeError("ControllabilityChain is immutable")

    def __repr__(self):
        return "ControllabilityChain(p=%d, steps=%d)" % (
            self.start_degree,
            self.steps,
        )


def check_boundary_condition(sys):
    """g(boundary x inputs) inside the boundary, vacuous when closed."""
    sub = sys.state.sub
    if sub.dimension == -1:
        return
    g = sys.map_spec
    for p in sys.product.pair.total.all_simplices():
        m_part = tuple(sorted(set(v for v, _ in p)))
        if m_part in sub and g.image_simplex(p) not in sub:
            raise BoundaryConditionError(
                "system maps boundary simplex %r outside the boundary" % (p,)
            )


def _normalize(coords):
    for c in coords:
        if c != 0:
            inv = ONE / c
            return tuple(x * inv for x in coords)
    return tuple(coords)


def controllability_chain_search(sys, start_complex, r_max=None):
    """Breadth-first search for a chain a_{i+1} = f_*(a_i ox v_i) reaching
    a nonzero class in top relative homology of the state pair.

    Starts from all basis classes of (start, start intersect boundary)
    against all basis classes of (inputs, boundary inputs); succeeds at the
    smallest step count, sweeping start and input classes in deterministic
    order.  Returns None if no chain exists within `r_max` steps."""
    sys.require_unrefined("controllability")
    check_boundary_condition(sys)
    n = sys.dimension
    if r_max is None:
        r_max = n
    state = sys.state
    if not start_complex.is_subcomplex_of(state.total):
        raise InputError("start region is not a subcomplex of the state space")
    u_prime = boundary_input_subcomplex(sys)
    input_pair = SimplicialPair(sys.input_complex, u_prime)
    l_prime = SimplicialComplex(
        [s for s in start_complex.all_simplices() if s in state.sub], check=False
    )
    start_pair = SimplicialPair(start_complex, l_prime)

    basis_m = sys.fc.basis
    basis_l = HomologyBasis(start_pair)
    basis_u = HomologyBasis(input_pair)

    prod_start = product_pair(start_pair, input_pair)
    f_start = SimplicialMapSpec(
        prod_start.pair, state, dict(sys.map_spec.vertex_map), name="f-restricted"
    )
    prod_full = product_pair(state, input_pair)
    f_full = SimplicialMapSpec(
        prod_full.pair, state, dict(sys.map_spec.vertex_map), name="f-pairs"
    )

    input_classes = []
    for s in range(basis_u.chain.dimension + 1):
        for j in range(basis_u.dim(s)):
            input_classes.append((s, j))

    def step(prod, fmap, src_basis, deg, chain_vec, s, j):
        v_chain = basis_u.chain_of(
            s, tuple(ONE if t == j else ZERO for t in range(basis_u.dim(s)))
        )
        crossed = prod.shuffle_chain(deg, chain_vec, s, v_chain)
        pushed = push_chain(fmap, prod.basis.chain, basis_m.chain, deg + s, crossed)
        return basis_m.express_cycle(deg + s, pushed)

    frontier = []
    seen = set()
    start_nodes = []
    for p in range(basis_l.chain.dimension + 1):
        for j0 in range(basis_l.dim(p)):
            start_nodes.append((p, j0))

    for p, j0 in start_nodes:
        a0_chain = basis_l.chain_of(
            p, tuple(ONE if t == j0 else ZERO for t in range(basis_l.dim(p)))
        )
        for s, j in input_classes:
            if p + s > n:
                continue
            coords = step(prod_start, f_start, basis_l, p, a0_chain, s, j)
            if all(c == 0 for c in coords):
                continue
            record = ((p, j0), [(s, j)], [(p + s, coords)])
            if p + s == n:
                return ControllabilityChain(p, j0, record[1], record[2])
            key = (p + s, _normalize(coords))
            if key in seen:
                continue
            seen.add(key)
            frontier.append(record)

    steps = 1
    while frontier and steps < r_max:
        steps += 1
        new_frontier = []
        for a0, inputs, classes in frontier:
            deg, coords = classes[-1]
            chain_vec = basis_m.chain_of(deg, coords)
            for s, j in input_classes:
                if deg + s > n:
                    continue
                out = step(prod_full, f_full, basis_m, deg, chain_vec, s, j)
                if all(c == 0 for c in out):
                    continue
                record = (a0, inputs + [(s, j)], classes + [(deg + s, out)])
                if deg + s == n:
                    return ControllabilityChain(a0[0], a0[1], record[1], record[2])
                key = (deg + s, _normalize(out))
                if key in seen:
                    continue
                seen.add(key)
                new_frontier.append(record)
        frontier = new_frontier
    return None


def compose_system_map(sys, start_complex, steps):
    """The composed map of `steps` applications of the system, as one
    simplicial map from (start x inputs^steps) to the state pair.

    Vertex-level composition; raises if the result is not simplicial (the
    wiring-style fixtures always are)."""
    sys.require_unrefined("composition")
    state = sys.state
    u_prime = boundary_input_subcomplex(sys)
    input_pair = SimplicialPair(sys.input_complex, u_prime)
    l_prime = SimplicialComplex(
        [s for s in start_complex.all_simplices() if s in state.sub], check=False
    )
    domain = SimplicialPair(start_complex, l_prime)
    vm_state = {v: v for v in start_complex.vertices}
    for _ in range(steps):
        prod = product_pair(domain, input_pair)
        domain = prod.pair
        vm_state = {
            (w, u): sys.map_spec.vertex_map[(vm_state[w], u)]
            for (w, u) in domain.total.vertices
        }
    return SimplicialMapSpec(domain, state, vm_state, name="composed")


class RemovabilityReport:
    """Outcome of the local removability precondition check."""

    __slots__ = ("star_clause", "star_ok", "fstar_zero", "conclusion")

    def __init__(self, star_clause, star_ok, fstar_zero):
        object.__setattr__(self, "star_clause", star_clause)
        object.__setattr__(self, "star_ok", star_ok)
        object.__setattr__(self, "fstar_zero", fstar_zero)
        object.__setattr__(
            self, "conclusion", bool(star_ok and fstar_zero is True)
        )

    def __setattr__(self, name, value):
        raise AttributeError("RemovabilityReport is immutable")


def sphere_clause_admits(m, n):
    """The dimension table under which homology m-sphere coincidence sets
    admit the vanishing condition."""
    if m == 4:
        return n >= 6
    if m == 5:
        return n >= 7
    if m == 12:
        return n in (7, 8, 9) or n >= 14
    return False


def removability_precondition(f_homology, n, m, local_map=None, local_fc=None):
    """Check the vanishing condition through its three sufficient clauses
    and, when a local pair surrogate map is supplied, whether the induced
    top-degree map vanishes.

    `f_homology` lists the homology dimensions of the coincidence set,
    degree by degree."""
    dims = list(f_homology)
    if not dims or any((not isinstance(d, int)) or d < 0 for d in dims):
        raise InputError("homology dimensions must be nonnegative integers")
    if not isinstance(n, int) or n < 0 or not isinstance(m, int) or m < 0:
        raise InputError("dimensions must be nonnegative integers")
    clause = None
    if n == 2:
        clause = "a1"
    elif all(d == 0 for d in dims[1:]):
        clause = "a2"
    elif (
        all(d == 0 for k, d in enumerate(dims) if k not in (0, m))
        and sphere_clause_admits(m, n)
    ):
        clause = "a3"
    fstar_zero = None
    if local_map is not None:
        basis_w = HomologyBasis(local_map.source)
        if local_fc is not None:
            target_basis = local_fc.basis
        else:
            target_basis = HomologyBasis(local_map.target)
        matrix = induced_homology_map(local_map, basis_w, target_basis, n)
        fstar_zero = matrix.is_zero()
    return RemovabilityReport(clause, clause is not None, fstar_zero)


def reachability_oracle(sys, steps):
    """Vertex-granular reachability relation of the system dynamics.

    The relation generated by x -> g(x, u) over all input vertices,
    iterated up to the step bound.  A necessary-condition sanity check
    only; it does not decide controllability."""
    sys.require_unrefined("reachability")
    if steps < 0:
        raise InputError("step bound must be nonnegative")
    verts = list(sys.state.total.vertices)
    successors = {
        x: sorted(
            set(
                sys.map_spec.vertex_map[(x, u)]
                for u in sys.input_complex.vertices
            )
        )
        for x in verts
    }
    reach = {}
    for x in verts:
        seen = set()
        frontier = {x}
        for _ in range(steps):
            frontier = {
                y for z in frontier for y in successors[z]
            } - seen
            if not frontier:
                break
            seen |= frontier
        reach[x] = seen
    return {
        (x, y): (y in reach[x]) for x in verts for y in verts
    }
