"""Desk-scale triangulations and systems used throughout the test suite.

All vertex labels are small ints, or tuples of ints for product models, so
lexicographic vertex order is unambiguous.
"""

from .complexes import SimplicialComplex, SimplicialPair
from .control import DiscreteSystem, projection_system
from .duality import orient
from .maps import SimplicialMapSpec
from .products import product_pair


def circle3():
    """Hollow triangle model of the circle."""
    return SimplicialComplex.from_maximal([(0, 1), (1, 2), (0, 2)])


def circle6():
    """Hexagon model of the circle."""
    return SimplicialComplex.from_maximal(
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]
    )


def circle_pair(model=None):
    return SimplicialPair(model if model is not None else circle3())


def interval():
    """A single edge [0,1]."""
    return SimplicialComplex.from_maximal([(0, 1)])


def interval_pair():
    """The edge relative to its endpoints."""
    return SimplicialPair(
        interval(), SimplicialComplex.from_maximal([(0,), (1,)])
    )


def point():
    return SimplicialComplex.from_maximal([(0,)])


def point_pair():
    return SimplicialPair(point())


def two_points():
    return SimplicialComplex.from_maximal([(0,), (1,)])


def sphere2():
    """Boundary of the tetrahedron."""
    return SimplicialComplex.from_maximal(
        [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    )


def sphere2_pair():
    return SimplicialPair(sphere2())


def solid_triangle():
    return SimplicialComplex.from_maximal([(0, 1, 2)])


def disk_pair():
    """Solid triangle relative to its boundary circle."""
    return SimplicialPair(solid_triangle(), circle3())


def torus7():
    """Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    tris = []
    for i in range(7):
        tris.append(tuple(sorted({i, (i + 1) % 7, (i + 3) % 7})))
        tris.append(tuple(sorted({i, (i + 2) % 7, (i + 3) % 7})))
    return SimplicialComplex.from_maximal(tris)


def torus7_pair():
    return SimplicialPair(torus7())


def mobius():
    """Five-vertex Moebius band: triangles {i, i+1, i+2} mod 5."""
    tris = [tuple(sorted({i, (i + 1) % 5, (i + 2) % 5})) for i in range(5)]
    return SimplicialComplex.from_maximal(tris)


def mobius_pair():
    """Moebius band relative to its boundary pentagon."""
    total = mobius()
    boundary = [
        e for e in total.simplices_of_dim(1)
        if sum(1 for t in total.simplices_of_dim(2) if set(e) <= set(t)) == 1
    ]
    return SimplicialPair(total, SimplicialComplex.from_maximal(boundary))


def torus_product():
    """Staircase product of two hollow triangles: the 9-vertex torus model."""
    return product_pair(circle_pair(), circle_pair())


def torus_product_pair():
    return torus_product().pair


def cylinder_product():
    """Staircase prism: circle times interval, relative to the two boundary
    circles."""
    return product_pair(circle_pair(), interval_pair())


def cylinder_pair():
    return cylinder_product().pair


def robot_arm_system(n):
    """Revolving-joint arm: only the first joint takes the input, every
    other joint reads the previous one.  States are n-fold circle products;
    the next state of ((x_1, ..., x_n), u) is (u, x_1, ..., x_{n-1})."""
    u = circle3()
    if n == 1:
        fc = orient(circle_pair(), 1)
        vm = {(x, uu): uu for x in fc.pair.total.vertices for uu in u.vertices}
        return DiscreteSystem(fc, u, vm, name="arm1")
    if n == 2:
        fc = orient(torus_product_pair(), 2)
        vm = {
            ((a, b), uu): (uu, a)
            for (a, b) in fc.pair.total.vertices
            for uu in u.vertices
        }
        return DiscreteSystem(fc, u, vm, name="arm2")
    raise ValueError("only one- and two-joint arms ship as fixtures")


def two_factor_system():
    """Product-state system with both slice maps onto: the next state of
    ((x1, x2), u) is (x2, u)."""
    u = circle3()
    fc = orient(torus_product_pair(), 2)
    vm = {
        ((a, b), uu): (b, uu)
        for (a, b) in fc.pair.total.vertices
        for uu in u.vertices
    }
    return DiscreteSystem(fc, u, vm, name="two-factor")


def doubling_system():
    """Angle-doubling dynamics on the circle, modeled on a refined hexagon
    source with a degree-one collapse back to the hollow triangle.  The
    basepoint-input slice has degree two."""
    fc = orient(circle_pair(), 1)
    fc_src = orient(circle_pair(circle6()), 1)
    ident = SimplicialMapSpec(
        fc_src.pair,
        fc.pair,
        {0: 0, 1: 1, 2: 2, 3: 0, 4: 0, 5: 0},
        name="collapse1",
    )
    u = point()
    vm = {(x, 0): x % 3 for x in range(6)}
    return DiscreteSystem(fc, u, vm, source_fc=fc_src, ident=ident, name="doubling")


def boundary_probe_system():
    """Cylinder-state system with one input vertex pushing every state to
    the bottom boundary circle and the other holding still."""
    fc = orient(cylinder_pair(), 2)
    u = two_points()
    vm = {}
    for (v, t) in fc.pair.total.vertices:
        vm[((v, t), 0)] = (v, 0)
        vm[((v, t), 1)] = (v, t)
    return DiscreteSystem(fc, u, vm, name="boundary-probe")


def swap_dynamics_system():
    """Input-independent two-cycle on the circle: 0 and 1 trade places."""
    fc = orient(circle_pair(), 1)
    u = point()
    swap = {0: 1, 1: 0, 2: 2}
    vm = {(x, 0): swap[x] for x in range(3)}
    return DiscreteSystem(fc, u, vm, name="swap-dynamics")


def projection_system_on(pair_or_name="circle", n=None, input_complex=None):
    """Projection (constant) system on a named fixture state space."""
    table = {
        "circle": (circle_pair(), 1),
        "sphere": (sphere2_pair(), 2),
        "torus": (torus_product_pair(), 2),
        "torus7": (torus7_pair(), 2),
        "cylinder": (cylinder_pair(), 2),
    }
    pair, dim = table[pair_or_name]
    fc = orient(pair, n if n is not None else dim)
    return projection_system(fc, input_complex if input_complex is not None else point())


def _label(v):
    return ".".join(str(c) for c in v) if isinstance(v, tuple) else str(v)


def _complex_lines(name, complex_):
    lines = ["complex %s" % name]
    maximal = sorted(
        (tuple(_label(v) for v in s) for s in complex_.maximal_simplices()),
        key=lambda s: (len(s), s),
    )
    for s in maximal:
        lines.append("  simplex %s" % " ".join(s))
    lines.append("")
    return lines


def workspace_text():
    """Canonical `.lef` text of the shipped fixture library."""
    torus9 = torus_product_pair().total
    cyl = cylinder_pair()
    mob = mobius_pair()
    lines = []
    lines += _complex_lines("circle3", circle3())
    lines += _complex_lines("circle6", circle6())
    lines += _complex_lines("cyl_boundary", cyl.sub)
    lines += _complex_lines("cylinder6", cyl.total)
    lines += _complex_lines("disk_boundary", circle3())
    lines += _complex_lines("interval", interval())
    lines += _complex_lines("mobius5", mob.total)
    lines += _complex_lines("mobius_boundary", mob.sub)
    lines += _complex_lines("pt", point())
    lines += _complex_lines("solid_triangle", solid_triangle())
    lines += _complex_lines("start_pt", point())
    lines += _complex_lines("start_pt9", SimplicialComplex.from_maximal([((0, 0),)]))
    lines += _complex_lines("tetra", sphere2())
    lines += _complex_lines("torus7", torus7())
    lines += _complex_lines("torus9", torus9)
    lines += _complex_lines("two_pts", two_points())

    pair_rows = [
        ("circle3p", "circle3", "-"),
        ("circle6p", "circle6", "-"),
        ("cylinderp", "cylinder6", "cyl_boundary"),
        ("diskp", "solid_triangle", "disk_boundary"),
        ("mobiusp", "mobius5", "mobius_boundary"),
        ("tetrap", "tetra", "-"),
        ("torus7p", "torus7", "-"),
        ("torus9p", "torus9", "-"),
    ]
    for row in pair_rows:
        lines.append("pair %s %s %s" % row)
    lines.append("")

    def map_lines(name, src, tgt, vm):
        out = ["map %s %s %s" % (name, src, tgt)]
        for v in sorted(vm):
            out.append("  send %s -> %s" % (v, vm[v]))
        out.append("")
        return out

    c3 = [str(v) for v in range(3)]
    c6 = [str(v) for v in range(6)]
    tv = [str(v) for v in range(4)]
    t9 = sorted(_label(v) for v in torus9.vertices)
    lines += map_lines("collapse", "circle6p", "circle3p",
                       {v: str(min(int(v), 2) if int(v) < 3 else 0) for v in c6})
    lines += map_lines("const3", "circle3p", "circle3p", {v: "0" for v in c3})
    lines += map_lines("dbl", "circle6p", "circle3p",
                       {v: str(int(v) % 3) for v in c6})
    lines += map_lines("disk_collapse", "diskp", "diskp", {v: "0" for v in c3})
    lines += map_lines("disk_id", "diskp", "diskp", {v: v for v in c3})
    lines += map_lines("id3", "circle3p", "circle3p", {v: v for v in c3})
    lines += map_lines("id6", "circle6p", "circle6p", {v: v for v in c6})
    lines += map_lines("proj1", "torus9p", "circle3p",
                       {v: v.split(".")[0] for v in t9})
    lines += map_lines("proj2", "torus9p", "circle3p",
                       {v: v.split(".")[1] for v in t9})
    lines += map_lines("refl3", "circle3p", "circle3p", {"0": "1", "1": "0", "2": "2"})
    lines += map_lines("refl6", "circle6p", "circle6p",
                       {v: str((1 - int(v)) % 6) for v in c6})
    lines += map_lines("rot3", "circle3p", "circle3p",
                       {v: str((int(v) + 1) % 3) for v in c3})
    lines += map_lines("rot6", "circle6p", "circle6p",
                       {v: str((int(v) + 3) % 6) for v in c6})
    lines += map_lines("sph_const", "tetrap", "tetrap", {v: "0" for v in tv})
    lines += map_lines("tc_const", "torus9p", "circle3p", {v: "0" for v in t9})
    lines += map_lines("sph_id", "tetrap", "tetrap", {v: v for v in tv})
    lines += map_lines("sph_refl", "tetrap", "tetrap",
                       {"0": "1", "1": "0", "2": "2", "3": "3"})
    lines += map_lines("sph_rot", "tetrap", "tetrap",
                       {"0": "1", "1": "2", "2": "0", "3": "3"})
    lines += map_lines("torus_const", "torus9p", "torus9p", {v: "0.0" for v in t9})
    lines += map_lines("torus_id", "torus9p", "torus9p", {v: v for v in t9})
    lines += map_lines("torus_swap", "torus9p", "torus9p",
                       {v: "%s.%s" % (v.split(".")[1], v.split(".")[0]) for v in t9})

    def system_lines(name, state, input_name, sends, extra=""):
        head = "system %s %s %s" % (name, state, input_name)
        if extra:
            head += " " + extra
        out = [head]
        for x, u, y in sorted(sends):
            out.append("  send %s %s -> %s" % (x, u, y))
        out.append("")
        return out

    lines += system_lines(
        "arm1", "circle3p", "circle3",
        [(x, u, u) for x in c3 for u in c3],
    )
    lines += system_lines(
        "arm2", "torus9p", "circle3",
        [(v, u, "%s.%s" % (u, v.split(".")[0])) for v in t9 for u in c3],
    )
    lines += system_lines(
        "doubling", "circle3p", "pt",
        [(v, "0", str(int(v) % 3)) for v in c6],
        extra="circle6p collapse",
    )
    cyl_verts = sorted(_label(v) for v in cyl.total.vertices)
    lines += system_lines(
        "probe", "cylinderp", "two_pts",
        [(v, "0", v.split(".")[0] + ".0") for v in cyl_verts]
        + [(v, "1", v) for v in cyl_verts],
    )
    lines += system_lines(
        "projsys_c3", "circle3p", "circle3",
        [(x, u, x) for x in c3 for u in c3],
    )
    lines += system_lines(
        "projsys_cyl", "cylinderp", "pt",
        [(v, "0", v) for v in cyl_verts],
    )
    lines += system_lines(
        "projsys_s2", "tetrap", "pt",
        [(x, "0", x) for x in tv],
    )
    lines += system_lines(
        "projsys_t9", "torus9p", "pt",
        [(v, "0", v) for v in t9],
    )
    lines += system_lines(
        "swapdyn", "circle3p", "pt",
        [("0", "0", "1"), ("1", "0", "0"), ("2", "0", "2")],
    )
    lines += system_lines(
        "twofactor", "torus9p", "circle3",
        [(v, u, "%s.%s" % (v.split(".")[1], u)) for v in t9 for u in c3],
    )

    lines.append("orientation mob_orient mobiusp 2")
    lines.append("orientation torus_orient torus9p 2")
    text = "\n".join(lines).rstrip("\n") + "\n"
    # canonicalize through a parse/serialize round trip
    from .workspace import parse_workspace, serialize_workspace

    return serialize_workspace(parse_workspace(text))


def write_workspace(path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(workspace_text())


if __name__ == "__main__":  # pragma: no cover
    import sys

    write_workspace(sys.argv[1])
