"""Command line interface.

    lefcon <command> --workspace <file> [flags]

Exit codes: 0 certified / true, 1 not certified / false, 2 input error,
3 internal soundness violation (a nonzero certificate whose oracle found
nothing; must never occur).  The structured report goes to stdout,
diagnostics to stderr.
"""

import argparse
import sys
from fractions import Fraction

from .complexes import euler_characteristic
from .control import (
    boundary_input_subcomplex,
    compose_system_map,
    controllability_chain_search,
    equilibrium_certificate,
    reachability_oracle,
    removability_precondition,
    sphere_criteria,
    surjectivity_certificate,
)
from .duality import degree as degree_op
from .duality import orient
from .errors import (
    InputError,
    LefconError,
    NonOrientableError,
    SoundnessViolationError,
    TopologyError,
    WorkspaceError,
)
from .homology import HomologyBasis
from .lefschetz import (
    ORACLE_SKIPPED,
    coincidence_certificate,
    lefschetz_homomorphism,
    lefschetz_number_self,
)
from .reports import Tree, render_report
from .workspace import parse_workspace

EXIT_CERTIFIED = 0
EXIT_NOT_CERTIFIED = 1
EXIT_INPUT_ERROR = 2
EXIT_SOUNDNESS = 3


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise WorkspaceError("cannot read workspace: %s" % exc) from exc
    return parse_workspace(text)


def _coords(value):
    return list(value) if value else []


def _fmt_vertex(v):
    if isinstance(v, tuple):
        return "(%s)" % " ".join(_fmt_vertex(c) for c in v)
    return str(v)


def _witness_tree(point):
    if point is None:
        return Tree([("found", False)])
    return Tree(
        [
            ("found", True),
            ("simplex", [_fmt_vertex(v) for v in point.simplex]),
            ("barycentric", list(point.coords)),
            (
                "image",
                Tree([(_fmt_vertex(w), c) for w, c in sorted(point.image.items())]),
            ),
        ]
    )


def _verdict_exit(nonzero):
    return EXIT_CERTIFIED if nonzero else EXIT_NOT_CERTIFIED


def cmd_betti(doc, args):
    if args.pair:
        basis = HomologyBasis(doc.pair(args.pair))
        target = ("pair", args.pair)
    elif args.complex:
        from .complexes import SimplicialPair

        basis = HomologyBasis(SimplicialPair(doc.complex(args.complex)))
        target = ("complex", args.complex)
    else:
        raise InputError("betti needs --pair or --complex")
    tree = Tree(
        [
            ("command", "betti"),
            ("inputs", Tree([target])),
            ("betti", list(basis.betti())),
            ("euler", basis.euler()),
            ("summary", "betti %s" % ",".join(str(b) for b in basis.betti())),
        ]
    )
    return tree, EXIT_CERTIFIED


def cmd_euler(doc, args):
    if not args.complex:
        raise InputError("euler needs --complex")
    value = euler_characteristic(doc.complex(args.complex))
    tree = Tree(
        [
            ("command", "euler"),
            ("inputs", Tree([("complex", args.complex)])),
            ("euler", value),
            ("summary", "euler characteristic %d" % value),
        ]
    )
    return tree, EXIT_CERTIFIED


def cmd_orient(doc, args):
    if args.orientation:
        pair_name, n = doc.orientations[args.orientation] if args.orientation in doc.orientations else (None, None)
        if pair_name is None:
            raise WorkspaceError("unknown orientation %r" % args.orientation)
    elif args.pair:
        pair_name = args.pair
        n = args.n if args.n is not None else doc.pair(args.pair).total.dimension
    else:
        raise InputError("orient needs --pair or --orientation")
    inputs = Tree([("pair", pair_name), ("dimension", n)])
    try:
        fc = doc.oriented_pair(pair_name, n)
    except NonOrientableError as exc:
        tree = Tree(
            [
                ("command", "orient"),
                ("inputs", inputs),
                ("orientable", False),
                ("reason", str(exc)),
                ("summary", "not orientable"),
            ]
        )
        return tree, EXIT_NOT_CERTIFIED
    signs = Tree(
        [
            (" ".join(str(v) for v in s), sign)
            for s, sign in sorted(fc.orientation.items())
        ]
    )
    tree = Tree(
        [
            ("command", "orient"),
            ("inputs", inputs),
            ("orientable", True),
            ("signs", signs),
            ("summary", "oriented %d top simplices" % len(fc.orientation)),
        ]
    )
    return tree, EXIT_CERTIFIED


def cmd_degree(doc, args):
    if not args.map:
        raise InputError("degree needs --map")
    f = doc.map(args.map)
    n = args.n
    src_name, tgt_name = doc.map_decls[args.map][0], doc.map_decls[args.map][1]
    fc_src = doc.oriented_pair(src_name, n)
    fc_tgt = doc.oriented_pair(tgt_name, n)
    value = degree_op(f, fc_src, fc_tgt)
    tree = Tree(
        [
            ("command", "degree"),
            ("inputs", Tree([("map", args.map)])),
            ("degree", value),
            ("summary", "degree %s" % ("%d/%d" % (value.numerator, value.denominator))),
        ]
    )
    return tree, EXIT_CERTIFIED


def cmd_lefschetz_number(doc, args):
    if not args.map:
        raise InputError("lefschetz-number needs --map")
    f = doc.map(args.map)
    value = lefschetz_number_self(f)
    tree = Tree(
        [
            ("command", "lefschetz-number"),
            ("inputs", Tree([("map", args.map)])),
            ("lefschetz_number", value),
            (
                "summary",
                "lefschetz number %d/%d"
                % (value.numerator, value.denominator),
            ),
        ]
    )
    return tree, _verdict_exit(value != 0)


def cmd_lefschetz_class(doc, args):
    if not (args.f and args.g):
        raise InputError("lefschetz-class needs --f and --g")
    f = doc.map(args.f)
    g = doc.map(args.g)
    tgt_name = doc.map_decls[args.f][1]
    fc = doc.oriented_pair(tgt_name, args.n)
    basis_src = HomologyBasis(f.source)
    entries = []
    requested = None
    if args.z_degree is not None:
        if args.z_index is None or args.z_index >= basis_src.dim(args.z_degree):
            raise InputError("need a valid --z-index for the requested degree")
        requested = (args.z_degree, args.z_index)
    nonzero = False
    for s in range(basis_src.chain.dimension + 1):
        for j in range(basis_src.dim(s)):
            if requested is not None and (s, j) != requested:
                continue
            coords = tuple(
                Fraction(1 if t == j else 0) for t in range(basis_src.dim(s))
            )
            value = lefschetz_homomorphism(f, g, s, coords, fc)
            nz = any(c != 0 for c in value)
            nonzero = nonzero or nz
            entries.append(
                (
                    "z degree %d index %d" % (s, j),
                    Tree(
                        [
                            ("class_degree", s - fc.dimension),
                            ("coordinates", _coords(value)),
                            ("nonzero", nz),
                        ]
                    ),
                )
            )
    tree = Tree(
        [
            ("command", "lefschetz-class"),
            ("inputs", Tree([("f", args.f), ("g", args.g)])),
            ("classes", Tree(entries)),
            ("summary", "lefschetz classes %s" % ("nonzero" if nonzero else "zero")),
        ]
    )
    return tree, _verdict_exit(nonzero)


def cmd_coincidence(doc, args):
    if not (args.f and args.g):
        raise InputError("coincidence needs --f and --g")
    f = doc.map(args.f)
    g = doc.map(args.g)
    tgt_name = doc.map_decls[args.f][1]
    fc = doc.oriented_pair(tgt_name, args.n)
    verdict = coincidence_certificate(f, g, fc, run_oracle=args.oracle)
    entries = Tree(
        [
            (
                "z degree %d" % e["degree"],
                Tree(
                    [
                        ("z", _coords(e["z"])),
                        ("value", _coords(e["value"])),
                        ("nonzero", e["nonzero"]),
                    ]
                ),
            )
            for e in verdict.witness["entries"]
        ]
    )
    tree = Tree(
        [
            ("command", "coincidence"),
            ("inputs", Tree([("f", args.f), ("g", args.g)])),
            ("certificate", Tree([("nonzero", verdict.nonzero)])),
            ("classes", entries),
            ("oracle", verdict.oracle),
            ("witness", _witness_tree(verdict.witness["point"])),
            (
                "summary",
                "coincidence %s"
                % ("certified" if verdict.nonzero else "not certified"),
            ),
        ]
    )
    return tree, _verdict_exit(verdict.nonzero)


def cmd_equilibrium(doc, args):
    if not args.system:
        raise InputError("equilibrium needs --system")
    sys_obj = doc.system(args.system)
    verdict = equilibrium_certificate(sys_obj, run_oracle=args.oracle)
    entries = Tree(
        [
            (
                "input degree %d index %d" % (e["degree"], e["input_class"]),
                Tree(
                    [
                        ("value", _coords(e["value"])),
                        ("nonzero", e["nonzero"]),
                    ]
                ),
            )
            for e in verdict.witness["entries"]
        ]
    )
    tree = Tree(
        [
            ("command", "equilibrium"),
            ("inputs", Tree([("system", args.system)])),
            ("certificate", Tree([("nonzero", verdict.nonzero)])),
            ("classes", entries),
            ("oracle", verdict.oracle),
            ("witness", _witness_tree(verdict.witness["point"])),
            (
                "summary",
                "equilibrium %s"
                % ("certified" if verdict.nonzero else "not certified"),
            ),
        ]
    )
    return tree, _verdict_exit(verdict.nonzero)


def cmd_sphere_check(doc, args):
    if not args.system:
        raise InputError("sphere-check needs --system")
    sys_obj = doc.system(args.system)
    report = sphere_criteria(sys_obj)
    tree = Tree(
        [
            ("command", "sphere-check"),
            ("inputs", Tree([("system", args.system)])),
            ("slice_degree", report["slice_degree"]),
            ("threshold", report["threshold"]),
            ("condition1", report["condition1"]),
            ("condition2", report["condition2"]),
            ("equilibrium", report["equilibrium"]),
            (
                "summary",
                "sphere criteria %s"
                % ("certified" if report["equilibrium"] else "not certified"),
            ),
        ]
    )
    return tree, _verdict_exit(report["equilibrium"])


def cmd_surjectivity(doc, args):
    if not args.map:
        raise InputError("surjectivity needs --map")
    f = doc.map(args.map)
    tgt_name = doc.map_decls[args.map][1]
    fc = doc.oriented_pair(tgt_name, args.n)
    verdict = surjectivity_certificate(f, fc, run_oracle=args.oracle)
    matrix = verdict.value
    tree = Tree(
        [
            ("command", "surjectivity"),
            ("inputs", Tree([("map", args.map)])),
            ("top_matrix", [matrix[i, j] for i in range(matrix.rows) for j in range(matrix.cols)]),
            ("certificate", Tree([("nonzero", verdict.nonzero)])),
            ("oracle", verdict.oracle),
            (
                "onto",
                verdict.witness["onto"] if verdict.oracle != ORACLE_SKIPPED else None,
            ),
            (
                "summary",
                "surjectivity %s"
                % ("certified" if verdict.nonzero else "not certified"),
            ),
        ]
    )
    return tree, _verdict_exit(verdict.nonzero)


def cmd_controllability(doc, args):
    if not args.system or not getattr(args, "from_"):
        raise InputError("controllability needs --system and --from")
    sys_obj = doc.system(args.system)
    start = doc.complex(getattr(args, "from_"))
    chain = controllability_chain_search(sys_obj, start, r_max=args.max_steps)
    inputs = Tree(
        [
            ("system", args.system),
            ("from", getattr(args, "from_")),
            ("max_steps", args.max_steps if args.max_steps is not None else sys_obj.dimension),
        ]
    )
    if chain is None:
        tree = Tree(
            [
                ("command", "controllability"),
                ("inputs", inputs),
                ("certified", False),
                ("summary", "controllability not certified"),
            ]
        )
        return tree, EXIT_NOT_CERTIFIED
    chain_tree = Tree(
        [
            ("start_degree", chain.start_degree),
            ("start_index", chain.start_index),
            ("steps", chain.steps),
            (
                "input_classes",
                [
                    "degree %d index %d" % (s, j)
                    for s, j in chain.inputs
                ],
            ),
        ]
    )
    for idx, (d, coords) in enumerate(chain.classes, start=1):
        chain_tree.append(
            (
                "class_%d" % idx,
                Tree([("degree", d), ("coordinates", _coords(coords))]),
            )
        )
    surjective = None
    if args.oracle:
        composed = compose_system_map(sys_obj, start, chain.steps)
        from .control import surjectivity_oracle

        surjective = surjectivity_oracle(composed)
        if not surjective:
            raise SoundnessViolationError(
                "controllability chain found but composed map is not onto"
            )
    tree = Tree(
        [
            ("command", "controllability"),
            ("inputs", inputs),
            ("certified", True),
            ("chain", chain_tree),
            ("composed_map_onto", surjective),
            ("summary", "controllability certified in %d steps" % chain.steps),
        ]
    )
    return tree, EXIT_CERTIFIED


def cmd_removability(doc, args):
    if args.f_homology is None or args.n is None or args.m is None:
        raise InputError("removability needs --F-homology, --n and --m")
    try:
        dims = [int(x) for x in args.f_homology.split(",") if x != ""]
    except ValueError:
        raise InputError("--F-homology must be a comma list of integers")
    local_map = doc.map(args.local_map) if args.local_map else None
    report = removability_precondition(dims, args.n, args.m, local_map=local_map)
    tree = Tree(
        [
            ("command", "removability"),
            (
                "inputs",
                Tree(
                    [
                        ("F_homology", dims),
                        ("n", args.n),
                        ("m", args.m),
                        ("local_map", args.local_map),
                    ]
                ),
            ),
            ("vanishing_clause", report.star_clause),
            ("vanishing_ok", report.star_ok),
            ("fstar_zero", report.fstar_zero),
            ("conclusion", report.conclusion),
            (
                "summary",
                "removability precondition %s"
                % ("satisfied" if report.conclusion else "not satisfied"),
            ),
        ]
    )
    return tree, _verdict_exit(report.conclusion)


def cmd_reachability(doc, args):
    if not args.system:
        raise InputError("reachability needs --system")
    if args.steps is None:
        raise InputError("reachability needs --steps")
    sys_obj = doc.system(args.system)
    rel = reachability_oracle(sys_obj, args.steps)
    verts = list(sys_obj.state.total.vertices)
    rows = Tree()
    for x in verts:
        rows.append(
            (
                _fmt_vertex(x),
                "".join("1" if rel[(x, y)] else "0" for y in verts),
            )
        )
    tree = Tree(
        [
            ("command", "reachability"),
            ("inputs", Tree([("system", args.system), ("steps", args.steps)])),
            ("vertices", [_fmt_vertex(v) for v in verts]),
            ("matrix", rows),
            ("summary", "reachability matrix over %d vertices" % len(verts)),
        ]
    )
    return tree, EXIT_CERTIFIED


def cmd_boundary_inputs(doc, args):
    if not args.system:
        raise InputError("boundary-inputs needs --system")
    sys_obj = doc.system(args.system)
    sub = boundary_input_subcomplex(sys_obj)
    simplices = sorted(sub.all_simplices(), key=lambda s: (len(s), s))
    tree = Tree(
        [
            ("command", "boundary-inputs"),
            ("inputs", Tree([("system", args.system)])),
            ("simplices", [" ".join(_fmt_vertex(v) for v in s) for s in simplices]),
            ("summary", "%d boundary input simplices" % len(simplices)),
        ]
    )
    return tree, EXIT_CERTIFIED


COMMANDS = {
    "betti": cmd_betti,
    "euler": cmd_euler,
    "orient": cmd_orient,
    "degree": cmd_degree,
    "lefschetz-number": cmd_lefschetz_number,
    "lefschetz-class": cmd_lefschetz_class,
    "coincidence": cmd_coincidence,
    "equilibrium": cmd_equilibrium,
    "sphere-check": cmd_sphere_check,
    "surjectivity": cmd_surjectivity,
    "controllability": cmd_controllability,
    "removability": cmd_removability,
    "reachability": cmd_reachability,
    "boundary-inputs": cmd_boundary_inputs,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lefcon",
        description="Exact homology certificates for discrete control systems.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--workspace", required=True)
    parser.add_argument("--complex")
    parser.add_argument("--pair")
    parser.add_argument("--map")
    parser.add_argument("--f")
    parser.add_argument("--g")
    parser.add_argument("--system")
    parser.add_argument("--orientation")
    parser.add_argument("--from", dest="from_")
    parser.add_argument("--n", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--z-degree", type=int)
    parser.add_argument("--z-index", type=int)
    parser.add_argument("--max-steps", type=int)
    parser.add_argument("--steps", type=int)
    parser.add_argument("--F-homology", dest="f_homology")
    parser.add_argument("--local-map", dest="local_map")
    parser.add_argument("--oracle", action="store_true")
    return parser


def run_command(doc, command, args):
    """Execute one command against a parsed workspace; returns the report
    text and the exit code."""
    tree, code = COMMANDS[command](doc, args)
    return render_report(tree), code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = _load(args.workspace)
        text, code = run_command(doc, args.command, args)
    except SoundnessViolationError as exc:
        print("soundness violation: %s" % exc, file=sys.stderr)
        return EXIT_SOUNDNESS
    except (InputError, TopologyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except LefconError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
