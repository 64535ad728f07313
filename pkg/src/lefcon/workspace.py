"""The `.lef` workspace format: a line-oriented declarative text format
for complexes, pairs, maps, systems, and orientation requests.

Grammar (one declaration per block, `#` starts a comment):

    complex NAME
      simplex V1 V2 ...

    pair NAME TOTAL SUB        # SUB is a complex name or `-` for empty

    map NAME SOURCEPAIR TARGETPAIR
      send V -> W

    system NAME STATEPAIR INPUTCOMPLEX [SOURCEPAIR IDENTMAP]
      send X U -> Y

    orientation NAME PAIR N

Parsing is strict: unknown keywords, dangling references, duplicate names
and invariant violations all fail with a line diagnostic and no partial
document is returned.  Names must be declared before use; the canonical
section order (complexes, pairs, maps, systems, orientations) always
satisfies that.
"""

from .complexes import SimplicialComplex, SimplicialPair
from .control import DiscreteSystem
from .duality import orient
from .errors import LefconError, WorkspaceError
from .maps import SimplicialMapSpec

_KEYWORDS = ("complex", "pair", "map", "system", "orientation")


class WorkspaceDocument:
    """Named complexes, pairs, maps, systems and orientation requests with
    all cross-references resolved."""

    def __init__(self):
        self.complexes = {}
        self.pairs = {}
        self.pair_decls = {}
        self.maps = {}
        self.map_decls = {}
        self.systems = {}
        self.system_decls = {}
        self.orientations = {}
        self._system_cache = {}
        self._orientation_cache = {}

    def __eq__(self, other):
        return (
            isinstance(other, WorkspaceDocument)
            and self.complexes == other.complexes
            and self.pair_decls == other.pair_decls
            and self.map_decls == other.map_decls
            and self.system_decls == other.system_decls
            and self.orientations == other.orientations
        )

    def complex(self, name):
        try:
            return self.complexes[name]
        except KeyError:
            raise WorkspaceError("unknown complex %r" % name) from None

    def pair(self, name):
        try:
            return self.pairs[name]
        except KeyError:
            raise WorkspaceError("unknown pair %r" % name) from None

    def map(self, name):
        try:
            return self.maps[name]
        except KeyError:
            raise WorkspaceError("unknown map %r" % name) from None

    def oriented_pair(self, name, n=None):
        """Fundamental class data of a named pair (top dimension unless n
        is given); cached per (name, n)."""
        pair = self.pair(name)
        if n is None:
            n = pair.total.dimension
        key = (name, n)
        if key not in self._orientation_cache:
            self._orientation_cache[key] = orient(pair, n)
        return self._orientation_cache[key]

    def system(self, name):
        try:
            decl = self.system_decls[name]
        except KeyError:
            raise WorkspaceError("unknown system %r" % name) from None
        if name not in self._system_cache:
            state_name, input_name, sends, source_name, ident_name = decl
            fc = self.oriented_pair(state_name)
            kw = {}
            if source_name is not None:
                kw["source_fc"] = self.oriented_pair(source_name)
                kw["ident"] = self.map(ident_name)
            vm = {(x, u): y for (x, u, y) in sends}
            self._system_cache[name] = DiscreteSystem(
                fc, self.complex(input_name), vm, name=name, **kw
            )
        return self._system_cache[name]


def _tokenize(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        yield lineno, line.split()


def parse_workspace(text):
    doc = WorkspaceDocument()
    blocks = []
    current = None
    for lineno, tokens in _tokenize(text):
        head = tokens[0]
        if head in _KEYWORDS:
            current = {"kind": head, "tokens": tokens[1:], "line": lineno, "body": []}
            blocks.append(current)
        elif head in ("simplex", "send"):
            if current is None:
                raise WorkspaceError("%r outside a declaration" % head, lineno)
            current["body"].append((lineno, tokens))
        else:
            raise WorkspaceError("unknown keyword %r" % head, lineno)

    def fresh_name(kind, tokens, lineno, table):
        if not tokens:
            raise WorkspaceError("%s needs a name" % kind, lineno)
        name = tokens[0]
        if name in table:
            raise WorkspaceError("duplicate %s name %r" % (kind, name), lineno)
        return name

    for block in blocks:
        kind, tokens, lineno, body = (
            block["kind"],
            block["tokens"],
            block["line"],
            block["body"],
        )
        try:
            if kind == "complex":
                name = fresh_name(kind, tokens, lineno, doc.complexes)
                if len(tokens) != 1:
                    raise WorkspaceError("complex takes exactly one name", lineno)
                simplices = []
                for bl, bt in body:
                    if bt[0] != "simplex" or len(bt) < 2:
                        raise WorkspaceError("expected `simplex V1 ...`", bl)
                    simplices.append(tuple(sorted(bt[1:])))
                    if len(set(bt[1:])) != len(bt) - 1:
                        raise WorkspaceError("repeated vertex in simplex", bl)
                doc.complexes[name] = SimplicialComplex.from_maximal(simplices)
            elif kind == "pair":
                name = fresh_name(kind, tokens, lineno, doc.pair_decls)
                if len(tokens) != 3 or body:
                    raise WorkspaceError("pair NAME TOTAL SUB", lineno)
                total_name, sub_name = tokens[1], tokens[2]
                total = doc.complexes.get(total_name)
                if total is None:
                    raise WorkspaceError(
                        "pair %r references undeclared complex %r"
                        % (name, total_name),
                        lineno,
                    )
                if sub_name == "-":
                    sub = None
                else:
                    sub = doc.complexes.get(sub_name)
                    if sub is None:
                        raise WorkspaceError(
                            "pair %r references undeclared complex %r"
                            % (name, sub_name),
                            lineno,
                        )
                doc.pair_decls[name] = (total_name, sub_name)
                doc.pairs[name] = SimplicialPair(total, sub)
            elif kind == "map":
                name = fresh_name(kind, tokens, lineno, doc.map_decls)
                if len(tokens) != 3:
                    raise WorkspaceError("map NAME SOURCEPAIR TARGETPAIR", lineno)
                src = doc.pairs.get(tokens[1])
                tgt = doc.pairs.get(tokens[2])
                if src is None or tgt is None:
                    raise WorkspaceError(
                        "map %r references undeclared pair %r"
                        % (name, tokens[1] if src is None else tokens[2]),
                        lineno,
                    )
                vm = {}
                for bl, bt in body:
                    if len(bt) != 4 or bt[0] != "send" or bt[2] != "->":
                        raise WorkspaceError("expected `send V -> W`", bl)
                    if bt[1] in vm:
                        raise WorkspaceError("duplicate send for %r" % bt[1], bl)
                    vm[bt[1]] = bt[3]
                doc.map_decls[name] = (tokens[1], tokens[2], tuple(sorted(vm.items())))
                doc.maps[name] = SimplicialMapSpec(
                    src, tgt, vm, name=name, check_pair=True
                )
            elif kind == "system":
                name = fresh_name(kind, tokens, lineno, doc.system_decls)
                if len(tokens) not in (3, 5):
                    raise WorkspaceError(
                        "system NAME STATEPAIR INPUTCOMPLEX [SOURCEPAIR IDENTMAP]",
                        lineno,
                    )
                state_name, input_name = tokens[1], tokens[2]
                if state_name not in doc.pairs:
                    raise WorkspaceError(
                        "system %r references undeclared pair %r"
                        % (name, state_name),
                        lineno,
                    )
                if input_name not in doc.complexes:
                    raise WorkspaceError(
                        "system %r references undeclared complex %r"
                        % (name, input_name),
                        lineno,
                    )
                source_name = ident_name = None
                if len(tokens) == 5:
                    source_name, ident_name = tokens[3], tokens[4]
                    if source_name not in doc.pairs:
                        raise WorkspaceError(
                            "system %r references undeclared pair %r"
                            % (name, source_name),
                            lineno,
                        )
                    if ident_name not in doc.maps:
                        raise WorkspaceError(
                            "system %r references undeclared map %r"
                            % (name, ident_name),
                            lineno,
                        )
                sends = []
                seen = set()
                for bl, bt in body:
                    if len(bt) != 5 or bt[0] != "send" or bt[3] != "->":
                        raise WorkspaceError("expected `send X U -> Y`", bl)
                    key = (bt[1], bt[2])
                    if key in seen:
                        raise WorkspaceError(
                            "duplicate send for %r %r" % key, bl
                        )
                    seen.add(key)
                    sends.append((bt[1], bt[2], bt[4]))
                doc.system_decls[name] = (
                    state_name,
                    input_name,
                    tuple(sorted(sends)),
                    source_name,
                    ident_name,
                )
            elif kind == "orientation":
                name = fresh_name(kind, tokens, lineno, doc.orientations)
                if len(tokens) != 3 or body:
                    raise WorkspaceError("orientation NAME PAIR N", lineno)
                if tokens[1] not in doc.pairs:
                    raise WorkspaceError(
                        "orientation %r references undeclared pair %r"
                        % (name, tokens[1]),
                        lineno,
                    )
                try:
                    n = int(tokens[2])
                except ValueError:
                    raise WorkspaceError("orientation dimension must be an integer", lineno)
                doc.orientations[name] = (tokens[1], n)
        except WorkspaceError:
            raise
        except LefconError as exc:
            raise WorkspaceError("%s: %s" % (kind, exc), lineno) from exc
    return doc


def serialize_workspace(doc):
    """Canonical text of a document: sections sorted by kind and name,
    simplices and sends sorted; reparsing yields an equal document."""
    lines = []
    for name in sorted(doc.complexes):
        lines.append("complex %s" % name)
        maximal = sorted(
            doc.complexes[name].maximal_simplices(), key=lambda s: (len(s), s)
        )
        for s in maximal:
            lines.append("  simplex %s" % " ".join(s))
        lines.append("")
    for name in sorted(doc.pair_decls):
        total_name, sub_name = doc.pair_decls[name]
        lines.append("pair %s %s %s" % (name, total_name, sub_name))
    if doc.pair_decls:
        lines.append("")
    for name in sorted(doc.map_decls):
        src, tgt, sends = doc.map_decls[name]
        lines.append("map %s %s %s" % (name, src, tgt))
        for v, w in sends:
            lines.append("  send %s -> %s" % (v, w))
        lines.append("")
    for name in sorted(doc.system_decls):
        state, input_name, sends, source, ident = doc.system_decls[name]
        head = "system %s %s %s" % (name, state, input_name)
        if source is not None:
            head += " %s %s" % (source, ident)
        lines.append(head)
        for x, u, y in sends:
            lines.append("  send %s %s -> %s" % (x, u, y))
        lines.append("")
    for name in sorted(doc.orientations):
        pair_name, n = doc.orientations[name]
        lines.append("orientation %s %s %d" % (name, pair_name, n))
    text = "\n".join(lines).rstrip("\n") + "\n"
    return text
