"""Quivers, monomial relations, and bound quiver algebras kQ/I.

Conventions, fixed once for the whole package:

* Vertices are 1..vertex_count.  Arrow ids are arbitrary unique strings.
* Paths are written left to right along arrows: the path ``a*b`` first
  traverses ``a`` and then ``b``, so it requires target(a) = source(b).
* Modules are right modules.  The indecomposable projective P_v has as
  basis the relation-free paths starting at v; the injective I_v is
  dual on the paths ending at v.

The path basis of kQ/I (I monomial admissible) is the set of paths
containing no relation as a contiguous subpath, enumerated breadth
first by length and lexicographically by arrow id within a length.
"""

from .errors import InfiniteDimensional, NoSourceOrSink, QuiverFileError
from .fields import QQ, parse_field


class Arrow:
    __slots__ = ("name", "src", "tgt")

    def __init__(self, name, src, tgt):
        self.name = name
        self.src = src
        self.tgt = tgt

    def __repr__(self):
        return "%s: %d -> %d" % (self.name, self.src, self.tgt)


class Path:
    """A path in a quiver: a (possibly empty) composable arrow sequence."""

    __slots__ = ("src", "tgt", "arrows")

    def __init__(self, src, tgt, arrows):
        self.src = src
        self.tgt = tgt
        self.arrows = tuple(arrows)

    @property
    def length(self):
        return len(self.arrows)

    def __eq__(self, other):
        return (isinstance(other, Path) and self.src == other.src
                and self.tgt == other.tgt and self.arrows == other.arrows)

    def __hash__(self):
        return hash((self.src, self.tgt, self.arrows))

    def __repr__(self):
        if not self.arrows:
            return "e%d" % self.src
        return "*".join(self.arrows)


class Quiver:
    def __init__(self, vertex_count, arrows):
        if vertex_count < 1:
            raise ValueError("vertex_count must be positive")
        self.vertex_count = vertex_count
        self.arrows = []
        seen = set()
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            if a.name in seen:
                raise ValueError("duplicate arrow id %r" % a.name)
            if not (1 <= a.src <= vertex_count and 1 <= a.tgt <= vertex_count):
                raise ValueError("arrow %r endpoint out of range" % a.name)
            seen.add(a.name)
            self.arrows.append(a)
        self.arrow_by_name = {a.name: a for a in self.arrows}

    @property
    def vertices(self):
        return range(1, self.vertex_count + 1)

    def arrows_from(self, v):
        return [a for a in self.arrows if a.src == v]

    def arrows_to(self, v):
        return [a for a in self.arrows if a.tgt == v]

    def __repr__(self):
        return "Quiver(%d vertices, %d arrows)" % (self.vertex_count, len(self.arrows))


def sources_sinks(quiver):
    """(sources, sinks): vertices with no incoming / no outgoing arrows."""
    has_in = {a.tgt for a in quiver.arrows}
    has_out = {a.src for a in quiver.arrows}
    sources = [v for v in quiver.vertices if v not in has_in]
    sinks = [v for v in quiver.vertices if v not in has_out]
    return sources, sinks


def is_acyclic(quiver):
    order = topological_order(quiver)
    return order is not None


def topological_order(quiver):
    indeg = {v: 0 for v in quiver.vertices}
    for a in quiver.arrows:
        indeg[a.tgt] += 1
    stack = sorted(v for v in quiver.vertices if indeg[v] == 0)
    order = []
    while stack:
        v = stack.pop(0)
        order.append(v)
        for a in quiver.arrows_from(v):
            indeg[a.tgt] -= 1
            if indeg[a.tgt] == 0:
                # keep determinism: insert sorted
                stack.append(a.tgt)
                stack.sort()
    return order if len(order) == quiver.vertex_count else None


def ell(quiver):
    """Longest path length from each source to each sink, and the max.

    Returns (ell, table) with table[(sink, source)] = number of arrows
    on a (longest, when several exist) path from the source to the sink.
    Pairs with no connecting path are absent.
    """
    sources, sinks = sources_sinks(quiver)
    order = topological_order(quiver)
    if order is None or not sources or not sinks:
        raise NoSourceOrSink("quiver has a cycle or lacks a source/sink")
    table = {}
    for i in sources:
        # longest-path DP from i over the DAG
        best = {i: 0}
        for v in order:
            if v not in best:
                continue
            for a in quiver.arrows_from(v):
                cand = best[v] + 1
                if best.get(a.tgt, -1) < cand:
                    best[a.tgt] = cand
        for j in sinks:
            if j in best:
                table[(j, i)] = best[j]
    value = max(table.values()) if table else 0
    return value, table


def classify_dynkin(quiver):
    """Dynkin label of the underlying graph ('A3', 'D4', 'E6', ...) or None.

    The test is orientation-independent: connected, simply laced (no
    loops, no multiple edges between a vertex pair), and the underlying
    tree is one of A_n, D_n, E_6, E_7, E_8.
    """
    n = quiver.vertex_count
    edges = set()
    for a in quiver.arrows:
        if a.src == a.tgt:
            return None
        e = (min(a.src, a.tgt), max(a.src, a.tgt))
        if e in edges:
            return None
        edges.add(e)
    if len(edges) != n - 1:
        return None  # a tree has exactly n-1 edges; rules out cycles
    adj = {v: set() for v in quiver.vertices}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    # connectivity
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        return None
    degrees = sorted(len(adj[v]) for v in quiver.vertices)
    if degrees and degrees[-1] <= 2:
        return "A%d" % n
    branch = [v for v in quiver.vertices if len(adj[v]) >= 3]
    if len(branch) != 1 or len(adj[branch[0]]) != 3:
        return None
    b = branch[0]
    arms = []
    for w in sorted(adj[b]):
        length = 1
        prev, cur = b, w
        while len(adj[cur]) == 2:
            nxt = next(x for x in adj[cur] if x != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return "D%d" % n
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    return None


class MonomialRelation:
    """A zero relation: a composable arrow-id sequence of length >= 2."""

    def __init__(self, arrow_names):
        self.arrow_names = tuple(arrow_names)
        if len(self.arrow_names) < 2:
            raise ValueError("admissible relations have path length >= 2")

    def validate(self, quiver):
        for x, y in zip(self.arrow_names, self.arrow_names[1:]):
            ax = quiver.arrow_by_name.get(x)
            ay = quiver.arrow_by_name.get(y)
            if ax is None or ay is None:
                raise ValueError("relation mentions unknown arrow")
            if ax.tgt != ay.src:
                raise ValueError("relation arrows %s*%s do not compose" % (x, y))

    def __eq__(self, other):
        return isinstance(other, MonomialRelation) and self.arrow_names == other.arrow_names

    def __hash__(self):
        return hash(self.arrow_names)

    def __repr__(self):
        return "*".join(self.arrow_names)


PATH_BUDGET = 100000
PATH_LENGTH_BUDGET = 512


class BoundQuiverAlgebra:
    """kQ/I for a finite quiver Q and a reduced set of monomial relations.

    The path basis is computed eagerly at construction (so an infinite
    dimensional input fails fast with InfiniteDimensional).
    """

    def __init__(self, quiver, relations=(), field=QQ, path_budget=PATH_BUDGET):
        self.quiver = quiver
        self.field = field
        rels = []
        for r in relations:
            if not isinstance(r, MonomialRelation):
                r = MonomialRelation(r)
            r.validate(quiver)
            rels.append(r)
        # normalize: drop any relation containing another as a contiguous subpath
        reduced = []
        words = [r.arrow_names for r in rels]
        for i, w in enumerate(words):
            redundant = any(j != i and _is_subword(words[j], w)
                            and (len(words[j]) < len(w) or j < i)
                            for j in range(len(words)))
            if not redundant:
                reduced.append(rels[i])
        self.relations = tuple(sorted(set(reduced), key=lambda r: r.arrow_names))
        self._rel_words = {r.arrow_names for r in self.relations}
        self._basis = self._enumerate_paths(path_budget)
        self._index = {p: i for i, p in enumerate(self._basis)}
        self._between = {}
        for p in self._basis:
            self._between.setdefault((p.src, p.tgt), []).append(p)

    # -- path combinatorics ------------------------------------------------

    def _kills(self, arrow_names):
        """True if some relation occurs as a contiguous subword."""
        for w in self._rel_words:
            k = len(w)
            if k <= len(arrow_names):
                for i in range(len(arrow_names) - k + 1):
                    if arrow_names[i:i + k] == w:
                        return True
        return False

    def _enumerate_paths(self, budget):
        basis = [Path(v, v, ()) for v in self.quiver.vertices]
        frontier = basis[:]
        arrows_sorted = sorted(self.quiver.arrows, key=lambda a: a.name)
        length = 0
        while frontier:
            length += 1
            nxt = []
            for p in frontier:
                for a in arrows_sorted:
                    if a.src != p.tgt:
                        continue
                    w = p.arrows + (a.name,)
                    if self._kills(w):
                        continue
                    nxt.append(Path(p.src, a.tgt, w))
            # within a length level, sort lexicographically by arrow ids
            nxt.sort(key=lambda p: p.arrows)
            basis.extend(nxt)
            if len(basis) > budget or (nxt and length > PATH_LENGTH_BUDGET):
                raise InfiniteDimensional(
                    "path enumeration exceeded the budget (%d paths seen, "
                    "length %d); an unbounded cycle survives the relations"
                    % (len(basis), length))
            frontier = nxt
        return tuple(basis)

    @property
    def dimension(self):
        return len(self._basis)

    def path_basis(self):
        return self._basis

    def path_index(self, p):
        return self._index[p]

    def paths_between(self, src, tgt):
        """Relation-free paths src -> tgt, in path-basis order."""
        return self._between.get((src, tgt), [])

    def paths_from(self, v):
        return [p for p in self._basis if p.src == v]

    def mul(self, p, q):
        """Concatenation 'first p, then q'; None when killed or incomposable."""
        if p.tgt != q.src:
            return None
        w = p.arrows + q.arrows
        if self._kills(w):
            return None
        return Path(p.src, q.tgt, w)

    def trivial_path(self, v):
        return Path(v, v, ())

    def arrow_path(self, name):
        a = self.quiver.arrow_by_name[name]
        return Path(a.src, a.tgt, (name,))

    @property
    def is_hereditary(self):
        return not self.relations

    def __repr__(self):
        return "BoundQuiverAlgebra(%r, %d relations, %s)" % (
            self.quiver, len(self.relations), self.field.name)


def _is_subword(w, of):
    k = len(w)
    return any(of[i:i + k] == w for i in range(len(of) - k + 1))


# -- quiver file format ----------------------------------------------------
#
#   # comment
#   vertices: 3
#   arrow a: 1 -> 2
#   arrow b: 2 -> 3
#   relation: a*b
#   field: Q

def parse_quiver_file(text, path_budget=PATH_BUDGET):
    vertex_count = None
    arrows = []
    relations = []
    field = QQ
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise QuiverFileError(lineno, "expected 'key: value', got %r" % raw.strip())
        key, _, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if key == "vertices":
            try:
                vertex_count = int(value)
            except ValueError:
                raise QuiverFileError(lineno, "vertices wants an integer") from None
        elif key.startswith("arrow "):
            name = key[len("arrow "):].strip()
            if not name:
                raise QuiverFileError(lineno, "arrow needs a name")
            if "->" not in value:
                raise QuiverFileError(lineno, "arrow wants '<src> -> <tgt>'")
            s, _, t = value.partition("->")
            try:
                arrows.append(Arrow(name, int(s), int(t)))
            except ValueError:
                raise QuiverFileError(lineno, "arrow endpoints must be integers") from None
        elif key == "relation":
            names = [x.strip() for x in value.split("*") if x.strip()]
            if len(names) < 2:
                raise QuiverFileError(lineno, "relation wants id1*id2*...")
            relations.append((lineno, names))
        elif key == "field":
            try:
                field = parse_field(value)
            except ValueError as e:
                raise QuiverFileError(lineno, str(e)) from None
        else:
            raise QuiverFileError(lineno, "unknown key %r" % key)
    if vertex_count is None:
        raise QuiverFileError(0, "missing 'vertices:' line")
    try:
        quiver = Quiver(vertex_count, arrows)
    except ValueError as e:
        raise QuiverFileError(0, str(e)) from None
    rels = []
    for lineno, names in relations:
        r = MonomialRelation(names)
        try:
            r.validate(quiver)
        except ValueError as e:
            raise QuiverFileError(lineno, str(e)) from None
        rels.append(r)
    return BoundQuiverAlgebra(quiver, rels, field, path_budget=path_budget)


def format_quiver_file(algebra):
    lines = ["vertices: %d" % algebra.quiver.vertex_count]
    for a in algebra.quiver.arrows:
        lines.append("arrow %s: %d -> %d" % (a.name, a.src, a.tgt))
    for r in algebra.relations:
        lines.append("relation: %s" % "*".join(r.arrow_names))
    lines.append("field: %s" % algebra.field.name)
    return "\n".join(lines) + "\n"
