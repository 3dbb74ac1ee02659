"""Auslander-Reiten quivers: mesh knitting and structural checks.

The knitting engine is category-generic (mod Lambda or C_n(proj
Lambda)).  It places all indecomposable projectives up front, each with
the decomposition of the domain of its sink map as "expectations";
whenever a placed object becomes isomorphic to an expected summand, the
corresponding arrow into the projective is recorded.  A non-injective
object fires once every arrow into it comes from an injective or an
already-fired object: the assembled map into the sum of its arrow-out
targets is then minimal left almost split (its components represent
Irr bases), and the split-exact cokernel is the inverse translate,
entering the quiver with its full set of in-arrows.

Finite type ends with a mesh-closed quiver; otherwise the construction
stops at the depth budget and the result is flagged incomplete.
"""

from .errors import KnitStuck, MeshAmbiguous
from .decompose import is_indecomposable


class ArQuiver:
    """Vertex/arrow/translation data of an AR quiver (plain structure)."""

    def __init__(self):
        self.vertices = []                # vertex keys, insertion order
        self.labels = {}                  # key -> display label
        self.arrows = {}                  # (src, tgt) -> multiplicity
        self.translation = {}             # key -> key (A_n)
        self.projectives = set()
        self.injectives = set()
        self.complete = True

    def add_vertex(self, key, label=None, projective=False, injective=False):
        assert key not in self.labels
        self.vertices.append(key)
        self.labels[key] = label if label is not None else str(key)
        if projective:
            self.projectives.add(key)
        if injective:
            self.injectives.add(key)

    def add_arrow(self, src, tgt, mult=1):
        self.arrows[(src, tgt)] = self.arrows.get((src, tgt), 0) + mult

    def arrow_count(self):
        return sum(self.arrows.values())

    def in_multiset(self, v):
        out = {}
        for (s, t), m in self.arrows.items():
            if t == v:
                out[s] = out.get(s, 0) + m
        return out

    def out_multiset(self, v):
        out = {}
        for (s, t), m in self.arrows.items():
            if s == v:
                out[t] = out.get(t, 0) + m
        return out

    def mesh_check(self):
        """Every non-projective vertex with a translate satisfies the mesh
        condition; returns the offending vertices (empty if all pass)."""
        bad = []
        for v in self.vertices:
            if v in self.projectives:
                continue
            x = self.translation.get(v)
            if x is None:
                bad.append(v)
                continue
            if self.in_multiset(v) != self.out_multiset(x):
                bad.append(v)
        return bad


class KnitNode:
    __slots__ = ("obj", "idx", "is_proj", "is_inj", "in_list", "pending_out",
                 "fired", "provenance", "depth", "translate_of")

    def __init__(self, obj, idx, provenance, depth):
        self.obj = obj
        self.idx = idx
        self.is_proj = False
        self.is_inj = False
        self.in_list = []       # (source node, morphism)
        self.pending_out = []   # (target node, morphism)
        self.fired = False
        self.provenance = provenance
        self.depth = depth
        self.translate_of = None   # node Z with A(Z) = self ... inverse link


class KnitResult:
    def __init__(self, cat, nodes, expectations, complete, truncated, depth):
        self.cat = cat
        self.nodes = nodes
        self.expectations = expectations
        self.complete = complete
        self.truncated = truncated
        self.depth = depth
        self.quiver = self._build_quiver()

    def _ids(self):
        cat = self.cat
        order = sorted(range(len(self.nodes)), key=lambda k: (
            cat.total_dim(self.nodes[k].obj),
            _flat(cat.dim_data(self.nodes[k].obj)), k))
        width = max(3, len(str(len(order))))
        ids = [None] * len(self.nodes)
        for rank, k in enumerate(order):
            ids[k] = "K%0*d" % (width, rank + 1)
        return ids

    def _build_quiver(self):
        ids = self._ids()
        self.node_ids = ids
        G = ArQuiver()
        for k in sorted(range(len(self.nodes)),
                        key=lambda k: ids[k]):
            node = self.nodes[k]
            G.add_vertex(ids[k], label=self.cat.label(node.obj),
                         projective=node.is_proj, injective=node.is_inj)
        for k, node in enumerate(self.nodes):
            for tgt, _ in node.pending_out:
                G.add_arrow(ids[k], ids[tgt.idx])
        for k, node in enumerate(self.nodes):
            if node.translate_of is not None:
                G.translation[ids[k]] = ids[node.translate_of.idx]
        G.complete = self.complete
        return G


def _flat(dd):
    return tuple(x for part in (dd if isinstance(dd, tuple) else (dd,))
                 for x in (part if isinstance(part, tuple) else (part,)))


class _BudgetExceeded(Exception):
    pass


def knit(cat, depth_limit=None, max_objects=2000, max_total_dim=100000):
    """Knit the AR quiver of the category; see the module docstring."""
    nodes = []
    expectations = []   # dicts: obj, map, qnode, matched
    injective_objs = cat.injectives()
    total_dim_seen = 0

    def identify_injective(obj):
        dd = cat.dim_data(obj)
        for I, _, _ in injective_objs:
            if cat.dim_data(I) == dd and cat.find_iso(obj, I) is not None:
                return True
        return False

    def match_expectations(node):
        for e in expectations:
            if e["matched"] is not None:
                continue
            if cat.dim_data(e["obj"]) != cat.dim_data(node.obj):
                continue
            u = cat.find_iso(node.obj, e["obj"])
            if u is None:
                continue
            e["matched"] = node
            rep = cat.compose(e["map"], u)
            node.pending_out.append((e["qnode"], rep))
            e["qnode"].in_list.append((node, rep))

    def place(obj, provenance, depth):
        nonlocal total_dim_seen
        if len(nodes) >= max_objects:
            raise _BudgetExceeded
        total_dim_seen += cat.total_dim(obj)
        if total_dim_seen > max_total_dim:
            raise _BudgetExceeded
        node = KnitNode(obj, len(nodes), provenance, depth)
        node.is_inj = identify_injective(obj)
        nodes.append(node)
        return node

    truncated = False
    depth = 0
    try:
        proj_list = cat.projectives()
        for Q, Rdom, rho in proj_list:
            node = place(Q, "projective", 0)
            node.is_proj = True
        for (Q, Rdom, rho), node in zip(proj_list, nodes):
            if cat.total_dim(Rdom) == 0:
                continue
            for Zs, incl, _ in cat.decompose(Rdom):
                expectations.append({"obj": Zs,
                                     "map": cat.compose(rho, incl),
                                     "qnode": node, "matched": None})
        for node in list(nodes):
            match_expectations(node)

        def ready(node):
            if node.fired or node.is_inj:
                return False
            if node.is_proj:
                if any(e["qnode"] is node and e["matched"] is None
                       for e in expectations):
                    return False
            return all(w.is_inj or w.fired for w, _ in node.in_list)

        while True:
            frontier = [n for n in nodes if ready(n)]
            if not frontier:
                break
            depth += 1
            if depth_limit is not None and depth > depth_limit:
                truncated = True
                break
            for node in sorted(frontier, key=lambda n: n.idx):
                _fire(cat, node, nodes, place, match_expectations, depth)
    except _BudgetExceeded:
        truncated = True

    complete = (not truncated
                and all(n.fired or n.is_inj for n in nodes)
                and all(e["matched"] is not None for e in expectations))
    if not complete and not truncated:
        frontier = [cat.label(n.obj) for n in nodes
                    if not n.fired and not n.is_inj]
        raise KnitStuck(frontier)
    return KnitResult(cat, nodes, expectations, complete, truncated, depth)


def _fire(cat, node, nodes, place, match_expectations, depth):
    outs = sorted(node.pending_out, key=lambda p: p[0].idx)
    if not outs:
        raise KnitStuck([cat.label(node.obj)],
                        "non-injective object with no arrows out")
    E, incls, _ = cat.direct_sum([t.obj for t, _ in outs])
    f = None
    for (t, rep), inc in zip(outs, incls):
        term = cat.compose(inc, rep)
        f = term if f is None else cat.add(f, term)
    Z, pi = cat.mesh_cokernel(f)
    assert is_indecomposable(cat, Z), "mesh cokernel decomposed"
    dd = cat.dim_data(Z)
    for other in nodes:
        if not other.is_proj and cat.dim_data(other.obj) == dd \
                and cat.find_iso(Z, other.obj) is not None:
            raise KnitStuck([cat.label(Z)], "translate already present")
    znode = place(Z, "mesh", depth)
    znode.translate_of = node
    for (tgt, _), inc in zip(outs, incls):
        comp = cat.compose(pi, inc)
        tgt.pending_out.append((znode, comp))
        znode.in_list.append((tgt, comp))
    match_expectations(znode)
    node.fired = True


# -- brute-force quiver from a radical table -----------------------------------

def build_ar_quiver(table):
    """AR quiver from radical-layer dimensions, with verified translations.

    Arrows: dim Irr = dim rad/rad^2.  The translate of a non-projective
    Z is the kernel of a map assembled from Irr bases into Z (a minimal
    right almost split map); it must be isomorphic to the unique mesh
    candidate, else MeshAmbiguous is raised.
    """
    reg = table.registry
    cat = table.cat
    ids = reg.ids()
    G = ArQuiver()
    proj_flags, inj_flags = _mark_proj_inj(cat, reg)
    for k in reg.canonical_order():
        G.add_vertex(ids[k], label=reg.label_of(k),
                     projective=proj_flags[k], injective=inj_flags[k])
    m = len(reg)
    for i in range(m):
        for j in range(m):
            d = table.irr_dim(i, j)
            if d:
                G.add_arrow(ids[i], ids[j], d)
    for z in range(m):
        if proj_flags[z]:
            continue
        X = _verified_translate(table, z, proj_flags, inj_flags)
        G.translation[ids[z]] = ids[X]
    bad = G.mesh_check()
    if bad:
        raise MeshAmbiguous("mesh condition fails at %s" % bad)
    return G


def _mark_proj_inj(cat, reg):
    projs = [P for P, _, _ in cat.projectives()]
    injs = [I for I, _, _ in cat.injectives()]
    proj_flags, inj_flags = [], []
    for obj in reg.objects():
        dd = cat.dim_data(obj)
        proj_flags.append(any(cat.dim_data(P) == dd
                              and cat.find_iso(obj, P) is not None
                              for P in projs))
        inj_flags.append(any(cat.dim_data(I) == dd
                             and cat.find_iso(obj, I) is not None
                             for I in injs))
    return proj_flags, inj_flags


def _verified_translate(table, z, proj_flags, inj_flags):
    reg = table.registry
    cat = table.cat
    objs = reg.objects()
    m = len(reg)
    middles = [(i, table.irr_dim(i, z)) for i in range(m)
               if table.irr_dim(i, z)]
    if not middles:
        raise MeshAmbiguous("non-projective %s has no arrows in"
                            % reg.label_of(z))
    summands = []
    reps = []
    for i, mult in middles:
        basis = table.irr_basis_reps(i, z)
        assert len(basis) == mult
        for f in basis:
            summands.append(objs[i])
            reps.append(f)
    E, incls, projs_ = cat.direct_sum(summands)
    g = None
    for f, pr in zip(reps, projs_):
        term = cat.compose(f, pr)
        g = term if g is None else cat.add(g, term)
    K, incl = cat.mesh_kernel(g)
    if K is None:
        raise MeshAmbiguous("kernel of the sink map into %s leaves the "
                            "category" % reg.label_of(z))
    # the unique non-injective candidate matching the mesh and the kernel
    candidates = []
    kin = {i: mult for i, mult in middles}
    for x in range(m):
        if inj_flags[x]:
            continue
        out = {i: table.irr_dim(x, i) for i in range(m)
               if table.irr_dim(x, i)}
        if out == kin and cat.dim_data(objs[x]) == cat.dim_data(K) \
                and cat.find_iso(K, objs[x]) is not None:
            candidates.append(x)
    if len(candidates) != 1:
        raise MeshAmbiguous(
            "translate of %s: %d candidates" % (reg.label_of(z),
                                                len(candidates)))
    return candidates[0]


# -- path structure ------------------------------------------------------------

def path_lengths(G):
    """(table, with_length, witness) for the directed-path structure.

    table[(x, y)] = the common length of the x -> y paths when the
    quiver is with length (absent when there is no path); with_length is
    False when a directed cycle exists or two parallel paths have
    different lengths, and witness names an offender.
    """
    order = _topo_order(G)
    if order is None:
        return {}, False, "directed cycle"
    minlen, maxlen = {}, {}
    for x in G.vertices:
        minlen[(x, x)] = maxlen[(x, x)] = 0
        for y in order:
            if (x, y) not in minlen:
                continue
            for (s, t), mult in G.arrows.items():
                if s != y:
                    continue
                lo = minlen[(x, y)] + 1
                hi = maxlen[(x, y)] + 1
                if (x, t) not in minlen:
                    minlen[(x, t)] = lo
                    maxlen[(x, t)] = hi
                else:
                    minlen[(x, t)] = min(minlen[(x, t)], lo)
                    maxlen[(x, t)] = max(maxlen[(x, t)], hi)
    table = {}
    for (x, y), lo in minlen.items():
        if x == y:
            continue
        if lo != maxlen[(x, y)]:
            return {}, False, "parallel paths %s -> %s of lengths %d and %d" \
                % (x, y, lo, maxlen[(x, y)])
        table[(x, y)] = lo
    return table, True, None


def _topo_order(G):
    indeg = {v: 0 for v in G.vertices}
    for (s, t), mult in G.arrows.items():
        indeg[t] += 1 if s != t else 2  # a loop is a cycle
    stack = sorted(v for v in G.vertices if indeg[v] == 0)
    order = []
    while stack:
        v = stack.pop(0)
        order.append(v)
        for (s, t), mult in G.arrows.items():
            if s == v and s != t:
                indeg[t] -= 1
                if indeg[t] == 0:
                    stack.append(t)
                    stack.sort()
    return order if len(order) == len(G.vertices) else None


def with_length_check(G):
    _, ok, _ = path_lengths(G)
    return ok


def longest_path_length(G):
    order = _topo_order(G)
    if order is None:
        return None
    best = {v: 0 for v in G.vertices}
    out = 0
    for v in order:
        for (s, t), mult in G.arrows.items():
            if s == v:
                best[t] = max(best[t], best[v] + 1)
                out = max(out, best[t])
    return out


# -- oracle comparison -----------------------------------------------------------

def match_knit_to_registry(knit_result, registry):
    """Bijection knit node index -> registry entry index, via iso_test.

    Raises MeshAmbiguous when the vertex sets do not biject."""
    cat = knit_result.cat
    mapping = {}
    used = set()
    for k, node in enumerate(knit_result.nodes):
        hit = registry.find(node.obj)
        if hit is None or hit in used:
            raise MeshAmbiguous("knit vertex %s does not match the registry"
                                % cat.label(node.obj))
        mapping[k] = hit
        used.add(hit)
    if len(used) != len(registry):
        raise MeshAmbiguous("registry has objects the knit never reached")
    return mapping


def quivers_agree(knit_result, brute_quiver, registry):
    """Knit and brute-force quivers agree: vertex bijection respecting
    arrows (with multiplicity), translation, and the proj/inj marks."""
    mapping = match_knit_to_registry(knit_result, registry)
    ids = registry.ids()
    kq = knit_result.quiver
    kid = knit_result.node_ids
    to_brute = {kid[k]: ids[v] for k, v in mapping.items()}
    arrows = {}
    for (s, t), m in kq.arrows.items():
        arrows[(to_brute[s], to_brute[t])] = m
    if arrows != brute_quiver.arrows:
        return False
    trans = {to_brute[s]: to_brute[t] for s, t in kq.translation.items()}
    if trans != brute_quiver.translation:
        return False
    if {to_brute[v] for v in kq.projectives} != brute_quiver.projectives:
        return False
    if {to_brute[v] for v in kq.injectives} != brute_quiver.injectives:
        return False
    return True
