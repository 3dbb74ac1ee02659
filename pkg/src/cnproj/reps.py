"""The category mod Lambda as quiver representations, exactly.

A representation assigns to each vertex a column space k^d and to each
arrow a (target-dim x source-dim) matrix; monomial relations must
evaluate to zero.  Morphisms are vertex-indexed matrix families that
intertwine the arrow actions.

Canonical projectives and injectives carry labelled path bases:
P_v has basis the relation-free paths starting at v (arrows act by
appending), I_v is dual on the paths ending at v (arrows strip a
leading arrow).  Direct sums of these, built by std_projective /
std_injective, remember their summand vertices; the Nakayama functor
and the path-coordinate layer in projmod rely on that bookkeeping.
"""

from .errors import AlgebraMismatch, FieldNotSupported, NotInjective, NotProjective
from .linalg import Matrix, Subspace, vstack
from .quivers import Path


class Representation:
    def __init__(self, algebra, dims, arrow_maps, check=True):
        self.algebra = algebra
        self.dims = tuple(dims)
        assert len(self.dims) == algebra.quiver.vertex_count
        self.arrow_maps = dict(arrow_maps)
        field = algebra.field
        for a in algebra.quiver.arrows:
            M = self.arrow_maps.get(a.name)
            if M is None:
                M = Matrix.zero(field, self.dim_at(a.tgt), self.dim_at(a.src))
                self.arrow_maps[a.name] = M
            assert M.m == self.dim_at(a.tgt) and M.n == self.dim_at(a.src), \
                "arrow %s matrix shape %dx%d, want %dx%d" % (
                    a.name, M.m, M.n, self.dim_at(a.tgt), self.dim_at(a.src))
        if check:
            self.check_relations()

    def dim_at(self, v):
        return self.dims[v - 1]

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def path_action(self, p):
        """The matrix of the right action of path p: M_{p.src} -> M_{p.tgt}."""
        field = self.algebra.field
        M = Matrix.identity(field, self.dim_at(p.src))
        for name in p.arrows:
            M = self.arrow_maps[name] * M
        return M

    def check_relations(self):
        for r in self.algebra.relations:
            a0 = self.algebra.quiver.arrow_by_name[r.arrow_names[0]]
            p = Path(a0.src, a0.src, ())
            for name in r.arrow_names:
                arr = self.algebra.quiver.arrow_by_name[name]
                p = Path(p.src, arr.tgt, p.arrows + (name,))
            if not self.path_action(p).is_zero():
                raise ValueError("relation %r does not vanish" % (r.arrow_names,))

    # -- stacked total coordinates (vertex blocks in vertex order) --------

    def block_offsets(self):
        offs = []
        o = 0
        for d in self.dims:
            offs.append(o)
            o += d
        return offs

    def __repr__(self):
        return "Rep%s" % (self.dims,)


class ModuleMap:
    def __init__(self, source, target, vertex_maps, check=True):
        assert source.algebra is target.algebra
        self.source = source
        self.target = target
        self.vertex_maps = list(vertex_maps)
        for v in source.algebra.quiver.vertices:
            M = self.vertex_maps[v - 1]
            assert M.m == target.dim_at(v) and M.n == source.dim_at(v)
        if check:
            self.check_intertwining()

    @classmethod
    def zero(cls, source, target):
        f = source.algebra.field
        return cls(source, target,
                   [Matrix.zero(f, target.dim_at(v), source.dim_at(v))
                    for v in source.algebra.quiver.vertices], check=False)

    @classmethod
    def identity(cls, M):
        f = M.algebra.field
        return cls(M, M, [Matrix.identity(f, d) for d in M.dims], check=False)

    def check_intertwining(self):
        for a in self.source.algebra.quiver.arrows:
            lhs = self.vertex_maps[a.tgt - 1] * self.source.arrow_maps[a.name]
            rhs = self.target.arrow_maps[a.name] * self.vertex_maps[a.src - 1]
            if not (lhs - rhs).is_zero():
                raise ValueError("map does not intertwine arrow %s" % a.name)

    def at(self, v):
        return self.vertex_maps[v - 1]

    def compose(self, other):
        """self after other (other: X->Y, self: Y->Z)."""
        assert other.target is self.source or other.target.dims == self.source.dims
        return ModuleMap(other.source, self.target,
                         [a * b for a, b in zip(self.vertex_maps, other.vertex_maps)],
                         check=False)

    def __add__(self, other):
        return ModuleMap(self.source, self.target,
                         [a + b for a, b in zip(self.vertex_maps, other.vertex_maps)],
                         check=False)

    def __sub__(self, other):
        return ModuleMap(self.source, self.target,
                         [a - b for a, b in zip(self.vertex_maps, other.vertex_maps)],
                         check=False)

    def scale(self, c):
        return ModuleMap(self.source, self.target,
                         [M.scale(c) for M in self.vertex_maps], check=False)

    def is_zero(self):
        return all(M.is_zero() for M in self.vertex_maps)

    def is_iso(self):
        return all(M.is_invertible() for M in self.vertex_maps)

    def is_mono(self):
        return all(M.rank() == M.n for M in self.vertex_maps)

    def is_epi(self):
        return all(M.rank() == M.m for M in self.vertex_maps)

    def inverse(self):
        return ModuleMap(self.target, self.source,
                         [M.inverse() for M in self.vertex_maps], check=False)

    def total_matrix(self):
        """Block-diagonal matrix on the vertex-stacked total spaces."""
        from .linalg import block_diag
        return block_diag(self.source.algebra.field, self.vertex_maps)

    def coords(self):
        """Row-major stacked entries, vertex by vertex (the hom coordinates)."""
        out = []
        for M in self.vertex_maps:
            for row in M.rows:
                out.extend(row)
        return out

    def __repr__(self):
        return "ModuleMap(%r -> %r)" % (self.source, self.target)


def module_map_from_coords(M, N, vec):
    field = M.algebra.field
    mats = []
    k = 0
    for v in M.algebra.quiver.vertices:
        m, n = N.dim_at(v), M.dim_at(v)
        rows = [[vec[k + i * n + j] for j in range(n)] for i in range(m)]
        k += m * n
        mats.append(Matrix(field, rows, m, n))
    return ModuleMap(M, N, mats, check=False)


def hom_basis(M, N):
    """Deterministic basis of Hom(M, N): RREF nullspace of the intertwiner
    system in the stacked entry coordinates."""
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("hom between representations of different algebras")
    field = M.algebra.field
    nunk = sum(N.dim_at(v) * M.dim_at(v) for v in M.algebra.quiver.vertices)
    if nunk == 0:
        return []
    offs = {}
    o = 0
    for v in M.algebra.quiver.vertices:
        offs[v] = o
        o += N.dim_at(v) * M.dim_at(v)
    rows = []
    zero = field.zero
    for a in M.algebra.quiver.arrows:
        u, w = a.src, a.tgt
        A = M.arrow_maps[a.name]   # M_u -> M_w
        B = N.arrow_maps[a.name]   # N_u -> N_w
        # constraint: f_w A - B f_u = 0, one row per (i < N_w, j < M_u)
        for i in range(N.dim_at(w)):
            for j in range(M.dim_at(u)):
                row = [zero] * nunk
                for t in range(M.dim_at(w)):
                    row[offs[w] + i * M.dim_at(w) + t] = row[offs[w] + i * M.dim_at(w) + t] + A.rows[t][j]
                for s in range(N.dim_at(u)):
                    row[offs[u] + s * M.dim_at(u) + j] = row[offs[u] + s * M.dim_at(u) + j] - B.rows[i][s]
                rows.append(row)
    if not rows:
        sol = Matrix.identity(field, nunk).rows
        return [module_map_from_coords(M, N, v) for v in sol]
    system = Matrix(field, rows, len(rows), nunk)
    return [module_map_from_coords(M, N, v) for v in system.nullspace()]


def hom_dim(M, N):
    return len(hom_basis(M, N))


# -- canonical simple / projective / injective -----------------------------

def simple(algebra, v):
    dims = [0] * algebra.quiver.vertex_count
    dims[v - 1] = 1
    M = Representation(algebra, dims, {}, check=False)
    M.simple_vertex = v
    return M


def std_projective(algebra, verts):
    """The canonical direct sum P_{v_1} + ... + P_{v_k}.

    The result carries .proj_verts and a labelled basis: at vertex u the
    basis is [(t, p) for relevant t, p path v_t -> u], ordered by summand
    then path order.
    """
    verts = tuple(verts)
    field = algebra.field
    basis = {u: [] for u in algebra.quiver.vertices}
    for t, v in enumerate(verts):
        for p in algebra.path_basis():
            if p.src == v:
                basis[p.tgt].append((t, p))
    # order: by summand index, then path-basis order (already appended that way
    # per summand; interleave deterministically by (t, path index))
    for u in basis:
        basis[u].sort(key=lambda tp: (tp[0], algebra.path_index(tp[1])))
    index = {u: {tp: i for i, tp in enumerate(basis[u])} for u in basis}
    dims = [len(basis[u]) for u in algebra.quiver.vertices]
    maps = {}
    for a in algebra.quiver.arrows:
        M = Matrix.zero(field, dims[a.tgt - 1], dims[a.src - 1])
        for j, (t, p) in enumerate(basis[a.src]):
            q = algebra.mul(p, algebra.arrow_path(a.name))
            if q is not None:
                M.rows[index[a.tgt][(t, q)]][j] = field.one
        maps[a.name] = M
    P = Representation(algebra, dims, maps, check=False)
    P.proj_verts = verts
    P.proj_basis = basis
    P.proj_basis_index = index
    return P


def projective(algebra, v):
    return std_projective(algebra, (v,))


def std_injective(algebra, verts):
    """The canonical direct sum I_{v_1} + ... + I_{v_k} (dual path basis)."""
    verts = tuple(verts)
    field = algebra.field
    basis = {u: [] for u in algebra.quiver.vertices}
    for t, v in enumerate(verts):
        for p in algebra.path_basis():
            if p.tgt == v:
                basis[p.src].append((t, p))
    for u in basis:
        basis[u].sort(key=lambda tp: (tp[0], algebra.path_index(tp[1])))
    index = {u: {tp: i for i, tp in enumerate(basis[u])} for u in basis}
    dims = [len(basis[u]) for u in algebra.quiver.vertices]
    maps = {}
    for a in algebra.quiver.arrows:
        M = Matrix.zero(field, dims[a.tgt - 1], dims[a.src - 1])
        for j, (t, q) in enumerate(basis[a.src]):
            # delta_q . a = delta_{q'} when q = a * q'
            if q.arrows and q.arrows[0] == a.name:
                qp = Path(a.tgt, q.tgt, q.arrows[1:])
                M.rows[index[a.tgt][(t, qp)]][j] = field.one
        maps[a.name] = M
    I = Representation(algebra, dims, maps, check=False)
    I.inj_verts = verts
    I.inj_basis = basis
    I.inj_basis_index = index
    return I


def injective(algebra, v):
    return std_injective(algebra, (v,))


# -- sub / quotient machinery ----------------------------------------------

def subrep_from_subspaces(M, spaces):
    """Subrepresentation spanned by per-vertex Subspace objects.

    The spaces must already be arrow-stable.  Returns (rep, inclusion).
    """
    algebra = M.algebra
    field = algebra.field
    incl_mats = []
    dims = []
    for v in algebra.quiver.vertices:
        S = spaces[v]
        dims.append(S.dim)
        # inclusion: columns are the RREF basis vectors
        cols = S.basis
        mat = Matrix(field, [[cols[j][i] for j in range(S.dim)]
                             for i in range(M.dim_at(v))], M.dim_at(v), S.dim)
        incl_mats.append(mat)
    arrow_maps = {}
    for a in algebra.quiver.arrows:
        u, w = a.src, a.tgt
        A = M.arrow_maps[a.name]
        cols = []
        for b in spaces[u].basis:
            img = A.apply(list(b))
            sol = incl_mats[w - 1].solve(img)
            assert sol is not None, "subspaces not arrow-stable at %s" % a.name
            cols.append(sol)
        arrow_maps[a.name] = Matrix(field, [[cols[j][i] for j in range(len(cols))]
                                            for i in range(dims[w - 1])],
                                    dims[w - 1], len(cols))
    K = Representation(algebra, dims, arrow_maps, check=False)
    incl = ModuleMap(K, M, incl_mats, check=False)
    return K, incl


def quotient_by_subspaces(M, spaces):
    """Quotient of M by arrow-stable per-vertex subspaces: (rep, projection)."""
    algebra = M.algebra
    field = algebra.field
    proj_mats = []
    sections = []
    dims = []
    for v in algebra.quiver.vertices:
        S = spaces[v]
        d = M.dim_at(v)
        nonpiv = [j for j in range(d) if j not in S.pivots]
        dims.append(len(nonpiv))
        rows = []
        eye = Matrix.identity(field, d)
        reduced = [S.reduce(eye.rows[c]) for c in range(d)]
        for r in nonpiv:
            rows.append([reduced[c][r] for c in range(d)])
        proj_mats.append(Matrix(field, rows, len(nonpiv), d))
        sec = Matrix.zero(field, d, len(nonpiv))
        for k, r in enumerate(nonpiv):
            sec.rows[r][k] = field.one
        sections.append(sec)
    arrow_maps = {}
    for a in algebra.quiver.arrows:
        u, w = a.src, a.tgt
        arrow_maps[a.name] = proj_mats[w - 1] * M.arrow_maps[a.name] * sections[u - 1]
    Q = Representation(algebra, dims, arrow_maps, check=False)
    proj = ModuleMap(M, Q, proj_mats, check=False)
    return Q, proj


def _zero_spaces(M):
    return {v: Subspace(M.algebra.field, M.dim_at(v)) for v in M.algebra.quiver.vertices}


def kernel(f):
    """(Ker f, inclusion)."""
    spaces = _zero_spaces(f.source)
    for v in f.source.algebra.quiver.vertices:
        for vec in f.at(v).nullspace():
            spaces[v].insert(vec)
    return subrep_from_subspaces(f.source, spaces)


def image(f):
    """(Im f as a subrep of the target, inclusion)."""
    spaces = _zero_spaces(f.target)
    for v in f.source.algebra.quiver.vertices:
        Mv = f.at(v)
        for j in range(Mv.n):
            spaces[v].insert([Mv.rows[i][j] for i in range(Mv.m)])
    return subrep_from_subspaces(f.target, spaces)


def cokernel(f):
    """(Coker f, projection)."""
    spaces = _zero_spaces(f.target)
    for v in f.source.algebra.quiver.vertices:
        Mv = f.at(v)
        for j in range(Mv.n):
            spaces[v].insert([Mv.rows[i][j] for i in range(Mv.m)])
    return quotient_by_subspaces(f.target, spaces)


# -- radical / top / socle ---------------------------------------------------

def radical_mod(M):
    """(rad M, inclusion): the sum of the images of all arrow maps."""
    spaces = _zero_spaces(M)
    for a in sorted(M.algebra.quiver.arrows, key=lambda a: a.name):
        A = M.arrow_maps[a.name]
        for j in range(A.n):
            spaces[a.tgt].insert([A.rows[i][j] for i in range(A.m)])
    return subrep_from_subspaces(M, spaces)


def top(M):
    """(top M = M/rad M, projection)."""
    spaces = _zero_spaces(M)
    for a in sorted(M.algebra.quiver.arrows, key=lambda a: a.name):
        A = M.arrow_maps[a.name]
        for j in range(A.n):
            spaces[a.tgt].insert([A.rows[i][j] for i in range(A.m)])
    return quotient_by_subspaces(M, spaces)


def socle(M):
    """(soc M, inclusion): the joint kernel of the arrows out of each vertex."""
    algebra = M.algebra
    field = algebra.field
    spaces = {}
    for v in algebra.quiver.vertices:
        outs = [M.arrow_maps[a.name] for a in algebra.quiver.arrows_from(v)]
        if outs:
            stacked = vstack(field, outs)
            vecs = stacked.nullspace()
        else:
            vecs = Matrix.identity(field, M.dim_at(v)).rows
        spaces[v] = Subspace(field, M.dim_at(v), vecs)
    return subrep_from_subspaces(M, spaces)


# -- covers, envelopes, resolutions ------------------------------------------

def projective_cover(M):
    """The epi P(M) ->> M lifting the identity of top M.

    P(M) is the canonical sum over v of P_v^{dim (top M)_v}, summands
    ordered by vertex then top-basis position.
    """
    algebra = M.algebra
    T, pr = top(M)
    verts = []
    gens = []  # generator vectors in M, matched to verts
    for v in algebra.quiver.vertices:
        for k in range(T.dim_at(v)):
            verts.append(v)
            # deterministic preimage: the section used by quotient_by_subspaces
            # is the nonpivot standard embedding; rebuild it from pr
            sol = pr.at(v).solve([algebra.field.one if i == k else algebra.field.zero
                                  for i in range(T.dim_at(v))])
            gens.append((v, sol))
    P = std_projective(algebra, verts)
    mats = [Matrix.zero(algebra.field, M.dim_at(u), P.dim_at(u))
            for u in algebra.quiver.vertices]
    for u in algebra.quiver.vertices:
        for col, (t, p) in enumerate(P.proj_basis[u]):
            v, g = gens[t]
            img = M.path_action(p).apply(g)
            for i, x in enumerate(img):
                mats[u - 1].rows[i][col] = x
    cover = ModuleMap(P, M, mats, check=False)
    return cover


def is_projective(M):
    return projective_cover(M).source.total_dim == M.total_dim


def injective_envelope(M):
    """The mono M -> I(M) extending the identity of soc M (canonical sum)."""
    algebra = M.algebra
    field = algebra.field
    S, inc = socle(M)
    verts = []
    functionals = []  # (vertex, functional row on M_v)
    for v in algebra.quiver.vertices:
        sv = Subspace(field, M.dim_at(v))
        socle_vecs = []
        for j in range(S.dim_at(v)):
            vec = [inc.at(v).rows[i][j] for i in range(M.dim_at(v))]
            sv.insert(vec)
            socle_vecs.append(vec)
        nonpiv = [j for j in range(M.dim_at(v)) if j not in sv.pivots]
        cols = socle_vecs + [[field.one if i == j else field.zero
                              for i in range(M.dim_at(v))] for j in nonpiv]
        if M.dim_at(v):
            B = Matrix(field, [[cols[j][i] for j in range(len(cols))]
                               for i in range(M.dim_at(v))])
            Binv = B.inverse()
        for t in range(len(socle_vecs)):
            verts.append(v)
            functionals.append((v, Binv.rows[t]))
    I = std_injective(algebra, verts)
    mats = [Matrix.zero(field, I.dim_at(u), M.dim_at(u))
            for u in algebra.quiver.vertices]
    for u in algebra.quiver.vertices:
        for row, (t, q) in enumerate(I.inj_basis[u]):
            v, xi = functionals[t]
            # coefficient of delta_q in the image of m: xi(m . q)
            act = M.path_action(q)  # M_u -> M_v
            for col in range(M.dim_at(u)):
                mcol = [act.rows[i][col] for i in range(M.dim_at(v))]
                mats[u - 1].rows[row][col] = sum(
                    (a * b for a, b in zip(xi, mcol)), field.zero)
    env = ModuleMap(M, I, mats, check=False)
    return env


def is_injective(M):
    return injective_envelope(M).target.total_dim == M.total_dim


def min_proj_presentation(M):
    """(d: P1 -> P0, epi: P0 ->> M) with P1 covering Ker(epi)."""
    epi = projective_cover(M)
    K, incl = kernel(epi)
    c1 = projective_cover(K)
    d = incl.compose(c1)
    return d, epi


def min_proj_resolution(M, length):
    """Maps [d^-1, d^-2, ..., d^-length] of a minimal projective resolution
    ... -> R^-2 -> R^-1 -> P(M) ->> M.  Stops early at a zero kernel."""
    maps = []
    epi = projective_cover(M)
    cur_epi = epi
    for _ in range(length):
        K, incl = kernel(cur_epi)
        if K.total_dim == 0:
            break
        c = projective_cover(K)
        maps.append(incl.compose(c))
        cur_epi = c
    return maps, epi


def min_inj_coresolution(M, length):
    """(env: M -> I^0, maps [g^0: I^0 -> I^1, ...]), minimal, early stop."""
    env = injective_envelope(M)
    maps = []
    cur = env
    for _ in range(length):
        C, pr = cokernel(cur)
        if C.total_dim == 0:
            break
        e = injective_envelope(C)
        maps.append(e.compose(pr))
        cur = e
    return env, maps


# -- Nakayama functor ---------------------------------------------------------

def proj_path_coeffs(f):
    """Path coefficients of f between canonical projective sums.

    Returns {(s, t, path w_s -> v_t): coeff}; reads the generator images.
    """
    P, Q = f.source, f.target
    if not hasattr(P, "proj_verts") or not hasattr(Q, "proj_verts"):
        raise NotProjective("need canonical projective sums (std_projective)")
    algebra = P.algebra
    coeffs = {}
    for t, v in enumerate(P.proj_verts):
        col = P.proj_basis_index[v][(t, algebra.trivial_path(v))]
        Mv = f.at(v)
        for row, (s, q) in enumerate(Q.proj_basis[v]):
            c = Mv.rows[row][col]
            if c != algebra.field.zero:
                coeffs[(s, t, q)] = c
    return coeffs


def proj_map_from_coeffs(P, Q, coeffs):
    algebra = P.algebra
    field = algebra.field
    mats = [Matrix.zero(field, Q.dim_at(u), P.dim_at(u))
            for u in algebra.quiver.vertices]
    for (s, t, y), c in coeffs.items():
        for u in algebra.quiver.vertices:
            for col, (tt, p) in enumerate(P.proj_basis[u]):
                if tt != t:
                    continue
                q = algebra.mul(y, p)
                if q is None:
                    continue
                row = Q.proj_basis_index[u][(s, q)]
                mats[u - 1].rows[row][col] = mats[u - 1].rows[row][col] + c
    return ModuleMap(P, Q, mats, check=False)


def inj_map_from_coeffs(I, J, coeffs):
    """Map of canonical injective sums with the given path coefficients.

    For a path y: w_s -> v_t, the component I_{v_t} -> I_{w_s} sends
    delta_q to delta_{q'} when q = q' * y (strip the trailing y).
    """
    algebra = I.algebra
    field = algebra.field
    mats = [Matrix.zero(field, J.dim_at(u), I.dim_at(u))
            for u in algebra.quiver.vertices]
    for (s, t, y), c in coeffs.items():
        k = len(y.arrows)
        for u in algebra.quiver.vertices:
            for col, (tt, q) in enumerate(I.inj_basis[u]):
                if tt != t:
                    continue
                if k == 0:
                    qp = q
                elif len(q.arrows) >= k and q.arrows[len(q.arrows) - k:] == y.arrows:
                    qp = Path(q.src, y.src, q.arrows[:len(q.arrows) - k])
                else:
                    continue
                row = J.inj_basis_index[u].get((s, qp))
                if row is None:
                    continue
                mats[u - 1].rows[row][col] = mats[u - 1].rows[row][col] + c
    return ModuleMap(I, J, mats, check=False)


def inj_path_coeffs(g):
    """Path coefficients of a map between canonical injective sums."""
    I, J = g.source, g.target
    if not hasattr(I, "inj_verts") or not hasattr(J, "inj_verts"):
        raise NotInjective("need canonical injective sums (std_injective)")
    algebra = I.algebra
    coeffs = {}
    for s, w in enumerate(J.inj_verts):
        row = J.inj_basis_index[w][(s, algebra.trivial_path(w))]
        Mw = g.at(w)
        for col, (t, y) in enumerate(I.inj_basis[w]):
            c = Mw.rows[row][col]
            if c != algebra.field.zero:
                coeffs[(s, t, y)] = c
    return coeffs


def nakayama(f):
    """nu(f): the map I_{v_*} sums corresponding to f between P_{v_*} sums."""
    coeffs = proj_path_coeffs(f)
    algebra = f.source.algebra
    I = std_injective(algebra, f.source.proj_verts)
    J = std_injective(algebra, f.target.proj_verts)
    return inj_map_from_coeffs(I, J, coeffs)


def nakayama_inverse(g):
    coeffs = inj_path_coeffs(g)
    algebra = g.source.algebra
    P = std_projective(algebra, g.source.inj_verts)
    Q = std_projective(algebra, g.target.inj_verts)
    return proj_map_from_coeffs(P, Q, coeffs)


# -- direct sums --------------------------------------------------------------

def direct_sum(reps):
    """(sum, inclusions, projections); canonical sums stay canonical."""
    assert reps
    algebra = reps[0].algebra
    field = algebra.field
    if all(hasattr(M, "proj_verts") for M in reps):
        verts = tuple(v for M in reps for v in M.proj_verts)
        S = std_projective(algebra, verts)
        incls, projs = [], []
        shift = 0
        for M in reps:
            k = len(M.proj_verts)
            inc_mats, prj_mats = [], []
            for u in algebra.quiver.vertices:
                inc = Matrix.zero(field, S.dim_at(u), M.dim_at(u))
                prj = Matrix.zero(field, M.dim_at(u), S.dim_at(u))
                for col, (t, p) in enumerate(M.proj_basis[u]):
                    row = S.proj_basis_index[u][(t + shift, p)]
                    inc.rows[row][col] = field.one
                    prj.rows[col][row] = field.one
                inc_mats.append(inc)
                prj_mats.append(prj)
            incls.append(ModuleMap(M, S, inc_mats, check=False))
            projs.append(ModuleMap(S, M, prj_mats, check=False))
            shift += k
        return S, incls, projs
    dims = [sum(M.dim_at(v) for M in reps) for v in algebra.quiver.vertices]
    offs = []
    run = [0] * algebra.quiver.vertex_count
    for M in reps:
        offs.append(list(run))
        for i in range(len(run)):
            run[i] += M.dims[i]
    from .linalg import block_diag
    maps = {}
    for a in algebra.quiver.arrows:
        maps[a.name] = block_diag(field, [M.arrow_maps[a.name] for M in reps])
    S = Representation(algebra, dims, maps, check=False)
    incls, projs = [], []
    for k, M in enumerate(reps):
        inc_mats, prj_mats = [], []
        for v in algebra.quiver.vertices:
            inc = Matrix.zero(field, S.dim_at(v), M.dim_at(v))
            prj = Matrix.zero(field, M.dim_at(v), S.dim_at(v))
            for j in range(M.dim_at(v)):
                inc.rows[offs[k][v - 1] + j][j] = field.one
                prj.rows[j][offs[k][v - 1] + j] = field.one
            inc_mats.append(inc)
            prj_mats.append(prj)
        incls.append(ModuleMap(M, S, inc_mats, check=False))
        projs.append(ModuleMap(S, M, prj_mats, check=False))
    return S, incls, projs


def zero_rep(algebra):
    return Representation(algebra, [0] * algebra.quiver.vertex_count, {}, check=False)


# -- endomorphism radical ------------------------------------------------------

def _trace(M):
    f = M.field
    return sum((M.rows[i][i] for i in range(min(M.m, M.n))), f.zero)


def end_radical(M):
    """Basis of rad End(M) via the trace form (Dickson, char 0 exact).

    Over F_p the same bilinear-form kernel is returned, then verified to
    be a nilpotent ideal of the right codimension; FieldNotSupported is
    raised when the verification fails (e.g. p divides a matrix-block
    size of End/rad).
    """
    field = M.algebra.field
    basis = hom_basis(M, M)
    d = len(basis)
    if d == 0:
        return []
    totals = [b.total_matrix() for b in basis]
    gram = Matrix(field, [[_trace(totals[i] * totals[j]) for j in range(d)]
                          for i in range(d)], d, d)
    rad_vecs = gram.nullspace()
    rad = [sum_maps(M, basis, vec) for vec in rad_vecs]
    if field.char != 0:
        _verify_nilpotent_ideal(M, basis, rad)
    return rad


def sum_maps(M, basis, vec):
    out = ModuleMap.zero(basis[0].source, basis[0].target) if basis else ModuleMap.zero(M, M)
    for c, b in zip(vec, basis):
        if c != M.algebra.field.zero:
            out = out + b.scale(c)
    return out


def _verify_nilpotent_ideal(M, end_basis, rad):
    field = M.algebra.field
    n = sum(M.dims)
    cur = [r.total_matrix() for r in rad]
    rad_tot = cur
    steps = 0
    while cur and steps <= n + 1:
        if all(X.is_zero() for X in cur):
            return
        nxt_space = Subspace(field, n * n)
        nxt = []
        for X in cur:
            for R in rad_tot:
                Y = X * R
                vec = [x for row in Y.rows for x in row]
                if nxt_space.insert(vec):
                    nxt.append(Y)
        cur = nxt
        steps += 1
    raise FieldNotSupported(
        "trace-form kernel of End is not nilpotent over %s" % field.name)
