"""The category C_n(proj Lambda) and its mid-sized ambient C_n(mod Lambda).

Objects of C_n(proj Lambda) are ComplexN: n components, each a canonical
projective sum given by its vertex tuple, with PathMat differentials
satisfying d d = 0.  Chain maps are solved degreewise in path
coordinates, which keeps every Hom computation a small exact system.

Kernels and cokernels leave the category; they are computed degreewise
at the representation level (MidComplexN) and pulled back to ComplexN
by `standardize` when every component happens to be projective.

The named complexes built from an indecomposable projective P and its
simple top S = P/rad P:

  J_i(P)  P at degrees i, i+1 with identity differential (projective
          and injective for 1 <= i <= n-1),
  T(P)    P at degree n (projective),  S(P)  P at degree 1 (injective),
  R_j(P)  the minimal projective resolution of S truncated so that P
          sits in degree j+1,
  L_j(P)  P in degree j followed by the Nakayama-preimage of the minimal
          injective coresolution of S,
  B_j(P)  the R-window glued to the L-window over the composite
          differential,

together with rho: R_j -> J_j (minimal right almost split), lambda:
J_j -> L_j (minimal left almost split), sigma: R_j -> B_j and tau:
B_j -> L_j; R_j -> J_j + B_j -> L_j is an almost split sequence.  The
constructions extend to j = 0 (where "J_0" degenerates to S(P), giving
the source map out of S(P)) and j = n ("J_n" = T(P), giving the sink
map into T(P)); knitting uses both ends.
"""

from .errors import (IndexOutOfRange, ResolutionTooLong, SizeMismatch,
                     ClassificationImpossible, NotIrreducible)
from .linalg import Matrix
from .projmod import (PathMat, cached_std_projective, hom_units, is_retraction,
                      is_section, pathmat_coords, pathmat_from_coords)
from .reps import (ModuleMap, hom_basis as rep_hom_basis, injective_envelope,
                   is_projective, kernel as rep_kernel, cokernel as rep_cokernel,
                   min_inj_coresolution, min_proj_resolution, inj_path_coeffs,
                   projective_cover, simple, zero_rep)


class ComplexN:
    def __init__(self, algebra, n, verts, diffs, check=True):
        self.algebra = algebra
        self.n = n
        self.verts = [tuple(v) for v in verts]
        assert len(self.verts) == n
        self.diffs = list(diffs)
        assert len(self.diffs) == n - 1
        for i, d in enumerate(self.diffs):
            assert d.src == self.verts[i] and d.tgt == self.verts[i + 1]
        if check:
            for i in range(n - 2):
                assert self.diffs[i + 1].compose(self.diffs[i]).is_zero(), \
                    "differential does not square to zero"
        self._mid = None

    @classmethod
    def zero(cls, algebra, n):
        verts = [()] * n
        diffs = [PathMat.zero(algebra, (), ()) for _ in range(n - 1)]
        return cls(algebra, n, verts, diffs, check=False)

    def is_zero(self):
        return all(not v for v in self.verts)

    def component(self, i):
        """Materialized component at degree i (1-based)."""
        return cached_std_projective(self.algebra, self.verts[i - 1])

    def dims(self):
        return tuple(self.component(i).dims for i in range(1, self.n + 1))

    @property
    def total_dim(self):
        return sum(sum(d) for d in self.dims())

    def dim_data(self):
        """Iso-invariant shape: per-degree sorted summand vertices."""
        return tuple(tuple(sorted(v)) for v in self.verts)

    def label(self):
        parts = []
        for v in self.verts:
            parts.append("+".join("P%d" % x for x in sorted(v)) if v else "0")
        return "(" + "->".join(parts) + ")"

    def to_mid(self):
        if self._mid is None:
            comps = [self.component(i) for i in range(1, self.n + 1)]
            diffs = [d.to_module_map() for d in self.diffs]
            self._mid = MidComplexN(self.algebra, self.n, comps, diffs)
        return self._mid

    def __repr__(self):
        return "ComplexN%s" % self.label()


class ChainMap:
    def __init__(self, source, target, parts, check=True):
        assert source.n == target.n
        self.source = source
        self.target = target
        self.parts = list(parts)
        if check:
            for i in range(source.n - 1):
                lhs = self.parts[i + 1].compose(source.diffs[i])
                rhs = target.diffs[i].compose(self.parts[i])
                assert (lhs - rhs).is_zero(), "squares do not commute"

    @classmethod
    def zero(cls, X, Y):
        return cls(X, Y, [PathMat.zero(X.algebra, X.verts[i], Y.verts[i])
                          for i in range(X.n)], check=False)

    @classmethod
    def identity(cls, X):
        return cls(X, X, [PathMat.identity(X.algebra, v) for v in X.verts],
                   check=False)

    def compose(self, other):
        """self after other."""
        return ChainMap(other.source, self.target,
                        [a.compose(b) for a, b in zip(self.parts, other.parts)],
                        check=False)

    def __add__(self, other):
        return ChainMap(self.source, self.target,
                        [a + b for a, b in zip(self.parts, other.parts)],
                        check=False)

    def __sub__(self, other):
        return ChainMap(self.source, self.target,
                        [a - b for a, b in zip(self.parts, other.parts)],
                        check=False)

    def scale(self, c):
        return ChainMap(self.source, self.target,
                        [p.scale(c) for p in self.parts], check=False)

    def is_zero(self):
        return all(p.is_zero() for p in self.parts)

    def is_iso(self):
        mid = self.to_mid()
        return all(m.is_iso() for m in mid.parts)

    def to_mid(self):
        return MidChainMap(self.source.to_mid(), self.target.to_mid(),
                           [p.to_module_map() for p in self.parts])

    def __repr__(self):
        return "ChainMap(%s -> %s)" % (self.source.label(), self.target.label())


class MidComplexN:
    """A complex with arbitrary representation components (C_n(mod))."""

    def __init__(self, algebra, n, comps, diffs, check=True):
        self.algebra = algebra
        self.n = n
        self.comps = list(comps)
        self.diffs = list(diffs)
        if check:
            for i in range(n - 2):
                assert self.diffs[i + 1].compose(self.diffs[i]).is_zero()

    def is_zero(self):
        return all(c.total_dim == 0 for c in self.comps)

    @property
    def total_dim(self):
        return sum(c.total_dim for c in self.comps)

    def dims(self):
        return tuple(c.dims for c in self.comps)

    def __repr__(self):
        return "MidComplexN%s" % (self.dims(),)


class MidChainMap:
    def __init__(self, source, target, parts):
        self.source = source
        self.target = target
        self.parts = list(parts)

    def compose(self, other):
        return MidChainMap(other.source, self.target,
                           [a.compose(b) for a, b in zip(self.parts, other.parts)])

    def is_zero(self):
        return all(p.is_zero() for p in self.parts)

    def is_iso(self):
        return all(p.is_iso() for p in self.parts)


# -- hom solving --------------------------------------------------------------

def cx_hom_units(X, Y):
    """Per-degree unit lists and global offsets for Hom coordinates."""
    units = [hom_units(X.algebra, X.verts[i], Y.verts[i]) for i in range(X.n)]
    offsets = []
    o = 0
    for u in units:
        offsets.append(o)
        o += len(u)
    return units, offsets, o


def chain_map_coords(f):
    vec = []
    units, _, _ = cx_hom_units(f.source, f.target)
    for i in range(f.source.n):
        vec.extend(pathmat_coords(f.parts[i], units[i]))
    return vec


def chain_map_from_coords(X, Y, vec):
    units, offsets, total = cx_hom_units(X, Y)
    parts = []
    for i in range(X.n):
        sub = vec[offsets[i]:offsets[i] + len(units[i])]
        parts.append(pathmat_from_coords(X.algebra, X.verts[i], Y.verts[i],
                                         units[i], sub))
    return ChainMap(X, Y, parts, check=False)


def hom_basis_cx(X, Y):
    """Deterministic basis of the chain maps X -> Y in path coordinates."""
    if X.n != Y.n:
        raise SizeMismatch("complexes of different sizes")
    if X.algebra is not Y.algebra:
        raise SizeMismatch("complexes over different algebras")
    A = X.algebra
    field = A.field
    units, offsets, total = cx_hom_units(X, Y)
    if total == 0:
        return []
    rows = []
    for i in range(X.n - 1):
        eqn_units = hom_units(A, X.verts[i], Y.verts[i + 1])
        if not eqn_units:
            continue
        cols = {}
        for k, u in enumerate(units[i + 1]):
            um = PathMat.unit(A, X.verts[i + 1], Y.verts[i + 1], *u)
            cols[offsets[i + 1] + k] = pathmat_coords(um.compose(X.diffs[i]),
                                                      eqn_units)
        for k, u in enumerate(units[i]):
            um = PathMat.unit(A, X.verts[i], Y.verts[i], *u)
            vec = pathmat_coords(Y.diffs[i].compose(um), eqn_units)
            cols[offsets[i] + k] = [-x for x in vec]
        for r in range(len(eqn_units)):
            row = [field.zero] * total
            for c, vec in cols.items():
                row[c] = row[c] + vec[r]
            rows.append(row)
    if not rows:
        basis_vecs = Matrix.identity(field, total).rows
    else:
        basis_vecs = Matrix(field, rows, len(rows), total).nullspace()
    return [chain_map_from_coords(X, Y, v) for v in basis_vecs]


def direct_sum_cx(complexes):
    """(sum, inclusions, projections) of complexes of equal size."""
    assert complexes
    A = complexes[0].algebra
    n = complexes[0].n
    verts = [sum((list(X.verts[i]) for X in complexes), []) for i in range(n)]
    shifts = []
    run = [0] * n
    for X in complexes:
        shifts.append(list(run))
        for i in range(n):
            run[i] += len(X.verts[i])
    diffs = []
    for i in range(n - 1):
        entries = {}
        for k, X in enumerate(complexes):
            for (j, ii), d in X.diffs[i].entries.items():
                entries[(j + shifts[k][i + 1], ii + shifts[k][i])] = dict(d)
        diffs.append(PathMat(A, verts[i], verts[i + 1], entries))
    S = ComplexN(A, n, verts, diffs, check=False)
    incls, projs = [], []
    one = A.field.one
    for k, X in enumerate(complexes):
        iparts, pparts = [], []
        for i in range(n):
            ie = {(shifts[k][i] + t, t): {A.trivial_path(v): one}
                  for t, v in enumerate(X.verts[i])}
            pe = {(t, shifts[k][i] + t): {A.trivial_path(v): one}
                  for t, v in enumerate(X.verts[i])}
            iparts.append(PathMat(A, X.verts[i], S.verts[i], ie))
            pparts.append(PathMat(A, S.verts[i], X.verts[i], pe))
        incls.append(ChainMap(X, S, iparts, check=False))
        projs.append(ChainMap(S, X, pparts, check=False))
    return S, incls, projs


# -- kernels, cokernels, standardization --------------------------------------

def _restrict(f, incl_src, incl_tgt):
    """The map g with incl_tgt g = f incl_src (inclusions mono)."""
    algebra = f.source.algebra
    field = algebra.field
    mats = []
    for v in algebra.quiver.vertices:
        Fi = f.at(v) * incl_src.at(v)
        cols = []
        for j in range(Fi.n):
            col = [Fi.rows[i][j] for i in range(Fi.m)]
            sol = incl_tgt.at(v).solve(col)
            assert sol is not None
            cols.append(sol)
        m = incl_tgt.at(v).n
        mats.append(Matrix(field, [[cols[j][i] for j in range(len(cols))]
                                   for i in range(m)], m, len(cols)))
    return ModuleMap(incl_src.source, incl_tgt.source, mats, check=False)


def _descend(f, proj_src, proj_tgt):
    """The map g with g proj_src = proj_tgt f (projections epi)."""
    algebra = f.source.algebra
    field = algebra.field
    mats = []
    for v in algebra.quiver.vertices:
        P = proj_src.at(v)
        rows_out = proj_tgt.at(v) * f.at(v)
        cols = []
        for k in range(P.m):
            e = [field.one if i == k else field.zero for i in range(P.m)]
            x = P.solve(e)
            assert x is not None
            cols.append(rows_out.apply(x))
        m = rows_out.m
        mats.append(Matrix(field, [[cols[j][i] for j in range(P.m)]
                                   for i in range(m)], m, P.m))
    return ModuleMap(proj_src.target, proj_tgt.target, mats, check=False)


def kernel_cx(f):
    """Degreewise kernel of a chain map, with the inclusion.

    Accepts a ChainMap or MidChainMap; returns (MidComplexN, MidChainMap).
    """
    if isinstance(f, ChainMap):
        f = f.to_mid()
    comps, incls = [], []
    for i in range(f.source.n):
        K, inc = rep_kernel(f.parts[i])
        comps.append(K)
        incls.append(inc)
    diffs = [_restrict(f.source.diffs[i], incls[i], incls[i + 1])
             for i in range(f.source.n - 1)]
    Kc = MidComplexN(f.source.algebra, f.source.n, comps, diffs, check=False)
    return Kc, MidChainMap(Kc, f.source, incls)


def cokernel_cx(f):
    """Degreewise cokernel with the projection: (MidComplexN, MidChainMap)."""
    if isinstance(f, ChainMap):
        f = f.to_mid()
    comps, projs = [], []
    for i in range(f.source.n):
        C, pr = rep_cokernel(f.parts[i])
        comps.append(C)
        projs.append(pr)
    diffs = [_descend(f.target.diffs[i], projs[i], projs[i + 1])
             for i in range(f.target.n - 1)]
    Cc = MidComplexN(f.target.algebra, f.target.n, comps, diffs, check=False)
    return Cc, MidChainMap(f.target, Cc, projs)


def in_Cn_proj(K):
    """True when every component of the mid complex is projective."""
    return all(c.total_dim == 0 or is_projective(c) for c in K.comps)


def standardize(K):
    """A ComplexN isomorphic to a mid complex of projectives.

    Returns (Z, iso: MidChainMap Z.to_mid() -> K).
    """
    algebra = K.algebra
    comps, isos = [], []
    for c in K.comps:
        cover = projective_cover(c)
        assert cover.source.total_dim == c.total_dim, "component not projective"
        comps.append(cover.source.proj_verts)
        isos.append(cover)  # iso std -> c
    diffs = []
    for i in range(K.n - 1):
        # d_Z = iso_{i+1}^{-1} d_K iso_i, extracted in path coordinates
        d = isos[i + 1].inverse().compose(K.diffs[i]).compose(isos[i])
        diffs.append(PathMat.from_module_map(d))
    Z = ComplexN(algebra, K.n, comps, diffs, check=False)
    return Z, MidChainMap(Z.to_mid(), K, isos)


def chain_map_from_mid(X, Y, parts):
    """Rebuild a path-coordinate ChainMap from materialized components."""
    return ChainMap(X, Y, [PathMat.from_module_map(p) for p in parts],
                    check=False)


# -- named complexes -----------------------------------------------------------

def _proj_vertex(algebra, P):
    if isinstance(P, int):
        return P
    verts = getattr(P, "proj_verts", None)
    if verts is None or len(verts) != 1:
        raise IndexOutOfRange("need an indecomposable projective")
    return verts[0]


def make_J(P, i, n, algebra=None, _extended=False):
    """J_i(P): P at degrees i, i+1 with identity differential."""
    algebra = algebra or P.algebra
    v = _proj_vertex(algebra, P)
    if not (1 <= i <= n - 1) and not (_extended and 0 <= i <= n):
        raise IndexOutOfRange("J_i wants 1 <= i <= n-1")
    if i == 0:
        return make_S(P, n, algebra=algebra)
    if i == n:
        return make_T(P, n, algebra=algebra)
    verts = [()] * n
    verts[i - 1] = verts[i] = (v,)
    diffs = []
    for t in range(n - 1):
        if t == i - 1:
            diffs.append(PathMat.identity(algebra, (v,)))
        else:
            diffs.append(PathMat.zero(algebra, verts[t], verts[t + 1]))
    return ComplexN(algebra, n, verts, diffs, check=False)


def make_stalk(P, k, n, algebra=None):
    """P concentrated in degree k."""
    algebra = algebra or P.algebra
    v = _proj_vertex(algebra, P)
    if not (1 <= k <= n):
        raise IndexOutOfRange("stalk degree out of range")
    verts = [()] * n
    verts[k - 1] = (v,)
    diffs = [PathMat.zero(algebra, verts[t], verts[t + 1]) for t in range(n - 1)]
    return ComplexN(algebra, n, verts, diffs, check=False)


def make_T(P, n, algebra=None):
    return make_stalk(P, n, n, algebra=algebra)


def make_S(P, n, algebra=None):
    return make_stalk(P, 1, n, algebra=algebra)


def _resolution_window(algebra, v, depth):
    """PathMats [d^-1, ..., d^-depth] of the minimal projective resolution
    of the simple at v (R^0 = P_v), with their vertex tuples."""
    maps, _ = min_proj_resolution(simple(algebra, v), depth)
    out = []
    for m in maps:
        out.append(PathMat.from_module_map(m))
    return out


def _coresolution_window(algebra, v, depth):
    """Nakayama preimages: vertex tuples L^0..L^depth and PathMats
    [d_L^0, ..., d_L^{depth-1}] with L^0 = P_v."""
    env, maps = min_inj_coresolution(simple(algebra, v), depth)
    I0 = env.target
    assert I0.inj_verts == (v,), "envelope of top P_v is I_v"
    lverts = [(v,)]
    dmaps = []
    for g in maps:
        coeffs = inj_path_coeffs(g)
        src = g.source.inj_verts
        tgt = g.target.inj_verts
        entries = {}
        for (s, t, y), c in coeffs.items():
            entries.setdefault((s, t), {})[y] = c
        dmaps.append(PathMat(algebra, src, tgt, entries))
        lverts.append(tgt)
    while len(lverts) <= depth:
        dmaps.append(PathMat.zero(algebra, lverts[-1], ()))
        lverts.append(())
    return lverts, dmaps


def make_R(P, j, n, algebra=None):
    """R_j(P): ... -> R^{-2} -> R^{-1} -> P placed so P sits in degree j+1.

    Extended range j = 0..n; R_0(P) = stalk P in degree 1, R_n(P) is the
    window R^{-n} ... R^{-1} (the domain of the sink map into T(P))."""
    algebra = algebra or P.algebra
    v = _proj_vertex(algebra, P)
    if not (0 <= j <= n):
        raise IndexOutOfRange("R_j wants 0 <= j <= n")
    rmaps = _resolution_window(algebra, v, j)
    verts = [()] * n
    diffs = [None] * (n - 1)
    if j < n:
        verts[j] = (v,)
    # degree t (1-based) carries R^{t-j-1} for t <= j
    for t in range(1, j + 1):
        k = j + 1 - t  # R^{-k}
        verts[t - 1] = rmaps[k - 1].src if k <= len(rmaps) else ()
    for t in range(1, n):
        if t <= j:
            k = j + 1 - t
            if k <= len(rmaps):
                diffs[t - 1] = rmaps[k - 1]
            else:
                diffs[t - 1] = PathMat.zero(algebra, verts[t - 1], verts[t])
        else:
            diffs[t - 1] = PathMat.zero(algebra, verts[t - 1], verts[t])
    return ComplexN(algebra, n, verts, diffs, check=False)


def make_L(P, j, n, algebra=None):
    """L_j(P): P in degree j followed by L^1 ... L^{n-j}.

    Extended range: L_0(P) = (L^1 -> ... -> L^n), the target of the
    source map out of S(P)."""
    algebra = algebra or P.algebra
    v = _proj_vertex(algebra, P)
    if not (0 <= j <= n):
        raise IndexOutOfRange("L_j wants 0 <= j <= n")
    lverts, dmaps = _coresolution_window(algebra, v, n - j)
    verts = [()] * n
    diffs = [None] * (n - 1)
    for t in range(max(j, 1), n + 1):
        verts[t - 1] = lverts[t - j]
    for t in range(1, n):
        if t >= max(j, 1) and t + 1 - j <= n - j and t - j >= 0:
            diffs[t - 1] = dmaps[t - j]
        else:
            diffs[t - 1] = PathMat.zero(algebra, verts[t - 1], verts[t])
    return ComplexN(algebra, n, verts, diffs, check=False)


def make_B(P, j, n, algebra=None):
    """B_j(P): R^{-j} ... R^{-1} glued to L^1 ... L^{n-j} over d_L^0 d^{-1}."""
    algebra = algebra or P.algebra
    v = _proj_vertex(algebra, P)
    if not (1 <= j <= n - 1):
        raise IndexOutOfRange("B_j wants 1 <= j <= n-1")
    rmaps = _resolution_window(algebra, v, j)
    lverts, dmaps = _coresolution_window(algebra, v, n - j)
    verts = [()] * n
    for t in range(1, j + 1):
        k = j + 1 - t
        verts[t - 1] = rmaps[k - 1].src if k <= len(rmaps) else ()
    for t in range(j + 1, n + 1):
        verts[t - 1] = lverts[t - j]
    diffs = []
    for t in range(1, n):
        if t < j:
            k = j + 1 - t
            if k <= len(rmaps):
                d = rmaps[k - 1]
                # interior resolution map R^{-k} -> R^{-k+1}
                diffs.append(PathMat(algebra, verts[t - 1], verts[t],
                                     d.entries) if k >= 2 else d)
            else:
                diffs.append(PathMat.zero(algebra, verts[t - 1], verts[t]))
        elif t == j:
            if rmaps:
                diffs.append(dmaps[0].compose(rmaps[0]))
            else:
                diffs.append(PathMat.zero(algebra, verts[t - 1], verts[t]))
        else:
            diffs.append(dmaps[t - j])
    return ComplexN(algebra, n, verts, diffs, check=False)


def make_rho(P, j, n, algebra=None):
    """rho_j: R_j(P) -> J_j(P), the minimal right almost split map into
    the projective J_j(P) (j = n gives the sink map into T(P))."""
    algebra = algebra or P.algebra
    v = _proj_vertex(algebra, P)
    if not (1 <= j <= n):
        raise IndexOutOfRange("rho_j wants 1 <= j <= n")
    R = make_R(P, j, n, algebra=algebra)
    J = make_J(P, j, n, algebra=algebra, _extended=True)
    rmaps = _resolution_window(algebra, v, min(j, 1) and 1)
    parts = []
    for t in range(1, n + 1):
        if t == j:
            if rmaps:
                parts.append(rmaps[0])  # d^{-1}: R^{-1} -> P
            else:
                parts.append(PathMat.zero(algebra, R.verts[t - 1], J.verts[t - 1]))
        elif t == j + 1 and t <= n:
            parts.append(PathMat.identity(algebra, (v,)))
        else:
            parts.append(PathMat.zero(algebra, R.verts[t - 1], J.verts[t - 1]))
    return ChainMap(R, J, parts)


def make_lambda(P, j, n, algebra=None):
    """lambda_j: J_j(P) -> L_j(P), the minimal left almost split map out
    of the injective J_j(P) (j = 0 gives the source map out of S(P))."""
    algebra = algebra or P.algebra
    v = _proj_vertex(algebra, P)
    if not (0 <= j <= n - 1):
        raise IndexOutOfRange("lambda_j wants 0 <= j <= n-1")
    J = make_J(P, j, n, algebra=algebra, _extended=True)
    L = make_L(P, j, n, algebra=algebra)
    _, dmaps = _coresolution_window(algebra, v, n - j)
    parts = []
    for t in range(1, n + 1):
        if t == j:
            parts.append(PathMat.identity(algebra, (v,)))
        elif t == j + 1:
            parts.append(dmaps[0])  # d_L^0: P -> L^1
        else:
            parts.append(PathMat.zero(algebra, J.verts[t - 1], L.verts[t - 1]))
    return ChainMap(J, L, parts)


def make_sigma(P, j, n, algebra=None):
    algebra = algebra or P.algebra
    v = _proj_vertex(algebra, P)
    if not (1 <= j <= n - 1):
        raise IndexOutOfRange("sigma_j wants 1 <= j <= n-1")
    R = make_R(P, j, n, algebra=algebra)
    B = make_B(P, j, n, algebra=algebra)
    _, dmaps = _coresolution_window(algebra, v, n - j)
    parts = []
    for t in range(1, n + 1):
        if t <= j:
            parts.append(PathMat.identity(algebra, R.verts[t - 1]))
        elif t == j + 1:
            parts.append(dmaps[0])
        else:
            parts.append(PathMat.zero(algebra, R.verts[t - 1], B.verts[t - 1]))
    return ChainMap(R, B, parts)


def make_tau(P, j, n, algebra=None):
    algebra = algebra or P.algebra
    v = _proj_vertex(algebra, P)
    if not (1 <= j <= n - 1):
        raise IndexOutOfRange("tau_j wants 1 <= j <= n-1")
    B = make_B(P, j, n, algebra=algebra)
    L = make_L(P, j, n, algebra=algebra)
    rmaps = _resolution_window(algebra, v, 1)
    parts = []
    for t in range(1, n + 1):
        if t < j:
            parts.append(PathMat.zero(algebra, B.verts[t - 1], L.verts[t - 1]))
        elif t == j:
            if rmaps:
                parts.append(rmaps[0])
            else:
                parts.append(PathMat.zero(algebra, B.verts[t - 1], L.verts[t - 1]))
        else:
            parts.append(PathMat.identity(algebra, B.verts[t - 1]))
    return ChainMap(B, L, parts)


def almost_split_sequence(P, j, n, algebra=None):
    """(left: R -> J + B, right: J + B -> L); right uses (lambda, -tau) so
    that the composite vanishes and each degree is split exact."""
    algebra = algebra or P.algebra
    R = make_R(P, j, n, algebra=algebra)
    L = make_L(P, j, n, algebra=algebra)
    rho = make_rho(P, j, n, algebra=algebra)
    lam = make_lambda(P, j, n, algebra=algebra)
    sig = make_sigma(P, j, n, algebra=algebra)
    tau = make_tau(P, j, n, algebra=algebra)
    E, incls, projs = direct_sum_cx([rho.target, sig.target])
    left = incls[0].compose(rho) + incls[1].compose(sig)
    right = lam.compose(projs[0]) - tau.compose(projs[1])
    return left, right


# -- shifts and embeddings -----------------------------------------------------

def shift(X, j):
    """X[j] truncated back to degrees 1..n: (X[j])^t = X^{t+j}, with the
    sign (-1)^j on the differentials."""
    A = X.algebra
    n = X.n
    verts = [X.verts[t + j - 1] if 1 <= t + j <= n else () for t in range(1, n + 1)]
    sign = A.field.one if j % 2 == 0 else -A.field.one
    diffs = []
    for t in range(1, n):
        if 1 <= t + j <= n - 1:
            d = X.diffs[t + j - 1].scale(sign)
            diffs.append(PathMat(A, verts[t - 1], verts[t], d.entries))
        else:
            diffs.append(PathMat.zero(A, verts[t - 1], verts[t]))
    return ComplexN(A, n, verts, diffs, check=False)


def phi_embed(X, i, n):
    """phi_i: C_2 -> C_n, placing X^1 at degree i+1 and X^2 at degree i+2."""
    if X.n != 2:
        raise SizeMismatch("phi embeds 2-term complexes")
    if not (0 <= i <= n - 2):
        raise IndexOutOfRange("phi_i wants 0 <= i <= n-2")
    A = X.algebra
    verts = [()] * n
    verts[i] = X.verts[0]
    verts[i + 1] = X.verts[1]
    sign = A.field.one if i % 2 == 0 else -A.field.one
    diffs = []
    for t in range(1, n):
        if t == i + 1:
            diffs.append(X.diffs[0].scale(sign))
        else:
            diffs.append(PathMat.zero(A, verts[t - 1], verts[t]))
    return ComplexN(A, n, verts, diffs, check=False)


def phi_embed_map(f, i, n):
    X = phi_embed(f.source, i, n)
    Y = phi_embed(f.target, i, n)
    parts = []
    for t in range(1, n + 1):
        if t == i + 1:
            parts.append(f.parts[0])
        elif t == i + 2:
            parts.append(f.parts[1])
        else:
            parts.append(PathMat.zero(f.source.algebra, X.verts[t - 1],
                                      Y.verts[t - 1]))
    return ChainMap(X, Y, parts, check=False)


# -- degreewise classification --------------------------------------------------

def mono_or_epi(f):
    """'mono', 'epi', 'both', or 'neither' by degreewise rank."""
    mid = f.to_mid() if isinstance(f, ChainMap) else f
    mono = all(p.is_mono() for p in mid.parts)
    epi = all(p.is_epi() for p in mid.parts)
    if mono and epi:
        return "both"
    if mono:
        return "mono"
    if epi:
        return "epi"
    return "neither"


def classify_entries(f, certified_irreducible=True):
    """The degreewise trichotomy of an irreducible chain map:
    'sec' (all entries split monos), 'ret' (all split epis), or
    'ret-irred-sec' (one entry irreducible in proj, retractions below,
    sections above).  Entry irreducibility is the radical test
    f^i in rad \\ rad^2 of proj Lambda, visible on path coefficients."""
    if not certified_irreducible:
        raise NotIrreducible("caller must certify irreducibility")
    n = f.source.n
    secs = [is_section(p) for p in f.parts]
    rets = [is_retraction(p) for p in f.parts]
    irr = [p.is_radical() and not p.in_rad_power(2) and not p.is_zero()
           for p in f.parts]
    if all(secs):
        return "sec"
    if all(rets):
        return "ret"
    for i in range(n):
        if irr[i] and all(secs[t] for t in range(i + 1, n)) \
                and all(rets[t] for t in range(i)):
            return "ret-irred-sec"
    raise ClassificationImpossible(
        "no trichotomy pattern matches (sections: %s, retractions: %s, "
        "irreducible entries: %s)" % (secs, rets, irr))
