"""Adapters presenting mod Lambda and C_n(proj Lambda) to the generic
Krull-Schmidt machinery (decompose, knitting, radical tables).

Both adapters expose the same protocol:

  hom(X, Y)            cached RREF-normalized basis of Hom(X, Y)
  hom_coords(X, Y, f)  coordinates of a morphism in that basis
  compose/add/scale/is_zero/is_invertible/identity/combine
  total_dim/dim_data/label/cache
  idempotent_image(X, e) -> (summand, inclusion, projection)

plus the structure a knitting engine needs: the lists of indecomposable
projective and injective objects together with their minimal right
(resp. left) almost split maps, and split-exact cokernels/kernels of
assembled mesh maps.
"""

from .complexes import (ChainMap, ComplexN, MidComplexN, _restrict,
                        chain_map_coords, chain_map_from_coords, cokernel_cx,
                        hom_basis_cx, in_Cn_proj, kernel_cx, make_lambda,
                        make_rho, standardize)
from .decompose import decompose, find_iso, is_indecomposable, iso_test
from .linalg import Matrix, Subspace
from .projmod import PathMat
from .reps import (ModuleMap, cokernel as rep_cokernel,
                   hom_basis as rep_hom_basis, image as rep_image, injective,
                   kernel as rep_kernel, module_map_from_coords, projective,
                   quotient_by_subspaces, radical_mod, socle, zero_rep)


class _BaseOps:
    def __init__(self, algebra):
        self.algebra = algebra
        self.field = algebra.field
        self._next_token = 0
        self._pair_cache = {}

    # -- object bookkeeping -------------------------------------------------

    def cache(self, X):
        c = getattr(X, "_cnproj_cache", None)
        if c is None:
            c = X._cnproj_cache = {"token": self._next_token}
            self._next_token += 1
        return c

    def token(self, X):
        return self.cache(X)["token"]

    # -- hom spaces ----------------------------------------------------------

    def hom(self, X, Y):
        return self._hom_entry(X, Y)[0]

    def hom_dim(self, X, Y):
        return len(self.hom(X, Y))

    def _hom_entry(self, X, Y):
        key = (self.token(X), self.token(Y))
        entry = self._pair_cache.get(key)
        if entry is None:
            raw = self._hom_raw(X, Y)
            if not raw:
                entry = ([], [])
            else:
                vecs = [self._full_coords(f) for f in raw]
                R, pivots = Matrix(self.field, vecs, len(vecs),
                                   len(vecs[0])).rref()
                basis = [self._from_full_coords(X, Y, R.rows[i])
                         for i in range(len(pivots))]
                entry = (basis, pivots)
            self._pair_cache[key] = entry
        return entry

    def hom_coords(self, X, Y, f):
        _, pivots = self._hom_entry(X, Y)
        full = self._full_coords(f)
        return [full[p] for p in pivots]

    def combine(self, X, Y, basis, coeffs):
        out = None
        for c, b in zip(coeffs, basis):
            if c == self.field.zero:
                continue
            t = self.scale(b, c)
            out = t if out is None else self.add(out, t)
        if out is None:
            return self.zero_morphism(X, Y)
        return out

    # -- generic forwarding ---------------------------------------------------

    def is_indec(self, X):
        return is_indecomposable(self, X)

    def decompose(self, X):
        return decompose(self, X)

    def find_iso(self, X, Y):
        return find_iso(self, X, Y)

    def iso_test(self, X, Y):
        return iso_test(self, X, Y)


class ModCategory(_BaseOps):
    """mod Lambda: objects are Representations, morphisms ModuleMaps."""

    def _hom_raw(self, X, Y):
        return rep_hom_basis(X, Y)

    def _full_coords(self, f):
        return f.coords()

    def _from_full_coords(self, X, Y, vec):
        return module_map_from_coords(X, Y, vec)

    def zero_morphism(self, X, Y):
        return ModuleMap.zero(X, Y)

    def compose(self, f, g):
        return f.compose(g)

    def add(self, f, g):
        return f + g

    def scale(self, f, c):
        return f.scale(c)

    def is_zero(self, f):
        return f.is_zero()

    def is_invertible(self, f):
        return f.source.dims == f.target.dims and f.is_iso()

    def identity(self, X):
        return ModuleMap.identity(X)

    def total_dim(self, X):
        return X.total_dim

    def dim_data(self, X):
        return X.dims

    def label(self, X):
        return "M" + str(tuple(X.dims))

    def zero_object(self):
        return zero_rep(self.algebra)

    def idempotent_image(self, X, e):
        return _rep_idempotent_image(X, e)

    def direct_sum(self, objs):
        from .reps import direct_sum
        return direct_sum(objs)

    # -- AR structure ---------------------------------------------------------

    def projectives(self):
        """[(P_v, domain of the sink map, the sink map rad P_v -> P_v)]."""
        out = []
        for v in self.algebra.quiver.vertices:
            P = projective(self.algebra, v)
            R, incl = radical_mod(P)
            out.append((P, R, incl))
        return out

    def injectives(self):
        """[(I_v, target of the source map, the source map I_v -> I_v/soc)]."""
        out = []
        for v in self.algebra.quiver.vertices:
            I = injective(self.algebra, v)
            spaces = {}
            S, inc = socle(I)
            for u in self.algebra.quiver.vertices:
                sp = Subspace(self.field, I.dim_at(u))
                for j in range(S.dim_at(u)):
                    sp.insert([inc.at(u).rows[i][j] for i in range(I.dim_at(u))])
                spaces[u] = sp
            Q, pr = quotient_by_subspaces(I, spaces)
            out.append((I, Q, pr))
        return out

    def mesh_cokernel(self, f):
        """(Z, projection) for the a.s. sequence completion in mod."""
        return rep_cokernel(f)

    def mesh_kernel(self, f):
        return rep_kernel(f)


class CxCategory(_BaseOps):
    """C_n(proj Lambda): objects ComplexN, morphisms ChainMaps."""

    def __init__(self, algebra, n):
        super().__init__(algebra)
        self.n = n

    def _hom_raw(self, X, Y):
        return hom_basis_cx(X, Y)

    def _full_coords(self, f):
        return chain_map_coords(f)

    def _from_full_coords(self, X, Y, vec):
        return chain_map_from_coords(X, Y, vec)

    def zero_morphism(self, X, Y):
        return ChainMap.zero(X, Y)

    def compose(self, f, g):
        return f.compose(g)

    def add(self, f, g):
        return f + g

    def scale(self, f, c):
        return f.scale(c)

    def is_zero(self, f):
        return f.is_zero()

    def is_invertible(self, f):
        return all(_pathmat_invertible(p) for p in f.parts)

    def identity(self, X):
        return ChainMap.identity(X)

    def total_dim(self, X):
        return X.total_dim

    def dim_data(self, X):
        return X.dim_data()

    def label(self, X):
        return X.label()

    def zero_object(self):
        return ComplexN.zero(self.algebra, self.n)

    def idempotent_image(self, X, e):
        mid = e.to_mid()
        Xmid = X.to_mid()
        comps, incls, projs = [], [], []
        for i in range(self.n):
            sub, incl, proj = _rep_idempotent_image(Xmid.comps[i], mid.parts[i])
            comps.append(sub)
            incls.append(incl)
            projs.append(proj)
        diffs = [_restrict(Xmid.diffs[i], incls[i], incls[i + 1])
                 for i in range(self.n - 1)]
        K = MidComplexN(self.algebra, self.n, comps, diffs, check=False)
        Z, iso = standardize(K)
        incl_parts = [incls[i].compose(iso.parts[i]) for i in range(self.n)]
        proj_parts = [iso.parts[i].inverse().compose(projs[i])
                      for i in range(self.n)]
        incl_cm = ChainMap(Z, X, [PathMat.from_module_map(p)
                                  for p in incl_parts], check=False)
        proj_cm = ChainMap(X, Z, [PathMat.from_module_map(p)
                                  for p in proj_parts], check=False)
        return Z, incl_cm, proj_cm

    def direct_sum(self, objs):
        from .complexes import direct_sum_cx
        return direct_sum_cx(objs)

    # -- AR structure ---------------------------------------------------------

    def projectives(self):
        """All indecomposable projectives J_i(P), T(P) with sink maps rho."""
        out = []
        for v in self.algebra.quiver.vertices:
            for j in range(1, self.n):
                rho = make_rho(v, j, self.n, algebra=self.algebra)
                out.append((rho.target, rho.source, rho))
            rho = make_rho(v, self.n, self.n, algebra=self.algebra)
            out.append((rho.target, rho.source, rho))
        return out

    def injectives(self):
        """All indecomposable injectives J_i(P), S(P) with source maps."""
        out = []
        for v in self.algebra.quiver.vertices:
            for j in range(1, self.n):
                lam = make_lambda(v, j, self.n, algebra=self.algebra)
                out.append((lam.source, lam.target, lam))
            lam = make_lambda(v, 0, self.n, algebra=self.algebra)
            out.append((lam.source, lam.target, lam))
        return out

    def mesh_cokernel(self, f):
        """Split-exact cokernel of a left almost split map, standardized.

        Returns (Z: ComplexN, projection ChainMap target -> Z)."""
        C, pr = cokernel_cx(f)
        assert in_Cn_proj(C), "mesh cokernel left proj: knit input not split mono"
        Z, iso = standardize(C)
        parts = [iso.parts[i].inverse().compose(pr.parts[i])
                 for i in range(self.n)]
        return Z, ChainMap(f.target, Z, [PathMat.from_module_map(p)
                                         for p in parts], check=False)

    def mesh_kernel(self, f):
        """Kernel of a right almost split map, standardized when projective.

        Returns (Z: ComplexN, inclusion ChainMap Z -> source) or
        (None, mid-level kernel) when the kernel leaves the category."""
        K, inc = kernel_cx(f)
        if not in_Cn_proj(K):
            return None, (K, inc)
        Z, iso = standardize(K)
        parts = [inc.parts[i].compose(iso.parts[i]) for i in range(self.n)]
        return Z, ChainMap(Z, f.source, [PathMat.from_module_map(p)
                                         for p in parts], check=False)


def _pathmat_invertible(p):
    """Invertibility over proj: vertex multisets match and the scalar
    (trivial-path) block at each vertex is invertible; the radical part
    is nilpotent and cannot obstruct."""
    if sorted(p.src) != sorted(p.tgt):
        return False
    field = p.algebra.field
    for v in set(p.src):
        rows = [j for j, w in enumerate(p.tgt) if w == v]
        cols = [i for i, w in enumerate(p.src) if w == v]
        triv = p.algebra.trivial_path(v)
        block = Matrix(field,
                       [[p.entries.get((j, i), {}).get(triv, field.zero)
                         for i in cols] for j in rows],
                       len(rows), len(cols))
        if not block.is_invertible():
            return False
    return True


def _rep_idempotent_image(X, e):
    sub, incl = rep_image(e)
    field = X.algebra.field
    proj_mats = []
    for v in X.algebra.quiver.vertices:
        cols = []
        for j in range(X.dim_at(v)):
            col = [e.at(v).rows[i][j] for i in range(X.dim_at(v))]
            sol = incl.at(v).solve(col)
            assert sol is not None
            cols.append(sol)
        proj_mats.append(Matrix(field, [[cols[j][i] for j in range(len(cols))]
                                        for i in range(sub.dim_at(v))],
                                sub.dim_at(v), X.dim_at(v)))
    proj = ModuleMap(X, sub, proj_mats, check=False)
    return sub, incl, proj
