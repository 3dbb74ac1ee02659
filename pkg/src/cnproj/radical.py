"""Radical filtration tables over a registry of indecomposables.

For every ordered pair (X, Y) the table stores the descending chain
Hom = rad^0 >= rad^1 >= rad^2 >= ... as subspaces in the fixed hom-basis
coordinates, down to zero.  rad^1 is the full hom space off the
diagonal and the endomorphism radical on it; every higher level is
computed twice, as rad^m . rad and as rad . rad^m, and the two spans
are asserted equal.  Compositions go through precomputed structure
tensors, so level iteration is pure small linear algebra.

The nilpotency index r is the least m with rad^m = 0 everywhere; on a
knowingly truncated registry the chain is cut at max_depth and the
table is marked truncated (its layers are then lower-bound certificates
relative to the truncated object set, not category-level facts).
"""

from .decompose import EndAlgebra
from .errors import DepthExceeded, NotIrreducible
from .linalg import Subspace

HARD_DEPTH_CAP = 512


class RadicalTable:
    def __init__(self, cat, registry, max_depth=None, check_both_sided=True):
        self.cat = cat
        self.registry = registry
        self.objs = registry.objects()
        self.m = len(self.objs)
        self.truncated = False
        self.r = None
        self._tensors = {}
        self._hom_dims = {}
        self._build(max_depth, check_both_sided)

    # -- construction ----------------------------------------------------------

    def hom_dim(self, i, j):
        key = (i, j)
        if key not in self._hom_dims:
            self._hom_dims[key] = len(self.cat.hom(self.objs[i], self.objs[j]))
        return self._hom_dims[key]

    def _tensor(self, i, k, j):
        """coords of basis_b(k,j) . basis_a(i,k) in Hom(i,j) coordinates."""
        key = (i, k, j)
        t = self._tensors.get(key)
        if t is None:
            cat = self.cat
            A, K, B = self.objs[i], self.objs[k], self.objs[j]
            fa = cat.hom(A, K)
            fb = cat.hom(K, B)
            t = [[cat.hom_coords(A, B, cat.compose(g, f)) for g in fb]
                 for f in fa]
            self._tensors[key] = t
        return t

    def _compose_coords(self, i, k, j, avec, bvec):
        field = self.cat.field
        t = self._tensor(i, k, j)
        n = self.hom_dim(i, j)
        out = [field.zero] * n
        for a, ca in enumerate(avec):
            if ca == field.zero:
                continue
            for b, cb in enumerate(bvec):
                if cb == field.zero:
                    continue
                tab = t[a][b]
                c = ca * cb
                for r in range(n):
                    if tab[r] != field.zero:
                        out[r] = out[r] + c * tab[r]
        return out

    def _build(self, max_depth, check_both_sided):
        field = self.cat.field
        level1 = {}
        for i in range(self.m):
            for j in range(self.m):
                d = self.hom_dim(i, j)
                if d == 0:
                    continue
                S = Subspace(field, d)
                if i == j:
                    E = EndAlgebra(self.cat, self.objs[i])
                    _, vecs = E.radical_dim()
                    for v in vecs:
                        S.insert(v)
                else:
                    for k in range(d):
                        S.insert([field.one if t == k else field.zero
                                  for t in range(d)])
                if S.dim:
                    level1[(i, j)] = S
        self.levels = [level1]
        cap = max_depth if max_depth is not None else HARD_DEPTH_CAP
        while self.levels[-1]:
            if len(self.levels) >= cap:
                if max_depth is not None:
                    self.truncated = True
                    return
                raise DepthExceeded(
                    "radical chain did not reach zero within %d levels" % cap)
            prev = self.levels[-1]
            by_src = {}
            for (k, j) in level1:
                by_src.setdefault(k, []).append(j)
            nxt = {}
            for (i, k), S in prev.items():
                for j in by_src.get(k, []):
                    R = level1[(k, j)]
                    T = nxt.get((i, j))
                    if T is None:
                        T = nxt[(i, j)] = Subspace(field, self.hom_dim(i, j))
                    for avec in S.basis:
                        for bvec in R.basis:
                            T.insert(self._compose_coords(i, k, j, avec, bvec))
            if check_both_sided:
                other = {}
                for (i, k), S in [(p, level1[p]) for p in level1]:
                    for j in by_src.get(k, []):
                        if (k, j) not in prev:
                            continue
                        R = prev[(k, j)]
                        T = other.get((i, j))
                        if T is None:
                            T = other[(i, j)] = Subspace(field,
                                                         self.hom_dim(i, j))
                        for avec in S.basis:
                            for bvec in R.basis:
                                T.insert(self._compose_coords(i, k, j,
                                                              avec, bvec))
                nz_a = {p: S for p, S in nxt.items() if S.dim}
                nz_b = {p: S for p, S in other.items() if S.dim}
                assert set(nz_a) == set(nz_b) and all(
                    nz_a[p].equals(nz_b[p]) for p in nz_a), \
                    "left and right radical powers disagree"
            self.levels.append({p: S for p, S in nxt.items() if S.dim})
        self.r = len(self.levels)  # levels[0] = rad^1, empty level found
        if not self.levels[0]:
            self.r = 1
        self.levels.pop()  # drop the trailing empty dict

    # -- queries ----------------------------------------------------------------

    @property
    def depth_computed(self):
        return len(self.levels)

    def subspace(self, i, j, power):
        """rad^power (X_i, X_j) as a Subspace (power >= 1); None if zero."""
        if power <= 0:
            raise ValueError("power >= 1")
        if power > len(self.levels):
            if self.truncated:
                raise DepthExceeded("table truncated below rad^%d" % power)
            return None
        return self.levels[power - 1].get((i, j))

    def dim(self, i, j, power):
        if power == 0:
            return self.hom_dim(i, j)
        S = self.subspace(i, j, power)
        return S.dim if S is not None else 0

    def irr_dim(self, i, j):
        return self.dim(i, j, 1) - self.dim(i, j, 2)

    def irr_basis_coords(self, i, j):
        """Coordinate vectors of rad maps spanning rad/rad^2."""
        S1 = self.subspace(i, j, 1)
        if S1 is None:
            return []
        S2 = self.subspace(i, j, 2)
        probe = S2.copy() if S2 is not None else Subspace(self.cat.field,
                                                          self.hom_dim(i, j))
        out = []
        for v in S1.basis:
            if probe.insert(list(v)):
                out.append(list(v))
        return out

    def irr_basis_reps(self, i, j):
        basis = self.cat.hom(self.objs[i], self.objs[j])
        return [self.cat.combine(self.objs[i], self.objs[j], basis, v)
                for v in self.irr_basis_coords(i, j)]

    def coords_of(self, i, j, f):
        return self.cat.hom_coords(self.objs[i], self.objs[j], f)

    def layer_of_coords(self, i, j, vec):
        """Largest power with vec in rad^power; 0 when not radical,
        None for the zero vector (in every layer)."""
        field = self.cat.field
        if all(x == field.zero for x in vec):
            return None
        best = 0
        for power in range(1, len(self.levels) + 1):
            S = self.levels[power - 1].get((i, j))
            if S is not None and S.contains(vec):
                best = power
            else:
                break
        return best

    def layer_of(self, i, j, f):
        return self.layer_of_coords(i, j, self.coords_of(i, j, f))

    def in_layer(self, i, j, vec, power):
        if power == 0:
            return True
        S = self.subspace(i, j, power)
        return S is not None and S.contains(vec)

    def is_irreducible(self, i, j, f):
        """f in rad \\ rad^2 (arrow-level irreducibility between
        indecomposables)."""
        return self.layer_of(i, j, f) == 1

    def require_irreducible(self, i, j, f):
        if not self.is_irreducible(i, j, f):
            raise NotIrreducible("morphism is not in rad minus rad^2")

    def nilpotency_index(self):
        if self.truncated:
            raise DepthExceeded("truncated table has no certified index")
        return self.r

    def dimension_triangle(self):
        """{(id_i, id_j): [dim rad^1, dim rad^2, ...]} down to zero."""
        ids = self.registry.ids()
        out = {}
        for i in range(self.m):
            for j in range(self.m):
                dims = []
                for power in range(1, len(self.levels) + 1):
                    d = self.dim(i, j, power)
                    if d == 0:
                        break
                    dims.append(d)
                if dims:
                    out[(ids[i], ids[j])] = dims
        return out
