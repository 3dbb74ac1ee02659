"""The additive category proj Lambda in path coordinates.

A morphism between canonical projective sums P_{v_1}+...+P_{v_k} and
P_{w_1}+...+P_{w_l} is an l x k matrix whose (j, i) entry is a linear
combination of relation-free paths w_j -> v_i (it acts by left path
multiplication).  Composition is matrix multiplication with path
concatenation, so everything here is exact combinatorics: no linear
solving is needed to compose, and radical membership is visible on the
coefficients (rad^m is spanned by the paths of length >= m, the
relations being monomial).
"""

from .linalg import Matrix
from .reps import proj_path_coeffs


def cached_std_projective(algebra, verts):
    """Shared, immutable materialization of a canonical projective sum."""
    cache = getattr(algebra, "_std_proj_cache", None)
    if cache is None:
        cache = algebra._std_proj_cache = {}
    verts = tuple(verts)
    rep = cache.get(verts)
    if rep is None:
        from .reps import std_projective
        rep = cache[verts] = std_projective(algebra, verts)
    return rep


class PathMat:
    """A morphism of canonical projective sums, sparse in path coordinates."""

    __slots__ = ("algebra", "src", "tgt", "entries")

    def __init__(self, algebra, src, tgt, entries=None):
        self.algebra = algebra
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        # entries: {(j, i): {Path: coeff}}, zero coefficients dropped
        self.entries = {}
        if entries:
            zero = algebra.field.zero
            for (j, i), d in entries.items():
                clean = {p: c for p, c in d.items() if c != zero}
                if clean:
                    self.entries[(j, i)] = clean

    @classmethod
    def zero(cls, algebra, src, tgt):
        return cls(algebra, src, tgt)

    @classmethod
    def identity(cls, algebra, verts):
        one = algebra.field.one
        entries = {(i, i): {algebra.trivial_path(v): one}
                   for i, v in enumerate(verts)}
        return cls(algebra, verts, verts, entries)

    @classmethod
    def unit(cls, algebra, src, tgt, j, i, path):
        assert tgt[j] == path.src and src[i] == path.tgt
        return cls(algebra, src, tgt, {(j, i): {path: algebra.field.one}})

    def compose(self, other):
        """self after other."""
        assert other.tgt == self.src
        A = self.algebra
        zero = A.field.zero
        out = {}
        for (j, k), dj in self.entries.items():
            for (kk, i), di in other.entries.items():
                if kk != k:
                    continue
                acc = out.setdefault((j, i), {})
                for y, cy in dj.items():
                    for x, cx in di.items():
                        p = A.mul(y, x)
                        if p is None:
                            continue
                        c = acc.get(p, zero) + cy * cx
                        if c == zero:
                            acc.pop(p, None)
                        else:
                            acc[p] = c
        return PathMat(A, other.src, self.tgt, out)

    def __add__(self, other):
        assert self.src == other.src and self.tgt == other.tgt
        zero = self.algebra.field.zero
        out = {k: dict(v) for k, v in self.entries.items()}
        for k, d in other.entries.items():
            acc = out.setdefault(k, {})
            for p, c in d.items():
                s = acc.get(p, zero) + c
                if s == zero:
                    acc.pop(p, None)
                else:
                    acc[p] = s
        return PathMat(self.algebra, self.src, self.tgt, out)

    def __sub__(self, other):
        return self + other.scale(-self.algebra.field.one)

    def scale(self, c):
        return PathMat(self.algebra, self.src, self.tgt,
                       {k: {p: c * x for p, x in d.items()}
                        for k, d in self.entries.items()})

    def __neg__(self):
        return self.scale(-self.algebra.field.one)

    def is_zero(self):
        return not any(self.entries.values())

    def __eq__(self, other):
        return (isinstance(other, PathMat) and self.src == other.src
                and self.tgt == other.tgt
                and (self - other).is_zero())

    def min_path_length(self):
        """Least path length carrying a nonzero coefficient (None if zero)."""
        lengths = [p.length for d in self.entries.values() for p in d]
        return min(lengths) if lengths else None

    def is_radical(self):
        """f in rad(proj): no trivial-path coefficients survive."""
        m = self.min_path_length()
        return m is None or m >= 1

    def in_rad_power(self, m):
        """f in rad^m(proj): every coefficient path has length >= m."""
        k = self.min_path_length()
        return k is None or k >= m

    def to_module_map(self):
        from .reps import proj_map_from_coeffs
        P = cached_std_projective(self.algebra, self.src)
        Q = cached_std_projective(self.algebra, self.tgt)
        coeffs = {}
        for (j, i), d in self.entries.items():
            for p, c in d.items():
                coeffs[(j, i, p)] = c
        return proj_map_from_coeffs(P, Q, coeffs)

    @classmethod
    def from_module_map(cls, f):
        coeffs = proj_path_coeffs(f)
        entries = {}
        for (s, t, y), c in coeffs.items():
            entries.setdefault((s, t), {})[y] = c
        return cls(f.source.algebra, f.source.proj_verts, f.target.proj_verts,
                   entries)

    def __repr__(self):
        return "PathMat(%s -> %s, %d entries)" % (self.src, self.tgt,
                                                  len(self.entries))


def hom_units(algebra, src, tgt):
    """Canonical basis of Hom(+P_src, +P_tgt): triples (j, i, path)."""
    out = []
    for j, w in enumerate(tgt):
        for i, v in enumerate(src):
            for p in algebra.paths_between(w, v):
                out.append((j, i, p))
    return out


def pathmat_coords(f, units):
    zero = f.algebra.field.zero
    vec = []
    for (j, i, p) in units:
        vec.append(f.entries.get((j, i), {}).get(p, zero))
    return vec


def pathmat_from_coords(algebra, src, tgt, units, vec):
    entries = {}
    zero = algebra.field.zero
    for (j, i, p), c in zip(units, vec):
        if c != zero:
            entries.setdefault((j, i), {})[p] = c
    return PathMat(algebra, src, tgt, entries)


def _solve_compose(algebra, left_units, eqn_units, build, rhs):
    """Solve sum_k x_k * build(unit_k) = rhs coordinate-wise."""
    field = algebra.field
    cols = [pathmat_coords(build(u), eqn_units) for u in left_units]
    b = pathmat_coords(rhs, eqn_units)
    if not eqn_units:
        return [] if not left_units else [field.zero] * len(left_units)
    M = Matrix(field, [[cols[k][r] for k in range(len(left_units))]
                       for r in range(len(eqn_units))],
               len(eqn_units), len(left_units))
    return M.solve(b)


def is_section(f):
    """f: P -> Q splits on the left (some r with r f = id)."""
    A = f.algebra
    units = hom_units(A, f.tgt, f.src)
    eqn_units = hom_units(A, f.src, f.src)
    target = PathMat.identity(A, f.src)
    sol = _solve_compose(
        A, units, eqn_units,
        lambda u: PathMat.unit(A, f.tgt, f.src, *u).compose(f), target)
    return sol is not None


def is_retraction(f):
    """f: P -> Q splits on the right (some s with f s = id)."""
    A = f.algebra
    units = hom_units(A, f.tgt, f.src)
    eqn_units = hom_units(A, f.tgt, f.tgt)
    target = PathMat.identity(A, f.tgt)
    sol = _solve_compose(
        A, units, eqn_units,
        lambda u: f.compose(PathMat.unit(A, f.tgt, f.src, *u)), target)
    return sol is not None
