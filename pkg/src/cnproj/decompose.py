"""Krull-Schmidt decomposition and isomorphism testing, category-generic.

The two client categories (mod Lambda and C_n(proj Lambda)) plug in via
an `ops` adapter (category.py) exposing cached hom bases with coordinate
extraction, composition, and idempotent-image construction.

All endomorphism-algebra work happens in hom coordinates through the
regular representation of End(X): the radical is the kernel of the
regular trace form (Dickson; exact in char 0, verified nilpotent in
char p), and a direct summand decomposition is produced from any
endomorphism whose minimal polynomial has two coprime factors q, h:
with uq + vh = 1 the evaluation e = (vh)(c) is an exact idempotent and
X = im(e) + im(1-e).  Candidates are searched deterministically (basis
elements, pairwise products and sums, then seeded small-integer
combinations); on split endomorphism rings this search succeeds.
Indecomposability is certified by dim End/rad End = 1.
"""

from fractions import Fraction

from .errors import DecompositionFailed, FieldNotSupported
from .linalg import Matrix, Subspace


# -- polynomial helpers (coefficient lists, lowest degree first) --------------

def _ptrim(p, zero):
    while p and p[-1] == zero:
        p.pop()
    return p


def _pmul(p, q, field):
    if not p or not q:
        return []
    out = [field.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == field.zero:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return _ptrim(out, field.zero)


def _pdivmod(p, q, field):
    p = p[:]
    out = [field.zero] * max(0, len(p) - len(q) + 1)
    while len(p) >= len(q) and p:
        c = p[-1] / q[-1]
        d = len(p) - len(q)
        out[d] = c
        for i, b in enumerate(q):
            p[d + i] = p[d + i] - c * b
        _ptrim(p, field.zero)
    return out, p


def _psub(p, q, field):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else field.zero
        b = q[i] if i < len(q) else field.zero
        out.append(a - b)
    return _ptrim(out, field.zero)


def _pxgcd(p, q, field):
    """(g, u, v) with up + vq = g, g monic."""
    r0, r1 = p[:], q[:]
    u0, u1 = [field.one], []
    v0, v1 = [], [field.one]
    while r1:
        qq, rr = _pdivmod(r0, r1, field)
        r0, r1 = r1, rr
        u0, u1 = u1, _psub(u0, _pmul(qq, u1, field), field)
        v0, v1 = v1, _psub(v0, _pmul(qq, v1, field), field)
    if r0:
        inv = field.one / r0[-1]
        r0 = [inv * a for a in r0]
        u0 = [inv * a for a in u0]
        v0 = [inv * a for a in v0]
    return r0, u0, v0


def _ppow(p, k, field):
    out = [field.one]
    for _ in range(k):
        out = _pmul(out, p, field)
    return out


def factor_poly(coeffs, field):
    """Monic irreducible factors with multiplicities, via sympy."""
    import sympy

    x = sympy.Symbol("x")
    if field.char == 0:
        expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i
                   for i, c in enumerate(coeffs))
        _, factors = sympy.Poly(expr, x, domain="QQ").factor_list()
    else:
        expr = sum(int(c.v) * x ** i for i, c in enumerate(coeffs))
        _, factors = sympy.Poly(expr, x, modulus=field.char).factor_list()
    out = []
    for poly, mult in factors:
        cs = poly.all_coeffs()[::-1]
        if field.char == 0:
            fc = [Fraction(sympy.Rational(c).p, sympy.Rational(c).q) for c in cs]
        else:
            fc = [field.of(int(c)) for c in cs]
        lead = fc[-1]
        fc = [c / lead for c in fc]
        out.append((fc, mult))
    out.sort(key=lambda t: (len(t[0]), [str(c) for c in t[0]]))
    return out


def min_poly_of_matrix(M, field):
    """Monic minimal polynomial (coefficient list) of a square matrix."""
    n = M.m
    if n == 0:
        return [field.one]
    dim = n * n
    span = Subspace(field, dim)
    cur = Matrix.identity(field, n)
    vecs = [[x for row in cur.rows for x in row]]
    span.insert(vecs[0])
    while True:
        cur = cur * M
        vec = [x for row in cur.rows for x in row]
        if not span.insert(vec):
            k = len(vecs)
            A = Matrix(field, [[vecs[j][r] for j in range(k)] for r in range(dim)],
                       dim, k)
            sol = A.solve(vec)
            return [-c for c in sol] + [field.one]
        vecs.append(vec)


# -- the endomorphism algebra in coordinates ----------------------------------

class EndAlgebra:
    """End(X) in hom coordinates: basis, multiplication table, and the
    left regular representation."""

    def __init__(self, ops, X):
        self.ops = ops
        self.X = X
        self.field = ops.field
        self.basis = ops.hom(X, X)
        self.dim = len(self.basis)
        d = self.dim
        self.table = [[ops.hom_coords(X, X, ops.compose(self.basis[i],
                                                        self.basis[j]))
                       for j in range(d)] for i in range(d)]
        self.id_coords = ops.hom_coords(X, X, ops.identity(X))

    def left_mult_matrix(self, coeffs):
        """Matrix of x -> a x on End coordinates."""
        f = self.field
        d = self.dim
        rows = [[f.zero] * d for _ in range(d)]
        for i, ci in enumerate(coeffs):
            if ci == f.zero:
                continue
            for j in range(d):
                tij = self.table[i][j]
                for r in range(d):
                    if tij[r] != f.zero:
                        rows[r][j] = rows[r][j] + ci * tij[r]
        return Matrix(f, rows, d, d)

    def mult(self, a, b):
        f = self.field
        d = self.dim
        out = [f.zero] * d
        for i, ci in enumerate(a):
            if ci == f.zero:
                continue
            for j, cj in enumerate(b):
                if cj == f.zero:
                    continue
                tij = self.table[i][j]
                c = ci * cj
                for r in range(d):
                    if tij[r] != f.zero:
                        out[r] = out[r] + c * tij[r]
        return out

    def eval_poly(self, coeffs, a):
        """p(a) in End coordinates (Horner)."""
        f = self.field
        acc = None
        for c in reversed(coeffs):
            if acc is None:
                acc = [c * x for x in self.id_coords]
            else:
                acc = self.mult(acc, a)
                acc = [x + c * y for x, y in zip(acc, self.id_coords)]
        return acc if acc is not None else [f.zero] * self.dim

    def radical_dim(self):
        """dim rad End via the regular trace form."""
        f = self.field
        d = self.dim
        lmats = [self.left_mult_matrix([f.one if k == i else f.zero
                                        for k in range(d)]) for i in range(d)]
        gram = Matrix(f, [[_mat_trace(lmats[i] * lmats[j]) for j in range(d)]
                          for i in range(d)], d, d)
        vecs = gram.nullspace()
        if f.char != 0 and vecs:
            self._verify_nilpotent([self.left_mult_matrix(v) for v in vecs])
        return len(vecs), vecs

    def _verify_nilpotent(self, rad_mats):
        f = self.field
        n = self.dim
        cur = rad_mats
        for _ in range(n + 1):
            if all(M.is_zero() for M in cur):
                return
            nxt = []
            seen = Subspace(f, n * n)
            for A in cur:
                for B in rad_mats:
                    C = A * B
                    if seen.insert([x for row in C.rows for x in row]):
                        nxt.append(C)
            cur = nxt
        raise FieldNotSupported("End radical not nilpotent over %s" % f.name)

    def materialize(self, coeffs):
        return self.ops.combine(self.X, self.X, self.basis, coeffs)


def _mat_trace(M):
    return sum((M.rows[i][i] for i in range(M.m)), M.field.zero)


def end_rad_dim(ops, X):
    """(dim rad End(X), dim End(X))."""
    E = EndAlgebra(ops, X)
    if E.dim == 0:
        return 0, 0
    r, _ = E.radical_dim()
    return r, E.dim


def is_indecomposable(ops, X):
    if ops.total_dim(X) == 0:
        return False
    cache = ops.cache(X)
    if "indec" not in cache:
        r, d = end_rad_dim(ops, X)
        cache["indec"] = (d - r == 1)
    return cache["indec"]


def _xorshift(seed=2463534242):
    x = seed
    while True:
        x ^= (x << 13) & 0xFFFFFFFF
        x ^= x >> 17
        x ^= (x << 5) & 0xFFFFFFFF
        yield x


def _candidate_coords(E):
    f = E.field
    d = E.dim
    units = [[f.one if k == i else f.zero for k in range(d)] for i in range(d)]
    for u in units:
        yield u
    for i in range(d):
        for j in range(d):
            if i != j:
                yield E.mult(units[i], units[j])
    for i in range(d):
        for j in range(i + 1, d):
            yield [a + b for a, b in zip(units[i], units[j])]
    rng = _xorshift()
    for _ in range(100):
        yield [f.of((next(rng) % 7) - 3) for _ in range(d)]


def _splitting_idempotent(E):
    """Coordinates of a nontrivial exact idempotent of End, or None."""
    f = E.field
    for cand in _candidate_coords(E):
        mp = min_poly_of_matrix(E.left_mult_matrix(cand), f)
        factors = factor_poly(mp, f)
        if len(factors) < 2:
            continue
        q = _ppow(factors[0][0], factors[0][1], f)
        h, rem = _pdivmod(mp, q, f)
        assert not rem
        g, u, v = _pxgcd(q, h, f)
        assert len(g) == 1  # coprime factors
        e = E.eval_poly(_pmul(v, h, f), cand)
        ee = E.mult(e, e)
        assert all(a == b for a, b in zip(ee, e)), "idempotent not exact"
        if all(a == f.zero for a in e):
            continue
        if all(a == b for a, b in zip(e, E.id_coords)):
            continue
        return e
    return None


def decompose(ops, X):
    """[(summand, inclusion, projection)] with orthogonal idempotent
    witnesses: the sum of incl . proj is the identity of X."""
    if ops.total_dim(X) == 0:
        return []
    E = EndAlgebra(ops, X)
    r, _ = E.radical_dim()
    if E.dim - r == 1:
        ops.cache(X)["indec"] = True
        ident = ops.identity(X)
        return [(X, ident, ident)]
    ec = _splitting_idempotent(E)
    if ec is None:
        raise DecompositionFailed(
            "dim End/rad = %d but no splitting idempotent found" % (E.dim - r))
    e = E.materialize(ec)
    one_minus = ops.add(ops.identity(X), ops.scale(e, -ops.field.one))
    out = []
    for idem in (e, one_minus):
        sub, incl, proj = ops.idempotent_image(X, idem)
        for Z, iZ, pZ in decompose(ops, sub):
            out.append((Z, ops.compose(incl, iZ), ops.compose(pZ, proj)))
    return out


def find_iso(ops, X, Y):
    """An isomorphism X -> Y between indecomposables, or None.

    Complete for local endomorphism rings: if some composite f g of hom
    basis elements is invertible then f is an isomorphism; if none is,
    all composites lie in rad End(Y), hence so do all combinations.
    """
    if ops.dim_data(X) != ops.dim_data(Y):
        return None
    if ops.total_dim(X) == 0:
        return ops.identity(X)
    for f in ops.hom(X, Y):
        for g in ops.hom(Y, X):
            if ops.is_invertible(ops.compose(f, g)):
                return f
    return None


def iso_test(ops, X, Y):
    """Isomorphism test; decomposes first when either side is decomposable."""
    if ops.dim_data(X) == ops.dim_data(Y) and ops.total_dim(X) == 0:
        return True
    if is_indecomposable(ops, X) and is_indecomposable(ops, Y):
        return find_iso(ops, X, Y) is not None
    DX = decompose(ops, X)
    DY = decompose(ops, Y)
    if len(DX) != len(DY):
        return False
    used = [False] * len(DY)
    for Z, _, _ in DX:
        hit = None
        for k, (W, _, _) in enumerate(DY):
            if not used[k] and find_iso(ops, Z, W) is not None:
                hit = k
                break
        if hit is None:
            return False
        used[hit] = True
    return True
