"""Dense exact matrices and row-space utilities over a Field.

Everything is deterministic: reduced row echelon forms pick the first
nonzero pivot in column order, nullspace bases are the standard
free-variable unit completions, and no randomization is used anywhere.
Matrices are small (desk scale), so the representation is a plain list
of rows.
"""


class Matrix:
    __slots__ = ("field", "m", "n", "rows")

    def __init__(self, field, rows, m=None, n=None):
        self.field = field
        self.rows = rows
        self.m = len(rows) if m is None else m
        if n is None:
            n = len(rows[0]) if rows else 0
        self.n = n
        for r in rows:
            assert len(r) == self.n

    @classmethod
    def zero(cls, field, m, n):
        z = field.zero
        return cls(field, [[z] * n for _ in range(m)], m, n)

    @classmethod
    def identity(cls, field, n):
        M = cls.zero(field, n, n)
        for i in range(n):
            M.rows[i][i] = field.one
        return M

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, [[field.of(x) for x in r] for r in rows])

    def copy(self):
        return Matrix(self.field, [row[:] for row in self.rows], self.m, self.n)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.m == other.m
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash((self.m, self.n, tuple(tuple(r) for r in self.rows)))

    def __add__(self, other):
        assert self.m == other.m and self.n == other.n
        return Matrix(self.field, [[a + b for a, b in zip(r, s)]
                                   for r, s in zip(self.rows, other.rows)], self.m, self.n)

    def __sub__(self, other):
        assert self.m == other.m and self.n == other.n
        return Matrix(self.field, [[a - b for a, b in zip(r, s)]
                                   for r, s in zip(self.rows, other.rows)], self.m, self.n)

    def __neg__(self):
        return Matrix(self.field, [[-a for a in r] for r in self.rows], self.m, self.n)

    def scale(self, c):
        return Matrix(self.field, [[c * a for a in r] for r in self.rows], self.m, self.n)

    def __mul__(self, other):
        assert isinstance(other, Matrix) and self.n == other.m, "shape mismatch"
        zero = self.field.zero
        ot = other.rows
        out = []
        for r in self.rows:
            row = [zero] * other.n
            for k, a in enumerate(r):
                if a == zero:
                    continue
                ork = ot[k]
                for j in range(other.n):
                    b = ork[j]
                    if b != zero:
                        row[j] = row[j] + a * b
            out.append(row)
        return Matrix(self.field, out, self.m, other.n)

    def transpose(self):
        return Matrix(self.field, [[self.rows[i][j] for i in range(self.m)]
                                   for j in range(self.n)], self.n, self.m)

    def is_zero(self):
        z = self.field.zero
        return all(a == z for r in self.rows for a in r)

    def apply(self, vec):
        """Matrix times column vector (given and returned as a list)."""
        assert len(vec) == self.n
        z = self.field.zero
        return [sum((a * x for a, x in zip(r, vec) if a != z), z) for r in self.rows]

    def rref(self):
        """Reduced row echelon form.  Returns (Matrix, pivot column list)."""
        R = [row[:] for row in self.rows]
        pivots = []
        r = 0
        for c in range(self.n):
            if r == self.m:
                break
            pr = next((i for i in range(r, self.m) if R[i][c] != self.field.zero), None)
            if pr is None:
                continue
            R[r], R[pr] = R[pr], R[r]
            inv = self.field.one / R[r][c]
            R[r] = [inv * a for a in R[r]]
            for i in range(self.m):
                if i != r and R[i][c] != self.field.zero:
                    f = R[i][c]
                    R[i] = [a - f * b for a, b in zip(R[i], R[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.field, R, self.m, self.n), pivots

    def rank(self):
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of the right kernel, as a list of length-n vectors.

        Standard construction: one basis vector per free column, with 1
        in the free position and back-substituted pivot entries.
        """
        R, pivots = self.rref()
        free = [c for c in range(self.n) if c not in pivots]
        basis = []
        one, zero = self.field.one, self.field.zero
        for fc in free:
            v = [zero] * self.n
            v[fc] = one
            for i, pc in enumerate(pivots):
                v[pc] = -R.rows[i][fc]
            basis.append(v)
        return basis

    def solve(self, rhs):
        """One solution x of self * x = rhs, or None if inconsistent."""
        assert len(rhs) == self.m
        aug = Matrix(self.field, [self.rows[i] + [rhs[i]] for i in range(self.m)],
                     self.m, self.n + 1)
        R, pivots = aug.rref()
        if self.n in pivots:
            return None
        zero = self.field.zero
        x = [zero] * self.n
        for i, pc in enumerate(pivots):
            x[pc] = R.rows[i][self.n]
        return x

    def inverse(self):
        assert self.m == self.n
        aug = Matrix(self.field,
                     [self.rows[i] + Matrix.identity(self.field, self.n).rows[i]
                      for i in range(self.n)], self.n, 2 * self.n)
        R, pivots = aug.rref()
        if pivots != list(range(self.n)):
            raise ValueError("matrix not invertible")
        return Matrix(self.field, [r[self.n:] for r in R.rows], self.n, self.n)

    def is_invertible(self):
        return self.m == self.n and self.rank() == self.n

    def column_space_basis(self):
        """Deterministic basis of the column space: the pivot columns."""
        _, pivots = self.rref()
        cols = self.transpose().rows
        return [cols[c] for c in pivots]

    def __repr__(self):
        return "Matrix(%dx%d)" % (self.m, self.n)


def hstack(field, mats):
    mats = [M for M in mats]
    if not mats:
        return Matrix.zero(field, 0, 0)
    m = mats[0].m
    assert all(M.m == m for M in mats)
    rows = [[] for _ in range(m)]
    for M in mats:
        for i in range(m):
            rows[i].extend(M.rows[i])
    return Matrix(field, rows, m, sum(M.n for M in mats))


def vstack(field, mats):
    mats = [M for M in mats]
    if not mats:
        return Matrix.zero(field, 0, 0)
    n = mats[0].n
    assert all(M.n == n for M in mats)
    rows = []
    for M in mats:
        rows.extend(row[:] for row in M.rows)
    return Matrix(field, rows, len(rows), n)


def block_diag(field, mats):
    m = sum(M.m for M in mats)
    n = sum(M.n for M in mats)
    out = Matrix.zero(field, m, n)
    ro = co = 0
    for M in mats:
        for i in range(M.m):
            out.rows[ro + i][co:co + M.n] = [x for x in M.rows[i]]
        ro += M.m
        co += M.n
    return out


class Subspace:
    """A subspace of a fixed coordinate space, kept as an RREF row basis.

    Supports online insertion (returns whether the vector was new),
    membership, and residue reduction.  Deterministic by construction.
    """

    def __init__(self, field, ambient_dim, vectors=()):
        self.field = field
        self.ambient = ambient_dim
        self.basis = []       # RREF rows
        self.pivots = []      # pivot column of each basis row
        for v in vectors:
            self.insert(v)

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, vec):
        """Residue of vec modulo the subspace (fresh list)."""
        v = list(vec)
        zero = self.field.zero
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c != zero:
                for j in range(p, self.ambient):
                    v[j] = v[j] - c * row[j]
        return v

    def contains(self, vec):
        zero = self.field.zero
        return all(a == zero for a in self.reduce(vec))

    def insert(self, vec):
        """Add vec to the span.  Returns True if the dimension grew."""
        v = self.reduce(vec)
        zero = self.field.zero
        p = next((j for j, a in enumerate(v) if a != zero), None)
        if p is None:
            return False
        inv = self.field.one / v[p]
        v = [inv * a for a in v]
        # keep RREF: clear column p in existing rows, insert sorted by pivot
        for i in range(len(self.basis)):
            c = self.basis[i][p]
            if c != zero:
                self.basis[i] = [a - c * b for a, b in zip(self.basis[i], v)]
        k = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.basis.insert(k, v)
        self.pivots.insert(k, p)
        return True

    def equals(self, other):
        return (self.ambient == other.ambient and self.dim == other.dim
                and all(other.contains(v) for v in self.basis))

    def copy(self):
        S = Subspace(self.field, self.ambient)
        S.basis = [row[:] for row in self.basis]
        S.pivots = self.pivots[:]
        return S

    def is_zero(self):
        return not self.basis

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.ambient)
