from fractions import Fraction

from cnproj.fields import QQ, Field
from cnproj.linalg import Matrix, Subspace, block_diag, hstack, vstack


def M(rows):
    return Matrix.from_rows(QQ, rows)


def test_rref_and_rank():
    A = M([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    R, pivots = A.rref()
    assert pivots == [0, 1]
    assert A.rank() == 2
    # rref rows are unit-pivot reduced
    assert R.rows[0][0] == 1 and R.rows[1][1] == 1


def test_nullspace_is_kernel():
    A = M([[1, 2, 3], [4, 5, 6]])
    for v in A.nullspace():
        assert all(x == 0 for x in A.apply(v))
    assert len(A.nullspace()) == 1


def test_solve_and_inverse():
    A = M([[2, 1], [1, 1]])
    x = A.solve([Fraction(3), Fraction(2)])
    assert A.apply(x) == [Fraction(3), Fraction(2)]
    Ainv = A.inverse()
    assert A * Ainv == Matrix.identity(QQ, 2)
    B = M([[1, 2], [2, 4]])
    assert B.solve([Fraction(0), Fraction(1)]) is None
    assert not B.is_invertible()


def test_stacking():
    A = M([[1, 2]])
    B = M([[3, 4]])
    assert hstack(QQ, [A, B]).rows == [[1, 2, 3, 4]]
    assert vstack(QQ, [A, B]).rows == [[1, 2], [3, 4]]
    D = block_diag(QQ, [M([[1]]), M([[2]])])
    assert D.rows == [[1, 0], [0, 2]]


def test_zero_shapes():
    Z = Matrix.zero(QQ, 0, 3)
    assert Z.rank() == 0
    assert Z.nullspace() == [
        [1, 0, 0], [0, 1, 0], [0, 0, 1]]
    Z2 = Matrix.zero(QQ, 3, 0)
    assert Z2.nullspace() == []


def test_subspace_insert_reduce():
    S = Subspace(QQ, 3)
    assert S.insert([Fraction(1), Fraction(1), Fraction(0)])
    assert not S.insert([Fraction(2), Fraction(2), Fraction(0)])
    assert S.insert([Fraction(0), Fraction(1), Fraction(1)])
    assert S.dim == 2
    assert S.contains([Fraction(1), Fraction(0), Fraction(-1)])
    assert not S.contains([Fraction(0), Fraction(0), Fraction(1)])
    T = Subspace(QQ, 3, [[Fraction(1), Fraction(0), Fraction(-1)],
                         [Fraction(0), Fraction(1), Fraction(1)]])
    assert S.equals(T)


def test_prime_field_matrix():
    F5 = Field(5)
    A = Matrix.from_rows(F5, [[2, 1], [1, 1]])
    Ainv = A.inverse()
    assert A * Ainv == Matrix.identity(F5, 2)
    B = Matrix.from_rows(F5, [[1, 2], [3, 6]])  # second row = 3 * first
    assert B.rank() == 1
