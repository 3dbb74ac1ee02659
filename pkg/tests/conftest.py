import pytest

from cnproj.quivers import BoundQuiverAlgebra, Quiver


def make_algebra(vertex_count, arrows, relations=()):
    return BoundQuiverAlgebra(Quiver(vertex_count, arrows), relations)


@pytest.fixture
def a2():
    # 1 --a--> 2
    return make_algebra(2, [("a", 1, 2)])


@pytest.fixture
def a3_linear():
    return make_algebra(3, [("a", 1, 2), ("b", 2, 3)])


@pytest.fixture
def a3_source_middle():
    # 1 <--a-- 2 --b--> 3
    return make_algebra(3, [("a", 2, 1), ("b", 2, 3)])


@pytest.fixture
def d4_subspace():
    return make_algebra(4, [("a", 1, 4), ("b", 2, 4), ("c", 3, 4)])


@pytest.fixture
def cycle3():
    # oriented 3-cycle with rad^2 = 0 (selfinjective Nakayama algebra)
    return make_algebra(
        3, [("a", 1, 2), ("b", 2, 3), ("c", 3, 1)],
        relations=[("a", "b"), ("b", "c"), ("c", "a")])


@pytest.fixture
def star5():
    # 3 <- 2 <- 1 -> 4 -> 5 with both length-2 paths zero
    return make_algebra(
        5, [("al", 2, 3), ("be", 1, 2), ("ga", 1, 4), ("de", 4, 5)],
        relations=[("be", "al"), ("ga", "de")])


@pytest.fixture
def kronecker():
    return make_algebra(2, [("a", 1, 2), ("b", 1, 2)])
