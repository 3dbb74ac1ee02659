import pytest

from cnproj.errors import InfiniteDimensional, NoSourceOrSink, QuiverFileError
from cnproj.quivers import (BoundQuiverAlgebra, Quiver, classify_dynkin, ell,
                            format_quiver_file, parse_quiver_file,
                            sources_sinks)

from conftest import make_algebra


def test_path_basis_a2(a2):
    basis = a2.path_basis()
    assert len(basis) == 3  # e1, e2, a
    assert a2.dimension == 3
    assert [p.length for p in basis] == [0, 0, 1]


def test_path_basis_a3(a3_linear):
    assert a3_linear.dimension == 6  # 3 trivial, 2 arrows, 1 length-2 path


def test_path_basis_cycle3(cycle3):
    # all length-2 paths are relations: each projective has total dimension 2
    assert cycle3.dimension == 6
    for v in (1, 2, 3):
        assert len(cycle3.paths_from(v)) == 2


def test_path_basis_subpath_closed(star5, cycle3, d4_subspace):
    for A in (star5, cycle3, d4_subspace):
        basis = set(A.path_basis())
        for p in basis:
            for i in range(p.length):
                for j in range(i, p.length + 1):
                    w = p.arrows[i:j]
                    if not w:
                        continue
                    a0 = A.quiver.arrow_by_name[w[0]]
                    al = A.quiver.arrow_by_name[w[-1]]
                    from cnproj.quivers import Path
                    assert Path(a0.src, al.tgt, w) in basis


def test_infinite_dimensional():
    with pytest.raises(InfiniteDimensional):
        make_algebra(2, [("a", 1, 2), ("b", 2, 1)])  # unbounded 2-cycle


def test_path_multiplication(star5):
    be = star5.arrow_path("be")
    al = star5.arrow_path("al")
    ga = star5.arrow_path("ga")
    de = star5.arrow_path("de")
    assert star5.mul(be, al) is None  # relation be*al
    assert star5.mul(ga, de) is None
    assert star5.mul(be, ga) is None  # not composable
    e1 = star5.trivial_path(1)
    assert star5.mul(e1, ga) == ga


def test_classify_dynkin(a3_linear, a3_source_middle, d4_subspace, cycle3, kronecker):
    assert classify_dynkin(a3_linear.quiver) == "A3"
    assert classify_dynkin(a3_source_middle.quiver) == "A3"  # orientation-independent
    assert classify_dynkin(d4_subspace.quiver) == "D4"
    assert classify_dynkin(cycle3.quiver) is None
    assert classify_dynkin(kronecker.quiver) is None
    e6 = Quiver(6, [("a", 1, 2), ("b", 3, 2), ("c", 3, 4), ("d", 5, 4), ("e", 3, 6)])
    assert classify_dynkin(e6) == "E6"
    d5 = Quiver(5, [("a", 4, 1), ("b", 5, 1), ("c", 1, 2), ("d", 2, 3)])
    assert classify_dynkin(d5) == "D5"


def test_sources_sinks(a3_linear, a3_source_middle, cycle3):
    assert sources_sinks(a3_linear.quiver) == ([1], [3])
    assert sources_sinks(a3_source_middle.quiver) == ([2], [1, 3])
    assert sources_sinks(cycle3.quiver) == ([], [])


def test_ell(a3_linear, a3_source_middle, d4_subspace, cycle3):
    assert ell(a3_linear.quiver)[0] == 2
    assert ell(a3_source_middle.quiver)[0] == 1
    assert ell(d4_subspace.quiver)[0] == 1
    with pytest.raises(NoSourceOrSink):
        ell(cycle3.quiver)
    value, table = ell(a3_linear.quiver)
    assert table == {(3, 1): 2}


def test_relation_normalization():
    # a relation containing another as a subpath is dropped
    A = make_algebra(4, [("a", 1, 2), ("b", 2, 3), ("c", 3, 4)],
                     relations=[("a", "b"), ("a", "b", "c")])
    assert len(A.relations) == 1
    assert A.relations[0].arrow_names == ("a", "b")


FILE_TEXT = """\
# linear A3
vertices: 3
arrow a: 1 -> 2
arrow b: 2 -> 3
field: Q
"""


def test_parse_roundtrip():
    A = parse_quiver_file(FILE_TEXT)
    assert A.dimension == 6
    text = format_quiver_file(A)
    B = parse_quiver_file(text)
    assert B.dimension == 6
    assert [a.name for a in B.quiver.arrows] == ["a", "b"]


@pytest.mark.parametrize("bad,lineno", [
    ("vertices: 2\nwidgets: 3\n", 2),
    ("vertices: 2\narrow a: 1 => 2\n", 2),
    ("vertices: 2\narrow a: 1 -> 2\nrelation: a\n", 3),
    ("vertices: 2\narrow a: 1 -> 2\narrow b: 1 -> 2\nrelation: a*b\n", 4),
    ("vertices: 2\nfield: R\n", 2),
])
def test_parse_errors(bad, lineno):
    with pytest.raises(QuiverFileError) as exc:
        parse_quiver_file(bad)
    assert exc.value.lineno == lineno


def test_parse_prime_field():
    A = parse_quiver_file("vertices: 1\nfield: F5\n")
    assert A.field.char == 5
