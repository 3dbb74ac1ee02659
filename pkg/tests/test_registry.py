import pytest

from cnproj.errors import CountMismatch, ProbablyInfiniteType, UnsupportedAlgebraForN
from cnproj.registry import (completeness_check, enumerate_ind_complexes,
                             enumerate_ind_modules)

from conftest import make_algebra


def test_modules_a2(a2):
    reg = enumerate_ind_modules(a2, verify_closure=True)
    assert len(reg) == 3  # P_1, P_2, S_1 = positive roots of A_2
    labels = sorted(reg.label_of(k) for k in range(len(reg)))
    assert labels == ["P1", "P2", "S1"]
    completeness_check(reg)


def test_modules_a3(a3_linear, a3_source_middle):
    for A in (a3_linear, a3_source_middle):
        reg = enumerate_ind_modules(A)
        assert len(reg) == 6
        completeness_check(reg)


def test_modules_cycle3(cycle3):
    reg = enumerate_ind_modules(cycle3, verify_closure=True)
    assert len(reg) == 6  # three projectives, three simples
    report = completeness_check(reg)
    assert report["expected"] is None  # no root-count formula here


def test_modules_d4(d4_subspace):
    reg = enumerate_ind_modules(d4_subspace)
    assert len(reg) == 12
    completeness_check(reg)


def test_modules_kronecker_infinite(kronecker):
    with pytest.raises(ProbablyInfiniteType):
        enumerate_ind_modules(kronecker, max_objects=40)


def test_complexes_c2_a2(a2):
    reg = enumerate_ind_complexes(a2, 2)
    assert len(reg) == 7
    labels = sorted(reg.label_of(k) for k in range(len(reg)))
    assert labels == ["(0->P1)", "(0->P2)", "(P1->0)", "(P1->P1)",
                      "(P2->0)", "(P2->P1)", "(P2->P2)"]
    completeness_check(reg)


def test_complexes_c3_a2(a2):
    reg = enumerate_ind_complexes(a2, 3)
    assert len(reg) == 12  # 2*7 - 2 shared stalks
    completeness_check(reg)


def test_complexes_cycle3(cycle3):
    reg = enumerate_ind_complexes(cycle3, 2)
    assert len(reg) == 12
    completeness_check(reg)
    with pytest.raises(UnsupportedAlgebraForN):
        enumerate_ind_complexes(cycle3, 3)


def test_complexes_star5(star5):
    reg = enumerate_ind_complexes(star5, 2)
    assert len(reg) == 20
    labels = {reg.label_of(k) for k in range(len(reg))}
    assert "(P2+P4->P1)" in labels
    completeness_check(reg)


def test_canonical_ids_deterministic(a2):
    reg1 = enumerate_ind_complexes(a2, 2)
    reg2 = enumerate_ind_complexes(a2, 2)
    assert [reg1.label_of(reg1.index_of_id(i)) for i in sorted(reg1.ids())] == \
           [reg2.label_of(reg2.index_of_id(i)) for i in sorted(reg2.ids())]


def test_registry_residue_field_dimension(a2, cycle3):
    # every registered object has dim End/rad End = 1
    from cnproj.decompose import end_rad_dim
    for A, n in ((a2, 2), (cycle3, 2)):
        reg = enumerate_ind_complexes(A, n)
        for obj in reg.objects():
            r, d = end_rad_dim(reg.cat, obj)
            assert d - r == 1
