import pytest

from cnproj.complexes import (ChainMap, ComplexN, almost_split_sequence,
                              classify_entries, cokernel_cx, direct_sum_cx,
                              hom_basis_cx, in_Cn_proj, kernel_cx, make_B,
                              make_J, make_L, make_R, make_S, make_T,
                              make_lambda, make_rho, make_sigma, make_stalk,
                              make_tau, mono_or_epi, phi_embed, phi_embed_map,
                              shift, standardize)
from cnproj.errors import IndexOutOfRange
from cnproj.projmod import PathMat


def test_constructors_basic(a2):
    T = make_T(1, 2, algebra=a2)
    assert T.verts == [(), (1,)]
    S = make_S(1, 2, algebra=a2)
    assert S.verts == [(1,), ()]
    J = make_J(1, 1, 2, algebra=a2)
    assert J.verts == [(1,), (1,)]
    assert not J.diffs[0].is_zero()
    stalk = make_stalk(1, 2, 3, algebra=a2)
    assert stalk.verts == [(), (1,), ()]
    with pytest.raises(IndexOutOfRange):
        make_J(1, 2, 2, algebra=a2)
    with pytest.raises(IndexOutOfRange):
        make_stalk(1, 4, 3, algebra=a2)


def test_R_of_simple_projective_is_T(a2):
    # sink vertex 2: P_2 simple projective, R_{n-1}(P_2) = T(P_2)
    R = make_R(2, 1, 2, algebra=a2)
    T = make_T(2, 2, algebra=a2)
    assert R.verts == T.verts == [(), (2,)]


def test_L_of_source_is_S(a2):
    # source vertex 1: I_1 = S_1 simple injective, so L_1(P_1) = S(P_1)
    L = make_L(1, 1, 2, algebra=a2)
    assert L.verts == [(1,), ()]


def test_R_L_B_windows_cycle3(cycle3):
    # rad P_1 = S_2, so R_1(P_1) = (P_2 -> P_1)
    R = make_R(1, 1, 2, algebra=cycle3)
    assert R.verts == [(2,), (1,)]
    # coresolution of S_1: I_1 -> I_3 -> ..., nu^{-1}: L^1 = P_3
    L = make_L(1, 1, 2, algebra=cycle3)
    assert L.verts == [(1,), (3,)]
    # B_1(P_1) = (P_2 -> P_3) with composite differential = 0 (rad^2 = 0)
    B = make_B(1, 1, 2, algebra=cycle3)
    assert B.verts == [(2,), (3,)]
    assert B.diffs[0].is_zero()


def test_named_maps_validate_a3_n3(a3_linear):
    # the ChainMap constructor checks all commuting squares
    for v in (1, 2, 3):
        for j in (1, 2):
            rho = make_rho(v, j, 3, algebra=a3_linear)
            lam = make_lambda(v, j, 3, algebra=a3_linear)
            sig = make_sigma(v, j, 3, algebra=a3_linear)
            tau = make_tau(v, j, 3, algebra=a3_linear)
            for X in (rho.source, rho.target, lam.target, sig.target):
                for i in range(X.n - 2):
                    assert X.diffs[i + 1].compose(X.diffs[i]).is_zero()


def test_almost_split_sequence_exact(a3_linear, cycle3):
    for A in (a3_linear, cycle3):
        for v in A.quiver.vertices:
            for n, j in ((2, 1), (3, 1), (3, 2)):
                left, right = almost_split_sequence(v, j, n, algebra=A)
                assert right.compose(left).is_zero()
                mid = left.to_mid()
                midr = right.to_mid()
                for i in range(n):
                    # degreewise split short exact
                    assert mid.parts[i].is_mono()
                    assert midr.parts[i].is_epi()
                    dim_mid = mid.parts[i].target.total_dim
                    assert dim_mid == (mid.parts[i].source.total_dim
                                       + midr.parts[i].target.total_dim)


def test_hom_basis_cx_dims(a2):
    P_T = make_T(1, 2, algebra=a2)       # (0 -> P_1)
    P_S = make_S(1, 2, algebra=a2)       # (P_1 -> 0)
    assert hom_basis_cx(P_S, P_T) == []
    J = make_J(1, 1, 2, algebra=a2)
    assert len(hom_basis_cx(J, J)) == 1  # dim End(P_1) = 1
    pres = ComplexN(a2, 2, [(2,), (1,)],
                    [PathMat(a2, (2,), (1,), {(0, 0): {a2.arrow_path("a"): a2.field.one}})])
    # maps go from (0 -> P_1) into the presentation (P_2 -> P_1), not back
    T1 = make_T(1, 2, algebra=a2)
    assert len(hom_basis_cx(T1, pres)) == 1
    assert len(hom_basis_cx(pres, T1)) == 0


def test_kernel_cokernel_of_rho_lambda(a2):
    # vertex 1 is the source of A_2: nu(P_1) = I_1 simple, L_1(P_1) = S(P_1)
    # and Ker(lambda_1^{2,1}) = T(P_1)
    lam = make_lambda(1, 1, 2, algebra=a2)
    K, inc = kernel_cx(lam)
    assert in_Cn_proj(K)
    Z, _ = standardize(K)
    assert Z.dim_data() == make_T(1, 2, algebra=a2).dim_data()
    assert all(p.compose(q).is_zero()
               for p, q in zip(lam.to_mid().parts, inc.parts))
    # vertex 2 is the sink: P_2 simple projective, R_1(P_2) = T(P_2)
    # and Coker(rho_1^{2,2}) = S(P_2)
    rho = make_rho(2, 1, 2, algebra=a2)
    C, pr = cokernel_cx(rho)
    assert in_Cn_proj(C)
    Z2, _ = standardize(C)
    assert Z2.dim_data() == make_S(2, 2, algebra=a2).dim_data()
    assert all(p.compose(q).is_zero()
               for p, q in zip(pr.parts, rho.to_mid().parts))
    # at the other vertices both maps are (ret-irred-sec) over hereditary A_2,
    # with zero kernel and a cokernel outside the category
    C1, _ = cokernel_cx(make_rho(1, 1, 2, algebra=a2))
    assert not in_Cn_proj(C1)
    K2, _ = kernel_cx(make_lambda(2, 1, 2, algebra=a2))
    assert K2.is_zero()


def test_cycle3_kernel_of_f(cycle3):
    # f: (P_3 -> P_2) -> (0 -> P_1) has kernel (P_3 -> S_3), not in C_2(proj)
    one = cycle3.field.one
    X = ComplexN(cycle3, 2, [(3,), (2,)],
                 [PathMat(cycle3, (3,), (2,), {(0, 0): {cycle3.arrow_path("b"): one}})])
    Y = make_T(1, 2, algebra=cycle3)
    fs = hom_basis_cx(X, Y)
    assert len(fs) == 1
    f = fs[0]
    K, _ = kernel_cx(f)
    # degree 1 kernel is all of P_3 (dims (1,0,1)), degree 2 is S_3
    assert K.dims() == ((1, 0, 1), (0, 0, 1))
    assert not in_Cn_proj(K)


def test_classify_entries(a2, cycle3):
    rho = make_rho(2, 1, 2, algebra=a2)
    assert classify_entries(rho) == "sec"
    lam = make_lambda(1, 1, 2, algebra=a2)
    assert classify_entries(lam) == "ret"
    one = cycle3.field.one
    X = ComplexN(cycle3, 2, [(3,), (2,)],
                 [PathMat(cycle3, (3,), (2,), {(0, 0): {cycle3.arrow_path("b"): one}})])
    Y = make_T(1, 2, algebra=cycle3)
    f = hom_basis_cx(X, Y)[0]
    assert classify_entries(f) == "ret-irred-sec"


def test_mono_or_epi(a2):
    rho = make_rho(2, 1, 2, algebra=a2)
    assert mono_or_epi(rho) == "mono"
    lam = make_lambda(1, 1, 2, algebra=a2)
    assert mono_or_epi(lam) == "epi"
    J = make_J(1, 1, 2, algebra=a2)
    assert mono_or_epi(ChainMap.identity(J)) == "both"


def test_shift_and_phi(a2):
    T2 = make_T(1, 2, algebra=a2)
    assert phi_embed(T2, 1, 3).verts == make_T(1, 3, algebra=a2).verts
    assert phi_embed(T2, 0, 3).verts == make_stalk(1, 2, 3, algebra=a2).verts
    J = make_J(1, 1, 2, algebra=a2)
    E = phi_embed(J, 1, 3)
    assert E.verts == [(), (1,), (1,)]
    assert not E.diffs[1].is_zero()
    Sh = shift(E, 1)
    assert Sh.verts == [(1,), (1,), ()]
    with pytest.raises(IndexOutOfRange):
        phi_embed(J, 2, 3)


def test_phi_full_embedding(a2):
    # phi_0 preserves Hom dimensions on all pairs of C_2(kA_2) objects
    one = a2.field.one
    objs = [make_T(1, 2, algebra=a2), make_T(2, 2, algebra=a2),
            make_J(1, 1, 2, algebra=a2), make_J(2, 1, 2, algebra=a2),
            make_S(1, 2, algebra=a2), make_S(2, 2, algebra=a2),
            ComplexN(a2, 2, [(2,), (1,)],
                     [PathMat(a2, (2,), (1,), {(0, 0): {a2.arrow_path("a"): one}})])]
    for X in objs:
        for Y in objs:
            d2 = len(hom_basis_cx(X, Y))
            for i in (0, 1):
                d3 = len(hom_basis_cx(phi_embed(X, i, 3), phi_embed(Y, i, 3)))
                assert d3 == d2
    # and maps embed to chain maps
    f = hom_basis_cx(objs[0], objs[6])[0]
    g = phi_embed_map(f, 0, 3)
    gm = g.to_mid()
    for i in range(2):
        lhs = gm.parts[i + 1].compose(g.source.to_mid().diffs[i])
        rhs = g.target.to_mid().diffs[i].compose(gm.parts[i])
        assert (lhs - rhs).is_zero()


def test_direct_sum_cx(a2):
    T1 = make_T(1, 2, algebra=a2)
    S2 = make_S(2, 2, algebra=a2)
    D, incs, prjs = direct_sum_cx([T1, S2])
    assert D.verts == [(2,), (1,)]
    assert prjs[0].compose(incs[0]).parts[1].entries  # identity on T1 part
    assert prjs[1].compose(incs[0]).is_zero()
