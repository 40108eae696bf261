from colorhopf import corpus
from colorhopf.catops import cokernel, sub_hopf
from colorhopf.hopf import counit_morphism, identity_morphism
from colorhopf.linalg import GradedSubspace, quotient_space
from colorhopf.normality import (
    ModuleCoalgebraQuotient,
    is_abelian_object,
    is_normal,
    is_quotient_module_coalgebra,
    newman_phi,
    newman_psi,
    xi_apply,
    xi_map,
)

from oracles import Table, s3_table

ALG = corpus.corpus_algebras()
MOR = corpus.corpus_morphisms(ALG)
KS3 = ALG["k_s3"]
KZ4 = ALG["k_z4"]


def sub(H, label):
    return sub_hopf(H, GradedSubspace.span(H.space, corpus.subalgebra_vectors(H, label)))


def test_xi_is_conjugation_on_s3():
    ref = Table(s3_table())
    for a in range(6):
        for x in range(6):
            expected = ref.table[ref.table[a][x]][ref.inv[a]]
            assert xi_apply(KS3, a, KS3.basis(x)) == {expected: 1}


def test_xi_trivial_on_commutative():
    for name in ["k_z4", "lambda_v", "lambda_vw", "lambda_e1_e2"]:
        H = ALG[name]
        for a in range(H.dim):
            for x in range(H.dim):
                e = H.eps(H.basis(a))
                expected = {x: e} if e else {}
                assert xi_apply(H, a, H.basis(x)) == expected


def test_xi_v_v_vanishes():
    H = ALG["lambda_v"]
    assert xi_apply(H, 1, H.basis(1)) == {}
    assert xi_map(H).map.domain.dim == 4


def test_normal_subgroups():
    assert is_normal(KS3, sub(KS3, "a3")).normal
    res = is_normal(KS3, sub(KS3, "c12"))
    assert not res.normal
    a, x = res.witness
    assert not sub(KS3, "c12").carrier.contains(res.image)
    assert xi_apply(KS3, a, KS3.basis(x)) == res.image


def test_named_non_normal_witness():
    # conjugating (12) by (123) gives (23), which is outside k<(12)>
    names = KS3.space.names
    image = xi_apply(KS3, names.index("(123)"), KS3.basis(names.index("(12)")))
    assert image == {names.index("(23)"): 1}
    assert not sub(KS3, "c12").carrier.contains(image)


def test_everything_normal_in_commutative():
    for name in ["k_z4", "lambda_vw", "lambda_e1_e2"]:
        H = ALG[name]
        for label in corpus.SUBALGEBRAS[name]:
            assert is_normal(H, sub(H, label)).normal


def test_newman_phi_examples():
    H = KZ4
    unit = sub(H, "unit")
    assert newman_phi(H, unit).quotient.dim == 4
    assert newman_phi(H, sub(H, "whole")).quotient.dim == 1
    Q = newman_phi(H, sub(H, "z2"))
    assert Q.quotient.dim == 2
    assert Q.ideal == GradedSubspace.span(
        H.space, [corpus.vec(H, {"g^2": 1, "1": -1}), corpus.vec(H, {"g^3": 1, "g": -1})]
    )


def test_newman_phi_non_normal_gives_module_coalgebra():
    Q = newman_phi(KS3, sub(KS3, "c12"))
    assert isinstance(Q, ModuleCoalgebraQuotient)
    assert Q.presentation.quotient.dim == 3
    assert newman_psi(KS3, Q).carrier == sub(KS3, "c12").carrier


def test_newman_psi_examples():
    H = KZ4
    assert newman_psi(H, counit_morphism(H)).carrier == GradedSubspace.whole(H.space)
    assert newman_psi(H, identity_morphism(H)).carrier == GradedSubspace.span(H.space, [H.one])
    assert newman_psi(H, MOR["pi_z4_z2"]).carrier == sub(H, "z2").carrier


def test_module_coalgebra_predicate():
    H = KZ4
    assert is_quotient_module_coalgebra(H, cokernel(MOR["incl_z2_z4"]).projection)
    assert is_quotient_module_coalgebra(H, identity_morphism(H))
    bad = quotient_space(H.space, GradedSubspace.span(H.space, [corpus.vec(H, {"g": 1})]))
    assert not is_quotient_module_coalgebra(H, bad.projection)


def test_abelian():
    assert is_abelian_object(ALG["lambda_v"]).abelian
    assert not is_abelian_object(KS3).abelian
    k = counit_morphism(KZ4).target
    assert is_abelian_object(k).abelian


def test_abelian_routes_agree_everywhere():
    for name, H in ALG.items():
        check = is_abelian_object(H)
        assert check.commutative == check.diagonal_normal, name
