import pytest

from colorhopf import corpus
from colorhopf.corpus import FiniteGroupTable, group_algebra, mutate
from colorhopf.errors import FieldMismatch, GradingIncompatible, GroupMismatch
from colorhopf.hopf import tensor_hopf, verify_hopf, verify_morphism

ALG = corpus.corpus_algebras()


@pytest.mark.parametrize("name", sorted(ALG))
def test_corpus_algebra_verifies(name):
    report = verify_hopf(ALG[name], require_cocommutative=True)
    assert report.ok, report.failed_names


@pytest.mark.parametrize("name", sorted(corpus.MORPHISMS))
def test_corpus_morphism_verifies(name):
    f = corpus.corpus_morphisms(ALG)[name]
    assert verify_morphism(f).ok


@pytest.mark.parametrize("name, kind", corpus.MUTATIONS)
def test_mutation_fails_targeted_check(name, kind):
    report = verify_hopf(mutate(ALG[name], kind))
    assert not report.ok
    assert not report.check(corpus.MUTATION_TARGETS[kind]).passed


def test_pairwise_products_verify():
    products = corpus.pairwise_products(ALG)
    assert len(products) > 20
    for label, P in products.items():
        assert verify_hopf(P, require_cocommutative=True).ok, label


def test_nonzero_degree_group_likes_rejected():
    # a group-like g has Delta g = g (x) g in degree 2|g|, so only degree 0 is consistent
    table = FiniteGroupTable.cyclic(4)
    phi = corpus.phi_z4()
    with pytest.raises(GradingIncompatible):
        group_algebra(table, phi, grading=[(0,), (2,), (0,), (2,)])


def test_group_table_validation():
    with pytest.raises(ValueError):
        FiniteGroupTable([[0, 1], [0, 1]], ["a", "b"])
    S3 = FiniteGroupTable.symmetric3()
    assert S3.order == 6 and not S3.is_abelian()


def test_subalgebra_inventory_is_closed():
    from colorhopf.catops import subalgebra_witness
    from colorhopf.linalg import GradedSubspace

    for name, H in ALG.items():
        for label in corpus.SUBALGEBRAS[name]:
            U = GradedSubspace.span(H.space, corpus.subalgebra_vectors(H, label))
            assert subalgebra_witness(H, U) is None, (name, label)


def test_tensor_products_need_same_phi():
    with pytest.raises(GroupMismatch):
        tensor_hopf(ALG["k_z4_c4"], ALG["lambda_v"])
    with pytest.raises(FieldMismatch):
        tensor_hopf(ALG["k_z4_f5"], ALG["lambda_v"])


def test_break_degree_residual():
    # with |t| = 1: Delta(t t) = 1 (x) 1 while Delta(t) Delta(t) = phi(1, 1) 1 (x) 1
    report = verify_hopf(mutate(ALG["k_z2"], "break_degree"))
    check = report.check("compatibility")
    assert check.witness == (1, 1)
    assert check.residual == {0: 2}
