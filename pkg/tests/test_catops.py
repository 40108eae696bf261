from fractions import Fraction

import pytest

from colorhopf import corpus
from colorhopf.catops import (
    binary_product,
    coequalizer,
    cokernel,
    diagonal,
    equalizer,
    factor_through,
    factorize,
    hkernel,
    ideal_closure,
    pullback_inclusion,
    quotient_hopf,
    sub_hopf,
)
from colorhopf.errors import DoesNotCommute, NotParallel, NotSubalgebra
from colorhopf.hopf import (
    HopfMorphism,
    counit_morphism,
    identity_morphism,
    trivial_morphism,
    unit_morphism,
    verify_hopf,
    verify_morphism,
)
from colorhopf.linalg import GradedSubspace

from oracles import (
    Table,
    cyclic_table,
    group_equalizer_rows,
    ideal_closure_rows,
    nullspace_rows,
)

ALG = corpus.corpus_algebras()
MOR = corpus.corpus_morphisms(ALG)
KZ4 = ALG["k_z4"]
PI = MOR["pi_z4_z2"]
Z4 = Table(cyclic_table(4))


def dense_images(f):
    return [[x for x in col] for col in zip(*f.map.matrix())]


def span(H, *vectors):
    return GradedSubspace.span(H.space, [corpus.vec(H, v) for v in vectors])


def test_equalizer_trivial_cases():
    assert equalizer(PI, PI).carrier == GradedSubspace.whole(KZ4.space)
    K = ALG["k_z2"]
    E = equalizer(identity_morphism(K), trivial_morphism(K, K))
    assert E.carrier == span(K, {"1": 1})


def test_equalizer_with_antipode_is_everything():
    # Z2 has trivial inversion, so pi after the antipode of kZ4 equals pi
    sigma = HopfMorphism(KZ4, KZ4, KZ4.antipode)
    g = PI.compose(sigma)
    E = equalizer(PI, g)
    expected = group_equalizer_rows(Z4, dense_images(PI), dense_images(g))
    assert E.carrier.matrix() == expected
    assert E.dim == 4


def test_equalizer_inverse_map():
    inv = MOR["inverse_z4"]
    E = equalizer(identity_morphism(KZ4), inv)
    assert E.carrier.matrix() == group_equalizer_rows(Z4, dense_images(identity_morphism(KZ4)), dense_images(inv))
    assert E.carrier == span(KZ4, {"1": 1}, {"g^2": 1})


def test_equalizer_needs_parallel_pair():
    with pytest.raises(NotParallel):
        equalizer(PI, identity_morphism(KZ4))


def test_product():
    A, B = ALG["lambda_e1"], ALG["lambda_e2"]
    P = binary_product(A, B)
    assert P.proj_a(corpus.vec(P.algebra, {"v⊗1": 1})) == corpus.vec(A, {"v": 1})
    assert P.proj_a(corpus.vec(P.algebra, {"1⊗w": 1})) == {}
    both = diagonal(P.proj_a, P.proj_b, P)
    assert both.map == identity_morphism(P.algebra).map


def test_product_with_ground_field():
    A = ALG["lambda_v"]
    k = unit_morphism(A).source
    P = binary_product(A, k)
    assert P.proj_a.is_injective() and P.proj_a.is_surjective()


def test_diagonal_identities():
    H = ALG["lambda_vw"]
    d = diagonal(identity_morphism(H), identity_morphism(H))
    assert d.map.matrix() == H.comult.matrix()
    P = binary_product(H, H)
    mixed = diagonal(identity_morphism(H), trivial_morphism(H, H), P)
    assert P.proj_a.compose(mixed).map == identity_morphism(H).map
    k = unit_morphism(H).source
    ee = diagonal(counit_morphism(H, k), counit_morphism(H, k))
    assert ee.map.matrix() == H.counit.matrix()


def test_hkernel_examples():
    H = ALG["lambda_vw"]
    assert hkernel(counit_morphism(H)).carrier == GradedSubspace.whole(H.space)
    assert hkernel(identity_morphism(H)).carrier == span(H, {"1": 1})
    K = hkernel(PI)
    expected = nullspace_rows(Z4.hkernel_system(dense_images(PI)), 4)
    assert K.carrier.matrix() == expected
    assert K.carrier == span(KZ4, {"1": 1}, {"g^2": 1})


def test_ideal_closure():
    H = KZ4
    assert ideal_closure(H, GradedSubspace.zero(H.space)).dim == 0
    assert ideal_closure(H, span(H, {"1": 1})).dim == 4
    seed = [[Fraction(-1), 0, Fraction(1), 0]]
    I = ideal_closure(H, span(H, {"g^2": 1, "1": -1}))
    assert I.matrix() == ideal_closure_rows(Z4, seed)
    assert I == span(H, {"g^2": 1, "1": -1}, {"g^3": 1, "g": -1})


def test_cokernels():
    H = KZ4
    k_to_h = unit_morphism(H)
    assert cokernel(k_to_h).quotient.dim == 4
    assert cokernel(identity_morphism(H)).quotient.dim == 1
    Q = cokernel(MOR["incl_z2_z4"])
    assert Q.quotient.dim == 2
    assert Q.ideal == span(H, {"g^2": 1, "1": -1}, {"g^3": 1, "g": -1})
    assert verify_hopf(Q.quotient).ok


def test_coequalizer_identity_antipode():
    H = KZ4
    S = HopfMorphism(H, H, H.antipode)
    C = coequalizer(identity_morphism(H), S)
    # image of Id - S is span{g - g^3}; the ideal it generates also contains g^2 - 1
    seed = [[0, Fraction(1), 0, Fraction(-1)]]
    assert C.ideal.matrix() == ideal_closure_rows(Z4, seed)
    assert C.quotient.dim == 2
    assert verify_hopf(C.quotient).ok
    assert coequalizer(PI, PI).quotient.dim == 2


def test_coequalizer_with_trivial_is_cokernel():
    f = MOR["incl_z2_z4"]
    a = coequalizer(f, trivial_morphism(f.source, f.target))
    assert a.ideal == cokernel(f).ideal


def test_factorize_examples():
    ident = identity_morphism(KZ4)
    F = factorize(ident)
    assert F.p.target.dim == 4 and F.i.is_injective()
    F = factorize(trivial_morphism(KZ4, KZ4))
    assert F.p.target.dim == 1
    F = factorize(PI)
    assert F.p.target.dim == 2
    kernel = span(KZ4, {"1": 1, "g^2": -1}, {"g": 1, "g^3": -1})
    assert F.kernel == F.ideal == kernel
    assert F.i.compose(F.p).map == PI.map


def test_pullbacks():
    B = ALG["k_z2"]
    whole = sub_hopf(B, GradedSubspace.whole(B.space))
    assert pullback_inclusion(PI, whole).sub.carrier == GradedSubspace.whole(KZ4.space)
    unit = sub_hopf(B, GradedSubspace.span(B.space, [B.one]))
    assert pullback_inclusion(PI, unit).sub.carrier == hkernel(PI).carrier


def test_pullback_lands_in_target():
    for name, f in MOR.items():
        for label in corpus.SUBALGEBRAS[[n for n, H in ALG.items() if H is f.target][0]]:
            C = sub_hopf(f.target, GradedSubspace.span(f.target.space, corpus.subalgebra_vectors(f.target, label)))
            pb = pullback_inclusion(f, C)
            for row in pb.sub.carrier.rows:
                assert C.carrier.contains(f(row)), (name, label)


def test_not_subalgebra():
    H = KZ4
    with pytest.raises(NotSubalgebra):
        sub_hopf(H, span(H, {"1": 1}, {"g": 1}))


def test_universal_properties():
    # equalizer mediation
    inv = MOR["inverse_z4"]
    E = equalizer(identity_morphism(KZ4), inv)
    h = MOR["incl_z2_z4"]
    hp = factor_through(E, identity_morphism(KZ4), inv, h)
    assert E.inclusion.compose(hp).map == h.map
    # product mediation is the diagonal
    A = ALG["lambda_v"]
    P = binary_product(A, A)
    ident = identity_morphism(A)
    assert factor_through(P, ident, ident).map == diagonal(ident, ident, P).map
    # coequalizer mediation
    S = HopfMorphism(KZ4, KZ4, KZ4.antipode)
    C = coequalizer(identity_morphism(KZ4), S)
    hp = factor_through(C, identity_morphism(KZ4), S, PI)
    assert hp.compose(C.projection).map == PI.map
    with pytest.raises(DoesNotCommute):
        factor_through(E, identity_morphism(KZ4), inv, identity_morphism(KZ4))


def test_quotient_by_hopf_ideal_verifies():
    I = span(KZ4, {"g^2": 1, "1": -1}, {"g^3": 1, "g": -1})
    Q = quotient_hopf(KZ4, I)
    assert verify_hopf(Q.quotient).ok
    assert verify_morphism(Q.projection).ok
