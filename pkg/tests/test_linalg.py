from fractions import Fraction

import pytest

from colorhopf import corpus
from colorhopf.errors import AmbientMismatch, NotGraded
from colorhopf.groups import Bicharacter, FgAbGroup
from colorhopf.linalg import (
    GradedLinearMap,
    GradedSubspace,
    GradedVectorSpace,
    braiding_map,
    map_image,
    map_kernel,
    quotient_space,
    subspace_lattice,
    tensor_space,
)
from colorhopf.scalars import FieldSpec

from oracles import nullspace_rows, rref_rows

Q = FieldSpec.rationals()
Z2 = FgAbGroup(0, (2,))
ETA = Bicharacter.eta(Q)


def space(*degrees):
    return GradedVectorSpace(Q, Z2, tuple((d,) for d in degrees))


def fr(rows):
    return [[Fraction(x) for x in row] for row in rows]


def test_tensor_space_degrees():
    V = space(0, 1)
    VV = tensor_space(V, V)
    assert VV.dim == 4
    assert sum(1 for d in VV.degrees if d == (0,)) == 2
    assert tensor_space(V, space(0, 0, 1)).dim == 6
    # basis index of (i=1, j=0) in a 2x2 tensor
    assert VV.names[2] == f"{V.names[1]}⊗{V.names[0]}"


def test_braiding_sign():
    V = space(1)
    c = braiding_map(ETA, V, V)
    assert c.matrix() == [[-1]]
    V, W = space(1), space(0)
    assert braiding_map(ETA, V, W).matrix() == [[1]]


def test_braiding_involutive():
    V, W = space(0, 1, 1), space(1, 0)
    cvw, cwv = braiding_map(ETA, V, W), braiding_map(ETA, W, V)
    assert cwv.compose(cvw) == GradedLinearMap.identity(tensor_space(V, W))


def test_kernel_and_image_trivial_cases():
    V = space(0, 1, 1)
    assert map_kernel(GradedLinearMap.identity(V)).dim == 0
    assert map_image(GradedLinearMap.zero(V, V)).dim == 0


def test_group_hom_kernel_matches_sympy():
    pi = corpus.corpus_morphisms(corpus.corpus_algebras())["pi_z4_z2"].map
    K = map_kernel(pi)
    assert K.dim == 2
    assert K.matrix() == nullspace_rows(pi.matrix(), 4)


def test_lattice():
    H = corpus.build("k_z4")
    whole = GradedSubspace.whole(H.space)
    A = GradedSubspace.span(H.space, [corpus.vec(H, {"1": 1, "g^2": 1})])
    B = GradedSubspace.span(H.space, [corpus.vec(H, {"1": 1}), corpus.vec(H, {"g^2": 1})])
    zero = GradedSubspace.zero(H.space)
    assert subspace_lattice("sum", A, A) == A
    assert subspace_lattice("intersect", A, zero) == zero
    assert subspace_lattice("intersect", A, B) == A
    assert subspace_lattice("contains", B, A) is True
    assert subspace_lattice("member", B, corpus.vec(H, {"g": 1})) is False
    assert subspace_lattice("sum", A, B).matrix() == rref_rows(A.matrix() + B.matrix(), 4)
    assert subspace_lattice("sum", B, whole) == whole


def test_ambient_mismatch():
    A = GradedSubspace.zero(space(0, 1))
    B = GradedSubspace.zero(space(0, 1, 1))
    with pytest.raises(AmbientMismatch):
        subspace_lattice("sum", A, B)


def test_span_splits_into_homogeneous_parts():
    V = space(0, 1)
    U = GradedSubspace.span(V, [{0: Fraction(1), 1: Fraction(1)}])
    assert U.dim == 2
    with pytest.raises(NotGraded):
        GradedSubspace.from_vectors(V, [{0: Fraction(1), 1: Fraction(1)}])


def test_quotients():
    H = corpus.build("k_z4")
    V = H.space
    assert quotient_space(V, GradedSubspace.zero(V)).rep_indices == (0, 1, 2, 3)
    assert quotient_space(V, GradedSubspace.whole(V)).quotient.dim == 0
    U = GradedSubspace.span(V, [corpus.vec(H, {"1": 1, "g^2": -1}), corpus.vec(H, {"g": 1, "g^3": -1})])
    pres = quotient_space(V, U)
    assert pres.quotient.dim == 2
    assert [V.names[i] for i in pres.rep_indices] == ["g^2", "g^3"]
    # projection kills U and the section splits it
    assert all(not pres.projection(r) for r in U.rows)
    assert pres.projection.compose(pres.section) == GradedLinearMap.identity(pres.quotient)


def test_rref_matches_sympy():
    V = GradedVectorSpace(Q, FgAbGroup(0, ()), ((),) * 4)
    rows = fr([[2, 3, 0, 0], [1, 0, 5, 0], [0, 1, 0, 7], [3, 3, 5, 7]])
    U = GradedSubspace.span(V, [{i: x for i, x in enumerate(r) if x} for r in rows])
    assert U.matrix() == rref_rows(rows, 4)
