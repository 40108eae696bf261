import itertools
from fractions import Fraction

import pytest

from colorhopf import corpus
from colorhopf.errors import GroupMismatch
from colorhopf.groups import (
    Bicharacter,
    FgAbGroup,
    bichar_eval,
    build_gamma,
    element_op,
    kappa_eval,
    cocycle_failures,
    commutator_failures,
    u_bar,
    validate_commutation_factor,
)
from colorhopf.scalars import FieldSpec

Q = FieldSpec.rationals()
Z2 = FgAbGroup(0, (2,))
Z4 = FgAbGroup(0, (4,))
V4 = FgAbGroup(0, (2, 2))


def sign(k):
    return Fraction(-1) ** k


def test_element_ops():
    assert element_op("add", Z2, (1,), (1,)) == (0,)
    assert element_op("neg", Z4, (1,)) == (3,)
    assert element_op("canonicalize", Z4, (5,)) == (1,)
    free = FgAbGroup(1, (3,))
    assert element_op("add", free, (2, 2), (-5, 2)) == (-3, 1)


def test_eta():
    eta = Bicharacter.eta(Q)
    assert bichar_eval(eta, (1,), (1,)) == -1
    assert bichar_eval(eta, (0,), (1,)) == 1
    assert validate_commutation_factor(eta).ok


def test_identity_slots_are_one():
    phi = corpus.phi_z4()
    for h in Z4.elements():
        assert phi((0,), h) == 1 and phi(h, (0,)) == 1


def test_z4_brute_force_expansion():
    phi = corpus.phi_z4()
    # biadditivity: phi(2,3) = phi(1,1)^(2*3)
    assert phi((2,), (3,)) == sign(6) == 1
    for a, b in itertools.product(range(4), repeat=2):
        assert phi((a,), (b,)) == sign(a * b)


def test_invalid_over_f5():
    F5 = FieldSpec.prime(5)
    phi = Bicharacter(Z4, F5, ((F5(2),),))
    report = validate_commutation_factor(phi)
    assert not report.ok
    assert 2 * 2 % 5 != 1


def test_klein_factor_exhaustive():
    phi = corpus.phi_klein()
    els = V4.elements()
    assert len(els) == 4
    for (a, b), (c, d) in itertools.product(els, repeat=2):
        assert phi((a, b), (c, d)) == sign(a * d - b * c)
        assert phi((a, b), (c, d)) * phi((c, d), (a, b)) == 1
    assert validate_commutation_factor(phi).ok


def test_parity():
    eta = Bicharacter.eta(Q)
    assert u_bar(eta, (1,)) == 1 and u_bar(eta, (0,)) == 0
    phi = corpus.phi_z4()
    assert [u_bar(phi, (g,)) for g in range(4)] == [0, 1, 0, 1]
    assert all(u_bar(corpus.phi_klein(), g) == 0 for g in V4.elements())


def test_kappa():
    phi = corpus.phi_z4()
    for a, b in itertools.product(range(4), repeat=2):
        expected = -1 if (a % 2 and b % 2) else 1
        assert kappa_eval(phi, (a,), (b,)) == expected


def test_gamma_examples():
    eta = Bicharacter.eta(Q)
    g = build_gamma(eta)
    assert all(g(x, y) == 1 for x, y in itertools.product(Z2.elements(), repeat=2))
    assert not commutator_failures(eta, g, Z2.elements())

    g = build_gamma(corpus.phi_klein())
    assert g((1, 0), (0, 1)) == -1 and g((0, 1), (1, 0)) == 1
    assert not cocycle_failures(g)
    assert not commutator_failures(corpus.phi_klein(), g, V4.elements())

    g = build_gamma(corpus.phi_z4())
    assert all(g((a,), (b,)) == 1 for a, b in itertools.product(range(4), repeat=2))


def test_wrong_group_rejected():
    eta = Bicharacter.eta(Q)
    with pytest.raises(GroupMismatch):
        eta((0, 1), (1,))


def test_skew_failure_reported():
    phi = Bicharacter(Z4, Q, ((Fraction(-1),),))
    assert validate_commutation_factor(phi).ok
    bad = Bicharacter(FgAbGroup(1, ()), Q, ((Fraction(2),),))
    assert not validate_commutation_factor(bad).ok
