from fractions import Fraction

import pytest

from colorhopf.errors import DivisionByZero, FieldMismatch
from colorhopf.scalars import FieldSpec, Residue, arith, multiplicative_order, nth_roots_of_unity_exist, power

from oracles import has_root_of_unity

Q = FieldSpec.rationals()
F5 = FieldSpec.prime(5)


def test_rational_arith():
    assert arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert arith("mul", Fraction(0), Fraction(7, 3)) == 0
    assert arith("sub", Fraction(1), Fraction(1, 4)) == Fraction(3, 4)


def test_prime_field_division():
    assert arith("div", F5(1), F5(2)) == F5(3)
    assert arith("mul", F5(0), F5(4)) == 0


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        arith("div", Fraction(1), Fraction(0))
    with pytest.raises(DivisionByZero):
        arith("div", F5(3), F5(0))


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        arith("add", Fraction(1), F5(1))
    with pytest.raises(FieldMismatch):
        arith("add", F5(1), FieldSpec.prime(7)(1))


def test_power():
    assert power(Fraction(-1), 2) == 1
    assert power(F5(2), 4) == 1
    assert power(Fraction(1, 2), -2) == 4
    assert power(F5(3), 0) == 1
    with pytest.raises(DivisionByZero):
        power(Fraction(0), -1)


def test_characteristic_two_rejected():
    with pytest.raises(ValueError):
        FieldSpec.prime(2)
    with pytest.raises(ValueError):
        FieldSpec.prime(9)


@pytest.mark.parametrize("n, expected", [(1, True), (2, True), (3, False), (4, False), (6, False)])
def test_roots_of_unity_rationals(n, expected):
    assert nth_roots_of_unity_exist(Q, n) is expected


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_roots_of_unity_against_brute_force(p, n):
    assert nth_roots_of_unity_exist(FieldSpec.prime(p), n) is has_root_of_unity(p, n)


def test_multiplicative_order():
    assert multiplicative_order(F5(2)) == 4
    assert multiplicative_order(Fraction(-1)) == 2
    assert multiplicative_order(Fraction(2)) is None


@pytest.mark.parametrize("field", [Q, F5])
def test_format_parse_round_trip(field):
    for x in [field(0), field(1), field(-1), field(3) / field(2)]:
        assert field.parse(field.format(x)) == x


def test_scalar_strings():
    assert Q.format(Fraction(3, 1)) == "3"
    assert Q.format(Fraction(-1, 2)) == "-1/2"
    assert F5.format(F5(-1)) == "4"
    assert isinstance(F5(7), Residue) and F5(7) == 2
