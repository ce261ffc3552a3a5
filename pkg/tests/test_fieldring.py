"""Exact arithmetic in Q(b).  Everything here must be structural equality,
never floating point."""

from fractions import Fraction

import pytest

from csjack.errors import DivisionByZero, PoleAtValue
from csjack.fieldring import (
    BETA,
    ONE,
    ZERO,
    FieldElement,
    field,
    is_integer_in_inverse_beta,
    pochhammer,
    poly,
    poly_divmod,
    poly_gcd,
    poly_mul,
)


def test_poly_helpers():
    assert poly([1, 0, 0]) == (Fraction(1),)
    assert poly([]) == ()
    assert poly(["1/2", 3]) == (Fraction(1, 2), Fraction(3))
    a = poly([1, 1])
    assert poly_mul(a, a) == poly([1, 2, 1])
    q, r = poly_divmod(poly([1, 2, 1]), a)
    assert q == a and r == ()
    q, r = poly_divmod(poly([1, 0, 1]), a)
    assert r != ()
    assert poly_gcd(poly([1, 2, 1]), poly([1, 1])) == poly([1, 1])


def test_constructor_canonicalizes():
    assert FieldElement((0, 0)) == ZERO
    assert FieldElement([2, 2], [2]) == BETA + ONE
    # gcd cancellation and monic denominator
    x = FieldElement([0, 1, 1], [0, 2])  # b(b+1) / 2b
    assert x == (BETA + ONE) / 2
    assert x.den == (Fraction(1),)
    with pytest.raises(DivisionByZero):
        FieldElement([1], [])


def test_arithmetic():
    b = BETA
    assert b + 1 == FieldElement([1, 1])
    assert 1 - b == FieldElement([1, -1])
    assert (b + 1) * (b - 1) == b * b - 1
    assert b * Fraction(1, 2) == FieldElement([0, "1/2"])
    assert (b**3 + b) / b == b**2 + 1
    assert b**0 == ONE
    assert (b + 1) ** 2 == b * b + 2 * b + 1
    x = (b + 2) / (b + 1)
    assert x * (b + 1) == b + 2
    assert x - x == ZERO
    assert x + (-x) == ZERO
    assert x.inverse() * x == ONE
    assert ONE / x == x.inverse()
    with pytest.raises(DivisionByZero):
        x / ZERO
    with pytest.raises(DivisionByZero):
        ZERO.inverse()


def test_negative_beta_power():
    inv = FieldElement.beta(-1)
    assert inv * BETA == ONE
    assert FieldElement.beta(-2) == inv * inv


def test_equality_and_hash():
    a = (BETA + 1) / (BETA * 2 + 2)
    assert a == field(Fraction(1, 2))
    assert hash(a) == hash(field(Fraction(1, 2)))
    assert bool(ZERO) is False
    assert bool(BETA) is True
    seen = {BETA: "x"}
    assert seen[FieldElement([0, 1])] == "x"


def test_is_constant():
    assert field(3).is_constant()
    assert not BETA.is_constant()
    assert field(3).as_fraction() == 3
    assert ((BETA + 2) - BETA).as_fraction() == 2


def test_specialize():
    x = (BETA**2 + 1) / (BETA - 1)
    assert x.specialize(2) == 5
    assert x.specialize(Fraction(1, 2)) == Fraction(-5, 2)
    with pytest.raises(PoleAtValue):
        x.specialize(1)
    with pytest.raises(PoleAtValue):
        BETA.as_fraction()


def test_pochhammer():
    assert pochhammer(BETA, 0) == ONE
    assert pochhammer(BETA, 1) == BETA
    assert pochhammer(BETA, 3) == BETA * (BETA + 1) * (BETA + 2)
    assert pochhammer(2, 3) == field(24)


def test_json_round_trip():
    x = (BETA**2 + Fraction(1, 3)) / (BETA + 5)
    obj = x.to_json()
    assert obj["num"] and obj["den"]
    assert FieldElement.from_json(obj) == x
    assert FieldElement.from_json(ZERO.to_json()) == ZERO


def test_str_forms():
    assert str(ZERO) == "0"
    assert str(BETA) == "b"
    assert str(BETA**2 * 2 + 1) == "2*b^2 + 1"
    assert str(field(Fraction(3, 2))) == "3/2"
    # ratios are displayed with cleared integer coefficients
    assert str((BETA * 6) / (BETA * 2 + 1)) == "(6*b)/(2*b + 1)"
    assert str(ONE / (BETA + 1)) == "1/(b + 1)"


def test_integer_in_inverse_beta():
    assert is_integer_in_inverse_beta(field(7))
    assert is_integer_in_inverse_beta(ONE + FieldElement.beta(-1))
    assert is_integer_in_inverse_beta((BETA * 3 + 2) / BETA)
    assert not is_integer_in_inverse_beta(BETA)
    assert not is_integer_in_inverse_beta(field(Fraction(1, 2)))
    assert not is_integer_in_inverse_beta(ONE / (BETA + 1))
    assert not is_integer_in_inverse_beta((BETA**2 + 1) / BETA)
