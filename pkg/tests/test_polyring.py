from fractions import Fraction

import pytest

from csjack.errors import (
    ContextMismatch,
    IndexOutOfRange,
    NonzeroRemainder,
)
from csjack.fieldring import BETA, ONE, FieldElement
from csjack.polyring import LaurentPoly, VarContext, divide_by_vardiff


CTX2 = VarContext(2)
CTX3 = VarContext(3)


def z(ctx, i):
    return LaurentPoly.variable(ctx, i)


def test_context():
    assert VarContext(3).nvars == 3
    with pytest.raises(IndexOutOfRange):
        VarContext(0)


def test_constructors():
    p = LaurentPoly.monomial(CTX2, (2, 1), 3)
    assert p.coefficient((2, 1)) == FieldElement([3])
    assert p.coefficient((1, 2)) == FieldElement([0])
    assert LaurentPoly.one(CTX2).constant_term() == ONE
    assert not LaurentPoly.zero(CTX2)
    assert LaurentPoly.constant(CTX2, Fraction(1, 2)).constant_term() == FieldElement(["1/2"])
    assert z(CTX2, 1) == LaurentPoly.monomial(CTX2, (1, 0))
    with pytest.raises(IndexOutOfRange):
        LaurentPoly.variable(CTX2, 3)
    with pytest.raises(ContextMismatch):
        LaurentPoly.monomial(CTX2, (1, 0, 0))


def test_zero_coefficients_dropped():
    p = LaurentPoly(CTX2, {(1, 0): ONE, (0, 1): FieldElement([0])})
    assert len(p.terms) == 1
    q = z(CTX2, 1) - z(CTX2, 1)
    assert not q
    assert q == LaurentPoly.zero(CTX2)


def test_arithmetic():
    z1, z2 = z(CTX2, 1), z(CTX2, 2)
    p = (z1 + z2) ** 2
    assert p == z1 * z1 + z1 * z2.scale(2) + z2 * z2
    assert p.coefficient((1, 1)) == FieldElement([2])
    assert (p - p) == LaurentPoly.zero(CTX2)
    assert z1 * 0 == LaurentPoly.zero(CTX2)
    assert (z1 + 1) * (z1 - 1) == z1 * z1 - 1
    assert z1.scale(BETA).coefficient((1, 0)) == BETA
    with pytest.raises(ContextMismatch):
        z1 + z(CTX3, 1)


def test_shape_queries():
    z1, z2 = z(CTX2, 1), z(CTX2, 2)
    p = z1**2 + z1 * z2
    assert p.is_homogeneous()
    assert p.total_degree() == 2
    assert not (p + z1).is_homogeneous()
    assert not p.is_symmetric()
    assert (z1 + z2).is_symmetric()
    assert ((z1 + z2) ** 3).is_symmetric()
    assert LaurentPoly.zero(CTX2).is_symmetric()
    assert not p.has_negative_exponents()
    assert LaurentPoly.monomial(CTX2, (-1, 0)).has_negative_exponents()


def test_swap_and_permute():
    z1, z2, z3 = (z(CTX3, i) for i in (1, 2, 3))
    p = z1**2 * z2 + z3
    assert p.swap_vars(1, 2) == z2**2 * z1 + z3
    assert p.swap_vars(1, 2).swap_vars(1, 2) == p
    # cycle 1 -> 2 -> 3 -> 1
    q = p.permute_vars((1, 2, 0))
    assert q == z2**2 * z3 + z1
    assert p.permute_vars((0, 1, 2)) == p


def test_shift_var():
    p = LaurentPoly.monomial(CTX2, (2, 1))
    assert p.shift_var(1, 1) == LaurentPoly.monomial(CTX2, (3, 1))
    assert p.shift_var(2, -1) == LaurentPoly.monomial(CTX2, (2, 0))


def test_derivatives():
    z1, z2 = z(CTX2, 1), z(CTX2, 2)
    p = z1**3 * z2
    assert p.partial_derivative(1) == (z1**2 * z2).scale(3)
    assert p.partial_derivative(2) == z1**3
    assert p.euler_derivative(1) == p.scale(3)
    assert p.euler_derivative(2) == p
    assert (p + z2).euler_derivative(2) == p + z2


def test_divide_by_vardiff():
    z1, z2, z3 = (z(CTX3, i) for i in (1, 2, 3))
    assert divide_by_vardiff(z1**2 - z2**2, 1, 2) == z1 + z2
    assert divide_by_vardiff(z1**3 - z2**3, 1, 2) == z1**2 + z1 * z2 + z2**2
    assert divide_by_vardiff(LaurentPoly.zero(CTX3), 1, 2) == LaurentPoly.zero(CTX3)
    # symmetric factor along for the ride
    p = (z1 - z2) * (z3 + 2)
    assert divide_by_vardiff(p, 1, 2) == z3 + 2
    with pytest.raises(NonzeroRemainder):
        divide_by_vardiff(z1**2 + z2**2, 1, 2)
    with pytest.raises(NonzeroRemainder):
        divide_by_vardiff(z1, 1, 2)


def test_divided_difference():
    z1, z2 = z(CTX2, 1), z(CTX2, 2)
    # (p - K p)/(z1 - z2)
    assert (z1**2).divided_difference(1, 2) == z1 + z2
    assert (z1 * z2).divided_difference(1, 2) == LaurentPoly.zero(CTX2)
    assert (z1 + z2).divided_difference(1, 2) == LaurentPoly.zero(CTX2) + 2 - 2


def test_bar_involution():
    p = LaurentPoly.monomial(CTX2, (2, 1), BETA) + 1
    q = p.bar_involution()
    assert q.coefficient((-2, -1)) == BETA
    assert q.constant_term() == ONE
    assert q.bar_involution() == p


def test_specialize_beta():
    p = LaurentPoly.monomial(CTX2, (1, 0), BETA + 1) + LaurentPoly.constant(CTX2, 2)
    q = p.specialize_beta(3)
    assert q.coefficient((1, 0)) == FieldElement([4])
    assert q.constant_term() == FieldElement([2])


def test_sorted_terms_desc_lex():
    z1, z2 = z(CTX2, 1), z(CTX2, 2)
    p = z2**2 + z1 * z2 + z1**2 + 1
    exps = [e for e, _ in p.sorted_terms()]
    assert exps == [(2, 0), (1, 1), (0, 2), (0, 0)]


def test_json_round_trip():
    p = LaurentPoly.monomial(CTX3, (2, 0, -1), (BETA + 1) / 2) + 5
    obj = p.to_json()
    assert obj["nvars"] == 3
    assert LaurentPoly.from_json(obj) == p


def test_str():
    z1, z2 = z(CTX2, 1), z(CTX2, 2)
    assert str(LaurentPoly.zero(CTX2)) == "0"
    s = str(z1**2 + z2.scale(BETA))
    assert "z1^2" in s and "b" in s
