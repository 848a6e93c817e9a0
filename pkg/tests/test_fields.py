from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from highwater.fields import (GF, QQ, BadCharacteristicError, Field,
                              FieldMismatchError)


def test_field_singletons():
    assert Field(0) is QQ
    assert Field(5) is GF(5)


@pytest.mark.parametrize("bad", [2, 3, 4, 6, 9, 15, -1])
def test_bad_characteristic_rejected(bad):
    with pytest.raises(BadCharacteristicError):
        Field(bad)


def test_rational_arithmetic():
    half = QQ.scalar(1, 2)
    third = QQ.scalar(1, 3)
    assert (half + third).value == Fraction(5, 6)
    assert (half * third).value == Fraction(1, 6)
    assert (half - half).value == 0
    assert (half / third).value == Fraction(3, 2)
    assert (-half).value == Fraction(-1, 2)


def test_prime_field_arithmetic():
    F = GF(7)
    a = F.scalar(3)
    b = F.scalar(5)
    assert (a + b).value == 1
    assert (a * b).value == 1
    assert (a - b).value == 5
    assert (a / b).value == (3 * 3) % 7  # 5^{-1} = 3 mod 7
    assert F.scalar(1, 2).value == 4  # 1/2 = 4 mod 7


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QQ.one / QQ.zero
    with pytest.raises(ZeroDivisionError):
        GF(5).one / GF(5).zero


def test_cross_field_operations_rejected():
    with pytest.raises(FieldMismatchError):
        QQ.one + GF(5).one


def test_from_fraction():
    assert GF(11).from_fraction(Fraction(1, 2)).value == 6
    assert QQ.from_fraction(Fraction(-3, 4)).value == Fraction(-3, 4)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_field_axioms_sample(a, b, c):
    for F in (QQ, GF(5), GF(7)):
        x, y, z = F.scalar(a), F.scalar(b), F.scalar(c)
        assert x + y == y + x
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        if y:
            assert (x / y) * y == x
