from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pairideal.scalars import QQ, FieldError, PrimeField, field_from_descriptor


nonzero_rationals = st.fractions().filter(lambda f: f != 0)


@given(nonzero_rationals)
def test_rational_inverse(a):
    assert QQ.mul(QQ.of(a), QQ.inv(QQ.of(a))) == 1


@given(st.fractions(), st.fractions(), st.fractions())
def test_rational_ring_axioms(a, b, c):
    a, b, c = QQ.of(a), QQ.of(b), QQ.of(c)
    assert QQ.add(a, b) == QQ.add(b, a)
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))


def test_rational_parsing():
    assert QQ.of("3/4") == Fraction(3, 4)
    assert QQ.of(-2) == Fraction(-2)
    with pytest.raises(FieldError):
        QQ.of("1/0")


def test_prime_field_fermat_inverse():
    F = PrimeField(101)
    for a in range(1, 101):
        assert F.mul(a, F.inv(a)) == 1


def test_prime_field_rejects_composite():
    with pytest.raises(FieldError):
        PrimeField(91)


def test_prime_field_parsing():
    F = PrimeField(7)
    assert F.of("3/5") == F.div(3, 5)
    assert F.of(Fraction(1, 2)) == F.inv(2)
    with pytest.raises(FieldError):
        F.of("1/7")


def test_field_descriptor_round_trip():
    assert field_from_descriptor("rational") == QQ
    assert field_from_descriptor({"prime": 13}) == PrimeField(13)
    with pytest.raises(FieldError):
        field_from_descriptor({"modulus": 13})
