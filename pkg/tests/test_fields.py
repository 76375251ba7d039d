from fractions import Fraction

import pytest

from gradedpi.errors import FieldError
from gradedpi.fields import Field


def test_rational_parse_and_format():
    q = Field.rationals()
    assert q.parse("2/3") == Fraction(2, 3)
    assert q.parse(" -5 ") == Fraction(-5)
    assert q.fmt(Fraction(2, 3)) == "2/3"
    assert q.characteristic == 0


def test_rational_arithmetic():
    q = Field.rationals()
    a, b = q.parse("1/2"), q.parse("1/3")
    assert q.add(a, b) == Fraction(5, 6)
    assert q.mul(a, b) == Fraction(1, 6)
    assert q.inv(b) == 3
    assert q.sub(a, a) == q.zero


def test_prime_field():
    f5 = Field.prime(5)
    assert f5.characteristic == 5
    assert f5.from_int(7) == 2
    assert f5.add(3, 4) == 2
    assert f5.mul(3, 4) == 2
    assert f5.inv(2) == 3
    assert f5.parse("1/2") == 3
    assert f5.neg(2) == 3


def test_prime_field_rejects_composite():
    with pytest.raises(FieldError):
        Field.prime(6)
    with pytest.raises(FieldError):
        Field.prime(1)


def test_division_by_zero():
    q = Field.rationals()
    with pytest.raises(FieldError):
        q.inv(q.zero)
    f3 = Field.prime(3)
    with pytest.raises(FieldError):
        f3.div(f3.one, f3.zero)


def test_bad_literals():
    q = Field.rationals()
    with pytest.raises(FieldError):
        q.parse("x")
    with pytest.raises(FieldError):
        q.parse("1/0")
