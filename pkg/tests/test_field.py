"""Exact field arithmetic: rationals and prime fields."""

import pytest
from fractions import Fraction

from hypothesis import given, strategies as st

from mfwin.field import QQ, PrimeField, parse_field


def test_rational_construction_and_strings() -> None:
    assert QQ.from_int(3) == QQ.coerce(3)
    assert QQ.from_int(3, 6) == QQ.from_str("1/2")
    assert QQ.to_str(QQ.from_int(-7, 2)) == "-7/2"
    assert QQ.from_str(" 5 ") == QQ.from_int(5)
    assert QQ.coerce(Fraction(2, 4)) == QQ.from_int(1, 2)


def test_rational_arithmetic_is_exact() -> None:
    a = QQ.from_int(1, 3)
    b = QQ.from_int(1, 6)
    assert a + b == QQ.from_int(1, 2)
    assert a - b == b
    assert a * b == QQ.from_int(1, 18)
    assert a / b == QQ.from_int(2)
    # the classic float trap: 0.1 + 0.2 != 0.3, but exactly here
    assert QQ.from_int(1, 10) + QQ.from_int(2, 10) == QQ.from_int(3, 10)


def test_rational_is_square() -> None:
    ok, r = QQ.is_square(QQ.from_int(9, 4))
    assert ok and r == QQ.from_int(3, 2)
    ok, r = QQ.is_square(QQ.zero)
    assert ok and r == QQ.zero
    assert QQ.is_square(QQ.from_int(2)) == (False, None)
    assert QQ.is_square(QQ.from_int(-4)) == (False, None)


@given(st.integers(-50, 50), st.integers(1, 30))
def test_rational_square_roundtrip(n, d) -> None:
    v = QQ.from_int(n, d)
    ok, r = QQ.is_square(v * v)
    assert ok and r * r == v * v


def test_prime_field_rejects_composite_modulus() -> None:
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_prime_field_arithmetic() -> None:
    F = PrimeField(7)
    a = F.from_int(3)
    assert a + F.from_int(5) == F.from_int(1)
    assert a * a == F.from_int(2)
    assert a / a == F.one
    assert -a == F.from_int(4)
    assert F.from_int(10) == F.from_int(3)
    # inverses by Fermat
    for k in range(1, 7):
        assert F.from_int(k) / F.from_int(k) == F.one


def test_prime_field_division_by_zero_raises() -> None:
    F = PrimeField(5)
    with pytest.raises(ZeroDivisionError):
        F.one / F.zero


def test_prime_field_coerces_rationals() -> None:
    F = PrimeField(11)
    assert F.coerce(Fraction(1, 2)) == F.from_int(6)  # 2 * 6 = 12 = 1
    assert F.coerce(QQ.from_int(1, 3)) == F.from_int(4)
    assert F.from_str("-1/2") == F.from_int(5)


def test_mixed_prime_fields_rejected() -> None:
    a = PrimeField(5).from_int(2)
    b = PrimeField(7).from_int(2)
    with pytest.raises(ValueError):
        a + b


def test_parse_field_names() -> None:
    assert parse_field("rational") is QQ
    assert parse_field(None) is QQ
    F = parse_field("fp:13")
    assert F.characteristic == 13
    assert F.name == "fp:13"
    with pytest.raises(ValueError):
        parse_field("fp:9")
    with pytest.raises(ValueError):
        parse_field("galois")


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_fp_matches_integer_arithmetic(a, b) -> None:
    F = PrimeField(101)
    assert F.from_int(a) + F.from_int(b) == F.from_int(a + b)
    assert F.from_int(a) * F.from_int(b) == F.from_int(a * b)
