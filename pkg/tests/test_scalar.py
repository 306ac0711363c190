import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Ensure the project root is on the import path for tests without installation
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from lieball.errors import BadParams, DivisionByZero, FieldMismatch, ParseError
from lieball.scalar import (
    Field,
    GaussExt,
    QuadExt,
    abs2,
    check_radicand,
    coerce,
    conj,
    field_of,
    format_scalar,
    join_fields,
    parse_scalar,
    sign,
    sqrt_in_field,
)


def test_parse_scalar_grammar():
    assert parse_scalar("-3/4", 3) == Fraction(-3, 4)
    assert parse_scalar("1+2*sqrt", 3) == QuadExt(1, 2, 3)
    assert parse_scalar("2*sqrt", 3) == QuadExt(0, 2, 3)
    assert parse_scalar("(1/2,-1)", 3) == GaussExt(Fraction(1, 2), Fraction(-1))
    assert parse_scalar(" 7 ", 3) == 7


def test_parse_scalar_reports_positions():
    with pytest.raises(ParseError) as exc:
        parse_scalar("1/0", 3)
    assert exc.value.position == 2

    with pytest.raises(ParseError) as exc:
        parse_scalar("1x", 3)
    assert exc.value.position == 1
    assert "position 1" in str(exc.value)

    with pytest.raises(ParseError):
        parse_scalar("1+2", 3)
    with pytest.raises(ParseError):
        parse_scalar("", 3)


def test_format_scalar_reads_back():
    for value in (Fraction(-5, 7), QuadExt(Fraction(1, 2), -3, 3), GaussExt(QuadExt(0, 1, 3), Fraction(2))):
        assert parse_scalar(format_scalar(value), 3) == value


def test_quadratic_arithmetic_is_exact():
    r3 = QuadExt(0, 1, 3)
    assert r3 * r3 == 3
    assert QuadExt(1, 1, 3) * QuadExt(1, -1, 3) == -2
    assert 1 / r3 == QuadExt(0, Fraction(1, 3), 3)
    assert (r3 + 1) - r3 == 1

    with pytest.raises(DivisionByZero):
        QuadExt(0, 0, 3).inverse()
    with pytest.raises(FieldMismatch):
        QuadExt(0, 1, 3) + QuadExt(0, 1, 5)


def test_sign_of_quadratic_numbers():
    assert sign(QuadExt(2, -1, 3)) == 1
    assert sign(QuadExt(-2, 1, 3)) == -1
    assert sign(QuadExt(1, -1, 3)) == -1
    assert sign(QuadExt(0, 0, 3)) == 0
    with pytest.raises(FieldMismatch):
        sign(GaussExt(1, 1))


def test_gaussian_helpers():
    z = GaussExt(3, 4)
    assert abs2(z) == 25
    assert conj(z) == GaussExt(3, -4)
    assert z * conj(z) == 25
    assert field_of(z) is Field.GAUSS_RAT
    assert field_of(GaussExt(QuadExt(0, 1, 3), 0)) is Field.GAUSS_QUAD


def test_sqrt_in_field():
    assert sqrt_in_field(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_in_field(Fraction(2)) is None
    assert sqrt_in_field(QuadExt(4, 2, 3)) == QuadExt(1, 1, 3)
    assert sqrt_in_field(QuadExt(3, 0, 3)) == QuadExt(0, 1, 3)
    assert sqrt_in_field(GaussExt(0, 2)) == GaussExt(1, 1)
    assert sqrt_in_field(GaussExt(-4, 0)) == GaussExt(0, 2)


def test_coerce_and_join():
    assert join_fields(Field.QUAD, Field.GAUSS_RAT) is Field.GAUSS_QUAD
    assert coerce(Fraction(2), Field.QUAD, 3) == QuadExt(2, 0, 3)
    assert coerce(GaussExt(5, 0), Field.RAT, 3) == 5
    with pytest.raises(FieldMismatch):
        coerce(GaussExt(1, 1), Field.RAT, 3)
    with pytest.raises(FieldMismatch):
        coerce(QuadExt(0, 1, 3), Field.RAT, 3)


def test_check_radicand():
    assert check_radicand(3) == 3
    with pytest.raises(BadParams):
        check_radicand(4)
    with pytest.raises(BadParams):
        check_radicand(1)
