"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
from fractions import Fraction

import numpy as np
import pytest

from wbrauer.coeffs.field import (FieldSpec, Scalar, parse_field,
                                  parse_field_and_delta, scalar_arith)
from wbrauer.coeffs.linalg import (EchelonBasis, inverse, rank, rref,
                                   right_nullspace, left_nullspace,
                                   solve_left)
from wbrauer.utils.errors import (BadCharacteristic, DeltaNotInField,
                                  DivisionByZero, FieldMismatch,
                                  NonPrimeCharacteristic, ParseError,
                                  SingularMatrix)


@pytest.mark.parametrize("text, characteristic, delta", [
    ("Q;0", 0, "0"),
    ("Q;-3/6", 0, "-1/2"),
    ("F5;2", 5, "2"),
    ("F5;7", 5, "2"),
    ("F7;-1", 7, "6"),
    ("F7;1/2", 7, "4"),
])
def test_parse_field_and_delta(text, characteristic, delta):
    field, value = parse_field_and_delta(text)
    assert field.characteristic == characteristic
    assert str(value) == delta


def test_field_names():
    assert str(parse_field("Q")) == "Q"
    assert str(parse_field("F5")) == "F5"
    assert parse_field("F5") == FieldSpec.prime_field(5)


def test_non_prime_characteristic():
    with pytest.raises(NonPrimeCharacteristic, match="not a prime"):
        parse_field_and_delta("F6;1")
    assert NonPrimeCharacteristic.exit_code == 4


def test_delta_not_in_field():
    with pytest.raises(DeltaNotInField):
        parse_field_and_delta("F5;1/5")


@pytest.mark.parametrize("text", ["Q", "Q;1;2", "R;1", "Q;x", "F5;1/0"])
def test_malformed_field(text):
    with pytest.raises(ParseError):
        parse_field_and_delta(text)


def test_parse_error_offset():
    with pytest.raises(ParseError) as info:
        parse_field_and_delta("Q;1/0")
    assert info.value.offset == 4
    assert info.value.token == "0"


def test_scalar_arithmetic_prime_field(F5):
    a, b = F5(3), F5(4)
    assert a + b == 2
    assert a - b == 4
    assert a * b == 2
    assert a / b == 2
    assert (a * a.inverse()) == 1
    assert -a == 2
    assert a ** -1 == 2


def test_scalar_arithmetic_rationals(Q):
    a = Q(Fraction(2, 3))
    assert str(a / 4) == "1/6"
    assert str(scalar_arith(a, Q(1), "sub")) == "-1/3"
    assert a.value == Fraction(2, 3)


def test_division_by_zero(field):
    with pytest.raises(DivisionByZero):
        field(1) / field(0)


def test_field_mismatch(Q, F5):
    with pytest.raises(FieldMismatch):
        Q(1) + F5(1)


def test_bad_characteristic():
    with pytest.raises(BadCharacteristic, match="char K != 2,3"):
        FieldSpec(3).require_good_characteristic()
    FieldSpec(5).require_good_characteristic()
    assert BadCharacteristic.exit_code == 2


def test_scalar_hash_is_canonical(F5):
    assert len({F5(1), F5(6), Scalar(F5, -4)}) == 1


def test_rref_and_rank(field):
    R, pivots = rref(field, [[0, 2, 4], [1, 1, 1], [1, 3, 5]])
    assert pivots == [0, 1]
    assert R.shape == (2, 3)
    assert rank(field, [[1, 2], [2, 4]]) == 1


def test_inverse(field):
    A = field.asarray([[1, 2], [3, 4]])
    product = field.matmul(A, inverse(field, A))
    assert np.array_equal(product, field.identity(2))


def test_inverse_of_singular_matrix(field):
    with pytest.raises(SingularMatrix):
        inverse(field, [[1, 2], [2, 4]])


def test_nullspaces(field):
    A = field.asarray([[1, 1], [1, 1], [0, 0]])
    right = right_nullspace(field, A)
    assert right.shape == (1, 2)
    assert field.is_zero(field.matmul(A, right.T))
    left = left_nullspace(field, A)
    assert left.shape == (2, 3)
    assert field.is_zero(field.matmul(left, A))


def test_solve_left(field):
    A = field.asarray([[1, 0, 1], [0, 1, 1]])
    x = solve_left(field, A, [2, 3, 5])
    assert [int(v) for v in x] == [2, 3]
    assert solve_left(field, A, [0, 0, 1]) is None


def test_echelon_basis(field):
    basis = EchelonBasis(field, 3)
    assert basis.add([1, 1, 0])
    assert basis.add([0, 1, 1])
    assert not basis.add([1, 2, 1])
    assert basis.dim == 2
    assert basis.contains([2, 3, 1])
    assert not basis.contains([0, 0, 1])
    coords = basis.coordinates([2, 3, 1])
    assert field.is_zero(field.reduce(coords @ basis.basis -
                                      field.asarray([2, 3, 1])))
    with pytest.raises(ValueError):
        basis.coordinates([0, 0, 1])
