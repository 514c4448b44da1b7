"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import pytest

from wbrauer.algebra.walled_algebra import WalledBrauerAlgebra
from wbrauer.coeffs.field import FieldSpec, parse_field_and_delta


@pytest.fixture
def Q():
    return FieldSpec.rationals()


@pytest.fixture
def F5():
    return FieldSpec.prime_field(5)


@pytest.fixture(params=["Q", "F5"])
def field(request):
    return FieldSpec(0 if request.param == "Q" else 5)


def make_algebra(text, r, t):
    field, delta = parse_field_and_delta(text)
    return WalledBrauerAlgebra(r, t, field, delta)


@pytest.fixture
def b11():
    return make_algebra("F5;2", 1, 1)


@pytest.fixture
def b21():
    return make_algebra("F5;2", 2, 1)


@pytest.fixture
def b22():
    return make_algebra("F5;2", 2, 2)


@pytest.fixture
def b11_rational():
    return make_algebra("Q;2", 1, 1)
