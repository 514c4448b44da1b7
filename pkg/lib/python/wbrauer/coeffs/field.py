"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Exact coefficient fields: the rationals and prime fields F_p.

Raw values (the canonical representatives) are ``fractions.Fraction`` over
Q and python ints in ``[0, p)`` over F_p. Matrices over a field are numpy
arrays: ``dtype=object`` holding Fractions over Q, ``int64`` residues over
F_p. ``Scalar`` wraps a raw value together with its field for the public
API.
"""
import re
from fractions import Fraction

import numpy as np
import sympy

from ..utils.errors import (DivisionByZero, FieldMismatch, ParseError,
                            NonPrimeCharacteristic, DeltaNotInField,
                            BadCharacteristic)

# residues are multiplied inside int64 numpy arrays
MAX_CHARACTERISTIC = 65521

_LITERAL = re.compile(r"-?\d+(/\d+)?\Z")


class FieldSpec(object):
    """
    The rationals (characteristic 0) or the prime field F_p.
    """
    RATIONALS = "Rationals"
    PRIME_FIELD = "PrimeField"

    def __init__(self, characteristic=0):
        """
        Parameters
        ----------
        characteristic: int
            0 for the rationals, a prime p for F_p
        """
        if characteristic is None:
            raise ValueError('The characteristic parameter can not be None!')
        characteristic = int(characteristic)
        if characteristic != 0:
            if characteristic < 0 or not sympy.isprime(characteristic):
                raise NonPrimeCharacteristic(
                    "Characteristic {} is not a prime".format(characteristic))
            if characteristic > MAX_CHARACTERISTIC:
                raise ValueError("Characteristic {} exceeds the supported "
                                 "16-bit primes".format(characteristic))
        self.characteristic = characteristic
        self.kind = self.RATIONALS if characteristic == 0 \
            else self.PRIME_FIELD

    @classmethod
    def rationals(cls):
        return cls(0)

    @classmethod
    def prime_field(cls, p):
        return cls(p)

    @property
    def is_rational(self):
        return self.characteristic == 0

    @property
    def dtype(self):
        return object if self.is_rational else np.int64

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and \
            self.characteristic == other.characteristic

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(("FieldSpec", self.characteristic))

    def __str__(self):
        return "Q" if self.is_rational else "F{}".format(self.characteristic)

    def __repr__(self):
        return "FieldSpec({})".format(self.characteristic)

    # --- hypotheses ------------------------------------------------------

    def require_good_characteristic(self, what="this construction"):
        """
        Refuse characteristic 2 and 3.

        Raises
        ------
        BadCharacteristic
        """
        if self.characteristic in (2, 3):
            raise BadCharacteristic(
                "{} assumes char K != 2,3 but the field is {}"
                .format(what, self))

    # --- raw arithmetic --------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.is_rational else 0

    @property
    def one(self):
        return Fraction(1) if self.is_rational else 1

    def canonical(self, value):
        """
        Canonical raw value of an int, Fraction, Scalar or numpy integer.
        """
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch("Scalar over {} used in {}"
                                    .format(value.field, self))
            return value.value
        if self.is_rational:
            return Fraction(value)
        p = self.characteristic
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise DeltaNotInField("{} is not an element of {}"
                                      .format(value, self))
            return value.numerator * pow(value.denominator, p - 2, p) % p
        return int(value) % p

    def add(self, a, b):
        if self.is_rational:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        if self.is_rational:
            return a - b
        return (a - b) % self.characteristic

    def neg(self, a):
        if self.is_rational:
            return -a
        return (-a) % self.characteristic

    def mul(self, a, b):
        if self.is_rational:
            return a * b
        return (a * b) % self.characteristic

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("Division by zero in {}".format(self))
        if self.is_rational:
            return 1 / Fraction(a)
        p = self.characteristic
        return pow(int(a), p - 2, p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, n):
        if n < 0:
            return self.power(self.inv(a), -n)
        if self.is_rational:
            return Fraction(a) ** n
        return pow(int(a), n, self.characteristic)

    def format(self, raw):
        """
        Text form of a raw value: ``a`` or ``a/b`` with ``b > 0``.
        """
        if self.is_rational:
            raw = Fraction(raw)
            if raw.denominator == 1:
                return str(raw.numerator)
            return "{}/{}".format(raw.numerator, raw.denominator)
        return str(int(raw))

    def parse(self, text):
        """
        Parse a scalar literal (integer or ``a/b``) into this field.

        Returns
        -------
        Scalar
        """
        return Scalar(self, self.parse_raw(text))

    def parse_raw(self, text, offset=0):
        text = text.strip()
        if not _LITERAL.match(text):
            raise ParseError("Malformed scalar literal", offset, text)
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                raise ParseError("Zero denominator in scalar literal",
                                 offset + len(num) + 1, den)
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(text))
        return self.canonical(value)

    def __call__(self, value):
        return Scalar(self, self.canonical(value))

    def random_raw(self, rng, bound=9):
        """
        Random element; uniform over F_p, a small integer over Q.

        Parameters
        ----------
        rng: numpy.random.Generator
        bound: int
            integers over Q are drawn from ``[-bound, bound]``
        """
        if self.is_rational:
            return Fraction(int(rng.integers(-bound, bound + 1)))
        return int(rng.integers(0, self.characteristic))

    # --- arrays ----------------------------------------------------------

    def zeros(self, rows, cols=None):
        shape = (rows,) if cols is None else (rows, cols)
        if self.is_rational:
            return np.full(shape, Fraction(0), dtype=object)
        return np.zeros(shape, dtype=np.int64)

    def identity(self, n):
        out = self.zeros(n, n)
        for i in range(n):
            out[i, i] = self.one
        return out

    def asarray(self, data):
        """
        Exact numpy array over this field from nested lists or arrays.
        """
        arr = np.asarray(data, dtype=object)
        if arr.size == 0:
            return self.zeros(*arr.shape) if arr.ndim else self.zeros(0)
        if self.is_rational:
            return np.vectorize(Fraction, otypes=[object])(arr)
        return np.vectorize(self.canonical, otypes=[np.int64])(arr)

    def reduce(self, arr):
        """
        Bring an array produced by numpy arithmetic back to canonical form.
        """
        if self.is_rational:
            return arr
        return np.mod(arr, self.characteristic)

    def matmul(self, a, b):
        return self.reduce(a @ b)

    def is_zero(self, arr):
        return not np.any(arr != 0)


class Scalar(object):
    """
    Element of a FieldSpec in canonical form.
    """
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = field.canonical(value)

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch("Cannot combine scalars over {} and {}"
                                    .format(self.field, other.field))
            return other.value
        return self.field.canonical(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value,
                                                 self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value,
                                                 self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other),
                                                 self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value,
                                                 self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value,
                                                 self._other(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other),
                                                 self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, n):
        return Scalar(self.field, self.field.power(self.value, n))

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.value == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.canonical(other)
        except (TypeError, ValueError, ArithmeticError):
            return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field.characteristic, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return "Scalar({}, {})".format(self.field, self)


def scalar_arith(a, b, op):
    """
    Exact field operation on two scalars.

    Parameters
    ----------
    a, b: Scalar
        operands over the same FieldSpec
    op: string
        one of 'add', 'sub', 'mul', 'div'

    Returns
    -------
    Scalar in canonical form.
    """
    if a.field != b.field:
        raise FieldMismatch("Operands live in {} and {}"
                            .format(a.field, b.field))
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("Unknown scalar operation '{}'".format(op))


def parse_field(text, offset=0):
    """
    Parse ``Q`` or ``F<prime>``.
    """
    text = text.strip()
    if text == "Q":
        return FieldSpec.rationals()
    if text.startswith("F") and text[1:].isdigit():
        return FieldSpec(int(text[1:]))
    raise ParseError("Field must be 'Q' or 'F<prime>'", offset, text)


def parse_field_and_delta(text):
    """
    Parse a field and delta text such as ``"Q;0"`` or ``"F5;2"``.

    Returns
    -------
    (FieldSpec, Scalar)
    """
    if text is None:
        raise ValueError('The text parameter can not be None!')
    if text.count(";") != 1:
        pos = text.find(";", text.find(";") + 1) if ";" in text \
            else len(text)
        raise ParseError("Expected '<field>;<delta>'", pos,
                         text[pos:] or None)
    field_text, delta_text = text.split(";")
    field = parse_field(field_text, 0)
    delta = field.parse_raw(delta_text, len(field_text) + 1)
    return field, Scalar(field, delta)
