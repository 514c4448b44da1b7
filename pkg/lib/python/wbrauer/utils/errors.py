"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Typed errors. Each class derives from the builtin that generic callers
would expect and carries the exit code the command line front end uses.
"""


class WalledBrauerError(Exception):
    """
    Base class of all errors raised by wbrauer.
    """
    exit_code = 1


# --- parsing -----------------------------------------------------------------

class ParseError(WalledBrauerError, ValueError):
    """
    Malformed text input.

    Parameters
    ----------
    message: string
        human readable description
    offset: int or None
        byte offset of the offending token inside the parsed text
    token: string or None
        the offending token itself
    """
    exit_code = 4

    def __init__(self, message, offset=None, token=None):
        if offset is not None:
            message = "{} (at offset {}{})".format(
                message, offset,
                "" if token is None else ", token '{}'".format(token))
        super().__init__(message)
        self.offset = offset
        self.token = token


class NonPrimeCharacteristic(ParseError):
    exit_code = 4


class DeltaNotInField(ParseError):
    exit_code = 4


class UnknownSuite(ParseError):
    exit_code = 4


# --- coefficients ------------------------------------------------------------

class DivisionByZero(WalledBrauerError, ZeroDivisionError):
    pass


class FieldMismatch(WalledBrauerError, ValueError):
    pass


class SingularMatrix(WalledBrauerError, ArithmeticError):
    pass


class BadCharacteristic(WalledBrauerError, ValueError):
    """
    The requested construction assumes char K not in {2, 3}.
    """
    exit_code = 2


# --- combinatorics and groups ------------------------------------------------

class SizeMismatch(WalledBrauerError, ValueError):
    pass


class DegreeMismatch(WalledBrauerError, ValueError):
    pass


class DegreeTooLarge(WalledBrauerError, ValueError):
    pass


class NotASubgroupElement(WalledBrauerError, ValueError):
    pass


class MalformedPartialDiagram(WalledBrauerError, ValueError):
    pass


class NotPRegular(WalledBrauerError, ValueError):
    pass


# --- algebras ----------------------------------------------------------------

class AlgebraMismatch(WalledBrauerError, ValueError):
    pass


class ShapeMismatch(WalledBrauerError, ValueError):
    pass


class DimensionTooLarge(WalledBrauerError, ValueError):
    pass


class IndexAcrossWall(WalledBrauerError, IndexError):
    pass


class IndexOutOfRange(WalledBrauerError, IndexError):
    pass


class LayerOutOfRange(WalledBrauerError, IndexError):
    pass


class NotCellularlyStratified(WalledBrauerError, ValueError):
    exit_code = 2


# --- modules -----------------------------------------------------------------

class NotInvariant(WalledBrauerError, ValueError):
    pass


class ActionsIncompatible(WalledBrauerError, ValueError):
    pass


class NonSplitField(WalledBrauerError, ArithmeticError):
    pass


class LabelAmbiguous(WalledBrauerError, RuntimeError):
    """
    A labelling step could not single out one label.

    Parameters
    ----------
    message: string
    partial: object or None
        whatever was computed before the ambiguity showed up
    """
    exit_code = 3

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
