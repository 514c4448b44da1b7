from .field import (FieldSpec, Scalar, scalar_arith, parse_field,
                    parse_field_and_delta)
from .linalg import (EchelonBasis, rref, rank, row_space, right_nullspace,
                     left_nullspace, inverse, is_invertible, solve_left)
from .sparse import SparseEchelon


__all__ = [
    "FieldSpec",
    "Scalar",
    "scalar_arith",
    "parse_field",
    "parse_field_and_delta",
    "EchelonBasis",
    "rref",
    "rank",
    "row_space",
    "right_nullspace",
    "left_nullspace",
    "inverse",
    "is_invertible",
    "solve_left",
    "SparseEchelon",
]
