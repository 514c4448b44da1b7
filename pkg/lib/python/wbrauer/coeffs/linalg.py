"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Dense exact linear algebra on numpy arrays over a FieldSpec.
Vectors are rows; a matrix acts on the right (``v @ A``).
"""
import numpy as np

from ..utils.errors import ShapeMismatch, SingularMatrix


def as_matrix(field, data, cols=None):
    """
    Two dimensional exact array over ``field``.

    Parameters
    ----------
    field: FieldSpec
    data: array-like
        a matrix, or a (possibly empty) list of row vectors
    cols: int or None
        number of columns, required when ``data`` has no rows
    """
    if isinstance(data, np.ndarray) and data.ndim == 2 \
            and data.dtype == np.dtype(field.dtype):
        return field.reduce(data.copy()) if not field.is_rational \
            else data.copy()
    if isinstance(data, (list, tuple)) and len(data) == 0:
        if cols is None:
            raise ShapeMismatch("Cannot infer the width of an empty matrix")
        return field.zeros(0, cols)
    if isinstance(data, (list, tuple)) and \
            all(isinstance(row, np.ndarray) and row.ndim == 1
                for row in data):
        return as_matrix(field, np.vstack(data).astype(field.dtype))
    arr = field.asarray(data)
    if arr.ndim != 2:
        raise ShapeMismatch("Expected a matrix, got shape {}"
                            .format(arr.shape))
    return arr


def as_vector(field, data):
    if isinstance(data, np.ndarray) and data.dtype == np.dtype(field.dtype):
        return field.reduce(data.reshape(-1))
    return field.asarray(data).reshape(-1)


def rref(field, matrix):
    """
    Reduced row echelon form.

    Returns
    -------
    (R, pivots) where ``R`` holds only the nonzero rows, each with a
    leading one in column ``pivots[i]``.
    """
    A = as_matrix(field, matrix)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(A[r:, c] != 0)[0]
        if len(nonzero) == 0:
            continue
        k = r + nonzero[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = field.reduce(A[r] * field.inv(A[r, c]))
        column = A[:, c].copy()
        column[r] = field.zero
        mask = column != 0
        if mask.any():
            A[mask] = field.reduce(A[mask] - np.outer(column[mask], A[r]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(field, matrix):
    return len(rref(field, matrix)[1])


def row_space(field, matrix):
    """
    Fully reduced basis (as rows) of the row space.
    """
    return rref(field, matrix)[0]


def right_nullspace(field, matrix):
    """
    Basis of ``{x : A x = 0}``, returned as the rows of a matrix.
    """
    A = as_matrix(field, matrix)
    cols = A.shape[1]
    R, pivots = rref(field, A)
    free = [c for c in range(cols) if c not in set(pivots)]
    out = field.zeros(len(free), cols)
    for i, f in enumerate(free):
        out[i, f] = field.one
        for j, p in enumerate(pivots):
            out[i, p] = field.neg(R[j, f])
    return out


def left_nullspace(field, matrix):
    """
    Basis of ``{y : y A = 0}``, returned as the rows of a matrix.
    """
    return right_nullspace(field, as_matrix(field, matrix).T.copy())


def inverse(field, matrix):
    A = as_matrix(field, matrix)
    n, m = A.shape
    if n != m:
        raise ShapeMismatch("Only square matrices have inverses, got {}"
                            .format(A.shape))
    augmented = np.hstack([A, field.identity(n)])
    R, pivots = rref(field, augmented)
    if n and (len(pivots) < n or pivots[n - 1] != n - 1):
        raise SingularMatrix("Matrix of size {} is singular".format(n))
    return R[:, n:].copy()


def is_invertible(field, matrix):
    A = as_matrix(field, matrix)
    return A.shape[0] == A.shape[1] and rank(field, A) == A.shape[0]


def solve_left(field, matrix, vector):
    """
    Find ``x`` with ``x @ matrix == vector``.

    Returns
    -------
    The solution as a 1-d array, or None if ``vector`` is not in the row
    space of ``matrix``.
    """
    A = as_matrix(field, matrix)
    v = as_vector(field, vector)
    rows = A.shape[0]
    # columns of [A^T | v] ; a pivot in the last column means no solution
    system = np.hstack([A.T, v.reshape(-1, 1)])
    R, pivots = rref(field, system)
    if pivots and pivots[-1] == rows:
        return None
    x = field.zeros(rows)
    for j, p in enumerate(pivots):
        x[p] = R[j, rows]
    return x


def stack(field, vectors, cols):
    """
    Matrix whose rows are ``vectors``; ``cols`` fixes the width if empty.
    """
    if len(vectors) == 0:
        return field.zeros(0, cols)
    return as_matrix(field, [as_vector(field, v) for v in vectors])


class EchelonBasis(object):
    """
    Incrementally built, fully reduced echelon basis of a subspace of K^n.
    """
    def __init__(self, field, n):
        """
        Parameters
        ----------
        field: FieldSpec
        n: int
            dimension of the ambient space
        """
        if field is None:
            raise ValueError('The field parameter can not be None!')
        self.field = field
        self.n = n
        self.rows = []
        self.pivots = []

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vector):
        """
        Residue of ``vector`` modulo the span; zero iff contained.
        """
        v = as_vector(self.field, vector).copy()
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                v = self.field.reduce(v - v[p] * row)
        return v

    def contains(self, vector):
        return self.field.is_zero(self.reduce(vector))

    def add(self, vector):
        """
        Extend the span by ``vector``.

        Returns
        -------
        True if the dimension grew.
        """
        v = self.reduce(vector)
        nonzero = np.nonzero(v != 0)[0]
        if len(nonzero) == 0:
            return False
        p = int(nonzero[0])
        v = self.field.reduce(v * self.field.inv(v[p]))
        for i, row in enumerate(self.rows):
            if row[p] != 0:
                self.rows[i] = self.field.reduce(row - row[p] * v)
        pos = int(np.searchsorted(self.pivots, p))
        self.rows.insert(pos, v)
        self.pivots.insert(pos, p)
        return True

    def extend(self, vectors):
        grew = False
        for v in vectors:
            grew = self.add(v) or grew
        return grew

    def coordinates(self, vector):
        """
        Coordinates of a contained vector with respect to ``self.basis``.
        """
        v = as_vector(self.field, vector)
        if not self.rows:
            if not self.field.is_zero(v):
                raise ValueError("Vector is not contained in the span")
            return self.field.zeros(0)
        coords = v[self.pivots].copy()
        if not self.field.is_zero(self.field.reduce(v - coords @ self.basis)):
            raise ValueError("Vector is not contained in the span")
        return coords

    @property
    def basis(self):
        return stack(self.field, self.rows, self.n)
