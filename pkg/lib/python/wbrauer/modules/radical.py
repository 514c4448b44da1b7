"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Jacobson radical of an algebra of matrices given by a basis.

In characteristic 0 the radical is the kernel of the trace form
``(x, y) -> tr(x y)``. Over F_p the trace form alone is too coarse as soon
as ``p`` divides a matrix size; there a descending chain of ideals is cut
out by the functionals ``g_i(x) = tr(X^(p^i)) / p^i mod p``, where ``X`` is
an integer lift of ``x``. After ``floor(log_p n)`` steps the chain ends at
the radical.
"""
import logging

import numpy as np

from ..coeffs.linalg import as_matrix, left_nullspace


logger = logging.getLogger(__name__)


def _trace_product(field, x, y):
    # tr(x y) without forming the product
    return field.canonical(np.sum(x * y.T))


def _lifted_trace(x, p, i):
    """
    ``tr(X^(p^i)) / p^i mod p`` for the lift ``X`` of ``x`` to 0..p-1.
    """
    modulus = p ** (i + 1)
    n = x.shape[0]
    # int64 is enough while n * modulus^2 stays below 2^63
    dtype = np.int64 if n * modulus * modulus < 2 ** 62 else object
    base = np.asarray(x, dtype=dtype) % modulus
    result = np.identity(n, dtype=dtype)
    exponent = p ** i
    while exponent:
        if exponent & 1:
            result = (result @ base) % modulus
        base = (base @ base) % modulus
        exponent >>= 1
    trace = int(np.trace(result)) % modulus
    if trace % (p ** i):
        raise ArithmeticError("Lifted trace {} not divisible by {}^{}"
                              .format(trace, p, i))
    return (trace // p ** i) % p


def _combine(field, coords, matrices):
    out = field.zeros(*matrices[0].shape)
    for c, m in zip(coords, matrices):
        if c != 0:
            out = field.reduce(out + c * m)
    return out


def jacobson_radical(field, matrices):
    """
    Parameters
    ----------
    field: FieldSpec
    matrices: list of square matrices
        basis of an algebra of matrices (closed under products)

    Returns
    -------
    Coordinates (as rows, w.r.t. ``matrices``) of a basis of the radical.
    """
    d = len(matrices)
    if d == 0:
        return field.zeros(0, 0)
    n = matrices[0].shape[0]
    coords = field.identity(d)
    steps = 0
    if not field.is_rational:
        p = field.characteristic
        while p ** (steps + 1) <= n:
            steps += 1
    for i in range(steps + 1):
        elements = [_combine(field, row, matrices) for row in coords]
        gram = field.zeros(len(elements), d)
        for a, x in enumerate(elements):
            for b, y in enumerate(matrices):
                if i == 0:
                    gram[a, b] = _trace_product(field, x, y)
                else:
                    gram[a, b] = _lifted_trace(field.matmul(x, y),
                                               field.characteristic, i)
        kernel = left_nullspace(field, gram)
        coords = as_matrix(field, field.matmul(kernel, coords), cols=d) \
            if kernel.shape[0] else field.zeros(0, d)
        logger.debug("radical step %d: dim %d of %d", i, coords.shape[0], d)
        if coords.shape[0] == 0:
            break
    return coords


def radical_matrices(field, matrices):
    """
    The radical as a list of matrices.
    """
    return [_combine(field, row, matrices)
            for row in jacobson_radical(field, matrices)]
