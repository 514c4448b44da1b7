"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Module homomorphisms. A hom ``phi: M -> N`` is a ``dim M x dim N`` matrix
with ``v -> v @ phi``; it intertwines when ``A_M @ phi == phi @ A_N`` for
every generator.
"""
import itertools
import logging

import numpy as np

from ..coeffs.linalg import EchelonBasis, inverse, left_nullspace, rank
from ..utils.errors import AlgebraMismatch


logger = logging.getLogger(__name__)

ISOMORPHISM_TRIALS = 64
EXHAUSTIVE_LIMIT = 10 ** 5

# rows of the spun basis handled per elimination step
_CHUNK = 8


def check_compatible(source, target):
    """
    Raises
    ------
    AlgebraMismatch unless both modules live over the same algebra.
    """
    if source.algebra != target.algebra or \
            source.generator_names != target.generator_names:
        raise AlgebraMismatch("{} and {} are modules over different algebras"
                              .format(source, target))


class HomSpace(object):
    """
    Basis of ``Hom(source, target)`` as a list of matrices.
    """
    def __init__(self, source, target, basis):
        self.source = source
        self.target = target
        self.basis = list(basis)

    @property
    def dim(self):
        return len(self.basis)

    @property
    def field(self):
        return self.source.field

    def combination(self, coefficients):
        field = self.field
        out = field.zeros(self.source.dim, self.target.dim)
        for c, phi in zip(coefficients, self.basis):
            out = field.reduce(out + field.canonical(c) * phi)
        return out

    def random_element(self, rng):
        return self.combination([self.field.random_raw(rng)
                                 for _ in self.basis])

    def check(self):
        """
        Every basis matrix intertwines the generator actions.
        """
        field = self.field
        for phi in self.basis:
            for gen, A in self.source.actions.items():
                B = self.target.actions[gen]
                if not np.array_equal(field.matmul(A, phi),
                                      field.matmul(phi, B)):
                    return False
        return True

    def __str__(self):
        return "Hom of dim {} from {} to {}".format(self.dim, self.source,
                                                    self.target)


def _spin_up(module):
    """
    Standard basis of ``module``: unit vectors seed cyclic submodules which
    are spun under the generators.

    Returns
    -------
    (vectors, origin): ``origin[j]`` is ``('seed', k)`` for the ``k``-th
    seed or ``('image', i, gen)`` for ``vectors[i] @ A_gen``.
    """
    field = module.field
    echelon = EchelonBasis(field, module.dim)
    identity = field.identity(module.dim)
    vectors, origin = [], []
    seeds = 0
    for i in range(module.dim):
        if echelon.dim == module.dim:
            break
        if not echelon.add(identity[i]):
            continue
        vectors.append(identity[i])
        origin.append(("seed", seeds))
        seeds += 1
        j = len(vectors) - 1
        while j < len(vectors):
            for gen, A in module.actions.items():
                w = field.matmul(vectors[j], A)
                if echelon.add(w):
                    vectors.append(w)
                    origin.append(("image", j, gen))
            j += 1
    return vectors, origin, seeds


def hom_space(source, target):
    """
    All intertwiners ``source -> target``.

    A hom is fixed by the images of the seeds of a standard basis of the
    source; the images of the other standard basis vectors follow by
    acting with the target, and the remaining relations cut the space of
    seed images down to the hom space.

    Raises
    ------
    AlgebraMismatch
    """
    check_compatible(source, target)
    field = source.field
    m, n = source.dim, target.dim
    if m == 0 or n == 0:
        return HomSpace(source, target, [])

    vectors, origin, seeds = _spin_up(source)
    U = np.vstack(vectors)
    U_inv = inverse(field, U)

    # P[j] is the (unknowns x n) matrix giving the image of vectors[j]
    d = seeds * n
    P = np.empty((m, d, n), dtype=U.dtype)
    for j, entry in enumerate(origin):
        if entry[0] == "seed":
            block = field.zeros(d, n)
            k = entry[1]
            block[k * n:(k + 1) * n] = field.identity(n)
            P[j] = block
        else:
            _, i, gen = entry
            P[j] = field.matmul(P[i], target.actions[gen])
    spun = {(e[1], e[2]) for e in origin if e[0] == "image"}

    for gen, A in source.actions.items():
        C = field.matmul(field.matmul(U, A), U_inv)
        B = target.actions[gen]
        rows = [j for j in range(m) if (j, gen) not in spun]
        for start in range(0, len(rows), _CHUNK):
            if P.shape[1] == 0:
                break
            chunk = rows[start:start + _CHUNK]
            blocks = []
            for j in chunk:
                lhs = field.matmul(P[j], B)
                rhs = field.reduce(np.tensordot(C[j], P, axes=(0, 0)))
                blocks.append(field.reduce(lhs - rhs))
            system = np.hstack(blocks)
            if field.is_zero(system):
                continue
            Y = left_nullspace(field, system)
            P = field.reduce(np.tensordot(Y, P, axes=(1, 1))).transpose(
                1, 0, 2).copy() if Y.shape[0] else \
                np.empty((m, 0, n), dtype=U.dtype)
    basis = [field.matmul(U_inv, P[:, q, :].copy())
             for q in range(P.shape[1])]
    logger.debug("Hom(%s, %s) has dim %d", source, target, len(basis))
    return HomSpace(source, target, basis)


def end_algebra(module):
    """
    ``End(module)`` as a HomSpace; its basis spans a matrix algebra that
    contains the identity.
    """
    return hom_space(module, module)


def is_isomorphic(source, target, seed=0, trials=ISOMORPHISM_TRIALS):
    """
    Search for an invertible intertwiner.

    Over F_p all combinations of a hom basis are tried when there are at
    most ``EXHAUSTIVE_LIMIT`` of them, otherwise ``trials`` seeded random
    combinations; over Q a random integer combination of an isomorphism
    space is invertible away from a hypersurface.

    Returns
    -------
    (found, witness): a bool and the invertible matrix or None.

    Raises
    ------
    AlgebraMismatch
    """
    check_compatible(source, target)
    field = source.field
    if source.dim != target.dim:
        return False, None
    if source.dim == 0:
        return True, field.zeros(0, 0)
    forward = hom_space(source, target)
    if forward.dim == 0:
        return False, None
    if hom_space(target, source).dim != forward.dim:
        return False, None

    phi = find_of_rank(forward, source.dim, seed=seed, trials=trials)
    if phi is None:
        logger.debug("no isomorphism %s -> %s among the candidates",
                     source, target)
        return False, None
    return True, phi


def find_of_rank(homs, target_rank, seed=0, trials=ISOMORPHISM_TRIALS):
    """
    A combination of the hom basis of rank ``target_rank``: an injection
    for ``dim source``, a surjection for ``dim target``.

    Returns
    -------
    The matrix or None.
    """
    field = homs.field
    if homs.dim == 0:
        return None
    if not field.is_rational and \
            field.characteristic ** homs.dim <= EXHAUSTIVE_LIMIT:
        candidates = (homs.combination(c) for c in itertools.product(
            range(field.characteristic), repeat=homs.dim) if any(c))
    else:
        rng = np.random.default_rng(seed)
        candidates = (homs.random_element(rng) for _ in range(trials))
    for phi in candidates:
        if rank(field, phi) == target_rank:
            return phi
    return None
