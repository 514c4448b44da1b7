"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Permutation, Specht and dual Specht modules of ``S_a`` and ``S_{a,b}``.
Everything is a right module; tabloids are permuted by replacing each
entry ``i`` with ``sigma(i)``.
"""
import collections
import logging

import numpy as np

from ..algebra.group_algebra import GroupAlgebra
from ..coeffs.linalg import left_nullspace, rank, row_space
from ..combinat.partitions import Bipartition, Composition, Partition
from ..combinat.tableaux import (initial_tableau, standard_tableaux,
                                 tabloids)
from ..symgrp.permutation import Permutation
from ..utils.errors import NotPRegular
from .module_rep import (ModuleRep, outer_tensor, quotient,
                         submodule_generated)


logger = logging.getLogger(__name__)


def _as_shape(shape):
    if isinstance(shape, Composition):
        return shape
    parts = tuple(shape)
    try:
        return Partition(parts)
    except ValueError:
        return Composition(parts)


def _as_pair(shape):
    if isinstance(shape, Bipartition):
        return shape.left, shape.right
    left, right = shape
    return _as_shape(left), _as_shape(right)


class PermutationModule(ModuleRep):
    """
    ``M^lambda`` with its tabloid basis.
    """
    def __init__(self, algebra, shape, tabloid_list, actions):
        super().__init__(algebra, len(tabloid_list), actions,
                         name="M^{}".format(shape))
        self.shape = shape
        self.tabloids = tabloid_list
        self._positions = {t: i for i, t in enumerate(tabloid_list)}

    def position(self, tabloid):
        return self._positions[tabloid]

    def unit(self, tabloid):
        out = self.field.zeros(self.dim)
        out[self.position(tabloid)] = self.field.one
        return out

    def permutation_matrix(self, perm):
        """
        Matrix of a single permutation on the tabloid basis.
        """
        out = self.field.zeros(self.dim, self.dim)
        for i, t in enumerate(self.tabloids):
            out[i, self.position(t.act(perm))] = self.field.one
        return out


def perm_module_sym(shape, field):
    """
    Young permutation module ``M^lambda`` of ``K S_a``.

    Raises
    ------
    DegreeTooLarge
    """
    shape = _as_shape(shape)
    algebra = GroupAlgebra.symmetric(shape.size, field)
    tabloid_list = tabloids(shape)
    positions = {t: i for i, t in enumerate(tabloid_list)}
    actions = collections.OrderedDict()
    for gen, perm in algebra.group.generators().items():
        matrix = field.zeros(len(tabloid_list), len(tabloid_list))
        for i, t in enumerate(tabloid_list):
            matrix[i, positions[t.act(perm)]] = field.one
        actions[gen] = matrix
    return PermutationModule(algebra, shape, tabloid_list, actions)


def perm_module_prod(shape, field):
    """
    ``M^{lambda,mu} = M^lambda boxtimes M^mu`` over ``K S_{a,b}``; the basis
    is the tabloid pairs, left tabloid major.
    """
    left, right = _as_pair(shape)
    return outer_tensor(perm_module_sym(left, field),
                        perm_module_sym(right, field),
                        name="M^({}|{})".format(left, right))


def signed_column_sum(tableau, module):
    """
    Matrix of ``k_t = sum sgn(sigma) sigma`` over the column stabilizer of
    ``tableau`` acting on a PermutationModule.
    """
    field = module.field
    out = field.zeros(module.dim, module.dim)
    for images, sign in tableau.column_permutations():
        term = module.permutation_matrix(Permutation(images))
        out = field.reduce(out + sign * term)
    return out


def polytabloid(tableau, field, module=None):
    """
    ``e_t = {t} . k_t`` as a vector of ``M^lambda``.
    """
    if module is None:
        module = perm_module_sym(tableau.shape, field)
    out = field.zeros(module.dim)
    base = tableau.tabloid()
    for images, sign in tableau.column_permutations():
        i = module.position(base.act(images))
        out[i] = field.add(out[i], field.canonical(sign))
    return out


def specht_module(shape, field):
    """
    ``S^lambda`` inside ``M^lambda``, spanned by the standard polytabloids.

    Returns
    -------
    SubmoduleWitness
    """
    shape = _as_shape(shape)
    module = perm_module_sym(shape, field)
    vectors = [polytabloid(t, field, module) for t in standard_tableaux(shape)]
    witness = submodule_generated(module, vectors)
    witness.module(name="S^{}".format(shape))
    return witness


def dual_specht(shape, field):
    """
    ``S_lambda = (S^lambda)^*``, built as ``S^{lambda'}`` twisted by the
    sign character.
    """
    shape = _as_shape(shape)
    conjugate = specht_module(shape.conjugate(), field).module()
    return conjugate.twist({gen: -1 for gen in conjugate.generator_names},
                           name="S_{}".format(shape))


def specht_prod(shape, field):
    """
    ``S^{lambda,mu}`` inside ``M^{lambda,mu}``, spanned by the products of
    standard polytabloids.

    Returns
    -------
    SubmoduleWitness
    """
    left, right = _as_pair(shape)
    module = perm_module_prod((left, right), field)
    left_vectors = [polytabloid(t, field) for t in standard_tableaux(left)]
    right_vectors = [polytabloid(t, field) for t in standard_tableaux(right)]
    vectors = [field.reduce(np.kron(u, v))
               for u in left_vectors for v in right_vectors]
    witness = submodule_generated(module, vectors)
    witness.module(name="S^({}|{})".format(left, right))
    return witness


def dual_specht_prod(shape, field):
    """
    ``S_{lambda,mu} = S_lambda boxtimes S_mu``.
    """
    left, right = _as_pair(shape)
    return outer_tensor(dual_specht(left, field), dual_specht(right, field),
                        name="S_({}|{})".format(left, right))


def gram_matrix(module):
    """
    The bilinear form making the tabloid (pair) basis orthonormal.
    """
    return module.field.identity(module.dim)


def form_is_invariant(module):
    """
    ``<x g, y g> = <x, y>`` for every generator: each action matrix is
    orthogonal for the form.
    """
    field = module.field
    G = gram_matrix(module)
    for A in module.actions.values():
        if not np.array_equal(field.matmul(field.matmul(A, G), A.T), G):
            return False
    return True


def simple_head(shape, field):
    """
    ``D^{lambda,mu} = S^{lambda,mu} / rad``, the radical being
    ``S cap S^perp`` for the tabloid form.

    Raises
    ------
    NotPRegular
    """
    left, right = _as_pair(shape)
    if not field.is_rational:
        p = field.characteristic
        for part in (left, right):
            if not Partition(part.parts).is_p_regular(p):
                raise NotPRegular("{} is not {}-regular".format(part, p))
    witness = specht_prod((left, right), field)
    B = witness.basis
    gram = field.matmul(B, B.T)
    radical = left_nullspace(field, gram)
    head = quotient(witness.module(), list(radical),
                    name="D^({}|{})".format(left, right))
    logger.debug("D^(%s|%s): dim S %d, radical %d", left, right,
                 witness.dim, radical.shape[0])
    return head


def specht_operator(shape, field):
    """
    Matrix of ``k_t`` on ``M^{lambda,mu}`` for the initial tableau pair.
    """
    left, right = _as_pair(shape)
    return field.reduce(np.kron(specht_operator_sym(left, field),
                                specht_operator_sym(right, field)))


def specht_operator_sym(shape, field):
    shape = Partition(_as_shape(shape).parts)
    return signed_column_sum(initial_tableau(shape),
                             perm_module_sym(shape, field))


def specht_vector_check(shape, field):
    """
    ``M^{lambda,mu} . k_t`` is one dimensional and spanned by ``e_t`` for
    the initial tableau pair ``t``.
    """
    left, right = _as_pair(shape)
    left, right = Partition(left.parts), Partition(right.parts)
    e_t = field.reduce(np.kron(polytabloid(initial_tableau(left), field),
                               polytabloid(initial_tableau(right), field)))
    image = row_space(field, specht_operator((left, right), field))
    if image.shape[0] != 1:
        return False
    return rank(field, np.vstack([image, e_t.reshape(1, -1)])) == 1
