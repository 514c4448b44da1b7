"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import collections
import logging

from ..coeffs.linalg import as_matrix
from ..coeffs.sparse import SparseEchelon, sparse_from_dense
from ..utils.errors import ActionsIncompatible
from .module_rep import ModuleRep


logger = logging.getLogger(__name__)


def _sparse_rows(matrix):
    return [sparse_from_dense(row) for row in matrix]


def tensor_over_subalgebra(module, bimodule, name=None):
    """
    ``module (x)_A bimodule`` as a right module over the right algebra of
    the bimodule.

    The pure tensors ``m_i (x) x_j`` (index ``i * dim X + j``) span
    ``module (x)_K bimodule``; dividing by the relations
    ``m . a (x) x - m (x) a . x`` for every generator ``a`` of ``A`` and
    all basis vectors gives the tensor product over ``A``. The right action
    is ``m (x) x . b = m (x) (x . b)``.

    Parameters
    ----------
    module: ModuleRep
        right module over the left algebra ``A`` of the bimodule
    bimodule: Bimodule

    Returns
    -------
    ModuleRep; its ``pure_tensors`` list holds the ``(i, j)`` of the class
    ``m_i (x) x_j`` behind every basis vector.

    Raises
    ------
    ActionsIncompatible
    """
    if module.algebra != bimodule.left_algebra:
        raise ActionsIncompatible(
            "{} is not a module over the left algebra {} of {}".format(
                module, bimodule.left_algebra, bimodule.name or "bimodule"))
    bimodule.check_compatible()
    field = module.field
    m, x = module.dim, bimodule.dim
    total = m * x

    relations = SparseEchelon(field, total)
    for gen, A in module.actions.items():
        right_of_m = _sparse_rows(A)
        left_of_x = _sparse_rows(bimodule.left_actions[gen])
        for i in range(m):
            for j in range(x):
                rel = dict()
                for k, c in right_of_m[i].items():
                    rel[k * x + j] = c
                for k, c in left_of_x[j].items():
                    key = i * x + k
                    value = field.sub(rel.get(key, field.zero), c)
                    if value == 0:
                        rel.pop(key, None)
                    else:
                        rel[key] = value
                if rel:
                    relations.add(rel)

    complement = relations.complement()
    index = {c: k for k, c in enumerate(complement)}
    actions = collections.OrderedDict()
    for gen, R in bimodule.right_actions.items():
        right_of_x = _sparse_rows(R)
        rows = []
        for c in complement:
            i, j = divmod(c, x)
            image = {i * x + k: v for k, v in right_of_x[j].items()}
            rows.append(relations.quotient_coordinates(image, index))
        actions[gen] = as_matrix(field, rows, cols=len(complement)) \
            if rows else field.zeros(0, 0)
    logger.debug("tensor product over %s: %d pure tensors, %d relations, "
                 "dim %d", bimodule.left_algebra, total, relations.rank,
                 len(complement))
    product = ModuleRep(bimodule.right_algebra, len(complement), actions,
                        name=name)
    product.pure_tensors = [divmod(c, x) for c in complement]
    return product
