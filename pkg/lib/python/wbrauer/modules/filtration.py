"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Dual Specht filtrations of ``K S_{a,b}``-modules.
"""
import logging

from ..coeffs.linalg import EchelonBasis
from ..combinat.partitions import bipartitions_of
from .homs import ISOMORPHISM_TRIALS, find_of_rank, hom_space
from .module_rep import SubmoduleWitness, quotient
from .specht import dual_specht_prod


logger = logging.getLogger(__name__)


def lift_from_quotient(sub, rows):
    """
    Vectors of the ambient module representing quotient coordinates taken
    on the non-pivot columns of ``sub``.
    """
    field = sub.ambient.field
    n = sub.ambient.dim
    pivots = set(sub.echelon.pivots)
    complement = [c for c in range(n) if c not in pivots]
    out = field.zeros(len(rows), n)
    for i, row in enumerate(rows):
        out[i, complement] = row
    return out


class DualSpechtFiltration(object):
    """
    ``0 = N_0 < N_1 < ... < N_k = N`` with ``N_i / N_{i-1}`` isomorphic to
    ``S_{shapes[i-1]}``.

    Attributes
    ----------
    module: ModuleRep
    shapes: list of Bipartition, bottom first
    chain: list of SubmoduleWitness ``N_1 .. N_k`` of ``module``
    """
    def __init__(self, module, shapes, chain):
        self.module = module
        self.shapes = shapes
        self.chain = chain

    def __len__(self):
        return len(self.shapes)

    def dims(self):
        out, below = [], 0
        for sub in self.chain:
            out.append(sub.dim - below)
            below = sub.dim
        return out

    def __str__(self):
        return " < ".join("S_{}".format(s) for s in self.shapes) or "0"


def _extend(module, below, shapes, sources, seed, trials, depth):
    if below.dim == module.dim:
        return [], []
    top = quotient(module, below)
    for shape in shapes:
        source = sources[shape]
        if source.dim == 0 or source.dim > top.dim:
            continue
        phi = find_of_rank(hom_space(source, top), source.dim,
                           seed=seed, trials=trials)
        if phi is None:
            continue
        echelon = EchelonBasis(module.field, module.dim)
        echelon.extend(below.echelon.rows)
        echelon.extend(lift_from_quotient(below, phi))
        sub = SubmoduleWitness(module, echelon)
        logger.debug("%sS_%s embeds, dim %d of %d", "  " * depth, shape,
                     sub.dim, module.dim)
        rest = _extend(module, sub, shapes, sources, seed, trials,
                       depth + 1)
        if rest is not None:
            return [shape] + rest[0], [sub] + rest[1]
    return None


def dual_specht_filtration(module, seed=0, trials=ISOMORPHISM_TRIALS):
    """
    Search a dual Specht filtration of a ``K S_{a,b}``-module bottom up: at
    each step an injection of some ``S_{lambda,mu}`` into the current
    quotient is lifted, backtracking when the remaining quotient has no
    filtration.

    Returns
    -------
    DualSpechtFiltration or None if none was found.
    """
    group = module.algebra.group
    field = module.field
    shapes = bipartitions_of(group.a, group.b)
    sources = {shape: dual_specht_prod(shape, field) for shape in shapes}
    below = SubmoduleWitness(module, EchelonBasis(field, module.dim))
    found = _extend(module, below, shapes, sources, seed, trials, 0)
    if found is None:
        logger.info("no dual Specht filtration of %s", module)
        return None
    return DualSpechtFiltration(module, *found)
