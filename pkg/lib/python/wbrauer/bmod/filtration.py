"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Cell filtrations of ``B``-modules.

The chain ``M > M J_1 > M J_2 > ...`` has layer subquotients
``Q_m = M J_m / M J_{m+1}`` annihilated by ``J_{m+1}``. Such a module is
``ind_m`` of its restriction ``Q_m e_m``, so a dual Specht filtration
``0 < N_1 < ... < N_k = Q_m e_m`` induces the cell filtration
``0 < N_1 B < ... < N_k B = Q_m`` with subquotients ``ind_m S_{lambda,mu}``.
"""
import logging

from ..coeffs.linalg import EchelonBasis
from ..modules.filtration import dual_specht_filtration, lift_from_quotient
from ..modules.homs import is_isomorphic
from ..modules.module_rep import (SubmoduleWitness, character_mismatches,
                                  quotient, submodule_generated)
from ..utils.errors import LabelAmbiguous
from .catalog import LayerCatalog
from .labels import LambdaLabel, require_layer
from .layers import ideal_image, restriction
from .reports import FiltrationReport


logger = logging.getLogger(__name__)


def _inside(outer, inner):
    """
    ``inner`` as a SubmoduleWitness of ``outer.module()``.
    """
    field = outer.ambient.field
    echelon = EchelonBasis(field, outer.dim)
    echelon.extend(outer.echelon.coordinates(row) for row in inner.basis)
    return SubmoduleWitness(outer.module(), echelon)


def subquotient(outer, inner):
    """
    ``outer / inner`` for nested submodules of the same module.
    """
    return quotient(outer.module(), _inside(outer, inner))


def _layer_chain(module, top, bottom, m, seed):
    """
    Refine ``bottom < top`` (with ``top = M J_m``) into cell steps.

    Returns
    -------
    list of (LambdaLabel, SubmoduleWitness), ascending, the last being
    ``top``.
    """
    field = module.field
    inner = _inside(top, bottom)
    layer = quotient(top.module(), inner)
    require_layer(module.algebra, m)
    res, res_basis = restriction(layer, m)
    found = dual_specht_filtration(res, seed=seed)
    if found is None:
        raise LabelAmbiguous("Res_{} of the layer {} subquotient of {} has no "
                             "dual Specht filtration".format(m, m, module))
    steps = []
    for shape, sub in zip(found.shapes, found.chain):
        generated = submodule_generated(layer,
                                        field.matmul(sub.basis, res_basis))
        in_top = lift_from_quotient(inner, generated.basis)
        echelon = EchelonBasis(field, module.dim)
        echelon.extend(bottom.echelon.rows)
        echelon.extend(field.matmul(in_top, top.basis) if len(in_top)
                       else [])
        steps.append((LambdaLabel(m, shape),
                      SubmoduleWitness(module, echelon)))
    if not steps or steps[-1][1].dim != top.dim:
        raise LabelAmbiguous("The layer {} subquotient of {} is not generated "
                             "by its image under e_{}".format(m, module, m))
    return steps


def cell_filtration(module, seed=0, catalog=None, check=True):
    """
    Cell filtration of a ``B``-module.

    Parameters
    ----------
    module: ModuleRep over a WalledBrauerAlgebra
    seed: int
    catalog: LayerCatalog or None
        used to identify and check subquotients
    check: bool
        identify every subquotient by its Hom fingerprint and confirm the
        isomorphism with the cell module of its label; over Q also compare
        trace characters

    Returns
    -------
    FiltrationReport

    Raises
    ------
    BadCharacteristic; LabelAmbiguous; NotCellularlyStratified
    """
    algebra = module.algebra
    field = module.field
    field.require_good_characteristic("cell filtrations")
    if catalog is None:
        catalog = LayerCatalog(algebra, seed=seed)
    images = [ideal_image(module, m) for m in range(algebra.s + 2)]

    ascending = [images[-1]]
    labels = []
    for m in range(algebra.s, -1, -1):
        top, bottom = images[m], images[m + 1]
        if top.dim == bottom.dim:
            continue
        for label, sub in _layer_chain(module, top, bottom, m, seed):
            ascending.append(sub)
            labels.append(label)
        logger.debug("layer %d of %s: dim %d", m, module,
                     top.dim - bottom.dim)

    chain = ascending[::-1]
    labels = labels[::-1]
    isomorphisms = None
    if check:
        isomorphisms = []
        for i, label in enumerate(labels):
            piece = subquotient(chain[i], chain[i + 1])
            found, witness = catalog.identify(piece)
            if found != label:
                raise LabelAmbiguous(
                    "Subquotient {} of {} was built as cell{} but identifies "
                    "as cell{}".format(i, module, label, found))
            isomorphisms.append(witness)
    characters_match = None
    if check and field.is_rational:
        keys = character_mismatches(
            module, [(1, catalog.cell(label)) for label in labels])
        characters_match = not keys
        if keys:
            logger.warning("trace character of %s differs from its cell "
                           "filtration on %d basis elements", module,
                           len(keys))
    report = FiltrationReport(module, chain, labels, isomorphisms, seed=seed,
                              characters_match=characters_match)
    logger.info("cell filtration of %s: %s", module, report)
    return report


def filtration_matches(report, catalog):
    """
    Every subquotient is isomorphic to the cell module of its label.
    """
    for i, label in enumerate(report.subquotient_labels):
        piece = subquotient(report.chain[i], report.chain[i + 1])
        if not is_isomorphic(catalog.cell(label), piece,
                             seed=catalog.seed)[0]:
            return False
    return True
