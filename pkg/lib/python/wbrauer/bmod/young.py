"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Young modules ``Y(l,(lambda,mu))`` of the walled Brauer algebra.
"""
import logging

from ..modules.homs import is_isomorphic
from ..modules.module_rep import character_mismatches
from .catalog import LayerCatalog


logger = logging.getLogger(__name__)


def layer_multiplicity_failures(report, catalog):
    """
    Summands labelled in the layer of ``report.label`` come with the
    multiplicities of the Young modules of ``S_{r-l,t-l}`` in
    ``M^{lambda,mu}``.
    """
    label = report.label
    observed = {s.label.shape: s.multiplicity for s in report.summands
                if s.label is not None and s.label.l == label.l}
    expected = catalog.group_catalog(label.l).multiplicities(label.shape)
    failures = []
    for shape in sorted(set(observed) | set(expected), key=str):
        if observed.get(shape, 0) != expected.get(shape, 0):
            failures.append("{}:{} has multiplicity {}, expected {}".format(
                label.l, shape, observed.get(shape, 0),
                expected.get(shape, 0)))
    return failures


def character_failures(report, catalog):
    """
    Over Q the trace character of ``M(l,(lambda,mu))`` is the sum of the
    characters of the Young modules of its summand labels.
    """
    if not report.module.field.is_rational:
        return []
    pieces = [(s.multiplicity, catalog.young_module(s.label))
              for s in report.summands if s.label is not None]
    keys = character_mismatches(report.module, pieces)
    if not keys:
        return []
    return ["trace character mismatch on {} basis elements, first {}"
            .format(len(keys), keys[0])]


def young_decomposition(label, algebra, seed=0, catalog=None, check=True):
    """
    Decompose ``M(l,(lambda,mu))`` and label its summands by Young modules.

    Parameters
    ----------
    label: LambdaLabel
    algebra: WalledBrauerAlgebra
    seed: int
    catalog: LayerCatalog or None
        shared memo of the algebra; a fresh one is used if None
    check: bool
        record violated constraints in ``report.failures``: the defining
        label once, all other labels above it, and the layer ``l``
        multiplicities against the Young modules of ``S_{r-l,t-l}``; over Q
        also the trace character against the summand labels

    Returns
    -------
    YoungDecompositionReport

    Raises
    ------
    BadCharacteristic; LabelAmbiguous; NotCellularlyStratified
    """
    algebra.field.require_good_characteristic(
        "the Young module decomposition of {}".format(algebra))
    label.check(algebra)
    if catalog is None:
        catalog = LayerCatalog(algebra, seed=seed)
    report = catalog.young_report(label)
    if check:
        failures = report.check_constraints()
        failures.extend(layer_multiplicity_failures(report, catalog))
        failures.extend(character_failures(report, catalog))
        for failure in failures:
            logger.warning("M%s: %s", label, failure)
        report.failures = failures
    return report


def young_equals_cell(catalog, label):
    """
    ``Y(x)`` isomorphic to ``cell(x)``, as in the semisimple case.
    """
    young = catalog.young_module(label)
    cell = catalog.cell(label)
    return young.dim == cell.dim and \
        is_isomorphic(young, cell, seed=catalog.seed)[0]


def summand_classes_distinct(report, seed=0):
    """
    Representatives of different summand classes are pairwise
    non-isomorphic.
    """
    summands = report.summands
    for i, x in enumerate(summands):
        for y in summands[i + 1:]:
            if x.dim == y.dim and \
                    is_isomorphic(x.module, y.module, seed=seed)[0]:
                return False
    return True
