"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Young modules of ``S_a`` and ``S_{a,b}``.

``Y^lambda`` is the unique indecomposable summand of ``M^lambda`` that is
not killed by the signed column sum ``k_t``: the image ``M^lambda . k_t``
is the line through ``e_t``, so in any decomposition exactly one summand
meets it. Every other summand of ``M^lambda`` is some ``Y^nu`` with ``nu``
strictly dominating ``lambda``; those are identified against the catalog,
built from the top of the dominance order down.
"""
import logging
import threading

from ..combinat.partitions import (Bipartition, Partition, bipartitions_of,
                                   partitions_of)
from ..utils.errors import LabelAmbiguous
from .decompose import decompose
from .homs import is_isomorphic
from .specht import (perm_module_prod, perm_module_sym, specht_operator,
                     specht_operator_sym)


logger = logging.getLogger(__name__)


class YoungCatalog(object):
    """
    Memoized Young modules for one group and field.

    Shapes are Partitions of ``a`` (``b is None``) or Bipartitions in
    ``Lambda_{a,b}``.
    """
    def __init__(self, field, a, b=None, seed=0):
        if field is None:
            raise ValueError('The field parameter can not be None!')
        self.field = field
        self.a = a
        self.b = b
        self.seed = seed
        self._young = dict()
        self._reports = dict()
        self._lock = threading.RLock()

    @property
    def is_product(self):
        return self.b is not None

    def shapes(self):
        """
        All shapes, reverse-lexicographic.
        """
        if self.is_product:
            return bipartitions_of(self.a, self.b)
        return partitions_of(self.a)

    def normalize(self, shape):
        if self.is_product:
            if isinstance(shape, Bipartition):
                return shape
            left, right = shape
            return Bipartition(left, right)
        return shape if isinstance(shape, Partition) else Partition(shape)

    def dominating(self, shape):
        """
        Shapes strictly dominating ``shape``, reverse-lexicographic.
        """
        shape = self.normalize(shape)
        return [nu for nu in self.shapes()
                if nu != shape and nu.dominates(shape)]

    def perm_module(self, shape):
        if self.is_product:
            return perm_module_prod(shape, self.field)
        return perm_module_sym(shape, self.field)

    def specht_operator(self, shape):
        if self.is_product:
            return specht_operator(shape, self.field)
        return specht_operator_sym(shape, self.field)

    def decomposition(self, shape):
        """
        Labelled decomposition of the permutation module of ``shape``.

        Raises
        ------
        LabelAmbiguous
        """
        shape = self.normalize(shape)
        with self._lock:
            report = self._reports.get(shape)
            if report is not None:
                return report
            report = self._label(shape)
            self._reports[shape] = report
            return report

    def young_module(self, shape):
        shape = self.normalize(shape)
        with self._lock:
            if shape not in self._young:
                self.decomposition(shape)
            return self._young[shape]

    def _label(self, shape):
        module = self.perm_module(shape)
        report = decompose(module, seed=self.seed)
        field = self.field
        k = self.specht_operator(shape)
        for summand in report.summands:
            hits = [i for i in summand.members
                    if not field.is_zero(field.matmul(report.pieces[i][1], k))]
            if hits:
                summand.label = shape
                self._young[shape] = summand.module
                continue
            for nu in self.dominating(shape):
                candidate = self.young_module(nu)
                if candidate.dim == summand.dim and \
                        is_isomorphic(candidate, summand.module,
                                      seed=self.seed)[0]:
                    summand.label = nu
                    break
            else:
                raise LabelAmbiguous(
                    "Summand of dim {} of M^{} matches no Young module"
                    .format(summand.dim, shape), partial=report)
        own = [s for s in report.summands if s.label == shape]
        if len(own) != 1 or own[0].multiplicity != 1:
            raise LabelAmbiguous("Y^{} does not appear exactly once in M^{}"
                                 .format(shape, shape), partial=report)
        logger.info("M^%s = %s", shape, report)
        return report

    def multiplicities(self, shape):
        """
        Map label -> multiplicity of ``Y^label`` in ``M^shape``.
        """
        return {s.label: s.multiplicity
                for s in self.decomposition(shape).summands}


def young_modules_sym(shape, field, seed=0):
    """
    Young module decomposition of ``M^lambda`` for ``S_a``.

    Raises
    ------
    BadCharacteristic; LabelAmbiguous
    """
    field.require_good_characteristic("the Young module decomposition")
    shape = Partition(shape) if not isinstance(shape, Partition) else shape
    return YoungCatalog(field, shape.size, seed=seed).decomposition(shape)


def young_modules_prod(shape, field, seed=0, catalog=None):
    """
    Young module decomposition of ``M^{lambda,mu}`` for ``S_{a,b}``.

    Raises
    ------
    BadCharacteristic; LabelAmbiguous
    """
    field.require_good_characteristic("the Young module decomposition")
    if not isinstance(shape, Bipartition):
        shape = Bipartition(*shape)
    if catalog is None:
        a, b = shape.sizes
        catalog = YoungCatalog(field, a, b, seed=seed)
    return catalog.decomposition(shape)


def product_multiplicities(shape, field, seed=0):
    """
    ``a_{lambda',mu'} = a_lambda' * a_mu'`` from separate decompositions of
    ``M^lambda`` and ``M^mu``.
    """
    if not isinstance(shape, Bipartition):
        shape = Bipartition(*shape)
    left = YoungCatalog(field, shape.left.size, seed=seed)
    right = YoungCatalog(field, shape.right.size, seed=seed)
    out = dict()
    for lam, x in left.multiplicities(shape.left).items():
        for mu, y in right.multiplicities(shape.right).items():
            out[Bipartition(lam, mu)] = x * y
    return out
