"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Memoized cell, permutation and Young modules of one walled Brauer algebra.
"""
import logging
import threading

from ..modules.decompose import decompose
from ..modules.homs import find_of_rank, hom_space, is_isomorphic
from ..modules.young import YoungCatalog
from ..utils.errors import LabelAmbiguous
from .labels import labels_of, lambda_leq
from .layers import cell_module, perm_module_B
from .reports import YoungDecompositionReport, YoungLabelReport


logger = logging.getLogger(__name__)


class LayerCatalog(object):
    """
    Cell modules, permutation modules ``M(x)`` and Young modules ``Y(x)``
    for every label ``x`` of an algebra, computed on demand. Young modules
    are found top down along ``Lambda``: ``Y(x)`` is the one summand of
    ``M(x)`` that is not isomorphic to some ``Y(y)`` with ``y`` above ``x``.
    Safe for concurrent use.
    """
    def __init__(self, algebra, seed=0):
        if algebra is None:
            raise ValueError('The algebra parameter can not be None!')
        self.algebra = algebra
        self.seed = seed
        self._cells = dict()
        self._perms = dict()
        self._young = dict()
        self._reports = dict()
        self._fingerprints = dict()
        self._group_catalogs = dict()
        self._lock = threading.RLock()

    @property
    def field(self):
        return self.algebra.field

    def labels(self):
        return labels_of(self.algebra)

    def cell(self, label):
        with self._lock:
            if label not in self._cells:
                self._cells[label] = cell_module(label, self.algebra)
            return self._cells[label]

    def perm(self, label):
        with self._lock:
            if label not in self._perms:
                self._perms[label] = perm_module_B(label, self.algebra)
            return self._perms[label]

    def group_catalog(self, l):
        """
        Young modules of ``S_{r-l,t-l}`` over the same field.
        """
        with self._lock:
            if l not in self._group_catalogs:
                self._group_catalogs[l] = YoungCatalog(
                    self.field, self.algebra.r - l, self.algebra.t - l,
                    seed=self.seed)
            return self._group_catalogs[l]

    # --- identification ------------------------------------------------

    def fingerprint(self, module, candidates):
        """
        ``(dim Hom(cell(x), module), dim Hom(module, cell(x)))`` over the
        candidate labels.
        """
        return tuple((hom_space(self.cell(x), module).dim,
                      hom_space(module, self.cell(x)).dim)
                     for x in candidates)

    def _cell_fingerprint(self, label, candidates):
        key = (label, tuple(candidates))
        with self._lock:
            if key not in self._fingerprints:
                self._fingerprints[key] = self.fingerprint(self.cell(label),
                                                           candidates)
            return self._fingerprints[key]

    def identify(self, module):
        """
        The label of the cell module isomorphic to ``module``. Candidates
        of the right dimension are separated by their Hom fingerprint, a
        remaining candidate is confirmed by an isomorphism.

        Returns
        -------
        (label, witness)

        Raises
        ------
        LabelAmbiguous if no candidate or several candidates remain.
        """
        candidates = [x for x in self.labels()
                      if self.cell(x).dim == module.dim]
        observed = self.fingerprint(module, candidates)
        matches = [x for x in candidates
                   if self._cell_fingerprint(x, candidates) == observed]
        if len(matches) != 1:
            raise LabelAmbiguous(
                "Hom fingerprint of {} matches {} cell modules: {}".format(
                    module, len(matches), ", ".join(str(x) for x in matches)),
                partial=matches)
        (label,) = matches
        found, witness = is_isomorphic(self.cell(label), module,
                                       seed=self.seed)
        if not found:
            raise LabelAmbiguous("{} has the fingerprint of cell{} but is "
                                 "not isomorphic to it".format(module, label),
                                 partial=matches)
        return label, witness

    # --- Young modules -------------------------------------------------

    def young_module(self, label):
        with self._lock:
            if label not in self._young:
                self.young_report(label)
            return self._young[label]

    def young_report(self, label):
        """
        Labelled decomposition of ``M(label)``.

        Raises
        ------
        LabelAmbiguous
        """
        with self._lock:
            report = self._reports.get(label)
            if report is None:
                report = self._label(label)
                self._reports[label] = report
            return report

    def surjection(self, summand, label):
        """
        Intertwiner from ``summand`` onto ``cell(label)``, or None.
        """
        cell = self.cell(label)
        return find_of_rank(hom_space(summand, cell), cell.dim,
                            seed=self.seed)

    def _label(self, label):
        module = self.perm(label)
        report = decompose(module, seed=self.seed)
        above = [x for x in self.labels()
                 if x != label and lambda_leq(x, label)]
        unmatched = []
        for summand in report.summands:
            for x in above:
                young = self.young_module(x)
                if young.dim == summand.dim and \
                        is_isomorphic(young, summand.module,
                                      seed=self.seed)[0]:
                    summand.label = x
                    break
            else:
                unmatched.append(summand)
        if len(unmatched) != 1 or unmatched[0].multiplicity != 1:
            raise LabelAmbiguous(
                "{} summands of M{} match no Young module of a label above it"
                .format(sum(s.multiplicity for s in unmatched), label),
                partial=report)
        unmatched[0].label = label
        self._young[label] = unmatched[0].module

        witnesses = []
        for summand in report.summands:
            phi = self.surjection(summand.module, summand.label)
            if phi is None:
                raise LabelAmbiguous("Summand {} of M{} has no surjection onto"
                                     " its cell module".format(summand, label),
                                     partial=report)
            witnesses.append(YoungLabelReport(summand.module, summand.label,
                                              phi))
        logger.info("M%s = %s", label, report)
        return YoungDecompositionReport(report, self.algebra, label,
                                        witnesses)
