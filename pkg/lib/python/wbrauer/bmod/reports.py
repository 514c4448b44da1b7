"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Report types of the walled Brauer module layer. Every report serializes
to a plain dict with the keys ``algebra``, ``label``, ``summands``,
``filtration`` and ``seed`` where they apply.
"""
import collections
import json

from ..modules.decompose import DecompositionReport
from .labels import lambda_leq


def algebra_dict(algebra):
    field = algebra.field
    return {"r": algebra.r, "t": algebra.t,
            "delta": field.format(algebra.delta), "field": str(field)}


class YoungLabelReport(object):
    """
    A labelled summand with a surjection onto the cell module of its label.

    Attributes
    ----------
    summand: ModuleRep
    label: LambdaLabel
    witness: matrix
        intertwiner ``summand -> cell(label)`` of full column rank
    """
    def __init__(self, summand, label, witness):
        self.summand = summand
        self.label = label
        self.witness = witness

    @property
    def rank(self):
        return self.witness.shape[1]

    def __str__(self):
        return "{} ->> cell{} (dim {} onto {})".format(
            self.summand.name or "summand", self.label, self.summand.dim,
            self.rank)


class YoungDecompositionReport(DecompositionReport):
    """
    Decomposition of ``M(l,(lambda,mu))`` whose summands carry labels from
    ``Lambda``.

    Attributes
    ----------
    algebra: WalledBrauerAlgebra
    label: LambdaLabel
        the label of the permutation module
    witnesses: list of YoungLabelReport
        one per summand class
    failures: list of string
        violated constraints found by the last check
    """
    def __init__(self, report, algebra, label, witnesses):
        super().__init__(report.module, report.pieces, report.summands,
                         report.seed)
        self.algebra = algebra
        self.label = label
        self.witnesses = witnesses
        self.failures = []
        self.filtration = None

    def multiplicities(self):
        return collections.OrderedDict((s.label, s.multiplicity)
                                       for s in self.summands)

    def defining(self):
        """
        The summand with the label of the permutation module.
        """
        (summand,) = [s for s in self.summands if s.label == self.label]
        return summand

    def check_constraints(self):
        """
        The defining label appears exactly once; every other label lies
        above it in ``Lambda`` (in particular no label of a smaller layer).

        Returns
        -------
        A list of failure descriptions, empty on success.
        """
        failures = []
        own = [s for s in self.summands if s.label == self.label]
        if len(own) != 1 or own[0].multiplicity != 1:
            failures.append("{} does not appear exactly once".format(
                self.label))
        for s in self.summands:
            if s.label is None:
                failures.append("unlabelled summand of dim {}".format(s.dim))
            elif s.label.l < self.label.l:
                failures.append("{} from a smaller layer".format(s.label))
            elif not lambda_leq(s.label, self.label):
                failures.append("{} is not above {}".format(s.label,
                                                            self.label))
        return failures

    def to_dict(self):
        out = super().to_dict()
        out["algebra"] = algebra_dict(self.algebra)
        out["label"] = self.label.to_dict()
        out["summands"] = [
            {"label": str(s.label), "multiplicity": s.multiplicity,
             "dim": s.dim} for s in self.summands]
        if self.filtration is not None:
            out["filtration"] = self.filtration.to_dict()["filtration"]
        out["failures"] = list(self.failures)
        return out


class FiltrationReport(object):
    """
    Cell filtration ``M = M_0 > M_1 > ... > M_k = 0``.

    Attributes
    ----------
    module: ModuleRep
    chain: list of SubmoduleWitness
        ``M_0 .. M_k`` in the coordinates of ``module``
    subquotient_labels: list of LambdaLabel
        label of ``M_{i} / M_{i+1}``
    isomorphisms: list of matrix or None
        witnesses ``cell(label) -> M_i / M_{i+1}`` when checked
    characters_match: bool or None
        over Q, whether the trace character of ``module`` is the sum of
        the characters of the cell modules of the labels; None elsewhere
    """
    def __init__(self, module, chain, subquotient_labels, isomorphisms=None,
                 seed=0, characters_match=None):
        self.module = module
        self.chain = chain
        self.subquotient_labels = subquotient_labels
        self.isomorphisms = isomorphisms
        self.seed = seed
        self.characters_match = characters_match

    def dims(self):
        return [self.chain[i].dim - self.chain[i + 1].dim
                for i in range(len(self.chain) - 1)]

    def multiplicities(self):
        """
        label -> number of subquotients with that label, sorted by label.
        """
        counts = collections.Counter(self.subquotient_labels)
        return collections.OrderedDict(
            (x, counts[x]) for x in sorted(counts, key=str))

    def is_descending(self):
        dims = [sub.dim for sub in self.chain]
        return bool(dims) and dims[0] == self.module.dim and dims[-1] == 0 \
            and all(a > b for a, b in zip(dims, dims[1:]))

    def to_dict(self):
        algebra = self.module.algebra
        out = {
            "algebra": algebra_dict(algebra),
            "dim": self.module.dim,
            "filtration": [{"label": str(x), "dim": d} for x, d in
                           zip(self.subquotient_labels, self.dims())],
            "seed": self.seed,
        }
        if self.characters_match is not None:
            out["characters_match"] = self.characters_match
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def __str__(self):
        return " > ".join("cell{}".format(x)
                          for x in self.subquotient_labels) or "0"


class CheckReport(object):
    """
    Named pass/fail checks about one subject, in the order they ran.

    Attributes
    ----------
    subject: string
    algebra: WalledBrauerAlgebra
    checks: OrderedDict
        check name -> (passed, detail)
    """
    def __init__(self, subject, algebra):
        self.subject = subject
        self.algebra = algebra
        self.checks = collections.OrderedDict()

    def record(self, name, passed, detail=""):
        self.checks[name] = (bool(passed), detail)
        return bool(passed)

    @property
    def passed(self):
        return all(ok for ok, _ in self.checks.values())

    def failures(self):
        return ["{}: {}".format(name, detail) if detail else name
                for name, (ok, detail) in self.checks.items() if not ok]

    def to_dict(self):
        return {
            "algebra": algebra_dict(self.algebra),
            "subject": self.subject,
            "checks": [{"name": name, "passed": ok, "detail": detail}
                       for name, (ok, detail) in self.checks.items()],
        }

    def __str__(self):
        return "{}: {}/{} passed".format(
            self.subject, sum(ok for ok, _ in self.checks.values()),
            len(self.checks))
