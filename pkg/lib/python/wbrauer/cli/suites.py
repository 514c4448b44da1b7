"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Acceptance suites of ``wbrauer verify``. A suite is a list of independent
cases; they run on a thread pool and are reported sorted by case name.
"""
import collections
import concurrent.futures
import logging
import time

from scipy.special import factorial

from ..algebra.walled import enumerate_diagrams, layer_count
from ..algebra.walled_algebra import WalledBrauerAlgebra
from ..bmod.catalog import LayerCatalog
from ..bmod.filtration import filtration_matches, cell_filtration
from ..bmod.labels import labels_of
from ..bmod.lemmas import (layer_subquotient_dims, restricted_cell_identity,
                           semisimple_check, verify_layer_lemmas)
from ..bmod.young import summand_classes_distinct, young_decomposition
from ..coeffs.field import parse_field_and_delta
from ..combinat.partitions import bipartitions_of
from ..modules.homs import hom_space
from ..modules.specht import specht_prod
from ..symgrp.groups import SymmetricGroup
from ..symgrp.permutation import Permutation
from ..symgrp.stabilizer import (brute_force_stabilizer,
                                 stabilizer_of_partial_diagram)
from ..utils.errors import (BadCharacteristic, UnknownSuite,
                            WalledBrauerError)


logger = logging.getLogger(__name__)

SEEDS = (0, 1, 2)

# partial diagram of five edges with v = [2,1,5,4,3]; (1 3 4) is matched
# by (2 5 4)
FIVE_EDGE_EXAMPLE = ([2, 1, 5, 4, 3], [1, 3, 4], [2, 5, 4])

THEOREM_GRID = [("F5;1", (r, t)) for r in (1, 2) for t in (1, 2)] + \
    [("F5;2", (r, t)) for r in (1, 2) for t in (1, 2)] + \
    [("F7;1", (r, t)) for r in (1, 2) for t in (1, 2)] + \
    [("F7;2", (r, t)) for r in (1, 2) for t in (1, 2)] + \
    [("F5;1", (3, 2)), ("F5;2", (3, 2))]


class SuiteResult(object):
    def __init__(self, suite, case, passed, detail=""):
        self.suite = suite
        self.case = case
        self.passed = bool(passed)
        self.detail = detail

    def to_dict(self):
        return {"suite": self.suite, "case": self.case,
                "passed": self.passed, "detail": self.detail}

    def __str__(self):
        return "{} {}: {}".format(self.suite, self.case,
                                  "pass" if self.passed else "FAIL")


def _fact(n):
    return int(factorial(n, exact=True))


def _algebra(field_text, r, t):
    field, delta = parse_field_and_delta(field_text)
    return WalledBrauerAlgebra(r, t, field, delta)


def _grid(cfg, largest):
    """
    ``(r, t)`` pairs up to ``largest`` or up to ``--rt`` when given.
    """
    R, T = cfg.rt if cfg.rt is not None else (largest, largest)
    return [(r, t) for r in range(1, R + 1) for t in range(1, T + 1)]


def _outcome(failures):
    return not failures, "; ".join(failures)


# --- cases -------------------------------------------------------------------

def dims_case(r, t):
    count = len(enumerate_diagrams(r, t))
    layers = sum(layer_count(r, t, l) for l in range(min(r, t) + 1))
    expected = _fact(r + t)
    return count == expected == layers, \
        "{} diagrams, layer sum {}, (r+t)! = {}".format(count, layers,
                                                        expected)


def idempotents_case(field_text, r, t):
    return _outcome(_algebra(field_text, r, t).check_idempotents())


def stabilizers_case(l):
    failures = []
    for v in SymmetricGroup(l).elements():
        law = stabilizer_of_partial_diagram(v)
        brute = brute_force_stabilizer(v)
        if brute != law.elements() or len(brute) != _fact(l):
            failures.append("v = {}".format(v))
    return _outcome(failures)


def five_edge_case():
    images, sigma, tau = FIVE_EDGE_EXAMPLE
    law = stabilizer_of_partial_diagram(Permutation(images))
    found = law.tau(Permutation.from_cycles([sigma], 5))
    expected = Permutation.from_cycles([tau], 5)
    return found == expected, "tau = {}".format(found)


def layers_case(field_text, r, t, seed):
    algebra = _algebra(field_text, r, t)
    layers = algebra.valid_layers()
    failures = []
    for l in layers:
        for m in layers:
            if l < m:
                failures.extend("({},{}) {}".format(l, m, f) for f in
                                verify_layer_lemmas(algebra, l, m,
                                                    seed=seed).failures())
    return _outcome(failures)


def filtration_case(field_text, r, t, seed):
    algebra = _algebra(field_text, r, t)
    catalog = LayerCatalog(algebra, seed=seed)
    failures = []
    for label in labels_of(algebra):
        module = catalog.perm(label)
        report = cell_filtration(module, seed=seed, catalog=catalog)
        if not report.is_descending() or sum(report.dims()) != module.dim:
            failures.append("M{} chain {}".format(label, report))
        elif not filtration_matches(report, catalog):
            failures.append("M{} subquotients {}".format(label, report))
        failures.extend("M{} {}".format(label, f) for f in
                        layer_subquotient_dims(label, algebra).failures())
    return _outcome(failures)


def refused_case(field_text):
    algebra = _algebra(field_text, 2, 1)
    try:
        cell_filtration(LayerCatalog(algebra).perm(
            labels_of(algebra)[0]))
    except BadCharacteristic as err:
        return err.exit_code == 2, str(err)
    return False, "accepted {}".format(field_text)


def _label_multiset(report):
    return sorted((str(s.label), s.multiplicity) for s in report.summands)


def main_theorem_case(field_text, r, t, seed):
    algebra = _algebra(field_text, r, t)
    failures = []
    runs = collections.OrderedDict()
    for s in sorted(set(SEEDS) | {seed}):
        catalog = LayerCatalog(algebra, seed=s)
        for label in labels_of(algebra):
            report = young_decomposition(label, algebra, seed=s,
                                         catalog=catalog)
            failures.extend("M{} {}".format(label, f)
                            for f in report.failures)
            if s == seed and not summand_classes_distinct(report, seed=s):
                failures.append("M{} repeats a summand class".format(label))
            runs.setdefault(label, []).append(_label_multiset(report))
    for label, multisets in runs.items():
        if any(m != multisets[0] for m in multisets):
            failures.append("M{} labels depend on the seed".format(label))
    return _outcome(failures)


def standard_system_case(a, b):
    field = parse_field_and_delta("F5;0")[0]
    shapes = bipartitions_of(a, b)
    modules = {x: specht_prod(x, field).module() for x in shapes}
    failures = []
    for x in shapes:
        if hom_space(modules[x], modules[x]).dim != 1:
            failures.append("End S^{} is not 1-dimensional".format(x))
        for y in shapes:
            if x != y and not x.dominates(y) and \
                    hom_space(modules[x], modules[y]).dim != 0:
                failures.append("Hom(S^{}, S^{}) != 0".format(x, y))
    return _outcome(failures)


def semisimple_case(r, t, seed):
    return _outcome(semisimple_check(_algebra("Q;5", r, t),
                                     seed=seed).failures())


def restriction_case(field_text, r, t, seed):
    algebra = _algebra(field_text, r, t)
    layers = [l for l in algebra.valid_layers() if l <= 2]
    failures = []
    for n in layers:
        for l in layers:
            for shape in bipartitions_of(r - n, t - n):
                report = restricted_cell_identity(algebra, n, l, shape,
                                                  seed=seed)
                failures.extend("{} {}".format(report.subject, f)
                                for f in report.failures())
    return _outcome(failures)


# --- suites ------------------------------------------------------------------

def _dims(cfg):
    return [("{},{}".format(r, t), dims_case, (r, t))
            for r, t in _grid(cfg, 4)]


def _idempotents(cfg):
    out = []
    for field_name in ("Q", "F5"):
        for delta in (0, 2, 5):
            text = "{};{}".format(field_name, delta)
            field, value = parse_field_and_delta(text)
            for r, t in _grid(cfg, 3):
                if value.is_zero() and (r, t) == (1, 1):
                    continue
                out.append(("{} {},{}".format(text, r, t), idempotents_case,
                            (text, r, t)))
    return out


def _stabilizers(cfg):
    return [("l={}".format(l), stabilizers_case, (l,)) for l in
            range(1, 5)] + [("five edges", five_edge_case, ())]


def _layers(cfg):
    return [("{} {},{}".format(cfg.field_text, r, t), layers_case,
             (cfg.field_text, r, t, cfg.seed)) for r, t in _grid(cfg, 3)]


def _theorem_grid(cfg):
    if cfg.rt is None:
        return THEOREM_GRID
    return [(text, cfg.rt) for text in ("F5;1", "F5;2", "F7;1", "F7;2")]


def _filtration(cfg):
    return [("{} {},{}".format(text, r, t), filtration_case,
             (text, r, t, cfg.seed)) for text, (r, t) in _theorem_grid(cfg)] \
        + [("refuse {}".format(text), refused_case, (text,))
           for text in ("F3;1", "F2;1")]


def _main_theorem(cfg):
    return [("{} {},{}".format(text, r, t), main_theorem_case,
             (text, r, t, cfg.seed)) for text, (r, t) in _theorem_grid(cfg)]


def _standard_system(cfg):
    return [("{},{}".format(a, b), standard_system_case, (a, b))
            for a in range(5) for b in range(5) if a + b > 0]


def _semisimple(cfg):
    return [("{},{}".format(r, t), semisimple_case, (r, t, cfg.seed))
            for r, t in _grid(cfg, 2)]


def _restriction(cfg):
    return [("{} {},{}".format(cfg.field_text, r, t), restriction_case,
             (cfg.field_text, r, t, cfg.seed)) for r, t in _grid(cfg, 3)]


SUITES = collections.OrderedDict([
    ("dims", _dims),
    ("idempotents", _idempotents),
    ("stabilizers", _stabilizers),
    ("layers", _layers),
    ("filtration", _filtration),
    ("standard_system", _standard_system),
    ("main_theorem", _main_theorem),
    ("semisimple", _semisimple),
    ("restriction", _restriction),
])


def _run_case(suite, case, fn, args):
    start = time.perf_counter()
    try:
        passed, detail = fn(*args)
    except WalledBrauerError as err:
        passed, detail = False, "{}: {}".format(type(err).__name__, err)
    logger.info("%s %s: %s in %.1f s", suite, case,
                "pass" if passed else "FAIL", time.perf_counter() - start)
    return SuiteResult(suite, case, passed, detail)


def run_suite(name, cfg):
    """
    Run one suite on ``cfg.jobs`` threads.

    Returns
    -------
    list of SuiteResult sorted by case

    Raises
    ------
    UnknownSuite
    """
    if name not in SUITES:
        raise UnknownSuite("Unknown suite, use one of {}".format(
            ", ".join(SUITES)), 0, name)
    cases = SUITES[name](cfg)
    logger.info("suite %s: %d cases on %d workers", name, len(cases),
                cfg.jobs)
    with concurrent.futures.ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
        futures = [pool.submit(_run_case, name, case, fn, args)
                   for case, fn, args in cases]
        results = [f.result() for f in futures]
    return sorted(results, key=lambda r: r.case)
