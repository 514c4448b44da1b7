"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Command line front end of wbrauer.
"""
import argparse
import logging
import sys

from ..algebra.walled import parse_diagram
from ..bmod.catalog import LayerCatalog
from ..bmod.filtration import cell_filtration
from ..bmod.reports import algebra_dict
from ..bmod.young import young_decomposition
from ..utils.errors import LabelAmbiguous, WalledBrauerError
from .config import DEFAULT_FIELD, FORMATS, RunConfig
from .reports import (cells_frame, emit, filtration_frame, suite_frame,
                      summands_frame)
from .suites import SUITES, run_suite


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1

DESCRIPTION = "Walled Brauer algebras B_{r,t}(delta) over Q and F_p: cell, " \
    "permutation and Young modules and cell filtrations."


def get_args_parser():
    """
    Return the argument parser of the wbrauer command line.

    Returns
    -------
    ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog="wbrauer", description=DESCRIPTION,
        epilog="Report bugs to the wbrauer issue tracker.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="INFO diagnostics on stderr, -vv for DEBUG")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="<file>",
                        help="JSON run file; command line flags win")
    common.add_argument("--field", metavar="<field;delta>",
                        help="field and delta, e.g. 'Q;5' or 'F5;2' "
                             "(default: {})".format(DEFAULT_FIELD))
    common.add_argument("--rt", metavar="r,t",
                        help="vertices left and right of the wall")
    common.add_argument("--label", metavar="l:(p|q)",
                        help="element of Lambda, e.g. '1:(1|1)'")
    common.add_argument("--seed", type=int,
                        help="seed of all randomized searches (default 0)")
    common.add_argument("--format", choices=FORMATS,
                        help="output format (default json)")
    common.add_argument("--jobs", type=int,
                        help="worker threads for verify suites")

    commands = parser.add_subparsers(dest="command", metavar="<command>")
    commands.required = True
    mul = commands.add_parser("mul", parents=[common],
                              help="multiply two diagrams")
    mul.add_argument("lhs", help="diagram, e.g. \"wbd 1,1 : 1-2,1'-2'\"")
    mul.add_argument("rhs", help="diagram")
    commands.add_parser("decompose", parents=[common],
                        help="Young module decomposition of M(label)")
    commands.add_parser("filtration", parents=[common],
                        help="cell filtration of M(label)")
    commands.add_parser("cells", parents=[common],
                        help="cell and permutation module dimensions")
    verify = commands.add_parser("verify", parents=[common],
                                 help="run an acceptance suite")
    verify.add_argument("suite", metavar="<suite>",
                        help=", ".join(SUITES))
    return parser


def configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(asctime)s %(name)s %(levelname)s: "
                               "%(message)s")


def cmd_mul(cfg, lhs, rhs, stream=None):
    """
    Print ``lhs * rhs`` as a scalar-diagram sum in basis order.
    """
    if cfg.rt is None:
        cfg.rt = parse_diagram(lhs).shape
    algebra = cfg.algebra()
    product = algebra.diagram(lhs) * algebra.diagram(rhs)
    (stream or sys.stdout).write("{}\n".format(product))
    return EXIT_OK


def cmd_decompose(cfg, stream=None):
    """
    Labelled Young decomposition of ``M(label)``; exit 0 iff every
    constraint holds.
    """
    algebra = cfg.algebra()
    label = cfg.require_label()
    try:
        report = young_decomposition(label, algebra, seed=cfg.seed)
    except LabelAmbiguous as err:
        partial = err.partial
        data = {"label": str(label), "error": str(err),
                "partial": str(partial) if partial is not None else None,
                "seed": cfg.seed}
        emit(data, "json", stream=stream)
        raise
    data = report.to_dict()
    data["seed"] = cfg.seed
    emit(data, cfg.output_format, frame=summands_frame(data), stream=stream)
    return EXIT_OK if not report.failures else EXIT_FAILURE


def cmd_filtration(cfg, stream=None):
    algebra = cfg.algebra()
    label = cfg.require_label()
    catalog = LayerCatalog(algebra, seed=cfg.seed)
    report = cell_filtration(catalog.perm(label), seed=cfg.seed,
                             catalog=catalog)
    data = report.to_dict()
    data["label"] = label.to_dict()
    emit(data, cfg.output_format, frame=filtration_frame(data),
         stream=stream)
    passed = report.is_descending() and report.characters_match is not False
    return EXIT_OK if passed else EXIT_FAILURE


def cmd_cells(cfg, stream=None):
    """
    ``dim cell(x)`` and ``dim M(x)`` for every label ``x``.
    """
    algebra = cfg.algebra()
    catalog = LayerCatalog(algebra, seed=cfg.seed)
    rows = [{"label": str(x), "cell_dim": catalog.cell(x).dim,
             "perm_dim": catalog.perm(x).dim} for x in catalog.labels()]
    data = {"algebra": algebra_dict(algebra), "dim": algebra.dim,
            "cells": rows, "seed": cfg.seed}
    emit(data, cfg.output_format, frame=cells_frame(rows), stream=stream)
    return EXIT_OK


def cmd_verify(cfg, suite, stream=None):
    results = run_suite(suite, cfg)
    frame = suite_frame(results)
    failed = [r for r in results if not r.passed]
    data = {"suite": suite, "passed": not failed,
            "cases": [r.to_dict() for r in results], "seed": cfg.seed}
    emit(data, cfg.output_format, frame=frame, stream=stream)
    for r in failed:
        logger.warning("%s: %s", r, r.detail)
    return EXIT_OK if not failed else EXIT_FAILURE


def run(argv=None, stream=None):
    """
    Parse ``argv`` and run the command.

    Returns
    -------
    The process exit code: 0 success, 1 computational failure,
    2 hypothesis violation, 3 ambiguity, 4 parse error.
    """
    args = get_args_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        cfg = RunConfig.from_args(args)
        if cfg.command == "mul":
            return cmd_mul(cfg, args.lhs, args.rhs, stream=stream)
        if cfg.command == "decompose":
            return cmd_decompose(cfg, stream=stream)
        if cfg.command == "filtration":
            return cmd_filtration(cfg, stream=stream)
        if cfg.command == "cells":
            return cmd_cells(cfg, stream=stream)
        return cmd_verify(cfg, args.suite, stream=stream)
    except WalledBrauerError as err:
        sys.stderr.write("wbrauer: {}\n".format(err))
        return err.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
