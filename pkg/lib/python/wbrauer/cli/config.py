"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import logging
import re

from ..algebra.walled_algebra import WalledBrauerAlgebra
from ..bmod.labels import parse_label
from ..coeffs.field import parse_field_and_delta
from ..utils.errors import ParseError
from ..utils.param_parser import run_options


logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "pretty")
DEFAULT_FIELD = "Q;5"

_RT = re.compile(r"\s*(\d+)\s*,\s*(\d+)\s*\Z")


def parse_rt(text):
    """
    ``"r,t"`` -> ``(r, t)``.
    """
    match = _RT.match(text)
    if match is None:
        raise ParseError("Expected 'r,t'", 0, text)
    return int(match.group(1)), int(match.group(2))


class RunConfig(object):
    """
    Validated settings of one command line run.

    Attributes
    ----------
    command: string
    field_text: string
        ``"<field>;<delta>"``
    field: FieldSpec
    delta: Scalar
    rt: (int, int) or None
    label: LambdaLabel or None
    seed: int
    output_format: string
        one of ``FORMATS``
    jobs: int
        worker threads for verify suites
    """
    def __init__(self, command, field_text=DEFAULT_FIELD, rt=None,
                 label=None, seed=0, output_format="json", jobs=1):
        if command is None:
            raise ValueError('The command parameter can not be None!')
        if output_format not in FORMATS:
            raise ParseError("Unknown format, use one of {}".format(
                ", ".join(FORMATS)), 0, output_format)
        self.command = command
        self.field_text = field_text
        self.field, self.delta = parse_field_and_delta(field_text)
        self.rt = parse_rt(rt) if isinstance(rt, str) else rt
        self.label = parse_label(label) if isinstance(label, str) else label
        self.seed = int(seed)
        self.output_format = output_format
        self.jobs = max(int(jobs), 1)

    @classmethod
    def from_args(cls, args):
        """
        Settings from parsed arguments; values of a ``--config`` run file
        fill in whatever was not given on the command line.
        """
        values = dict()
        if getattr(args, "config", None):
            values.update(run_options(args.config))
            logger.info("run file %s: %s", args.config, sorted(values))
        for name in ("field", "rt", "label", "seed", "format", "jobs"):
            given = getattr(args, name, None)
            if given is not None:
                values[name] = given
        return cls(args.command,
                   field_text=str(values.get("field", DEFAULT_FIELD)),
                   rt=values.get("rt"),
                   label=values.get("label"),
                   seed=values.get("seed", 0),
                   output_format=values.get("format", "json"),
                   jobs=values.get("jobs", 1))

    def algebra(self):
        """
        Raises
        ------
        ParseError if no ``--rt`` was given.
        """
        if self.rt is None:
            raise ParseError("The {} command needs --rt r,t"
                             .format(self.command))
        r, t = self.rt
        return WalledBrauerAlgebra(r, t, self.field, self.delta)

    def require_label(self):
        if self.label is None:
            raise ParseError("The {} command needs --label 'l:(p|q)'"
                             .format(self.command))
        return self.label

    def to_dict(self):
        return {"command": self.command, "field": self.field_text,
                "rt": None if self.rt is None else list(self.rt),
                "label": None if self.label is None else str(self.label),
                "seed": self.seed, "format": self.output_format}
