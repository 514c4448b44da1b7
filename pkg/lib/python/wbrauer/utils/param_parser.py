"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

JSON run files for the ``wbrauer`` command line.
"""
import json
import logging
import os


logger = logging.getLogger(__name__)

RUN = "run"


def read_run_file(file, values_only=True):
    """
    Read a run file of the form::

        {"field": {"type": "run", "values": ["F5;2"]},
         "rt": {"values": ["2,1"]}}

    A scalar ``values`` entry is taken as a one element list, a missing
    ``type`` means ``run``.

    Parameters
    ----------
    file: str
        path to the run file
    values_only: bool
        map every parameter to its value list instead of its attributes

    Returns
    -------
    dict parameter name -> value list, or -> attribute dict

    Raises
    ------
    IOError if the file does not exist; ValueError for entries without
    values.
    """
    if not os.path.isfile(file):
        raise IOError("File {} does not exist".format(file))

    with open(file, 'r') as json_file:
        entries = json.load(json_file)
    for name, attrs in entries.items():
        if not isinstance(attrs, dict) or 'values' not in attrs:
            raise ValueError("Parameter '{}' in {} has no 'values' list!"
                             .format(name, file))
        if not isinstance(attrs['values'], list):
            attrs['values'] = [attrs['values']]
        attrs.setdefault('type', RUN)
    if values_only:
        return {name: attrs['values'] for name, attrs in entries.items()}
    return entries


def run_options(file):
    """
    First value of every run parameter, keyed by its argparse destination
    (``Field`` and ``_field`` both become ``field``).
    """
    entries = read_run_file(file, values_only=False)
    options = {name.strip("_").lower(): attrs['values'][0]
               for name, attrs in entries.items() if attrs['type'] == RUN}
    skipped = sorted(n for n, attrs in entries.items()
                     if attrs['type'] != RUN)
    if skipped:
        logger.warning("%s: ignoring parameters %s of other types", file,
                       skipped)
    return options
