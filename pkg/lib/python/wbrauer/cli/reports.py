"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+

Output of the command line front end. JSON is the canonical form; pretty
and CSV output are rendered from the same data through pandas.
"""
import datetime
import hashlib
import json
import sys

import pandas as pd


def canonical_json(data):
    return json.dumps(data, indent=2, sort_keys=True)


def digest(data):
    """
    sha256 of the canonical JSON of ``data`` without its timestamp.
    """
    payload = {k: v for k, v in data.items() if k != "timestamp"}
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


def stamped(data):
    """
    ``data`` with a digest and a timestamp; the digest ignores the
    timestamp.
    """
    out = dict(data)
    out["digest"] = digest(data)
    out["timestamp"] = datetime.datetime.now(datetime.timezone.utc) \
        .isoformat(timespec="seconds")
    return out


def suite_frame(results):
    """
    One row per suite case, sorted by suite and case.
    """
    frame = pd.DataFrame([r.to_dict() for r in results],
                         columns=["suite", "case", "passed", "detail"])
    if len(frame):
        frame = frame.sort_values(["suite", "case"]).reset_index(drop=True)
    return frame


def summands_frame(data):
    return pd.DataFrame(data.get("summands", []),
                        columns=["label", "multiplicity", "dim"])


def filtration_frame(data):
    return pd.DataFrame(data.get("filtration", []), columns=["label", "dim"])


def cells_frame(rows):
    return pd.DataFrame(rows, columns=["label", "cell_dim", "perm_dim"])


def emit(data, output_format, frame=None, stream=None):
    """
    Write ``data`` to ``stream`` (stdout by default).

    Parameters
    ----------
    data: dict
        JSON serializable report
    output_format: string
        'json', 'csv' or 'pretty'
    frame: pandas.DataFrame or None
        table view of ``data`` for the csv and pretty formats
    """
    stream = sys.stdout if stream is None else stream
    if output_format == "json" or frame is None:
        stream.write(canonical_json(stamped(data)) + "\n")
    elif output_format == "csv":
        frame.to_csv(stream, index=False)
    else:
        header = {k: v for k, v in data.items()
                  if not isinstance(v, (list, dict))}
        for key in sorted(header):
            stream.write("{}: {}\n".format(key, header[key]))
        if "algebra" in data:
            algebra = data["algebra"]
            stream.write("algebra: B_{{{},{}}}({}) over {}\n".format(
                algebra["r"], algebra["t"], algebra["delta"],
                algebra["field"]))
        stream.write(frame.to_string(index=False) + "\n")
    stream.flush()
