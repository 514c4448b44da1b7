"""
This file is part of wbrauer.

Copyright 2026 wbrauer contributors
License: GPLv3+
"""
import io
import json

import pytest

from wbrauer.cli.config import RunConfig, parse_rt
from wbrauer.cli.main import get_args_parser, run
from wbrauer.cli.reports import digest, stamped, suite_frame
from wbrauer.cli.suites import (SUITES, SuiteResult, five_edge_case,
                                run_suite, standard_system_case)
from wbrauer.utils.errors import ParseError, UnknownSuite
from wbrauer.utils.param_parser import read_run_file, run_options

E12 = "wbd 1,1 : 1-2,1'-2'"


def run_cli(*argv):
    out = io.StringIO()
    code = run(list(argv), stream=out)
    return code, out.getvalue()


def test_mul():
    code, out = run_cli("mul", E12, E12, "--field", "F5;2")
    assert code == 0
    assert out == "2 * wbd 1,1 : 1-2,1'-2'\n"


def test_mul_identity():
    identity = "wbd 1,1 : 1-1',2-2'"
    code, out = run_cli("mul", identity, E12, "--field", "Q;1/3")
    assert code == 0
    assert out == "wbd 1,1 : 1-2,1'-2'\n"


def test_mul_reports_parse_errors(capsys):
    code, out = run_cli("mul", "wbd 1,1 : 1-9'", E12)
    assert code == 4
    assert out == ""
    assert capsys.readouterr().err.startswith("wbrauer: ")


def test_cells_json():
    code, out = run_cli("cells", "--rt", "1,1", "--field", "F5;2")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 2
    assert data["algebra"] == {"r": 1, "t": 1, "delta": "2", "field": "F5"}
    assert data["cells"] == [
        {"label": "1:(|)", "cell_dim": 1, "perm_dim": 1},
        {"label": "0:(1|1)", "cell_dim": 1, "perm_dim": 2},
    ]
    assert data["digest"] == digest(
        {k: v for k, v in data.items() if k != "digest"})


def test_cells_csv():
    code, out = run_cli("cells", "--rt", "1,1", "--field", "F5;2",
                        "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["label,cell_dim,perm_dim", "1:(|),1,1",
                                "0:(1|1),1,2"]


def test_cells_needs_rt():
    assert run_cli("cells")[0] == 4


def test_decompose():
    code, out = run_cli("decompose", "--rt", "1,1", "--field", "F5;2",
                        "--label", "0:(1|1)")
    assert code == 0
    data = json.loads(out)
    assert data["failures"] == []
    assert {s["label"]: s["multiplicity"] for s in data["summands"]} == \
        {"1:(|)": 1, "0:(1|1)": 1}
    assert data["seed"] == 0


def test_decompose_needs_label():
    assert run_cli("decompose", "--rt", "1,1")[0] == 4


def test_decompose_refuses_small_characteristic():
    code, out = run_cli("decompose", "--rt", "1,1", "--field", "F3;1",
                        "--label", "0:(1|1)")
    assert code == 2
    assert out == ""


def test_delta_zero_layer_is_refused():
    code, _ = run_cli("cells", "--rt", "1,1", "--field", "Q;0")
    assert code == 2


def test_filtration():
    code, out = run_cli("filtration", "--rt", "1,1", "--field", "Q;2",
                        "--label", "0:(1|1)")
    assert code == 0
    data = json.loads(out)
    assert data["label"] == {"l": 0, "lambda": [1], "mu": [1]}
    assert [x["label"] for x in data["filtration"]] == ["0:(1|1)", "1:(|)"]
    assert data["characters_match"] is True


@pytest.mark.parametrize("argv", [
    ("verify", "nonsense"),
    ("cells", "--rt", "1;1"),
    ("cells", "--rt", "1,1", "--field", "F6;1"),
    ("cells", "--rt", "1,1", "--field", "F5;1/5"),
    ("cells", "--rt", "1,1", "--label", "(1|1)"),
])
def test_parse_errors_exit_4(argv):
    assert run_cli(*argv)[0] == 4


def test_verify_dims():
    code, out = run_cli("verify", "dims", "--rt", "2,2")
    assert code == 0
    data = json.loads(out)
    assert data["passed"]
    assert [c["case"] for c in data["cases"]] == ["1,1", "1,2", "2,1",
                                                  "2,2"]


def test_verify_stabilizers_on_two_threads():
    code, out = run_cli("verify", "stabilizers", "--jobs", "2")
    assert code == 0
    cases = json.loads(out)["cases"]
    assert [c["case"] for c in cases] == ["five edges", "l=1", "l=2",
                                          "l=3", "l=4"]
    assert all(c["passed"] for c in cases)


def test_verify_pretty():
    code, out = run_cli("verify", "dims", "--rt", "1,1", "--format",
                        "pretty")
    assert code == 0
    assert "suite: dims" in out
    assert "passed: True" in out


def test_run_file(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({
        "field": {"type": "run", "values": ["F5;2"]},
        "rt": {"values": "1,1"},
        "seed": {"type": "grid", "values": [0, 1]},
    }))
    assert run_options(str(path)) == {"field": "F5;2", "rt": "1,1"}
    assert read_run_file(str(path))["seed"] == [0, 1]
    code, out = run_cli("cells", "--config", str(path))
    assert code == 0
    assert json.loads(out)["algebra"]["field"] == "F5"


@pytest.mark.parametrize("command", ["cells", "decompose", "filtration"])
def test_every_command_takes_a_run_file(command):
    args = get_args_parser().parse_args([command, "--config", "run.json"])
    assert args.config == "run.json"


def test_command_line_beats_run_file(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"rt": {"values": ["2,2"]}}))
    code, out = run_cli("cells", "--config", str(path), "--rt", "1,1")
    assert code == 0
    assert json.loads(out)["dim"] == 2


def test_run_file_errors(tmp_path):
    with pytest.raises(IOError):
        read_run_file(str(tmp_path / "missing.json"))
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"rt": "1,1"}))
    with pytest.raises(ValueError, match="has no 'values' list"):
        read_run_file(str(path))


@pytest.mark.parametrize("text,expected", [("1,1", (1, 1)),
                                           (" 3 , 2", (3, 2))])
def test_parse_rt(text, expected):
    assert parse_rt(text) == expected


@pytest.mark.parametrize("text", ["", "1", "1,2,3", "a,b"])
def test_parse_rt_errors(text):
    with pytest.raises(ParseError):
        parse_rt(text)


def test_run_config():
    cfg = RunConfig("cells", field_text="F7;-1", rt="2,1", label="1:(1|)")
    assert cfg.field.characteristic == 7
    assert str(cfg.delta) == "6"
    assert cfg.algebra().dim == 6
    assert cfg.to_dict() == {"command": "cells", "field": "F7;-1",
                             "rt": [2, 1], "label": "1:(1|)", "seed": 0,
                             "format": "json"}
    with pytest.raises(ParseError):
        RunConfig("cells", output_format="xml")


def test_unknown_suite():
    with pytest.raises(UnknownSuite) as info:
        run_suite("nonsense", RunConfig("verify"))
    assert info.value.token == "nonsense"


def test_digest_ignores_the_timestamp():
    data = {"suite": "dims", "passed": True}
    first = stamped(data)
    assert first["digest"] == digest(data)
    assert digest(dict(data, timestamp="now")) == digest(data)
    assert "timestamp" in first


def test_suite_frame_is_sorted():
    results = [SuiteResult("dims", "2,1", True),
               SuiteResult("dims", "1,1", False, "bad")]
    frame = suite_frame(results)
    assert list(frame["case"]) == ["1,1", "2,1"]
    assert list(frame.columns) == ["suite", "case", "passed", "detail"]
    assert str(results[1]) == "dims 1,1: FAIL"


def test_five_edge_example():
    passed, detail = five_edge_case()
    assert passed, detail
    assert detail == "tau = [1,5,3,2,4]"


def test_standard_system_grid_includes_one_sided_shapes():
    cases = [case for case, _, _ in SUITES["standard_system"](
        RunConfig("verify"))]
    assert len(cases) == 24
    assert {"0,1", "0,4", "4,0", "4,4"} <= set(cases)
    assert "0,0" not in cases


@pytest.mark.parametrize("a,b", [(0, 2), (3, 0), (2, 2)])
def test_standard_system_case(a, b):
    passed, detail = standard_system_case(a, b)
    assert passed, detail
