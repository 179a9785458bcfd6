#!/usr/bin/env python3

# Copyright 2026 The lemniscan developers
#
# This file is part of lemniscan.
#
# lemniscan is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# lemniscan is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with lemniscan.  If not, see <http://www.gnu.org/licenses/>.
"""
Implements unit tests.
"""

import json
import math
import sys
sys.path.insert(0, 'src/')

import jsonschema
import pytest

import lemniscan

pytestmark = pytest.mark.usefixtures("isolated_home")

GRID = ["--radii", "0.1,0.5,0.9,0.99", "--angles", "64"]


def run(capsys, *argv):
    code = lemniscan.main(list(argv))
    return code, capsys.readouterr().out


def test_parse_cmd_args_defaults():
    args = lemniscan.parse_cmd_args(["threshold"])
    assert args.command == "threshold"
    assert (args.A, args.B, args.c) == (1.0, 0.0, 1.0)
    assert args.verbosity == "info"
    assert args.logfile is None


def test_parse_cmd_args_config_file(tmp_path):
    rc = tmp_path / "lemniscan.cfg"
    rc.write_text("[Defaults]\nc = 0.5\nB = 0.25\n")
    args = lemniscan.parse_cmd_args(["-f", str(rc), "threshold"])
    assert args.c == 0.5
    assert args.B == 0.25

    args = lemniscan.parse_cmd_args(["-f", str(rc), "threshold", "--c", "1"])
    assert args.c == 1.0


def test_short_option_is_not_an_abbreviation():
    # --c must not be read as a prefix of --config-file
    assert lemniscan.parse_cmd_args(["threshold", "--c", "0.5"]).c == 0.5
    assert lemniscan.parse_cmd_args(["check", "--f", "identity", "--c",
                                     "0.3"]).c == 0.3


def test_home_rc_file(isolated_home):
    (isolated_home / ".lemniscanrc").write_text("[Defaults]\nc = 0.5\n")
    assert lemniscan.parse_cmd_args(["threshold"]).c == 0.5


def test_rc_file_without_defaults(tmp_path, caplog):
    rc = tmp_path / "lemniscan.cfg"
    rc.write_text("[Other]\nc = 0.5\n")
    args = lemniscan.parse_cmd_args(["-f", str(rc), "threshold"])
    assert args.c == 1.0
    assert "Could not parse config file" in caplog.text


def test_threshold(capsys):
    code, out = run(capsys, "threshold", "--A", "1", "--B", "0", "--c", "1")
    assert code == lemniscan.EXIT_OK
    assert out == "4.0\nnote: real-part form (c23): gamma >= 4\n"

    code, out = run(capsys, "threshold", "--c", "0.5")
    assert out.startswith("6.0\n")
    assert "2(1 + 1/c)" in out

    code, out = run(capsys, "threshold", "--B", "0.5")
    assert out.startswith("12.0\n")

    code, out = run(capsys, "threshold", "--A", "0", "--B", "0")
    assert out == "0.0\nnote: degenerate: A=B=0\n"


def test_threshold_bad_input(capsys):
    code, out = run(capsys, "threshold", "--B", "1")
    assert code == lemniscan.EXIT_BAD_INPUT
    assert out == ""


def test_check_identity(capsys, load_schema):
    code, out = run(capsys, "check", "--f", "identity", "--class", "sl",
                    *GRID)
    assert code == lemniscan.EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema("verdict"))
    assert doc["holds"]
    assert doc["min_margin"] == pytest.approx(1.0)
    assert doc["class"] == "sl"


def test_check_sstar_qc(capsys):
    code, out = run(capsys, "check", "--f", "identity", "--class",
                    "sstar_qc", "--c", "0.3", *GRID)
    assert code == lemniscan.EXIT_OK
    assert json.loads(out)["min_margin"] == pytest.approx(0.3)


def test_check_failure(capsys):
    code, out = run(capsys, "check", "--f", "moebius:a=1", "--class", "sl",
                    *GRID)
    assert code == lemniscan.EXIT_FAILED
    doc = json.loads(out)
    assert doc["status"] == "fails"
    assert doc["witness"] == {"re": 0.99, "im": 0.0}


def test_check_bad_function(capsys):
    code, _ = run(capsys, "check", "--f", "nosuch", *GRID)
    assert code == lemniscan.EXIT_BAD_INPUT

    code, _ = run(capsys, "check", "--f", "identity", "--angles", "8")
    assert code == lemniscan.EXIT_BAD_INPUT


def test_check_pole_on_grid(capsys):
    # z / (1 - 2z) has its pole at the grid point 0.5
    code, _ = run(capsys, "check", "--f", "moebius:a=2", *GRID)
    assert code == lemniscan.EXIT_EVALUATION


def test_check_not_normalized(capsys):
    code, _ = run(capsys, "check", "--f",
                  '{"op": "div", "args": [{"op": "z"}, '
                  '{"op": "poly", "params": {"coeffs": [[-0.5, 0], [1, 0]]}}]}',
                  *GRID)
    assert code == lemniscan.EXIT_BAD_INPUT


def test_verify_t21(capsys, load_schema):
    code, out = run(capsys, "verify", "--kind", "t21", "--trials", "10",
                    "--seed", "7", "--workers", "1", *GRID)
    assert code == lemniscan.EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema("trial_report"))
    assert doc["params"]["gamma"] == 4.0
    assert doc["mode"] == "assertion"
    assert doc["hypothesis_true_count"] == 10
    assert doc["passed"]


def test_verify_t23(capsys):
    code, out = run(capsys, "verify", "--kind", "t23", "--trials", "10",
                    "--seed", "7", "--workers", "1", *GRID)
    assert code == lemniscan.EXIT_OK
    doc = json.loads(out)
    assert doc["hypothesis_true_count"] == 0
    assert doc["params"]["hypothesis_threshold"] == 2.5


def test_verify_exploration(capsys):
    code, out = run(capsys, "verify", "--kind", "t21", "--gamma", "0.5",
                    "--trials", "4", "--seed", "7", "--workers", "1",
                    "--explore", *GRID)
    assert code == lemniscan.EXIT_OK
    assert json.loads(out)["mode"] == "exploration"


def test_verify_below_threshold(capsys):
    code, out = run(capsys, "verify", "--kind", "t21", "--gamma", "0.5",
                    "--trials", "4", "--seed", "7", "--workers", "1", *GRID)
    assert code == lemniscan.EXIT_BAD_INPUT


def test_verify_unknown_kind(capsys):
    code, _ = run(capsys, "verify", "--kind", "t99", "--seed", "7", *GRID)
    assert code == lemniscan.EXIT_BAD_INPUT


def test_verify_needs_seed():
    with pytest.raises(SystemExit) as err:
        lemniscan.main(["verify", "--kind", "t21"])
    assert err.value.code == 2


def test_plot_lemniscate(tmp_path):
    path = tmp_path / "plots" / "lemniscate.csv"
    code = lemniscan.main(["plot-boundary", "--region", "lemniscate", "--c",
                           "0.5", "-n", "1024", "--output", str(path)])
    assert code == lemniscan.EXIT_OK

    lines = path.read_text().splitlines()
    assert lines[0] == "theta,re,im"
    assert len(lines) == 1025
    _, re, im = (float(x) for x in lines[1].split(","))
    assert re == pytest.approx(math.sqrt(1.5), abs=1e-12)
    assert im == 0


def test_plot_lemniscate_cusp(tmp_path):
    path = tmp_path / "cusp.csv"
    lemniscan.main(["plot-boundary", "--c", "1", "-n", "1024", "--output",
                    str(path)])
    _, re, im = (float(x) for x in path.read_text().splitlines()[513]
                 .split(","))
    assert abs(complex(re, im)) < 1e-7


def test_plot_janowski(tmp_path):
    path = tmp_path / "janowski.csv"
    code = lemniscan.main(["plot-boundary", "--region", "janowski", "--A",
                           "1", "--B", "0", "-n", "64", "--output",
                           str(path)])
    assert code == lemniscan.EXIT_OK
    for line in path.read_text().splitlines()[1:]:
        _, re, im = (float(x) for x in line.split(","))
        assert abs(complex(re, im) - 1) == pytest.approx(1.0)


def test_plot_theorem22_svg(tmp_path):
    path = tmp_path / "t22.svg"
    code = lemniscan.main(["plot-boundary", "--region", "theorem22", "--c",
                           "0.5", "--format", "svg", "--output", str(path)])
    assert code == lemniscan.EXIT_OK
    assert path.read_text().startswith("<svg")


def test_plot_theorem22_sample_count(tmp_path):
    path = tmp_path / "t22.csv"
    code = lemniscan.main(["plot-boundary", "--region", "theorem22", "--c",
                           "0.5", "-n", "100", "--output", str(path)])
    assert code == lemniscan.EXIT_OK
    lines = path.read_text().splitlines()
    assert len(lines) == 101
    _, re, im = (float(x) for x in lines[1].split(","))
    q = math.sqrt(1 + 0.5 * 0.99)
    assert re == pytest.approx(q ** 3 / 3 + 0.5 * 0.99 / (2 * q), abs=1e-12)
    assert im == pytest.approx(0, abs=1e-12)


def test_plot_too_few_samples(capsys):
    code, _ = run(capsys, "plot-boundary", "-n", "4")
    assert code == lemniscan.EXIT_BAD_INPUT


def test_plot_unwritable(tmp_path):
    blocker = tmp_path / "file.txt"
    blocker.write_text("")
    code = lemniscan.main(["plot-boundary", "--output",
                           str(blocker / "out.csv")])
    assert code == lemniscan.EXIT_IO


def test_margin_sweep(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (first, second):
        code = lemniscan.main(["margin-sweep", "--kind", "t21", "--trials",
                               "3", "--seed", "7", "--workers", "1",
                               "--output", str(path)] + GRID)
        assert code == lemniscan.EXIT_OK

    lines = first.read_text().splitlines()
    assert lines[0] == "multiplier,gamma,min_margin,argmin_id"
    assert len(lines) == 5
    assert first.read_bytes() == second.read_bytes()


def test_margin_sweep_json(capsys, load_schema):
    code, out = run(capsys, "margin-sweep", "--kind", "c21", "--trials", "2",
                    "--seed", "1", "--workers", "1", "--multipliers", "1",
                    "--format", "json", *GRID)
    assert code == lemniscan.EXIT_OK
    jsonschema.validate(json.loads(out), load_schema("margin_table"))


def test_margin_sweep_bad_multipliers(capsys):
    code, _ = run(capsys, "margin-sweep", "--kind", "t21", "--seed", "1",
                  "--multipliers", "0,1", *GRID)
    assert code == lemniscan.EXIT_BAD_INPUT
