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

import os
import json
import unittest
import sys
sys.path.insert(0, 'src/')

import pytest

import error
import analytic
import util


class TestUtil(unittest.TestCase):
    """Test the util module."""

    def test_parse_complex(self):
        self.assertEqual(util.parse_complex("0.3"), 0.3)
        self.assertEqual(util.parse_complex("0.3+0.1j"), 0.3 + 0.1j)
        self.assertEqual(util.parse_complex("0.3 + 0.1i"), 0.3 + 0.1j)
        self.assertEqual(util.parse_complex(2), 2)
        self.assertRaises(error.SpecError, util.parse_complex, "foo")

    def test_parse_float_list(self):
        self.assertEqual(util.parse_float_list("0.25,0.5,1"), [0.25, 0.5, 1])
        self.assertEqual(util.parse_float_list("1,"), [1.0])
        self.assertRaises(error.SpecError, util.parse_float_list, "1,x")


def test_parse_named_spec():
    f = util.parse_function_spec("identity")
    assert f.eval(0.5) == 0.5

    f = util.parse_function_spec("moebius:a=0.5")
    assert f.eval(0.5) == pytest.approx(0.5 / 0.75)

    f = util.parse_function_spec("exp_scaled:alpha=0.1+0.2i")
    assert f.eval(0.5) == pytest.approx(0.5 * complex(2.718281828459045) **
                                        (0.5 * (0.1 + 0.2j)))


def test_parse_inline_json():
    f = util.parse_function_spec(json.dumps(analytic.q_c_map(0.5).to_json()))
    assert f.eval(1.0) == pytest.approx(1.5 ** 0.5)

    doc = {"family": "poly", "params": {"coeffs": [[0, 0], [1, 0], [0.1, 0]]}}
    f = util.parse_function_spec(json.dumps(doc))
    assert f.eval(1.0) == pytest.approx(1.1)

    doc = {"family": "q_c_composed",
           "params": {"c": 1.0, "schwarz": {"scale": 0.5, "phase": [1, 0],
                                            "zeros": []}}}
    p = util.parse_function_spec(json.dumps(doc))
    assert p.eval(0.5) == pytest.approx(1.25 ** 0.5)


def test_parse_spec_file(tmp_path):
    path = tmp_path / "f.json"
    f = analytic.make_named("moebius", a=0.3)
    path.write_text(json.dumps({"expression": f.to_json()}))
    g = util.parse_function_spec(str(path))
    assert g.eval(0.4) == pytest.approx(f.eval(0.4))

    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(error.SpecError):
        util.parse_function_spec(str(broken))


def test_parse_bad_specs():
    with pytest.raises(error.UnknownFamily):
        util.parse_function_spec("nosuch")
    with pytest.raises(error.SpecError):
        util.parse_function_spec("moebius:a")
    with pytest.raises(error.SpecError):
        util.parse_function_spec("{\"neither\": 1}")
    with pytest.raises(error.MalformedExpression):
        util.parse_function_spec("{\"op\": \"bogus\"}")


def test_write_output(tmp_path, capsys):
    path = os.path.join(str(tmp_path), "nested", "dir", "out.csv")
    assert util.write_output("theta,re,im\n", path) == path
    with open(path) as fd:
        assert fd.read() == "theta,re,im\n"

    assert util.write_output("4.0") is None
    assert capsys.readouterr().out == "4.0\n"

    util.write_output("x\n", "-")
    assert capsys.readouterr().out == "x\n"


def test_write_output_unwritable(tmp_path):
    blocker = tmp_path / "file.txt"
    blocker.write_text("")
    with pytest.raises(OSError):
        util.write_output("x", str(blocker / "out.csv"))


if __name__ == '__main__':
    unittest.main()
