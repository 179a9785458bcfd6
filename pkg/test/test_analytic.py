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

import math
import unittest
import sys
sys.path.insert(0, 'src/')

import jsonschema
import numpy as np
import pytest

import error
import analytic
from analytic import Z, Const, Exp, Log, Power, Sqrt


def random_points(count, radius, seed=1):
    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.uniform(size=count))
    return r * np.exp(2j * np.pi * rng.uniform(size=count))


class TestEval(unittest.TestCase):
    """Test evaluation of expression trees."""

    def test_identity(self):
        self.assertEqual(analytic.make_named("identity").eval(0.3 + 0.1j),
                         0.3 + 0.1j)

    def test_sqrt_at_cusp(self):
        f = analytic.q_c_map(1.0)
        self.assertLess(abs(f.eval(-1 + 1e-15)), 1e-7)

    def test_koebe_type_map(self):
        f = analytic.make_named("moebius", a=1)
        self.assertAlmostEqual(f.eval(0.5), 1.0 + 0j, places=14)

    def test_principal_branches(self):
        self.assertEqual(Sqrt(Const(1)).eval(0), 1)
        self.assertEqual(Log(Const(1)).eval(0), 0)
        self.assertEqual(Power(Const(1), 0.37).eval(0), 1)

    def test_operators(self):
        self.assertEqual((Z + 1).eval(1), 2)
        self.assertEqual((2 - Z).eval(0.5), 1.5)
        self.assertEqual((Z * Z).eval(1j), -1)
        self.assertEqual((Z ** 2).eval_deriv(3), 6)
        self.assertAlmostEqual((Z / (1 + Z)).eval(1), 0.5)

    def test_determinism(self):
        f = analytic.make_named("exp_scaled", alpha=0.7 - 0.2j)
        z = random_points(50, 0.9)
        self.assertTrue(np.array_equal(f.eval(z), f.eval(z)))

    def test_array_shape_is_kept(self):
        z = random_points(12, 0.5).reshape(3, 4)
        self.assertEqual(analytic.q_c_map(0.5).eval(z).shape, (3, 4))


def test_derivatives():
    assert (Z * Z).eval_deriv(0.5) == 1.0
    assert analytic.q_c_map(1.0).eval_deriv(0) == pytest.approx(0.5)
    assert Exp(Z).eval_deriv(0) == 1.0


def test_derivative_tree_is_cached():
    f = analytic.q_c_map(0.5)
    assert f.derivative() is f.derivative()


def test_derivative_matches_finite_difference(families):
    omega = analytic.make_schwarz(0.8, 1j, [0.5, -0.3 + 0.2j])
    maps = dict(families)
    maps["q_c_composed"] = analytic.make_named("q_c_composed", c=1.0,
                                               schwarz=omega)
    maps["koebe"] = analytic.make_named("koebe_like", beta=2.0)
    h = 1e-6

    for name, f in maps.items():
        for z in random_points(100, 0.9):
            exact = f.eval_deriv(z)
            fd = (f.eval(z + h) - f.eval(z - h)) / (2 * h)
            assert abs(exact - fd) / max(1.0, abs(exact)) < 1e-6, name


def test_composition_consistency(families):
    g = analytic.make_schwarz(0.5, 1, [0.2]).tree
    for f in families.values():
        h = analytic.compose(f, g)
        for z in random_points(20, 0.9):
            assert h.eval(z) == f.eval(g.eval(z))
    assert analytic.compose(Exp(Z), Z + 2).inner_at_zero == 2


def test_division_by_zero():
    with pytest.raises(error.DivisionByZero) as err:
        (1 / Z).eval(np.array([0.5, 0.0]))
    assert err.value.point == 0


def test_branch_cut_is_reported():
    with pytest.warns(error.BranchCutHit):
        value = Sqrt(Z).eval(-0.25)
    assert value == pytest.approx(0.5j)

    with pytest.warns(error.BranchCutHit):
        Log(Z).eval(-1.0)


class TestSchwarz(unittest.TestCase):
    """Test the constructive Schwarz maps."""

    def test_identity(self):
        omega = analytic.make_schwarz(1.0)
        self.assertEqual(omega.eval(0.3 + 0.2j), 0.3 + 0.2j)

    def test_scaled(self):
        omega = analytic.make_schwarz(0.5)
        self.assertAlmostEqual(abs(omega.eval(0.8)), 0.4)

    def test_schwarz_bound(self):
        omega = analytic.make_schwarz(1.0, 1, [0.5])
        z = random_points(1000, 0.999)
        self.assertTrue(np.all(np.abs(omega.eval(z)) <= np.abs(z) + 1e-12))
        self.assertLessEqual(abs(omega.eval(0.9)), 0.9)
        self.assertEqual(omega.eval(0), 0)

    def test_over_z(self):
        omega = analytic.make_schwarz(0.7, 1j, [0.4, 0.1 - 0.5j])
        z = random_points(10, 0.9)
        self.assertTrue(np.allclose(omega.over_z.eval(z) * z, omega.eval(z),
                                    atol=1e-15))

    def test_errors(self):
        self.assertRaises(error.InvalidScale, analytic.make_schwarz, 0)
        self.assertRaises(error.InvalidScale, analytic.make_schwarz, 1.5)
        self.assertRaises(error.ZeroOutsideDisk, analytic.make_schwarz, 1,
                          1, [1.0])
        self.assertRaises(error.InvalidParams, analytic.make_schwarz, 1, 2)

    def test_json(self):
        omega = analytic.make_schwarz(0.6, 1j, [0.3 + 0.1j])
        again = analytic.schwarz_from_json(omega.to_json())
        self.assertEqual(again, omega)


def test_make_named():
    f = analytic.make_named("identity")
    assert f.eval_deriv(0) == 1

    omega = analytic.make_schwarz(1.0)
    p = analytic.make_named("q_c_composed", c=1.0, schwarz=omega)
    assert p.eval(0) == 1
    assert p.eval(0.5) == pytest.approx(math.sqrt(1.5))

    for family in ("koebe_like", "moebius", "exp_scaled"):
        g = analytic.make_named(family)
        assert g.eval(0) == 0
        assert g.eval_deriv(0) == pytest.approx(1)


def test_make_named_errors():
    with pytest.raises(error.UnknownFamily):
        analytic.make_named("nosuch")
    with pytest.raises(error.NonNormalized):
        analytic.make_named("poly", coeffs=(0, 2, 1))
    with pytest.raises(error.SpecError):
        analytic.make_named("identity", a=1)


def test_expression_json(load_schema):
    f = analytic.make_named("q_c_composed", c=0.5,
                            schwarz=analytic.make_schwarz(0.9, 1, [0.2j]))
    doc = f.to_json()
    jsonschema.validate(doc, load_schema("expression"))

    again = analytic.from_json(doc)
    assert again.eval(0.4 - 0.3j) == pytest.approx(f.eval(0.4 - 0.3j),
                                                    abs=1e-15)


def test_malformed_expression():
    with pytest.raises(error.MalformedExpression):
        analytic.from_json({"op": "bogus"})
    with pytest.raises(error.MalformedExpression):
        analytic.from_json({"op": "div", "args": []})
    with pytest.raises(error.MalformedExpression):
        analytic.from_json([1, 2])


if __name__ == '__main__':
    unittest.main()
