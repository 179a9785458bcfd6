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
Analytic functions on the unit disk, represented as expression trees.

Every node evaluates elementwise on numpy arrays of complex points and knows
its own derivative tree, so f', f'' and friends are exact rather than
finite-difference approximations.  All branches are principal, so that
sqrt(1) = 1, log(1) = 0 and 1**a = 1.
"""

import os
import logging
import warnings
import functools
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

import error

log = logging.getLogger(__name__)

# Evaluation radius cap used by every consumer of this module.  Behaviour on
# |z| = 1 is undefined.
R_MAX = float(os.environ.get("LEMNI_R_MAX", "0.99"))

BRANCH_TOLERANCE = 1e-12
DENOMINATOR_FLOOR = 1e-300
ZERO_TOLERANCE = 1e-9


def as_points(z):
    """
    Return (points, scalar) where points is an at-least-1-d complex array.
    """

    points = np.atleast_1d(np.asarray(z, dtype=complex))
    return points, np.ndim(z) == 0


def restore(values, scalar):
    """
    Undo as_points(): hand back a Python complex for scalar input.
    """

    if scalar:
        return complex(values.flat[0])
    return values


def _first_point(z, mask):
    return complex(z.flat[int(np.flatnonzero(mask.ravel())[0])])


def _check_branch(u, z, name):
    on_cut = (u.real < 0) & (np.abs(u.imag) <= BRANCH_TOLERANCE)
    if on_cut.any():
        point = _first_point(z, on_cut)
        log.debug("%s argument on the negative real axis at z=%s." %
                  (name, point))
        warnings.warn(error.BranchCutHit(
            "principal %s evaluated on its branch cut at z=%s" %
            (name, point)), stacklevel=4)


def _lift(value):
    if isinstance(value, AnalyticMap):
        return value
    return Const(complex(value))


class AnalyticMap(object):

    """
    Base class of all expression tree nodes.

    Subclasses implement _eval() on complex arrays, _derive() returning the
    derivative tree, and _doc() returning their JSON document.
    """

    op = None

    def eval(self, z):
        """
        Evaluate the map at a point or an array of points.
        """

        points, scalar = as_points(z)
        with np.errstate(all="ignore"):
            values = self._eval(points)
        return restore(values, scalar)

    def eval_deriv(self, z):
        """
        Evaluate the exact derivative at a point or an array of points.
        """

        return self.derivative().eval(z)

    def derivative(self):
        """
        Return the derivative as an expression tree.  The tree is built once
        per node.
        """

        cached = self.__dict__.get("_derivative")
        if cached is None:
            cached = self._derive()
            object.__setattr__(self, "_derivative", cached)
        return cached

    def to_json(self):
        """
        Return the expression as a JSON-compatible document
        {"op": ..., "args": [...], "params": {...}}.
        """

        args, params = self._doc()
        return {"op": self.op,
                "args": [arg.to_json() for arg in args],
                "params": params}

    def _doc(self):
        return [], {}

    def __add__(self, other):
        return Sum((self, _lift(other)))

    def __radd__(self, other):
        return Sum((_lift(other), self))

    def __sub__(self, other):
        return Sum((self, Product((Const(-1), _lift(other)))))

    def __rsub__(self, other):
        return Sum((_lift(other), Product((Const(-1), self))))

    def __mul__(self, other):
        return Product((self, _lift(other)))

    def __rmul__(self, other):
        return Product((_lift(other), self))

    def __truediv__(self, other):
        return Quotient(self, _lift(other))

    def __rtruediv__(self, other):
        return Quotient(_lift(other), self)

    def __neg__(self):
        return Product((Const(-1), self))

    def __pow__(self, exponent):
        return Power(self, float(exponent))

    def __call__(self, inner):
        return compose(self, inner)


@dataclass(frozen=True, eq=False)
class Const(AnalyticMap):
    value: complex

    op = "const"

    def _eval(self, z):
        return np.full(z.shape, self.value, dtype=complex)

    def _derive(self):
        return Const(0j)

    def _doc(self):
        value = complex(self.value)
        return [], {"re": value.real, "im": value.imag}


@dataclass(frozen=True, eq=False)
class Identity(AnalyticMap):

    op = "z"

    def _eval(self, z):
        return np.array(z, dtype=complex)

    def _derive(self):
        return Const(1 + 0j)


@dataclass(frozen=True, eq=False)
class Sum(AnalyticMap):
    terms: tuple

    op = "add"

    def _eval(self, z):
        return functools.reduce(np.add, (t._eval(z) for t in self.terms))

    def _derive(self):
        derived = [t.derivative() for t in self.terms
                   if not isinstance(t, Const)]
        if not derived:
            return Const(0j)
        if len(derived) == 1:
            return derived[0]
        return Sum(tuple(derived))

    def _doc(self):
        return list(self.terms), {}


@dataclass(frozen=True, eq=False)
class Product(AnalyticMap):
    factors: tuple

    op = "mul"

    def _eval(self, z):
        return functools.reduce(np.multiply, (f._eval(z) for f in self.factors))

    def _derive(self):
        terms = []
        for i, factor in enumerate(self.factors):
            if isinstance(factor, Const):
                continue
            rest = self.factors[:i] + (factor.derivative(),) + \
                self.factors[i + 1:]
            terms.append(Product(rest))
        if not terms:
            return Const(0j)
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms))

    def _doc(self):
        return list(self.factors), {}


@dataclass(frozen=True, eq=False)
class Quotient(AnalyticMap):
    numerator: AnalyticMap
    denominator: AnalyticMap

    op = "div"

    def _eval(self, z):
        den = self.denominator._eval(z)
        vanishing = np.abs(den) < DENOMINATOR_FLOOR
        if vanishing.any():
            point = _first_point(z, vanishing)
            raise error.DivisionByZero("Quotient denominator vanishes at "
                                       "z=%s." % point, point=point)
        return self.numerator._eval(z) / den

    def _derive(self):
        u, v = self.numerator, self.denominator
        top = Sum((Product((u.derivative(), v)),
                   Product((Const(-1), u, v.derivative()))))
        return Quotient(top, Product((v, v)))

    def _doc(self):
        return [self.numerator, self.denominator], {}


@dataclass(frozen=True, eq=False)
class Power(AnalyticMap):
    base: AnalyticMap
    exponent: float

    op = "pow"

    def _eval(self, z):
        u = self.base._eval(z)
        if not float(self.exponent).is_integer():
            _check_branch(u, z, "power")
        return np.power(u, self.exponent)

    def _derive(self):
        return Product((Const(complex(self.exponent)),
                        Power(self.base, self.exponent - 1.0),
                        self.base.derivative()))

    def _doc(self):
        return [self.base], {"exponent": float(self.exponent)}


@dataclass(frozen=True, eq=False)
class Exp(AnalyticMap):
    arg: AnalyticMap

    op = "exp"

    def _eval(self, z):
        return np.exp(self.arg._eval(z))

    def _derive(self):
        return Product((self, self.arg.derivative()))

    def _doc(self):
        return [self.arg], {}


@dataclass(frozen=True, eq=False)
class Log(AnalyticMap):
    arg: AnalyticMap

    op = "log"

    def _eval(self, z):
        u = self.arg._eval(z)
        _check_branch(u, z, "log")
        return np.log(u)

    def _derive(self):
        return Quotient(self.arg.derivative(), self.arg)

    def _doc(self):
        return [self.arg], {}


@dataclass(frozen=True, eq=False)
class Sqrt(AnalyticMap):
    arg: AnalyticMap

    op = "sqrt"

    def _eval(self, z):
        u = self.arg._eval(z)
        _check_branch(u, z, "sqrt")
        return np.sqrt(u)

    def _derive(self):
        return Quotient(self.arg.derivative(), Product((Const(2 + 0j), self)))

    def _doc(self):
        return [self.arg], {}


@dataclass(frozen=True, eq=False)
class Poly(AnalyticMap):
    coeffs: tuple

    op = "poly"

    def _eval(self, z):
        return P.polyval(z, np.asarray(self.coeffs, dtype=complex))

    def _derive(self):
        if len(self.coeffs) < 2:
            return Const(0j)
        derived = P.polyder(np.asarray(self.coeffs, dtype=complex))
        return Poly(tuple(complex(a) for a in derived))

    def _doc(self):
        return [], {"coeffs": [[complex(a).real, complex(a).imag]
                               for a in self.coeffs]}


@dataclass(frozen=True, eq=False)
class Compose(AnalyticMap):
    outer: AnalyticMap
    inner: AnalyticMap
    inner_at_zero: complex

    op = "compose"

    def _eval(self, z):
        return self.outer._eval(self.inner._eval(z))

    def _derive(self):
        return Product((compose(self.outer.derivative(), self.inner),
                        self.inner.derivative()))

    def _doc(self):
        return [self.outer, self.inner], {}


def compose(outer, inner):
    """
    Return outer(inner(z)), recording inner(0).
    """

    return Compose(outer, inner, complex(inner.eval(0)))


Z = Identity()

_UNARY = {"exp": Exp, "log": Log, "sqrt": Sqrt}


def from_json(doc):
    """
    Build an expression tree from its JSON document.
    """

    if not isinstance(doc, dict) or "op" not in doc:
        raise error.MalformedExpression("Expression node must be an object "
                                        "with an \"op\" key: %r" % (doc,))

    op = doc["op"]
    params = doc.get("params") or {}
    try:
        args = [from_json(arg) for arg in doc.get("args") or []]
        if op == "const":
            return Const(complex(params.get("re", 0.0), params.get("im", 0.0)))
        if op == "z":
            return Z
        if op == "add":
            return Sum(tuple(args))
        if op == "mul":
            return Product(tuple(args))
        if op == "div":
            numerator, denominator = args
            return Quotient(numerator, denominator)
        if op == "pow":
            base, = args
            return Power(base, float(params["exponent"]))
        if op in _UNARY:
            arg, = args
            return _UNARY[op](arg)
        if op == "poly":
            return Poly(tuple(complex(re, im) for re, im in params["coeffs"]))
        if op == "compose":
            outer, inner = args
            return compose(outer, inner)
    except (KeyError, TypeError, ValueError) as err:
        raise error.MalformedExpression("Malformed \"%s\" node: %s" %
                                        (op, err))

    raise error.MalformedExpression("Unknown op \"%s\"." % op)


@dataclass(frozen=True)
class SchwarzMap(object):

    """
    w(z) = phase * scale * z * prod (z - a) / (1 - conj(a) z).

    Each Blaschke factor has modulus below one in the disk, so w(0) = 0 and
    |w(z)| <= |z| hold by construction.
    """

    scale: float
    phase: complex
    zeros: tuple = ()

    def _factors(self):
        return tuple(Quotient(Poly((-a, 1 + 0j)), Poly((1 + 0j, -a.conjugate())))
                     for a in self.zeros)

    @functools.cached_property
    def tree(self):
        return Product((Const(self.phase * self.scale), Z) + self._factors())

    @functools.cached_property
    def over_z(self):
        """
        The analytic quotient w(z) / z, with value phase * scale * prod(-a)
        at the origin.
        """

        return Product((Const(self.phase * self.scale),) + self._factors())

    def eval(self, z):
        return self.tree.eval(z)

    def eval_deriv(self, z):
        return self.tree.eval_deriv(z)

    def to_json(self):
        return {"scale": self.scale,
                "phase": [self.phase.real, self.phase.imag],
                "zeros": [[a.real, a.imag] for a in self.zeros]}


def make_schwarz(scale, phase=1 + 0j, zeros=()):
    """
    Return a SchwarzMap after checking 0 < scale <= 1, |phase| = 1 and
    |a| < 1 for every zero.
    """

    scale = float(scale)
    phase = complex(phase)
    zeros = tuple(complex(a) for a in zeros)

    if not 0.0 < scale <= 1.0:
        raise error.InvalidScale("Schwarz scale must lie in (0, 1], got %s." %
                                 scale)
    if abs(abs(phase) - 1.0) > 1e-12:
        raise error.InvalidParams("Schwarz phase must be unimodular, got %s." %
                                  phase)
    for a in zeros:
        if abs(a) >= 1.0 - ZERO_TOLERANCE:
            raise error.ZeroOutsideDisk("Blaschke zero %s is not inside the "
                                        "unit disk." % a)

    return SchwarzMap(scale, phase, zeros)


def schwarz_from_json(doc):
    return make_schwarz(doc["scale"], complex(*doc["phase"]),
                        [complex(*a) for a in doc.get("zeros", [])])


def q_c_map(c):
    """
    Return the tree of q_c(z) = sqrt(1 + c z).
    """

    return Sqrt(Sum((Const(1 + 0j), Product((Const(complex(c)), Z)))))


def _normalized_poly(coeffs):
    coeffs = tuple(complex(a) for a in coeffs)
    if len(coeffs) < 2 or abs(coeffs[0]) > 1e-12 or abs(coeffs[1] - 1) > 1e-12:
        raise error.NonNormalized("Polynomial coefficients must start with "
                                  "a_0 = 0, a_1 = 1, got %s." % (coeffs[:2],))
    return Poly(coeffs)


FAMILIES = {
    "identity": lambda: Z,
    "koebe_like": lambda beta=2.0: Z * Power(1 - Z, -float(beta)),
    "moebius": lambda a=1.0: Z / (1 - complex(a) * Z),
    "exp_scaled": lambda alpha=1.0: Z * Exp(complex(alpha) * Z),
    "poly": _normalized_poly,
    "q_c_composed": lambda c=1.0, schwarz=None:
        q_c_map(c) if schwarz is None else compose(q_c_map(c), schwarz.tree),
}


def make_named(family, **params):
    """
    Return a member of one of the named function families.

    identity, koebe_like z/(1-z)^beta, moebius z/(1-az), exp_scaled
    z e^{alpha z} and poly(coeffs) are normalized (f(0) = 0, f'(0) = 1);
    q_c_composed(c, schwarz) is the p-candidate sqrt(1 + c w(z)).
    """

    try:
        factory = FAMILIES[family]
    except KeyError:
        raise error.UnknownFamily("Unknown function family \"%s\" "
                                  "(available: %s)." %
                                  (family, ", ".join(sorted(FAMILIES))))
    try:
        return factory(**params)
    except TypeError as err:
        raise error.SpecError("Bad parameters for family \"%s\": %s" %
                              (family, err))
