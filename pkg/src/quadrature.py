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
Gauss-Legendre rules on real intervals for complex, vector-valued integrands.
"""

import logging

import numpy as np

import error

log = logging.getLogger(__name__)

DEFAULT_ORDER = 10
DEFAULT_TOLERANCE = 1e-10
MAX_DEPTH = 20


def leggauss_ab(n, a=-1.0, b=1.0):
    """
    Return the n Gauss-Legendre nodes and weights on [a, b].
    """

    if n <= 0:
        raise error.InvalidParams("Need a positive number of nodes.")
    x, w = np.polynomial.legendre.leggauss(n)
    x = (b - a) * 0.5 * x + (b + a) * 0.5
    w = w * (b - a) * 0.5
    return x, w


def gauss_legendre(func, a, b, order=DEFAULT_ORDER):
    """
    Integrate func over [a, b] with a fixed-order rule.

    func takes a 1-d array of nodes and returns an array whose first axis
    runs over the nodes; the result has the remaining shape.
    """

    x, w = leggauss_ab(order, a, b)
    return np.tensordot(w, np.asarray(func(x), dtype=complex), axes=(0, 0))


def adaptive_gauss_legendre(func, a, b, tol=DEFAULT_TOLERANCE,
                            max_depth=MAX_DEPTH, order=DEFAULT_ORDER):
    """
    Integrate func over [a, b] by bisection until every piece agrees with
    the sum of its halves to within its share of `tol'.

    Vector-valued integrands converge when their worst component does.
    """

    total = 0
    stack = [(a, b, gauss_legendre(func, a, b, order), 0)]
    pieces = 0

    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = gauss_legendre(func, lo, mid, order)
        right = gauss_legendre(func, mid, hi, order)
        halves = left + right
        share = tol * (hi - lo) / (b - a)

        if np.max(np.abs(halves - whole)) <= share:
            total = total + halves
            pieces += 1
            continue

        if depth + 1 >= max_depth:
            raise error.QuadratureNotConverged(
                "Quadrature on [%s, %s] missed tolerance %s at depth %d." %
                (lo, hi, tol, max_depth))

        stack.append((mid, hi, right, depth + 1))
        stack.append((lo, mid, left, depth + 1))

    log.debug("Adaptive quadrature on [%s, %s] used %d pieces." %
              (a, b, pieces))
    return total
