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
Exports custom exceptions.
"""


class LemniscanError(Exception):

    """
    Base class of every error raised by lemniscan.
    """

    pass


class InvalidParams(LemniscanError, ValueError):

    """
    Represents parameters outside the domain an operation is defined on.
    """

    pass


class DegenerateParams(InvalidParams):

    """
    Represents A = B = 0, for which the auxiliary functions have no
    denominator.
    """

    pass


class InvalidScale(InvalidParams):

    """
    Represents a Schwarz map scale outside (0, 1].
    """

    pass


class ZeroOutsideDisk(InvalidParams):

    """
    Represents a Blaschke factor zero on or outside the unit circle.
    """

    pass


class TooFewSamples(InvalidParams):

    """
    Represents a boundary sampling request with too few points.
    """

    pass


class SpecError(LemniscanError, ValueError):

    """
    Represents a malformed function, class or criterion specification.
    """

    pass


class UnknownFamily(SpecError):

    """
    Represents a request for a function family we do not know.
    """

    pass


class NonNormalized(SpecError):

    """
    Represents a polynomial requested as a normalized map but whose first
    two coefficients are not (0, 1).
    """

    pass


class NotNormalized(SpecError):

    """
    Represents a function handed to a class check without f(0) = 0 and
    f'(0) = 1.
    """

    pass


class SubjectMismatch(SpecError):

    """
    Represents a subject whose type does not match the criterion kind.
    """

    pass


class MalformedExpression(SpecError):

    """
    Represents an expression tree document we cannot parse.
    """

    pass


class EvaluationError(LemniscanError, ArithmeticError):

    """
    Represents a failure while evaluating a function at a point.

    The offending point is kept in `point' so that reports can carry it.
    """

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class DivisionByZero(EvaluationError):

    """
    Represents a quotient whose denominator vanishes at the point.
    """

    pass


class ZeroOfF(EvaluationError):

    """
    Represents a zero of a normalized function away from the origin, where
    its class quotient has a pole.
    """

    pass


class PoleAtBranchPoint(EvaluationError):

    """
    Represents evaluation exactly at the branch point z = -1/c.
    """

    pass


class QuadratureNotConverged(EvaluationError):

    """
    Represents an adaptive quadrature that missed its tolerance at the
    maximum bisection depth.
    """

    pass


class BasePointMismatch(LemniscanError):

    """
    Represents a subordination check whose subject does not start at the
    base point of the target region.
    """

    def __init__(self, message, value=None, base_point=None):
        super().__init__(message)
        self.value = value
        self.base_point = base_point


class SelfIntersectingBoundary(LemniscanError, ValueError):

    """
    Represents a sampled boundary that is not a Jordan polygon.
    """

    pass


class BranchCutHit(UserWarning):

    """
    Issued when a principal-branch argument lies on the negative real axis.
    Evaluation still returns the principal value.
    """

    pass
