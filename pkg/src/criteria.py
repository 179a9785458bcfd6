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
Differential subordination criteria for membership in S*(q_c).

Every criterion is a kind: a subject type (p with p(0) = 1, or a normalized
f), a left-hand side built from the subject and its derivatives, the region
that left-hand side is assumed to stay in, and the class the subject is then
claimed to belong to.
"""

import enum
import logging
import functools
import dataclasses
from dataclasses import dataclass

import numpy as np

import error
import regions
import subordination
from analytic import AnalyticMap, Z, q_c_map, as_points, restore

log = logging.getLogger(__name__)

SUBJECT_TOLERANCE = 1e-10
BRANCH_POINT_TOLERANCE = 1e-15
THRESHOLD_SLACK = 1e-12


class CriterionKind(enum.Enum):

    T21 = "t21"
    C21 = "c21"
    C22 = "c22"
    C23 = "c23"
    C24 = "c24"
    C25 = "c25"
    C26 = "c26"
    C27 = "c27"
    C28 = "c28"
    C29 = "c29"
    T22 = "t22"
    T22F = "t22f"
    T23 = "t23"

    @property
    def subject(self):
        return "p" if self in P_KINDS else "f"

    @classmethod
    def parse(cls, name):
        try:
            return cls(str(name).lower())
        except ValueError:
            raise error.SpecError("Unknown criterion kind \"%s\" (available: "
                                  "%s)." % (name, ", ".join(k.value
                                                            for k in cls)))


K = CriterionKind

P_KINDS = frozenset((K.T21, K.T22, K.T23))
GAMMA_KINDS = frozenset((K.T21, K.C21, K.C22, K.C23, K.C24, K.C25, K.C26,
                         K.C27, K.C28))
JANOWSKI_KINDS = frozenset((K.T21, K.C21, K.C22, K.C24, K.C25, K.C26, K.C27))
REAL_PART_KINDS = frozenset((K.C23, K.C28))
THRESHOLD_KINDS = frozenset((K.T23, K.C29))
DOMINANT_KINDS = frozenset((K.T22, K.T22F))
UNIT_C_KINDS = frozenset((K.C22, K.C23, K.C25, K.C26))

# Values of the left-hand sides at z = 0 for admissible subjects.
LHS_AT_ZERO = {
    K.T21: 1.0, K.C21: 1.0, K.C22: 1.0, K.C23: 1.0, K.C24: 1.0, K.C25: 1.0,
    K.C26: 1.0, K.C27: 1.0, K.C28: 1.0, K.C29: 1.0, K.T23: 1.0,
    K.T22: 1.0 / 3.0, K.T22F: 1.0 / 3.0,
}


@dataclass(frozen=True)
class CriterionParams(object):

    """
    Parameters of a criterion.  gamma is only needed by the kinds that
    carry it and k only by the real-part threshold kinds.
    """

    gamma: float = None
    A: float = 1.0
    B: float = 0.0
    c: float = 1.0
    k: float = 1.0

    def __post_init__(self):
        if self.gamma is not None and not self.gamma > 0:
            raise error.InvalidParams("gamma must be positive, got %s." %
                                      self.gamma)
        if abs(self.A) > 1.0:
            raise error.InvalidParams("Need |A| <= 1, got %s." % self.A)
        if abs(self.B) >= 1.0:
            raise error.InvalidParams("Need |B| < 1, got %s." % self.B)
        if not 0.0 < self.c <= 1.0:
            raise error.InvalidParams("Need 0 < c <= 1, got %s." % self.c)
        if self.k < 1.0:
            raise error.InvalidParams("Need k >= 1, got %s." % self.k)

    def to_dict(self):
        return dataclasses.asdict(self)


def effective_params(kind, params):
    """
    Return params specialized to what the kind's statement fixes: c = 1 for
    c22, c23, c25 and c26, and A = 1, B = 0 for c23 and c28.
    """

    changes = {}
    if kind in UNIT_C_KINDS:
        changes["c"] = 1.0
    if kind in REAL_PART_KINDS:
        changes.update(A=1.0, B=0.0)
    return dataclasses.replace(params, **changes) if changes else params


def gamma_threshold(A, B, c):
    """
    Return 2(|A| + |B|)(1 + c) / (c (1 - |B|)), the smallest gamma for which
    the Janowski-type criteria are asserted.
    """

    if abs(A) > 1.0 or abs(B) >= 1.0 or not 0.0 < c <= 1.0:
        raise error.InvalidParams("Threshold needs |A| <= 1, |B| < 1 and "
                                  "0 < c <= 1, got A=%s, B=%s, c=%s." %
                                  (A, B, c))
    return 2.0 * (abs(A) + abs(B)) * (1.0 + c) / (c * (1.0 - abs(B)))


def meets_threshold(kind, params):
    """
    True when the kind has no gamma, or gamma reaches the threshold.
    """

    if kind not in GAMMA_KINDS:
        return True
    if params.gamma is None:
        return False
    eff = effective_params(kind, params)
    return eff.gamma >= gamma_threshold(eff.A, eff.B, eff.c) - THRESHOLD_SLACK


def _check_nondegenerate(A, B):
    if A == 0 and B == 0:
        raise error.DegenerateParams("A = B = 0 leaves no denominator.")


def H_func(t, A, B, c, gamma, k=1.0):
    """
    ckg / (2|A| sqrt(1 + 2ct + c^2) + |B| sqrt(4 + 4bt + b^2)), b = 2c + ckg.

    Vanishing denominators give +inf.
    """

    _check_nondegenerate(A, B)
    t = np.asarray(t, dtype=float)
    b = 2.0 * c + c * gamma * k
    first = np.sqrt(np.maximum(1.0 + 2.0 * c * t + c * c, 0.0))
    second = np.sqrt(np.maximum(4.0 + 4.0 * b * t + b * b, 0.0))
    den = 2.0 * abs(A) * first + abs(B) * second
    with np.errstate(divide="ignore"):
        value = np.where(den > 0, c * k * gamma / np.where(den > 0, den, 1.0),
                         np.inf)
    return float(value) if value.ndim == 0 else value


def L_func(k, A, B, c, gamma):
    """
    ckg / (2|A|(1 + c) + |B|(2 + 2c + ckg)).
    """

    _check_nondegenerate(A, B)
    k = np.asarray(k, dtype=float)
    value = c * k * gamma / (2.0 * abs(A) * (1.0 + c) +
                             abs(B) * (2.0 + 2.0 * c + c * gamma * k))
    return float(value) if value.ndim == 0 else value


def theorem22_target(c, z):
    """
    Return h(z) = q_c(z)^3 / 3 + c z / (2 q_c(z)), the best dominant's
    image function.  h(0) = 1/3 and c = 0 gives h = 1/3.
    """

    if not 0.0 <= c <= 1.0:
        raise error.InvalidParams("Need 0 <= c <= 1, got %s." % c)
    points, scalar = as_points(z)
    u = 1.0 + c * points
    at_branch = np.abs(u) < BRANCH_POINT_TOLERANCE
    if at_branch.any():
        point = complex(points.ravel()[np.argmax(at_branch.ravel())])
        raise error.PoleAtBranchPoint("h has a pole at the branch point "
                                      "z=%s." % point, point=point)
    q = np.sqrt(u)
    return restore(q ** 3 / 3.0 + c * points / (2.0 * q), scalar)


def theorem22_target_map(c):
    q = q_c_map(c)
    return (1.0 / 3.0) * q ** 3 + Z * q.derivative()


@functools.lru_cache(maxsize=16)
def theorem22_region(c, r=0.99, n=regions.MIN_POLYGON_VERTICES):
    """
    The polygon through h(r e^{i theta}), based at 1/3.
    """

    log.debug("Building best-dominant region for c=%s." % c)
    return regions.region_from_univalent_boundary(theorem22_target_map(c),
                                                  r, n)


def close_to_convex_margin(c, grid):
    """
    Return min over the grid of Re{1 + cz + (1 + z q''/q')} - (1 - c).

    The quantity is Re{z h'(z) / Q(z)} with Q = z q_c'; a positive result
    makes h close-to-convex at resolution.
    """

    q = q_c_map(c)
    dq = q.derivative()
    ddq = dq.derivative()
    z = grid.points
    values = 1.0 + c * z + (1.0 + z * np.asarray(ddq.eval(z)) /
                            np.asarray(dq.eval(z)))
    return float(np.min(values.real) - (1.0 - c))


def check_subject(kind, subject):
    """
    Raise SubjectMismatch unless subject is a p (p(0) = 1) for p-kinds or a
    normalized f for f-kinds.
    """

    if not isinstance(subject, AnalyticMap):
        raise error.SubjectMismatch("Subject must be an analytic map, got %s."
                                    % type(subject).__name__)

    value = complex(subject.eval(0))
    if kind in P_KINDS:
        if abs(value - 1.0) > SUBJECT_TOLERANCE:
            raise error.SubjectMismatch("Kind %s needs p(0) = 1, got %s." %
                                        (kind.value, value))
        return

    slope = complex(subject.eval_deriv(0))
    if abs(value) > SUBJECT_TOLERANCE or abs(slope - 1) > SUBJECT_TOLERANCE:
        raise error.SubjectMismatch("Kind %s needs f(0) = 0, f'(0) = 1, got "
                                    "%s and %s." % (kind.value, value, slope))


def _p_lhs(kind, p, gamma, z):
    pz = np.asarray(p.eval(z))
    zdp = z * np.asarray(p.eval_deriv(z))
    if kind == K.T21:
        return 1.0 + gamma * zdp / pz
    if kind == K.T22:
        return pz ** 3 / 3.0 + zdp
    return pz * (pz + zdp)


def _f_lhs(kind, f, gamma, z):
    df = f.derivative()
    fz = np.asarray(f.eval(z))
    dfz = np.asarray(df.eval(z))
    ddfz = np.asarray(df.eval_deriv(z))
    P = z * dfz / fz
    S = z * ddfz / dfz

    if kind in (K.C21, K.C22, K.C23):
        return 1.0 + gamma * (1.0 + S - P)
    if kind in (K.C24, K.C25):
        return 1.0 + gamma * (1.0 + 0.5 * S - P)
    if kind == K.C26:
        return 1.0 + gamma * 0.5 * S
    if kind in (K.C27, K.C28):
        return 1.0 + gamma * (P - 1.0)
    if kind == K.C29:
        return P ** 2 * (2.0 + S - P)
    return P ** 3 / 3.0 + (1.0 + S - P) * P


def criterion_lhs(kind, subject, params, z):
    """
    Evaluate the kind's left-hand side at z.  The value at the origin is
    taken from LHS_AT_ZERO.
    """

    check_subject(kind, subject)
    params = effective_params(kind, params)
    if kind in GAMMA_KINDS and params.gamma is None:
        raise error.InvalidParams("Kind %s needs gamma." % kind.value)

    points, scalar = as_points(z)
    values = np.full(points.shape, LHS_AT_ZERO[kind], dtype=complex)
    away = points != 0
    if away.any():
        zs = points[away]
        with np.errstate(all="ignore"):
            if kind in P_KINDS:
                values[away] = _p_lhs(kind, subject, params.gamma, zs)
            else:
                values[away] = _f_lhs(kind, subject, params.gamma, zs)
    return restore(values, scalar)


class CriterionLHS(AnalyticMap):

    """
    A kind's left-hand side for a fixed subject, as an evaluatable map.
    """

    def __init__(self, kind, subject, params):
        self.kind = kind
        self.subject = subject
        self.params = params

    def eval(self, z):
        return criterion_lhs(self.kind, self.subject, self.params, z)


def real_part_threshold(params):
    return 1.0 + params.c * (1.0 + params.k / 2.0)


def hypothesis_region(kind, params):
    """
    Return the region the kind's left-hand side is assumed to stay in.
    """

    params = effective_params(kind, params)
    if kind in JANOWSKI_KINDS:
        return regions.JanowskiDisk(params.A, params.B)
    if kind in REAL_PART_KINDS:
        return regions.HalfPlaneShifted(0.0)
    if kind in THRESHOLD_KINDS:
        return regions.HalfPlaneShifted(real_part_threshold(params))
    return theorem22_region(float(params.c))


def conclusion_class(kind, params):
    """
    Return the class the kind concludes the subject belongs to, or None for
    c25 and c26, whose univalence conclusions are not checked.
    """

    params = effective_params(kind, params)
    if kind in P_KINDS:
        return subordination.qc(params.c)
    if kind in (K.C21, K.C23, K.C29, K.T22F):
        return subordination.sstar_qc(params.c)
    if kind == K.C22:
        return subordination.sl()
    if kind == K.C24:
        return subordination.cor24(params.c)
    if kind in (K.C27, K.C28):
        return subordination.cor27(params.c)
    return None


def check_hypothesis(kind, subject, params, grid):
    region = hypothesis_region(kind, params)
    lhs = CriterionLHS(kind, subject, params)
    if region.base_point is None:
        return subordination.check_containment(lhs, region, grid)
    return subordination.check_subordination(lhs, region, grid)


def check_implication(kind, subject, params, grid):
    """
    Return the (hypothesis, conclusion) verdict pair for the subject.  The
    conclusion is None for kinds without a checked conclusion.
    """

    hypothesis = check_hypothesis(kind, subject, params, grid)
    cls = conclusion_class(kind, params)
    conclusion = None
    if cls is not None:
        conclusion = subordination.class_membership(subject, cls, grid)

    log.debug("%s: hypothesis %s, conclusion %s." %
              (kind.value, hypothesis, conclusion))
    return hypothesis, conclusion
