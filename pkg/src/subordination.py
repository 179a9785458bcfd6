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
Subordination and class-membership verdicts by dense sampling of the disk.

Sampling can refute a subordination (a negative margin comes with a witness)
but never prove one, so a positive verdict only holds at the resolution of
the grid it was computed on.
"""

import logging
import functools
from dataclasses import dataclass

import numpy as np

import error
import regions
from analytic import AnalyticMap, R_MAX, as_points, restore

log = logging.getLogger(__name__)

BASE_POINT_TOLERANCE = 1e-10
NORMALIZATION_TOLERANCE = 1e-10
MIN_ANGLES = 64

DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99)
DEFAULT_ANGLES = 512


@dataclass(frozen=True)
class DiskGrid(object):

    """
    Polar sampling of the disk: `angles' equispaced points on each circle of
    radius in `radii', ordered radius-major.
    """

    radii: tuple = DEFAULT_RADII
    angles: int = DEFAULT_ANGLES

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)

        if not radii:
            raise error.InvalidParams("A disk grid needs at least one radius.")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise error.InvalidParams("Grid radii must be strictly "
                                      "increasing: %s" % (radii,))
        if radii[0] <= 0.0 or radii[-1] > min(R_MAX, 0.99):
            raise error.InvalidParams("Grid radii must lie in (0, %s]." %
                                      min(R_MAX, 0.99))
        if self.angles < MIN_ANGLES:
            raise error.InvalidParams("A disk grid needs at least %d angles "
                                      "per radius, got %d." %
                                      (MIN_ANGLES, self.angles))

    @functools.cached_property
    def points(self):
        theta = 2.0 * np.pi * np.arange(self.angles) / self.angles
        return np.outer(np.asarray(self.radii), np.exp(1j * theta)).ravel()

    @property
    def size(self):
        return len(self.radii) * self.angles

    def refined(self):
        """
        Return the grid with twice as many angles.  Its points are a superset
        of ours.
        """

        return DiskGrid(self.radii, 2 * self.angles)


def default_grid():
    return DiskGrid()


@dataclass(frozen=True)
class Verdict(object):

    """
    Outcome of a sampled containment check.
    """

    holds_at_resolution: bool
    min_margin: float
    witness: complex
    samples_checked: int

    def to_dict(self):
        return {"holds": self.holds_at_resolution,
                "status": ("holds at resolution" if self.holds_at_resolution
                           else "fails"),
                "min_margin": self.min_margin,
                "witness": {"re": self.witness.real,
                            "im": self.witness.imag},
                "samples": self.samples_checked}


def verdict_from_margins(points, margins):
    """
    Reduce per-point margins to a Verdict.  NaN counts as -inf and ties go to
    the smallest grid index.
    """

    margins = np.array(margins, dtype=float).ravel()
    margins[np.isnan(margins)] = -np.inf
    idx = int(np.argmin(margins))
    min_margin = float(margins[idx])
    return Verdict(min_margin > 0, min_margin,
                   complex(np.asarray(points).ravel()[idx]), margins.size)


def verdict_from_values(points, values, region):
    """
    Return the containment Verdict of precomputed values at the grid points.
    """

    return verdict_from_margins(points, region.margin(np.asarray(values)))


def check_containment(f, region, grid):
    """
    Return the Verdict of f(grid) inside region.

    EvaluationError from f propagates with the offending grid point.
    """

    verdict = verdict_from_values(grid.points, f.eval(grid.points), region)
    log.debug("Containment in %s: margin %s at %s over %d samples." %
              (region, verdict.min_margin, verdict.witness,
               verdict.samples_checked))
    return verdict


def check_subordination(f, region, grid):
    """
    Check f(0) against the region's base point, then containment.
    """

    base = region.base_point
    if base is None:
        raise error.InvalidParams("%s has no base point; use containment." %
                                  type(region).__name__)

    value = complex(f.eval(0))
    if abs(value - base) > BASE_POINT_TOLERANCE:
        raise error.BasePointMismatch("f(0) = %s but the region is based at "
                                      "%s." % (value, base),
                                      value=value, base_point=base)

    return check_containment(f, region, grid)


CLASS_NAMES = ("sstar_qc", "sl", "janowski", "cor24", "cor27", "starlike",
               "qc")


@dataclass(frozen=True)
class ClassSpec(object):

    """
    A class of analytic functions described by a quotient and a region the
    quotient must stay in.

      sstar_qc, sl   zf'/f into the lemniscate (sl is c = 1)
      janowski       zf'/f into the Janowski disk
      starlike       Re zf'/f > 0
      cor24          |(z/f)^2 f' - 1| < c
      cor27          |(f/z)^2 - 1| < c
      qc             p itself into the lemniscate (p-subjects, p(0) = 1)
    """

    name: str
    c: float = 1.0
    A: float = 1.0
    B: float = 0.0

    def __post_init__(self):
        if self.name not in CLASS_NAMES:
            raise error.SpecError("Unknown class \"%s\" (available: %s)." %
                                  (self.name, ", ".join(CLASS_NAMES)))
        if self.name == "sl":
            object.__setattr__(self, "c", 1.0)

    @property
    def region(self):
        if self.name in ("sstar_qc", "sl", "qc"):
            return regions.Lemniscate(self.c)
        if self.name == "janowski":
            return regions.JanowskiDisk(self.A, self.B)
        if self.name == "starlike":
            return regions.HalfPlaneShifted(0.0)
        return regions.Disk(1 + 0j, self.c)

    @property
    def normalized_subject(self):
        return self.name != "qc"

    def __str__(self):
        if self.name == "janowski":
            return "janowski(A=%s, B=%s)" % (self.A, self.B)
        if self.name in ("sl", "starlike"):
            return self.name
        return "%s(c=%s)" % (self.name, self.c)


def sstar_qc(c):
    return ClassSpec("sstar_qc", c=c)


def sl():
    return ClassSpec("sl")


def janowski(A, B):
    return ClassSpec("janowski", A=A, B=B)


def cor24(c):
    return ClassSpec("cor24", c=c)


def cor27(c):
    return ClassSpec("cor27", c=c)


def starlike():
    return ClassSpec("starlike")


def qc(c):
    return ClassSpec("qc", c=c)


def class_quotient(f, cls, z):
    """
    Evaluate the quotient of class `cls' at z, with its removable value 1 at
    the origin.
    """

    points, scalar = as_points(z)
    if cls.name == "qc":
        return restore(np.asarray(f.eval(points)), scalar)

    values = np.ones(points.shape, dtype=complex)
    away = points != 0
    zs = points[away]
    fz = np.asarray(f.eval(zs))

    vanishing = np.abs(fz) < 1e-300
    if vanishing.any():
        point = complex(zs[np.argmax(vanishing)])
        raise error.ZeroOfF("f vanishes at z=%s." % point, point=point)

    with np.errstate(all="ignore"):
        if cls.name == "cor27":
            values[away] = (fz / zs) ** 2
        elif cls.name == "cor24":
            values[away] = (zs / fz) ** 2 * np.asarray(f.eval_deriv(zs))
        else:
            values[away] = zs * np.asarray(f.eval_deriv(zs)) / fz

    return restore(values, scalar)


class ClassQuotient(AnalyticMap):

    """
    The quotient of a subject for a class, as an evaluatable map.
    """

    def __init__(self, f, cls):
        self.f = f
        self.cls = cls

    def eval(self, z):
        return class_quotient(self.f, self.cls, z)


def check_normalized(f):
    value, slope = complex(f.eval(0)), complex(f.eval_deriv(0))
    if abs(value) > NORMALIZATION_TOLERANCE or \
            abs(slope - 1) > NORMALIZATION_TOLERANCE:
        raise error.NotNormalized("Need f(0) = 0 and f'(0) = 1, got %s and "
                                  "%s." % (value, slope))


def class_membership(f, cls, grid):
    """
    Return the Verdict of f in the class `cls' over the grid.

    A zero of f away from the origin fails the check at that point.
    """

    if cls.normalized_subject:
        check_normalized(f)

    quotient = ClassQuotient(f, cls)
    region = cls.region
    try:
        if region.base_point is None:
            verdict = check_containment(quotient, region, grid)
        else:
            verdict = check_subordination(quotient, region, grid)
    except error.ZeroOfF as err:
        log.debug("Membership in %s fails: %s" % (cls, err))
        return Verdict(False, float("-inf"), err.point, grid.size)

    log.debug("Membership in %s: %s" % (cls, verdict))
    return verdict
