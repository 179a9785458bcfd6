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
Target regions of the subordinations and their membership margins.

A margin is positive strictly inside a region, zero on its boundary and
negative outside.  All margins are evaluated elementwise on numpy arrays.
"""

import io
import csv
import logging
import functools
from dataclasses import dataclass

import numpy as np

import error
from analytic import as_points, restore

log = logging.getLogger(__name__)

MIN_BOUNDARY_SAMPLES = 16
MIN_POLYGON_VERTICES = 512
DEGENERATE_DENOMINATOR = 1e-12
CONVEXITY_TOLERANCE = 1e-12

# Query points are processed in blocks of this size against polygon edges.
POLYGON_CHUNK = 512


def q_eval(c, z):
    """
    Return q_c(z) = sqrt(1 + c z) on the principal branch.

    At c = 1, z = -1 this is the cusp of the lemniscate and the value is 0.
    """

    if not 0.0 < c <= 1.0:
        raise error.InvalidParams("c must lie in (0, 1], got %s." % c)
    points, scalar = as_points(z)
    return restore(np.sqrt(1.0 + c * points), scalar)


class TargetRegion(object):

    """
    A region with a signed membership margin.  `base_point' is the image of
    0 under the region's univalent parametrization, or None for regions
    used for containment only.
    """

    base_point = None

    def margin(self, w):
        """
        Return the signed margin of a point or an array of points.
        """

        points, scalar = as_points(w)
        with np.errstate(all="ignore"):
            margins = self._margin(points).astype(float)
        margins[np.isnan(margins)] = -np.inf
        return float(margins.flat[0]) if scalar else margins

    def contains_with_margin(self, w):
        """
        Return (inside, margin) for a single point.
        """

        margin = self.margin(complex(w))
        return margin > 0, margin


@dataclass(frozen=True)
class Lemniscate(TargetRegion):

    """
    Omega_c = {w : Re w > 0, |w^2 - 1| < c}, the image of the disk under q_c.
    """

    c: float

    base_point = 1 + 0j

    def __post_init__(self):
        if not 0.0 < self.c <= 1.0:
            raise error.InvalidParams("Lemniscate needs 0 < c <= 1, got %s." %
                                      self.c)

    def _margin(self, w):
        return np.minimum(w.real, self.c - np.abs(w * w - 1.0))


@dataclass(frozen=True)
class JanowskiDisk(TargetRegion):

    """
    The image of the disk under (1 + Az) / (1 + Bz), i.e. |w - 1| < |A - Bw|.
    """

    A: float
    B: float

    base_point = 1 + 0j

    def __post_init__(self):
        if abs(self.A) > 1.0 or abs(self.B) >= 1.0:
            raise error.InvalidParams("Janowski disk needs |A| <= 1 and "
                                      "|B| < 1, got A=%s, B=%s." %
                                      (self.A, self.B))
        if self.A == self.B:
            raise error.InvalidParams("Janowski disk needs A != B.")

    def _margin(self, w):
        scale = np.abs(self.A - self.B * w)
        degenerate = scale < DEGENERATE_DENOMINATOR
        margins = (scale - np.abs(w - 1.0)) / np.where(degenerate, 1.0, scale)
        return np.where(degenerate, -np.inf, margins)

    @property
    def center(self):
        return (1.0 - self.A * self.B) / (1.0 - self.B * self.B)

    @property
    def radius(self):
        return (self.A - self.B) / (1.0 - self.B * self.B)


@dataclass(frozen=True)
class HalfPlaneShifted(TargetRegion):

    """
    Re w > threshold.  Containment only: there is no base point.
    """

    threshold: float

    def _margin(self, w):
        return w.real - self.threshold


@dataclass(frozen=True)
class Disk(TargetRegion):

    """
    |w - center| < radius, based at its center.
    """

    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0.0:
            raise error.InvalidParams("Disk radius must be positive.")

    @property
    def base_point(self):
        return complex(self.center)

    def _margin(self, w):
        return self.radius - np.abs(w - self.center)


def polygon_winding_number(vertices, w):
    """
    Return the winding number of the closed polygon `vertices' around every
    point of `w'.

    Crossing rule: an upward edge with the point on its left counts +1, a
    downward edge with the point on its right counts -1.
    """

    v = np.asarray(vertices, dtype=complex)
    points, scalar = as_points(w)
    flat = points.ravel()
    x0, y0 = v.real, v.imag
    x1, y1 = np.roll(x0, -1), np.roll(y0, -1)

    winding = np.empty(flat.shape, dtype=int)
    for start in range(0, flat.size, POLYGON_CHUNK):
        block = flat[start:start + POLYGON_CHUNK]
        px, py = block.real[:, None], block.imag[:, None]
        is_left = (x1 - x0) * (py - y0) - (px - x0) * (y1 - y0)
        upward = (y0 <= py) & (y1 > py) & (is_left > 0)
        downward = (y0 > py) & (y1 <= py) & (is_left < 0)
        winding[start:start + block.size] = upward.sum(axis=1) - \
            downward.sum(axis=1)

    winding = winding.reshape(points.shape)
    return int(winding.flat[0]) if scalar else winding


def polygon_distance(vertices, w):
    """
    Return the distance from every point of `w' to the closed polygon.
    """

    v = np.asarray(vertices, dtype=complex)
    points, scalar = as_points(w)
    flat = points.ravel()
    start_v = v
    edge = np.roll(v, -1) - v
    length2 = np.maximum(np.abs(edge) ** 2, 1e-300)

    distance = np.empty(flat.shape, dtype=float)
    for start in range(0, flat.size, POLYGON_CHUNK):
        block = flat[start:start + POLYGON_CHUNK][:, None]
        t = np.clip(((block - start_v) * edge.conjugate()).real / length2,
                    0.0, 1.0)
        gaps = np.abs(block - (start_v + t * edge))
        distance[start:start + gaps.shape[0]] = gaps.min(axis=1)

    distance = distance.reshape(points.shape)
    return float(distance.flat[0]) if scalar else distance


@dataclass(frozen=True, eq=False)
class BoundaryPolygonRegion(TargetRegion):

    """
    The interior of a Jordan polygon through boundary samples of a univalent
    map, based at the map's value at the origin.  The map and radius are
    kept so the boundary can be resampled.
    """

    vertices: tuple
    base: complex
    source: object = None
    radius: float = None

    @property
    def base_point(self):
        return self.base

    @functools.cached_property
    def _vertex_array(self):
        return np.asarray(self.vertices, dtype=complex)

    def _margin(self, w):
        winding = polygon_winding_number(self._vertex_array, w)
        distance = polygon_distance(self._vertex_array, w)
        return np.where(winding == 1, distance, -distance)


def _segments_cross(v):
    """
    Return the first pair of non-adjacent crossing edges, or None.
    """

    a = v
    b = np.roll(v, -1)
    n = len(v)

    def cross(u, w):
        return (u.conjugate() * w).imag

    for i in range(n - 2):
        j = np.arange(i + 2, n if i > 0 else n - 1)
        if j.size == 0:
            continue
        o1 = cross(b[i] - a[i], a[j] - a[i])
        o2 = cross(b[i] - a[i], b[j] - a[i])
        o3 = cross(b[j] - a[j], a[i] - a[j])
        o4 = cross(b[j] - a[j], b[i] - a[j])
        hits = (o1 * o2 < 0) & (o3 * o4 < 0)
        if hits.any():
            return i, int(j[np.argmax(hits)])
    return None


def region_from_univalent_boundary(g, r, n=MIN_POLYGON_VERTICES):
    """
    Return the polygon region through g(r e^{i theta_j}), j = 0..n-1.

    The caller is responsible for g being univalent on |z| <= r; a boundary
    that winds around g(0) other than once, or that crosses itself, is
    rejected.
    """

    if not 0.0 < r < 1.0:
        raise error.InvalidParams("Radius must lie in (0, 1), got %s." % r)
    if n < MIN_POLYGON_VERTICES:
        raise error.TooFewSamples("Polygon regions need at least %d "
                                  "vertices, got %d." %
                                  (MIN_POLYGON_VERTICES, n))

    theta = 2.0 * np.pi * np.arange(n) / n
    vertices = g.eval(r * np.exp(1j * theta))
    base = complex(g.eval(0))

    winding = polygon_winding_number(vertices, base)
    if winding != 1:
        raise error.SelfIntersectingBoundary("Boundary winds %d time(s) "
                                             "around its base point." %
                                             winding)
    crossing = _segments_cross(vertices)
    if crossing is not None:
        raise error.SelfIntersectingBoundary("Boundary edges %d and %d "
                                             "intersect." % crossing)

    log.debug("Built %d-vertex boundary polygon at r=%s based at %s." %
              (n, r, base))
    return BoundaryPolygonRegion(tuple(complex(w) for w in vertices), base,
                                 g, r)


def boundary_angles(n):
    return 2.0 * np.pi * np.arange(n) / n


def boundary_samples(region, n):
    """
    Return n counterclockwise boundary points of the region.

    Polygon regions resample their map; without one, n must equal the
    vertex count.
    """

    if n < MIN_BOUNDARY_SAMPLES:
        raise error.TooFewSamples("Need at least %d boundary samples, got %d."
                                  % (MIN_BOUNDARY_SAMPLES, n))

    if isinstance(region, Lemniscate):
        return q_eval(region.c, np.exp(1j * boundary_angles(n)))
    if isinstance(region, JanowskiDisk):
        if not region.B < region.A:
            raise error.InvalidParams("Janowski boundary needs B < A.")
        return region.center + region.radius * np.exp(1j * boundary_angles(n))
    if isinstance(region, BoundaryPolygonRegion):
        if region.source is not None:
            return region.source.eval(
                region.radius * np.exp(1j * boundary_angles(n)))
        if n != len(region.vertices):
            raise error.InvalidParams("Polygon has %d vertices, cannot "
                                      "sample %d." % (len(region.vertices), n))
        return np.array(region._vertex_array)

    raise error.InvalidParams("No boundary parametrization for %s." %
                              type(region).__name__)


def is_convex_boundary(points):
    """
    Return True if every turn of the closed counterclockwise polyline is a
    left turn, up to CONVEXITY_TOLERANCE.
    """

    w = np.asarray(points, dtype=complex)
    edges = np.roll(w, -1) - w
    turns = (edges.conjugate() * np.roll(edges, -1)).imag
    return bool(np.all(turns >= -CONVEXITY_TOLERANCE))


def boundary_csv(points):
    """
    Return CSV text with a "theta,re,im" header and one row per point.
    """

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["theta", "re", "im"])
    for theta, w in zip(boundary_angles(len(points)), points):
        writer.writerow([repr(float(theta)), repr(float(w.real)),
                         repr(float(w.imag))])
    return buf.getvalue()


def boundary_svg(points):
    """
    Return an SVG document drawing the closed boundary as a polyline.

    The y axis is flipped so that the picture has the usual orientation.
    """

    w = np.asarray(points, dtype=complex)
    xs, ys = w.real, -w.imag
    width = max(float(xs.max() - xs.min()), 1e-9)
    height = max(float(ys.max() - ys.min()), 1e-9)
    pad = 0.05 * max(width, height)
    stroke = 0.002 * max(width, height)

    coords = " ".join("%.9g,%.9g" % (x, y)
                      for x, y in zip(np.append(xs, xs[0]),
                                      np.append(ys, ys[0])))
    return ("<svg xmlns=\"http://www.w3.org/2000/svg\" "
            "viewBox=\"%.9g %.9g %.9g %.9g\">\n"
            "  <polyline fill=\"none\" stroke=\"black\" "
            "stroke-width=\"%.9g\" points=\"%s\"/>\n"
            "</svg>\n" %
            (xs.min() - pad, ys.min() - pad, width + 2 * pad,
             height + 2 * pad, stroke, coords))
