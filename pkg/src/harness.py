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
Randomized verification of the criteria.

t21 is run forward: p is constructed from a random Schwarz map so that its
hypothesis holds, and only the conclusion is checked.  Every other kind is
run conditionally over random subjects.  A violation is a trial whose
hypothesis holds at resolution while its conclusion does not; each one is
reported with a certificate that can be re-evaluated on its own.
"""

import io
import os
import csv
import json
import math
import logging
import multiprocessing
from dataclasses import dataclass, field

import numpy as np

import error
import regions
import analytic
import criteria
import quadrature
import subordination
from criteria import CriterionKind, CriterionParams
from stats import TrialStatistics

log = logging.getLogger(__name__)

# Worker processes for trial evaluation.  Can be overridden via the
# LEMNI_THREADS environment variable.
WORKERS = int(os.environ.get("LEMNI_THREADS", "0")) or os.cpu_count() or 1

CERTIFICATE_TOLERANCE = 1e-10

# Violations of these kinds are recorded as findings and never fail a run.
FINDING_KINDS = frozenset((CriterionKind.T23,))

SCHWARZ_MIN_SCALE = 0.3
SCHWARZ_ZERO_RADIUS = 0.9
MAX_SCHWARZ_ZEROS = 3
P_PERTURBATION = 0.2
F_PERTURBATION = 0.1
FAMILY_PARAM_RADIUS = 0.15


def substream(seed, trial):
    """
    Return the random generator of one trial.  It depends on nothing but
    (seed, trial), so scheduling cannot change results.
    """

    return np.random.default_rng([int(seed), int(trial)])


def _uniform_disk(rng, radius, size=None):
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, size))
    return r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, size))


def _uniform_phase(rng):
    return complex(np.exp(2j * np.pi * rng.uniform()))


def random_schwarz(rng):
    """
    Draw a Schwarz map: scale uniform in [0.3, 1], a random phase and 0-3
    zeros uniform in the disk of radius 0.9.
    """

    scale = rng.uniform(SCHWARZ_MIN_SCALE, 1.0)
    phase = _uniform_phase(rng)
    count = int(rng.integers(0, MAX_SCHWARZ_ZEROS + 1))
    zeros = _uniform_disk(rng, SCHWARZ_ZERO_RADIUS, count)
    return analytic.make_schwarz(scale, phase, zeros)


def realized_F(omega, A, B, z):
    """
    Return F = (1 + A w) / (1 + B w) with w = omega(z).
    """

    w = np.asarray(omega.eval(z))
    return (1.0 + A * w) / (1.0 + B * w)


def solve_p_from_F(omega, A, B, gamma, z):
    """
    Return p(z) = exp((1/gamma) int_0^z (F(t) - 1) / t dt) for
    F = (1 + A omega) / (1 + B omega), so that 1 + gamma z p'/p = F.

    The integral runs along the segment [0, z] as int_0^1 (F(sz) - 1)/s ds
    with (F(sz) - 1)/s = (A - B) z (omega(sz)/sz) / (1 + B omega(sz)).
    """

    if not gamma > 0:
        raise error.InvalidParams("gamma must be positive, got %s." % gamma)

    points, scalar = analytic.as_points(z)
    flat = points.ravel()

    def integrand(s):
        w = np.outer(s, flat)
        with np.errstate(all="ignore"):
            return (A - B) * flat * np.asarray(omega.over_z.eval(w)) / \
                (1.0 + B * np.asarray(omega.eval(w)))

    integral = quadrature.adaptive_gauss_legendre(integrand, 0.0, 1.0)
    p = np.exp(np.asarray(integral) / gamma).reshape(points.shape)
    return analytic.restore(p, scalar)


def _complex_pair(value):
    value = complex(value)
    return [value.real, value.imag]


def draw_f_subject(rng, trial):
    """
    Draw a normalized f.  Trial 0 is f(z) = z; the rest cycle through a
    random quintic with |a_j| <= 0.1, exp_scaled, moebius and koebe_like.
    """

    if trial == 0:
        return analytic.make_named("identity"), {"family": "identity",
                                                  "params": {}}

    slot = trial % 4
    if slot == 1:
        coeffs = (0j, 1 + 0j) + tuple(_uniform_disk(rng, F_PERTURBATION, 4))
        subject = analytic.make_named("poly", coeffs=coeffs)
        params = {"coeffs": [_complex_pair(a) for a in coeffs]}
        return subject, {"family": "poly", "params": params}

    if slot in (2, 3):
        value = FAMILY_PARAM_RADIUS * rng.uniform() * _uniform_phase(rng)
        if slot == 2:
            family, key = "exp_scaled", "alpha"
        else:
            family, key = "moebius", "a"
        subject = analytic.make_named(family, **{key: value})
        return subject, {"family": family, "params": {key: _complex_pair(value)}}

    beta = rng.uniform(0.05, 0.5)
    subject = analytic.make_named("koebe_like", beta=beta)
    return subject, {"family": "koebe_like", "params": {"beta": beta}}


def draw_p_subject(rng, trial, c):
    """
    Draw a p with p(0) = 1.  Trial 0 is q_c; odd trials are dilations
    q_c(e^{i phi} rho z), rho in [0.3, 0.95]; even trials are
    1 + sum e_j z^j with |e_j| <= 0.2.
    """

    if trial == 0:
        return analytic.q_c_map(c), {"family": "q_c_composed",
                                     "params": {"c": c}}

    if trial % 2:
        scale = rng.uniform(0.3, 0.95)
        omega = analytic.make_schwarz(scale, _uniform_phase(rng))
        subject = analytic.make_named("q_c_composed", c=c, schwarz=omega)
        return subject, {"family": "q_c_composed",
                         "params": {"c": c, "schwarz": omega.to_json()}}

    coeffs = (1 + 0j,) + tuple(_uniform_disk(rng, P_PERTURBATION, 4))
    subject = analytic.Poly(coeffs)
    return subject, {"family": "poly",
                     "params": {"coeffs": [_complex_pair(a) for a in coeffs]}}


@dataclass
class Certificate(object):

    """
    A hypothesis-true trial whose conclusion fails at `witness' with
    `margin'.
    """

    kind: str
    trial: int
    subject: dict
    witness: complex
    margin: float
    params: dict

    def recompute_margin(self):
        """
        Re-evaluate the conclusion margin at the witness from scratch.
        """

        kind = CriterionKind.parse(self.kind)
        params = CriterionParams(**self.params)
        eff = criteria.effective_params(kind, params)

        if "schwarz" in self.subject and kind == CriterionKind.T21:
            omega = analytic.schwarz_from_json(self.subject["schwarz"])
            p = solve_p_from_F(omega, eff.A, eff.B, eff.gamma, self.witness)
            return regions.Lemniscate(eff.c).margin(p)

        f = analytic.from_json(self.subject["expression"])
        cls = criteria.conclusion_class(kind, params)
        try:
            value = subordination.class_quotient(f, cls, self.witness)
        except error.ZeroOfF:
            return float("-inf")
        return cls.region.margin(value)

    def reverify(self, tolerance=CERTIFICATE_TOLERANCE):
        """
        True if the standalone margin is nonpositive and agrees with the
        recorded one to `tolerance', relative for margins beyond one.
        """

        margin = self.recompute_margin()
        if margin > 0:
            return False
        if math.isinf(margin) or math.isinf(self.margin):
            return margin == self.margin
        return abs(margin - self.margin) <= \
            tolerance * max(1.0, abs(self.margin))

    def to_dict(self):
        return {"kind": self.kind,
                "trial": self.trial,
                "subject": self.subject,
                "witness": {"re": self.witness.real, "im": self.witness.imag},
                "margin": self.margin,
                "params": self.params}


@dataclass
class TrialOutcome(object):

    trial: int
    subject: dict
    hypothesis: subordination.Verdict = None
    conclusion: subordination.Verdict = None
    error: str = None


@dataclass
class TrialReport(object):

    """
    Summary of a harness run.  Everything but wall_clock_seconds is a
    function of (kind, params, trials, seed, grid).
    """

    kind: str
    seed: int
    trials: int
    mode: str
    params: dict
    hypothesis_true_count: int = 0
    conclusion_violations: list = field(default_factory=list)
    min_conclusion_margin: float = None
    argmin_trial: int = None
    aborted: list = field(default_factory=list)
    wall_clock_seconds: float = 0.0

    @property
    def findings_only(self):
        return CriterionKind.parse(self.kind) in FINDING_KINDS

    @property
    def passed(self):
        if self.mode == "exploration" or self.findings_only:
            return True
        return not self.conclusion_violations

    def to_dict(self, timing=True):
        doc = {"kind": self.kind,
               "seed": self.seed,
               "trials": self.trials,
               "mode": self.mode,
               "params": self.params,
               "hypothesis_true_count": self.hypothesis_true_count,
               "conclusion_violations": [cert.to_dict() for cert in
                                         self.conclusion_violations],
               "min_conclusion_margin": self.min_conclusion_margin,
               "argmin_trial": self.argmin_trial,
               "aborted": self.aborted,
               "passed": self.passed}
        if timing:
            doc["wall_clock_seconds"] = self.wall_clock_seconds
        return doc

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2)


def _forward_trial(job):
    params, grid, seed, trial = job
    rng = substream(seed, trial)
    omega = random_schwarz(rng)
    outcome = TrialOutcome(trial, {"schwarz": omega.to_json()})
    points = grid.points

    try:
        F = realized_F(omega, params.A, params.B, points)
        outcome.hypothesis = subordination.verdict_from_values(
            points, F, regions.JanowskiDisk(params.A, params.B))
        p = solve_p_from_F(omega, params.A, params.B, params.gamma, points)
        outcome.conclusion = subordination.verdict_from_values(
            points, p, regions.Lemniscate(params.c))
    except error.EvaluationError as err:
        outcome.error = str(err)

    return outcome


def _conditional_trial(job):
    kind, params, grid, seed, trial = job
    rng = substream(seed, trial)
    if kind in criteria.P_KINDS:
        subject, description = draw_p_subject(rng, trial, params.c)
    else:
        subject, description = draw_f_subject(rng, trial)
    description["expression"] = subject.to_json()
    outcome = TrialOutcome(trial, description)

    try:
        outcome.hypothesis, outcome.conclusion = \
            criteria.check_implication(kind, subject, params, grid)
    except error.EvaluationError as err:
        outcome.error = str(err)

    return outcome


def _map_trials(func, jobs, workers):
    """
    Yield func(job) for every job, in job order.
    """

    if workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            yield func(job)
        return

    with multiprocessing.Pool(min(workers, len(jobs))) as pool:
        for outcome in pool.imap(func, jobs):
            yield outcome


def _mode(kind, params, explore):
    if explore:
        return "exploration"
    if not criteria.meets_threshold(kind, params):
        raise error.InvalidParams("gamma=%s is below the threshold of %s; "
                                  "use exploration mode." %
                                  (params.gamma, kind.value))
    return "assertion"


def _report_params(kind, params):
    doc = params.to_dict()
    if kind in criteria.THRESHOLD_KINDS:
        doc["hypothesis_threshold"] = criteria.real_part_threshold(
            criteria.effective_params(kind, params))
    return doc


def _collect(kind, params, outcomes, report):
    stats = TrialStatistics(kind.value, report.trials)

    for outcome in outcomes:
        stats.update(outcome)
        stats.print_progress()

        if outcome.error is not None:
            log.warning("Trial %d aborted: %s" % (outcome.trial, outcome.error))
            report.aborted.append({"trial": outcome.trial,
                                   "error": outcome.error})
            continue

        if not outcome.hypothesis.holds_at_resolution:
            continue
        report.hypothesis_true_count += 1

        conclusion = outcome.conclusion
        if conclusion is None:
            continue
        if report.min_conclusion_margin is None or \
                conclusion.min_margin < report.min_conclusion_margin:
            report.min_conclusion_margin = conclusion.min_margin
            report.argmin_trial = outcome.trial

        if not conclusion.holds_at_resolution:
            cert = Certificate(kind.value, outcome.trial, outcome.subject,
                               conclusion.witness, conclusion.min_margin,
                               params.to_dict())
            report.conclusion_violations.append(cert)
            level = logging.CRITICAL if report.mode == "assertion" and \
                kind not in FINDING_KINDS else logging.WARNING
            log.log(level, "Trial %d of %s violates its conclusion at "
                    "z=%s with margin %s." %
                    (outcome.trial, kind.value, conclusion.witness,
                     conclusion.min_margin))

    report.wall_clock_seconds = stats.elapsed()
    log.info(str(stats))
    return report


def run_forward_t21(A, B, c, gamma, n_trials, seed, grid=None,
                    explore=False, workers=None):
    """
    Run the forward harness of t21: each trial builds p from a random
    Schwarz map and checks p against the lemniscate.
    """

    kind = CriterionKind.T21
    params = CriterionParams(gamma=gamma, A=A, B=B, c=c)
    grid = grid or subordination.default_grid()
    report = TrialReport(kind.value, seed, n_trials,
                         _mode(kind, params, explore),
                         _report_params(kind, params))

    log.info("Running %d forward %s trial(s) with seed %d in %s mode." %
             (n_trials, kind.value, seed, report.mode))
    jobs = [(params, grid, seed, trial) for trial in range(n_trials)]
    outcomes = _map_trials(_forward_trial, jobs, workers or WORKERS)
    return _collect(kind, params, outcomes, report)


def run_conditional(kind, params, n_trials, seed, grid=None, explore=False,
                    workers=None):
    """
    Run the conditional harness of a kind over random subjects.
    """

    grid = grid or subordination.default_grid()
    if kind in criteria.GAMMA_KINDS and params.gamma is None:
        raise error.InvalidParams("Kind %s needs gamma." % kind.value)
    report = TrialReport(kind.value, seed, n_trials,
                         _mode(kind, params, explore),
                         _report_params(kind, params))

    log.info("Running %d conditional %s trial(s) with seed %d in %s mode." %
             (n_trials, kind.value, seed, report.mode))
    jobs = [(kind, params, grid, seed, trial) for trial in range(n_trials)]
    outcomes = _map_trials(_conditional_trial, jobs, workers or WORKERS)
    return _collect(kind, params, outcomes, report)


def run_kind(kind, params, n_trials, seed, grid=None, explore=False,
             workers=None):
    """
    Run the harness that fits the kind.
    """

    if kind == CriterionKind.T21:
        return run_forward_t21(params.A, params.B, params.c, params.gamma,
                               n_trials, seed, grid, explore, workers)
    return run_conditional(kind, params, n_trials, seed, grid, explore,
                           workers)


@dataclass(frozen=True)
class MarginRow(object):

    multiplier: float
    gamma: float
    min_margin: float
    argmin_id: int


@dataclass
class MarginTable(object):

    """
    Minimum conclusion margins over a sweep of gamma multipliers.
    """

    kind: str
    seed: int
    trials: int
    rows: list = field(default_factory=list)

    def to_dict(self):
        return {"kind": self.kind,
                "seed": self.seed,
                "trials": self.trials,
                "rows": [{"multiplier": row.multiplier,
                          "gamma": row.gamma,
                          "min_margin": row.min_margin,
                          "argmin_id": row.argmin_id} for row in self.rows]}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["multiplier", "gamma", "min_margin", "argmin_id"])
        for row in self.rows:
            writer.writerow([repr(row.multiplier), repr(row.gamma),
                             "" if row.min_margin is None
                             else repr(row.min_margin),
                             "" if row.argmin_id is None else row.argmin_id])
        return buf.getvalue()


def margin_sweep(kind, params, multipliers, n_trials, seed, grid=None,
                 workers=None):
    """
    For each multiplier m, run the kind's harness at gamma = m * threshold
    in exploration mode and record the minimum conclusion margin.
    """

    if kind not in criteria.GAMMA_KINDS:
        raise error.InvalidParams("Kind %s has no gamma to sweep." %
                                  kind.value)
    if criteria.conclusion_class(kind, params) is None:
        raise error.InvalidParams("Kind %s has no checked conclusion to "
                                  "sweep." % kind.value)
    multipliers = sorted(float(m) for m in multipliers)
    if not multipliers or any(not 0.0 < m <= 4.0 for m in multipliers):
        raise error.InvalidParams("Multipliers must lie in (0, 4], got %s." %
                                  multipliers)

    eff = criteria.effective_params(kind, params)
    threshold = criteria.gamma_threshold(eff.A, eff.B, eff.c)
    table = MarginTable(kind.value, seed, n_trials)

    for m in multipliers:
        gamma = m * threshold
        log.info("Sweeping %s at %.2f x threshold (gamma=%s)." %
                 (kind.value, m, gamma))
        swept = CriterionParams(gamma=gamma, A=params.A, B=params.B,
                                c=params.c, k=params.k)
        report = run_kind(kind, swept, n_trials, seed, grid, explore=True,
                          workers=workers)
        table.rows.append(MarginRow(m, gamma, report.min_conclusion_margin,
                                    report.argmin_trial))

    return table
