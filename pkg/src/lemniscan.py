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
Checks, verifies and plots lemniscate-starlike criteria.
"""

import os
import sys
import json
import logging
import argparse
from configparser import ConfigParser, NoSectionError

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import error
import util
import regions
import criteria
import harness
import subordination
from criteria import CriterionKind, CriterionParams

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_EVALUATION = 3
EXIT_IO = 4

DEFAULT_TRIALS = 200
DEFAULT_MULTIPLIERS = "0.25,0.5,1,2"
DEFAULT_SAMPLES = 1024


def _add_params(parser, gamma=False, k=False):
    parser.add_argument("--A", type=float, default=1.0,
                        help="Janowski parameter A with |A| <= 1.  The "
                             "default is 1.")
    parser.add_argument("--B", type=float, default=0.0,
                        help="Janowski parameter B with |B| < 1.  The "
                             "default is 0.")
    parser.add_argument("--c", type=float, default=1.0,
                        help="Lemniscate parameter c in (0, 1].  The "
                             "default is 1.")
    if gamma:
        parser.add_argument("--gamma", type=float, default=None,
                            help="Criterion parameter gamma.  The default "
                                 "is the threshold of the kind.")
    if k:
        parser.add_argument("--k", type=float, default=1.0,
                            help="Real-part threshold parameter k >= 1 "
                                 "(t23, c29).  The default is 1.")


def _add_grid(parser):
    parser.add_argument("--radii", type=str, default=None,
                        help="Comma-separated grid radii in (0, 0.99].  "
                             "The default is 0.1, ..., 0.9, 0.95, 0.99.")
    parser.add_argument("--angles", type=int,
                        default=subordination.DEFAULT_ANGLES,
                        help="Grid angles per radius (at least 64).  The "
                             "default is %d." % subordination.DEFAULT_ANGLES)


def _add_output(parser, formats, default):
    parser.add_argument("--format", type=str, choices=formats,
                        default=default,
                        help="Output format.  The default is %s." % default)
    parser.add_argument("--output", type=str, default=None,
                        help="File to write the output to.  The default is "
                             "stdout.")


def _add_trials(parser):
    parser.add_argument("--kind", type=str, required=True,
                        help="Criterion kind (available: %s)." %
                        ", ".join(kind.value for kind in CriterionKind))
    parser.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                        help="Number of random trials.  The default is %d." %
                        DEFAULT_TRIALS)
    parser.add_argument("--seed", type=int, required=True,
                        help="Seed of the trial substreams (required).")
    parser.add_argument("--workers", type=int, default=None,
                        help="Worker processes.  The default is "
                             "LEMNI_THREADS or all cores.")


def parse_cmd_args(argv=None):
    """
    Parse and return command line arguments.
    """

    desc = "Check and verify lemniscate-starlike subordination criteria."
    parser = argparse.ArgumentParser(description=desc, add_help=False,
                                     allow_abbrev=False)

    parser.add_argument("-f", "--config-file", type=str, default=None,
                        help="Path to the configuration file.")

    args, remaining_argv = parser.parse_known_args(argv)

    # First, try to load the configuration file and load its content as our
    # defaults.

    if args.config_file:
        config_file = args.config_file
    else:
        home_dir = os.path.expanduser("~")
        config_file = os.path.join(home_dir, ".lemniscanrc")

    config_parser = ConfigParser()
    # Keep "A" and "B" apart from "a" and "b".
    config_parser.optionxform = str
    file_parsed = config_parser.read([config_file])
    if file_parsed:
        try:
            defaults = dict(config_parser.items("Defaults"))
        except NoSectionError as err:
            log.warning("Could not parse config file \"%s\": %s" %
                        (config_file, err))
            defaults = {}
    else:
        defaults = {}

    parser = argparse.ArgumentParser(parents=[parser], allow_abbrev=False)

    parser.add_argument("-v", "--verbosity", type=str, default="info",
                        help="Minimum verbosity level for logging.  Available "
                             "in ascending order: debug, info, warning, "
                             "error, critical).  The default is info.")

    parser.add_argument("-o", "--logfile", type=str, default=None,
                        help="Filename to which log output should be written "
                             "to.")

    parser.add_argument("-V", "--version", action="version",
                        version="%(prog)s 2026.10.16")

    commands = parser.add_subparsers(dest="command", required=True)

    threshold = commands.add_parser("threshold",
                                    help="Print the gamma threshold.")
    _add_params(threshold)

    check = commands.add_parser("check",
                                help="Check class membership of a function.")
    check.add_argument("--f", type=str, required=True,
                       help="Function: a family such as \"moebius:a=0.5\", "
                            "a JSON expression tree or a path to one.")
    check.add_argument("--class", dest="cls", type=str, default="sl",
                       choices=subordination.CLASS_NAMES,
                       help="Class to check.  The default is sl.")
    _add_params(check)
    _add_grid(check)
    _add_output(check, ["json"], "json")

    verify = commands.add_parser("verify",
                                 help="Run the randomized harness of a kind.")
    _add_trials(verify)
    _add_params(verify, gamma=True, k=True)
    verify.add_argument("--explore", action="store_true",
                        help="Exploration mode: report, never fail.")
    _add_grid(verify)
    _add_output(verify, ["json"], "json")

    plot = commands.add_parser("plot-boundary",
                               help="Write boundary samples of a region.")
    plot.add_argument("--region", type=str, default="lemniscate",
                      choices=["lemniscate", "janowski", "theorem22"],
                      help="Region to plot.  The default is lemniscate.")
    plot.add_argument("-n", "--samples", type=int, default=DEFAULT_SAMPLES,
                      help="Number of boundary samples.  The default is %d."
                      % DEFAULT_SAMPLES)
    _add_params(plot)
    _add_output(plot, ["csv", "svg"], "csv")

    sweep = commands.add_parser("margin-sweep",
                                help="Sweep gamma multiples of the threshold.")
    _add_trials(sweep)
    _add_params(sweep, gamma=False, k=True)
    sweep.add_argument("--multipliers", type=str, default=DEFAULT_MULTIPLIERS,
                       help="Comma-separated multipliers in (0, 4].  The "
                            "default is %s." % DEFAULT_MULTIPLIERS)
    _add_grid(sweep)
    _add_output(sweep, ["csv", "json"], "csv")

    parser.set_defaults(**defaults)
    for subparser in commands.choices.values():
        subparser.set_defaults(**defaults)

    return parser.parse_args(remaining_argv)


def make_grid(args):
    if args.radii is None:
        return subordination.DiskGrid(angles=args.angles)
    return subordination.DiskGrid(tuple(util.parse_float_list(args.radii)),
                                  args.angles)


def threshold_note(A, B, c):
    """
    Name the specialization of the threshold that (A, B, c) falls under.
    """

    if A == 0 and B == 0:
        return "degenerate: A=B=0"
    if A == 1 and B == 0 and c == 1:
        return "real-part form (c23): gamma >= 4"
    if A == 1 and B == 0:
        return "form 2(1 + 1/c) (c28)"
    if c == 1:
        return "form 4(|A| + |B|)/(1 - |B|) (c22)"
    return "general form 2(|A| + |B|)(1 + c)/(c(1 - |B|))"


def cmd_threshold(args):
    """
    Print the gamma threshold and the form it specializes to.
    """

    value = criteria.gamma_threshold(args.A, args.B, args.c)
    note = threshold_note(args.A, args.B, args.c)
    util.write_output("%r\nnote: %s\n" % (value, note))
    return EXIT_OK


def cmd_check(args):
    """
    Print the membership Verdict of a function in a class.
    """

    f = util.parse_function_spec(args.f)
    cls = subordination.ClassSpec(args.cls, c=args.c, A=args.A, B=args.B)
    verdict = subordination.class_membership(f, cls, make_grid(args))

    doc = verdict.to_dict()
    doc["class"] = str(cls)
    util.write_output(json.dumps(doc, sort_keys=True, indent=2), args.output)

    if verdict.holds_at_resolution:
        log.info("f is in %s at resolution (margin %s)." %
                 (cls, verdict.min_margin))
        return EXIT_OK
    log.info("f is not in %s: margin %s at z=%s." %
             (cls, verdict.min_margin, verdict.witness))
    return EXIT_FAILED


def _criterion_params(args, kind):
    gamma = getattr(args, "gamma", None)
    params = CriterionParams(gamma=gamma, A=args.A, B=args.B, c=args.c,
                             k=args.k)
    if kind in criteria.GAMMA_KINDS and gamma is None:
        eff = criteria.effective_params(kind, params)
        gamma = criteria.gamma_threshold(eff.A, eff.B, eff.c)
        log.info("Using threshold gamma=%s for %s." % (gamma, kind.value))
        params = CriterionParams(gamma=gamma, A=args.A, B=args.B, c=args.c,
                                 k=args.k)
    return params


def cmd_verify(args):
    """
    Run the harness of a kind and print its TrialReport.
    """

    kind = CriterionKind.parse(args.kind)
    params = _criterion_params(args, kind)
    report = harness.run_kind(kind, params, args.trials, args.seed,
                              make_grid(args), explore=args.explore,
                              workers=args.workers)

    log.info("Hypothesis held in %d of %d %s trial(s)." %
             (report.hypothesis_true_count, report.trials, kind.value))
    util.write_output(report.to_json(), args.output)

    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_plot_boundary(args):
    """
    Write the boundary of a region as CSV rows or an SVG polyline.
    """

    if args.region == "lemniscate":
        region = regions.Lemniscate(args.c)
    elif args.region == "janowski":
        region = regions.JanowskiDisk(args.A, args.B)
    else:
        region = criteria.theorem22_region(args.c)

    points = regions.boundary_samples(region, args.samples)
    if args.format == "svg":
        text = regions.boundary_svg(points)
    else:
        text = regions.boundary_csv(points)
    util.write_output(text, args.output)
    return EXIT_OK


def cmd_margin_sweep(args):
    """
    Write the MarginTable of a gamma sweep.
    """

    kind = CriterionKind.parse(args.kind)
    params = CriterionParams(A=args.A, B=args.B, c=args.c, k=args.k)
    table = harness.margin_sweep(kind, params,
                                 util.parse_float_list(args.multipliers),
                                 args.trials, args.seed, make_grid(args),
                                 workers=args.workers)

    text = table.to_json() if args.format == "json" else table.to_csv()
    util.write_output(text, args.output)
    return EXIT_OK


COMMANDS = {
    "threshold": cmd_threshold,
    "check": cmd_check,
    "verify": cmd_verify,
    "plot-boundary": cmd_plot_boundary,
    "margin-sweep": cmd_margin_sweep,
}


def main(argv=None):
    """
    The command line's entry point.
    """

    args = parse_cmd_args(argv)

    log_format = "%(asctime)s %(name)s [%(levelname)s] %(message)s"
    logging.basicConfig(format=log_format,
                        level=logging.__dict__[args.verbosity.upper()],
                        filename=args.logfile)

    log.debug("Command line arguments: %s" % str(args))

    try:
        return COMMANDS[args.command](args)
    except (error.InvalidParams, error.SpecError) as err:
        log.error("Invalid input: %s" % err)
        return EXIT_BAD_INPUT
    except error.BasePointMismatch as err:
        log.error("Base point mismatch: %s" % err)
        return EXIT_FAILED
    except error.EvaluationError as err:
        log.error("Evaluation failed at z=%s: %s" % (err.point, err))
        return EXIT_EVALUATION
    except error.SelfIntersectingBoundary as err:
        log.error("Could not build region: %s" % err)
        return EXIT_EVALUATION
    except OSError as err:
        log.error("Could not write output: %s" % err)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
