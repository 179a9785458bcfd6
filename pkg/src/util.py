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
Provides utility functions.
"""

import os
import sys
import json
import errno
import logging

import error
import analytic

log = logging.getLogger(__name__)


def parse_complex(text):
    """
    Parse "0.3", "0.3+0.1j" or "0.3+0.1i" into a complex number.
    """

    if isinstance(text, (int, float, complex)):
        return complex(text)
    cleaned = str(text).strip().replace(" ", "")
    if cleaned.endswith("i"):
        cleaned = cleaned[:-1] + "j"
    try:
        return complex(cleaned)
    except ValueError:
        raise error.SpecError("Cannot parse \"%s\" as a complex number." %
                              text)


def parse_float_list(text):
    """
    Parse a comma-separated list of reals such as "0.25,0.5,1".
    """

    try:
        return [float(item) for item in str(text).split(",") if item.strip()]
    except ValueError:
        raise error.SpecError("Cannot parse \"%s\" as a list of numbers." %
                              text)


def _parse_value(text):
    value = parse_complex(text)
    return value.real if value.imag == 0 else value


def _from_family_doc(doc):
    params = dict(doc.get("params") or {})
    if "coeffs" in params:
        params["coeffs"] = [complex(*a) if isinstance(a, list) else complex(a)
                            for a in params["coeffs"]]
    if isinstance(params.get("schwarz"), dict):
        params["schwarz"] = analytic.schwarz_from_json(params["schwarz"])
    for key in ("a", "alpha"):
        if isinstance(params.get(key), list):
            params[key] = complex(*params[key])
    return analytic.make_named(doc["family"], **params)


def _from_doc(doc):
    if not isinstance(doc, dict):
        raise error.SpecError("Function document must be a JSON object.")
    if "op" in doc:
        return analytic.from_json(doc)
    if "expression" in doc:
        return analytic.from_json(doc["expression"])
    if "family" in doc:
        return _from_family_doc(doc)
    raise error.SpecError("Function document needs \"op\", \"expression\" "
                          "or \"family\".")


def parse_function_spec(spec):
    """
    Return the AnalyticMap described by `spec'.

    A spec is a path to a JSON file, an inline JSON document (an expression
    tree, or {"family": ..., "params": {...}}), or "name[:key=value,...]".
    """

    spec = spec.strip()

    if os.path.isfile(spec):
        log.debug("Reading function from file \"%s\"." % spec)
        with open(spec) as fd:
            try:
                return _from_doc(json.load(fd))
            except ValueError as err:
                if isinstance(err, error.LemniscanError):
                    raise
                raise error.SpecError("Malformed JSON in \"%s\": %s" %
                                      (spec, err))

    if spec.startswith("{"):
        try:
            doc = json.loads(spec)
        except ValueError as err:
            raise error.SpecError("Malformed JSON function spec: %s" % err)
        return _from_doc(doc)

    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, sep, value = item.partition("=")
        if not sep:
            raise error.SpecError("Expected key=value, got \"%s\"." % item)
        params[key.strip()] = _parse_value(value)

    return analytic.make_named(name.strip(), **params)


def write_output(text, path=None):
    """
    Write text to the file at `path', creating its directory, or to stdout
    if no path is given.
    """

    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return None

    directory = os.path.dirname(path)
    if directory:
        try:
            os.makedirs(directory)
        except OSError as err:
            if err.errno != errno.EEXIST:
                raise

    with open(path, "w") as fd:
        fd.write(text)

    log.debug("Wrote %d characters to file \"%s\"." % (len(text), path))

    return path
