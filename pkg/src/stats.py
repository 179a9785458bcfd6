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
Provides functions to keep track of harness statistics.
"""

import logging
from datetime import datetime

log = logging.getLogger(__name__)


class TrialStatistics(object):

    """
    Keep track of a harness run.
    """

    def __init__(self, kind, total_trials):
        """
        Initialise a TrialStatistics object.
        """

        self.kind = kind
        self.start_time = datetime.now()
        self.total_trials = total_trials
        self.trials_run = 0
        self.hypothesis_true = 0
        self.violations = 0
        self.aborted = 0

    def update(self, outcome):
        """
        Update statistics with the given trial outcome.
        """

        self.trials_run += 1
        if outcome.error is not None:
            self.aborted += 1
            return
        if outcome.hypothesis.holds_at_resolution:
            self.hypothesis_true += 1
            if outcome.conclusion is not None and \
                    not outcome.conclusion.holds_at_resolution:
                self.violations += 1

    def elapsed(self):
        return (datetime.now() - self.start_time).total_seconds()

    def print_progress(self, sampling=50):
        """
        Print statistics about the ongoing run.
        """

        if (sampling == 0) or (self.trials_run % sampling):
            return

        if self.total_trials == 0:
            return

        percent_done = (self.trials_run / float(self.total_trials)) * 100

        log.info("Ran %d out of %d trials, so we are %.2f%% done." %
                 (self.trials_run, self.total_trials, percent_done))

    def __str__(self):
        """
        Print the gathered statistics.
        """

        percent = 0
        if self.trials_run > 0:
            percent = (self.hypothesis_true / float(self.trials_run)) * 100

        return ("Ran %d %s trial(s) in %s: %d hypothesis-true (%.2f%%), "
                "%d violation(s), %d aborted." %
                (self.trials_run,
                 self.kind,
                 str(datetime.now() - self.start_time),
                 self.hypothesis_true,
                 percent,
                 self.violations,
                 self.aborted))
