# -*- coding: utf-8 -*-
# LinePack is a toolkit for finding, certifying and cataloguing
# packings of lines in real and complex projective space.
#
# Copyright (C) 2019-2026 The LinePack Development Team
#
# This file is part of LinePack.
#
# LinePack is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.
#
# LinePack is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, see <http://www.gnu.org/licenses/>
#
# --
"""Common utility for scripts."""


import sys

from linepack.field import Field
from linepack.catalog.catalog import Catalog, Decision
from linepack.catalog.packing import read_packing


__all__ = ["EXIT_OK", "EXIT_WORSE", "EXIT_INVALID", "EXIT_IO", "help_catalog", "help_field",
           "add_catalog_argument", "load_frame", "open_catalog", "format_certificate",
           "report_submission"]


EXIT_OK = 0
EXIT_WORSE = 2
EXIT_INVALID = 3
EXIT_IO = 4


help_catalog = """
catalog directory. By default, the LINEPACK_CATALOG environment variable or
./catalog is used.
"""

help_field = "scalar field, C (complex) or R (real). [default=%(default)s]"


def add_catalog_argument(subparser, default_help=help_catalog):
    """Add the ``--catalog`` option to a sub-command parser."""
    subparser.add_argument(
        "--catalog",
        default=None,
        type=str,
        metavar="<dir>",
        help=default_help)


def load_frame(fname, promote=False):
    """Return the packing stored in `fname`, filed as complex when `promote` is set."""
    frame = read_packing(fname)
    if promote:
        frame = frame.as_complex()
    return frame


def open_catalog(root):
    """Return the catalog at `root` (the default location when None)."""
    return Catalog(root)


def format_certificate(cert):
    """Return a human readable summary of a certificate."""
    lines = ["d, n, field      : {0}, {1}, {2}".format(cert.d, cert.n, Field.from_tag(cert.field))]
    if cert.coherence is None:
        lines.append("coherence        : undefined")
    else:
        lines.append("coherence        : {0:.17g}".format(cert.coherence))
        lines.append("lower bound      : {0:.17g} (gap {1:.3e})".format(cert.lower_bound,
                                                                       cert.gap))
        lines.append("angle set        : {0}".format(", ".join(
            "{0:.12g} (x{1})".format(v, c) for v, c in zip(cert.angle_profile.values,
                                                         cert.angle_profile.counts))))
    lines.append("tight            : {0} (residual {1:.3e})".format(cert.is_tight,
                                                                    cert.tightness_residual))
    lines.append("equiangular      : {0}".format(cert.is_equiangular))
    lines.append("spans            : {0}".format(cert.spans))
    lines.append("saturated bound  : {0}".format(cert.saturated_bound))
    for diagnostic in cert.diagnostics:
        lines.append("diagnostic       : {0}".format(diagnostic))
    return "\n".join(lines)


def report_submission(submission, stream=sys.stdout):
    """Print a submission outcome and return the matching exit code."""
    print("{0}: {1}".format(submission.decision, submission.reason), file=stream)
    for d, n, field in submission.propagated:
        print("AUTO entry (d={0}, n={1}, field={2})".format(d, n, field), file=stream)
    if submission.decision is Decision.ACCEPTED:
        return EXIT_OK
    if submission.decision is Decision.REJECTED_WORSE:
        return EXIT_WORSE
    return EXIT_INVALID
