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
"""Catalog Scripts: submission, AUTO propagation, leaderboard table, checks and import."""


import sys

from linepack.field import Field
from linepack.scripts.common import (EXIT_OK, EXIT_INVALID, help_field, add_catalog_argument,
                                     load_frame, open_catalog, report_submission)


description_submit = """
Submit a packing file to the catalog. It is accepted when no packing with the same
(d, n, field) exists or when it lowers the coherence by more than 1e-10; accepted
packings are propagated to fewer vectors by removing vectors (AUTO entries).

Exit codes: 0 accepted, 2 not better than the incumbent, 3 invalid, 4 I/O error.
"""

description_auto = """
Fill or improve the entries with fewer vectors by removing vectors from the best known
packing of (d, n, field), as long as this improves the leaderboard.
"""

description_table = """
Print the leaderboard sorted by field, d and n with columns d, n, field, coherence,
lower_bound, gap and creator_note.
"""

description_fsck = """
Check the catalog: every packing file re-certifies to its recorded coherence and the
coherence does not decrease when a vector is added. The exit code is 3 on problems.
"""

description_import = """
Import a local file into the catalog: a packing file, or with --sphere a text file of
points of the sphere (three coordinates per line) lifted to lines of C^2.
"""


def _add_note(subparser, default=None):
    subparser.add_argument(
        "--note",
        default=default,
        required=default is None,
        type=str,
        help="creator note: initials, construction tag or AUTO.")


def parse_args_submit(subparser):
    """Parse command-line arguments for submitting a packing file."""
    subparser.add_argument(
        "fname",
        help="packing file.")
    _add_note(subparser)
    subparser.add_argument(
        "--promote",
        default=False,
        action="store_true",
        help="submit a real packing to the complex section.")
    add_catalog_argument(subparser)


def main_submit(args):
    """Submit a packing file."""
    frame = load_frame(args.fname, promote=args.promote)
    return report_submission(open_catalog(args.catalog).submit(frame, args.note))


def parse_args_auto(subparser):
    """Parse command-line arguments for AUTO propagation."""
    subparser.add_argument(
        "--d",
        required=True,
        type=int,
        help="ambient dimension.")
    subparser.add_argument(
        "--n",
        required=True,
        type=int,
        help="number of lines of the source entry.")
    subparser.add_argument(
        "--field",
        default="C",
        choices=["C", "R"],
        help=help_field)
    add_catalog_argument(subparser)


def main_auto(args):
    """Propagate a catalog entry to fewer vectors."""
    keys = open_catalog(args.catalog).auto_propagate(args.d, args.n, Field.from_tag(args.field))
    for d, n, field in keys:
        print("AUTO entry (d={0}, n={1}, field={2})".format(d, n, field))
    if not keys:
        print("no entry improved")
    return EXIT_OK


def parse_args_table(subparser):
    """Parse command-line arguments for printing the leaderboard."""
    subparser.add_argument(
        "--format",
        default="text",
        choices=["text", "csv", "json"],
        help="output format. [default=%(default)s]")
    add_catalog_argument(subparser)


def main_table(args):
    """Print the leaderboard."""
    table = open_catalog(args.catalog).render_table(args.format)
    sys.stdout.write(table.decode("utf-8"))
    return EXIT_OK


def parse_args_fsck(subparser):
    """Parse command-line arguments for checking the catalog."""
    subparser.add_argument(
        "--repair",
        default=False,
        action="store_true",
        help="re-run AUTO propagation from every entry before checking.")
    add_catalog_argument(subparser)


def main_fsck(args):
    """Check the catalog and print the problems found."""
    problems = open_catalog(args.catalog).fsck(repair=args.repair)
    for problem in problems:
        print(problem)
    if problems:
        return EXIT_INVALID
    print("catalog is consistent")
    return EXIT_OK


def parse_args_import(subparser):
    """Parse command-line arguments for importing a local file."""
    subparser.add_argument(
        "fname",
        help="packing file, or points file with --sphere.")
    _add_note(subparser, default="import")
    subparser.add_argument(
        "--promote",
        default=False,
        action="store_true",
        help="file a real packing as a complex one.")
    subparser.add_argument(
        "--sphere",
        default=False,
        action="store_true",
        help="read points of the sphere and lift them to lines of C^2.")
    add_catalog_argument(subparser)


def main_import(args):
    """Import a local file into the catalog."""
    catalog = open_catalog(args.catalog)
    submission = catalog.import_file(args.fname, args.note, promote=args.promote,
                                     sphere=args.sphere)
    return report_submission(submission)
