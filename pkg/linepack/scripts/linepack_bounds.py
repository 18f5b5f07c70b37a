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
"""Certification, Construction and Bounds Scripts."""


import numpy as np

from linepack.field import Field
from linepack.bounds.bounds import best_lower_bound, generalized_welch, gerzon
from linepack.bounds.dominance import dominance_crossovers, bound_regimes
from linepack.catalog.packing import write_packing, read_points
from linepack.catalog.tables import bounds_table
from linepack.constructions.label import ConstructionKind, construct
from linepack.frames.certificate import certify
from linepack.outputs.plot import plot_bounds
from linepack.scripts.common import (EXIT_OK, EXIT_INVALID, help_field, add_catalog_argument,
                                     load_frame, open_catalog, format_certificate,
                                     report_submission)


description_certify = """
Certify a packing file: coherence, angle set, tightness, equiangularity, spanning,
the best lower bound on coherence and the bound the packing attains, if any.
The exit code is 3 when the packing is invalid.
"""

description_construct = """
Build a reference packing:

  simplex   d+1 equiangular vectors in F^d (needs --d)
  mub       maximal set of mutually unbiased bases in C^d, d prime (needs --d)
  naimark   Naimark complement of a tight frame (needs --input)
  conj      conjectured optimal packing of 5 vectors in C^3
  removal   remove a vector from a packing (needs --input; --index, else the best one)
  planar    n equally spaced lines in R^2 (needs --d, used as n)
  sphere    lines of C^2 lifted from points of the sphere (needs --points)
"""

description_bounds = """
Evaluate the lower bounds on coherence.

With --n, all bounds at (d, n) are reported with their applicability. With --n-max, a
CSV table over d..d-max and d < n <= n-max is written, and --plot draws the bounds of
dimension d against n.
"""


def parse_args_certify(subparser):
    """Parse command-line arguments for certifying a packing file."""
    subparser.add_argument(
        "fname",
        help="packing file.")

    subparser.add_argument(
        "--profile",
        default="exact",
        choices=["exact", "numerical"],
        help="tolerance profile: 1e-8 for exact constructions, 1e-5 for numerically "
             "optimized packings. [default=%(default)s]")

    subparser.add_argument(
        "--promote",
        default=False,
        action="store_true",
        help="certify a real packing as a complex one.")


def main_certify(args):
    """Certify a packing file and print the certificate."""
    frame = load_frame(args.fname, promote=args.promote)
    cert = certify(frame, args.profile)
    print(format_certificate(cert))
    return EXIT_OK if cert.is_valid else EXIT_INVALID


def parse_args_construct(subparser):
    """Parse command-line arguments for building a reference packing."""
    subparser.add_argument(
        "kind",
        choices=[kind.value for kind in ConstructionKind],
        help="construction.")

    subparser.add_argument(
        "--d",
        default=None,
        type=int,
        help="dimension of simplex and mub; number of lines of planar.")

    subparser.add_argument(
        "--field",
        default="C",
        choices=["C", "R"],
        help=help_field)

    subparser.add_argument(
        "--input",
        default=None,
        type=str,
        metavar="<file>",
        help="input packing file of naimark and removal.")

    subparser.add_argument(
        "--index",
        default=None,
        type=int,
        help="1-based index of the vector removed by removal.")

    subparser.add_argument(
        "--points",
        default=None,
        type=str,
        metavar="<file>",
        help="file of points of the sphere (3 coordinates per line) for sphere.")

    subparser.add_argument(
        "--out",
        default=None,
        type=str,
        metavar="<file>",
        help="packing file receiving the construction.")

    subparser.add_argument(
        "--note",
        default=None,
        type=str,
        help="creator note; by default the note of the construction, e.g. etf or mub.")

    add_catalog_argument(subparser, "catalog directory receiving the construction; it is "
                                    "not submitted when omitted.")


def main_construct(args):
    """Build a reference packing, certify it, and store or submit it."""
    frame = None if args.input is None else load_frame(args.input)
    points = None if args.points is None else read_points(args.points)
    index = None if args.index is None else args.index - 1
    packing, label = construct(args.kind, d=args.d, field=args.field, frame=frame,
                               index=index, points=points)
    if label.kind is ConstructionKind.REMOVAL:
        print("removed vector   : {0}".format(label.params[0] + 1))
    print(format_certificate(certify(packing)))
    if args.out is not None:
        write_packing(packing, args.out)
    if args.catalog is not None:
        note = label.note if args.note is None else args.note
        return report_submission(open_catalog(args.catalog).submit(packing, note))
    return EXIT_OK


def parse_args_bounds(subparser):
    """Parse command-line arguments for evaluating lower bounds."""
    subparser.add_argument(
        "--d",
        required=True,
        type=int,
        help="ambient dimension.")

    subparser.add_argument(
        "--n",
        default=None,
        type=int,
        help="number of lines.")

    subparser.add_argument(
        "--field",
        default="C",
        choices=["C", "R"],
        help=help_field)

    subparser.add_argument(
        "--n-max",
        default=None,
        type=int,
        help="largest number of lines of the table.")

    subparser.add_argument(
        "--d-max",
        default=None,
        type=int,
        help="largest dimension of the table. [default=d]")

    subparser.add_argument(
        "--plot",
        default=None,
        type=str,
        metavar="<file>",
        help="draw the bounds of dimension d against n into this file.")

    add_catalog_argument(subparser, "catalog whose best known coherences are added to the "
                                    "plot.")


def _print_report(d, n, field):
    report = best_lower_bound(d, n, field)
    print("Gerzon bound     : {0}".format(gerzon(d, field)))
    for name, (applicable, reason) in report.applicability.items():
        value = report.values().get(name)
        cell = "{0:.12g}".format(value) if value is not None else "-"
        print("{0:<17}: {1:<16} {2}".format(str(name), cell, reason))
    for t in (2, 3):
        print("{0:<17}: {1:.12g}".format("Welch t={0}".format(t), generalized_welch(d, n, t)))
    print("best             : {0:.12g} ({1})".format(report.best, report.best_name))


def main_bounds(args):
    """Print a bound report or a table of bounds, and optionally plot them."""
    field = Field.from_tag(args.field)
    if args.n is not None:
        _print_report(args.d, args.n, field)
    if args.n_max is not None:
        d_max = args.d if args.d_max is None else args.d_max
        print(bounds_table(args.d, d_max, args.n_max, field).decode("utf-8"), end="")
        crossovers = dominance_crossovers(args.d, field, args.n_max)
        print("# Bukh-Cox = Welch at n = {0}".format(", ".join(
            "{0:.6f}".format(root) for root in np.concatenate([[crossovers.coincidence],
                                                              crossovers.roots]))))
        print("# Levenstein > orthoplex from n = {0}".format(
            crossovers.levenstein_over_orthoplex))
        for name, first, last in bound_regimes(args.d, field, args.n_max):
            print("# {0}: {1}..{2}".format(name, first, last))
    if args.plot is not None:
        n_max = args.n_max if args.n_max is not None else max(gerzon(args.d, field) + 6,
                                                              args.d + 2)
        catalog = None if args.catalog is None else open_catalog(args.catalog)
        plot_bounds(args.d, field, n_max, args.plot, catalog=catalog)
    if args.n is None and args.n_max is None and args.plot is None:
        raise ValueError("One of --n, --n-max or --plot is required!")
    return EXIT_OK
