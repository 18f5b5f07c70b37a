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
"""Packing Search Script."""


from linepack.catalog.packing import write_packing
from linepack.optimizer.config import SolverConfig
from linepack.optimizer.anneal import anneal
from linepack.scripts.common import (EXIT_OK, add_catalog_argument, load_frame, open_catalog,
                                     format_certificate, report_submission)


description_solve = """
Search for a packing of n lines in F^d with small coherence.

Every restart starts from random unit vectors and descends a smoothed coherence whose
smoothing parameter grows from round to round; alternating projections refine the
iterates. The best packing over all restarts is certified and compared to the best
lower bound. Options may be collected in a configuration file of `key = value` lines
whose keys are the solver option names, e.g.

  d = 5
  n = 7
  field = C
  restarts = 32
  beta_init = 50

Command-line flags override the configuration file.
"""


def parse_args_solve(subparser):
    """Parse command-line arguments for a packing search."""
    subparser.add_argument(
        "--d",
        default=None,
        type=int,
        help="ambient dimension.")

    subparser.add_argument(
        "--n",
        default=None,
        type=int,
        help="number of lines.")

    subparser.add_argument(
        "--field",
        default=None,
        choices=["C", "R"],
        help="scalar field, C (complex) or R (real). [default=C]")

    subparser.add_argument(
        "--config",
        default=None,
        type=str,
        metavar="<file>",
        help="configuration file with `key = value` lines.")

    subparser.add_argument(
        "--restarts",
        default=None,
        type=int,
        help="number of independent restarts. [default=32]")

    subparser.add_argument(
        "--seed",
        default=None,
        type=int,
        help="seed of the random starts. [default=0]")

    subparser.add_argument(
        "--workers",
        default=None,
        type=int,
        help="number of processes running restarts. [default=1]")

    subparser.add_argument(
        "--require-tight",
        default=None,
        action="store_true",
        help="search among unit-norm tight frames only.")

    subparser.add_argument(
        "--phase-q",
        default=None,
        type=int,
        help="round Gram phases of the winner to q-th roots of unity and refine.")

    subparser.add_argument(
        "--escape",
        default=None,
        action="store_true",
        help="polish every restart with orthogonal escape moves.")

    subparser.add_argument(
        "--no-ap",
        default=False,
        action="store_true",
        help="disable alternating projections.")

    subparser.add_argument(
        "--warm-start",
        default=None,
        type=str,
        metavar="<file>",
        help="packing file replacing the random start of the first restart.")

    subparser.add_argument(
        "--out",
        default=None,
        type=str,
        metavar="<file>",
        help="packing file receiving the best packing.")

    subparser.add_argument(
        "--note",
        default="solve",
        type=str,
        help="creator note used when submitting to a catalog. [default=%(default)s]")

    add_catalog_argument(subparser, "catalog directory receiving the best packing; the "
                                    "packing is not submitted when omitted.")


def _config(args):
    """Return the solver configuration of the parsed arguments."""
    overrides = {"d": args.d, "n": args.n, "field": args.field, "restarts": args.restarts,
                 "seed": args.seed, "workers": args.workers,
                 "require_tight": args.require_tight, "phase_quantize_q": args.phase_q,
                 "escape_enabled": args.escape}
    if args.no_ap:
        overrides["ap_enabled"] = False
    if args.config is not None:
        return SolverConfig.from_file(args.config, **overrides)
    if args.d is None or args.n is None:
        raise ValueError("Arguments --d and --n are required without --config!")
    options = dict((key, val) for key, val in overrides.items() if val is not None)
    return SolverConfig(**options)


def main_solve(args):
    """Run the packing search, report the winner, and store or submit it."""
    cfg = _config(args)
    warm = None
    if args.warm_start is not None:
        warm = load_frame(args.warm_start, promote=cfg.field.is_complex)
    result = anneal(cfg, warm_start=warm)

    print(format_certificate(result.certificate))
    print("restarts         : {0}".format(" ".join(
        "{0:.9f}".format(mu) for mu in result.per_restart_coherences)))
    print("iterations       : {0}".format(result.iterations_used))

    if args.out is not None:
        write_packing(result.best_frame, args.out)
    if args.catalog is not None:
        catalog = open_catalog(args.catalog)
        return report_submission(catalog.submit(result.best_frame, args.note))
    return EXIT_OK
