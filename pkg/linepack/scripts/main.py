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
# pragma pylint: disable=invalid-name
"""Entry Point Main Script."""

import sys
import logging
import argparse

from linepack import __version__
from linepack.catalog.catalog import CatalogLockedError
from linepack.scripts.common import EXIT_INVALID, EXIT_IO
from linepack.scripts.linepack_solve import main_solve, parse_args_solve, description_solve
from linepack.scripts.linepack_bounds import (
    main_certify,
    main_construct,
    main_bounds,
    parse_args_certify,
    parse_args_construct,
    parse_args_bounds,
    description_certify,
    description_construct,
    description_bounds,
)
from linepack.scripts.linepack_catalog import (
    main_submit,
    main_auto,
    main_table,
    main_fsck,
    main_import,
    parse_args_submit,
    parse_args_auto,
    parse_args_table,
    parse_args_fsck,
    parse_args_import,
    description_submit,
    description_auto,
    description_table,
    description_fsck,
    description_import,
)

from argparse import RawDescriptionHelpFormatter


__all__ = ["main"]


# basic switch dictionary for storing all main callable function and subparser
SCRIPT_MAIN = {
    "solve": main_solve,
    "certify": main_certify,
    "bounds": main_bounds,
    "construct": main_construct,
    "submit": main_submit,
    "auto": main_auto,
    "table": main_table,
    "fsck": main_fsck,
    "import": main_import,
}

# command -> (help, description, argument parser)
SCRIPT_ARGS = {
    "solve": ("Search for a low-coherence packing.", description_solve, parse_args_solve),
    "certify": ("Certify a packing file.", description_certify, parse_args_certify),
    "bounds": ("Evaluate lower bounds on coherence.", description_bounds, parse_args_bounds),
    "construct": ("Build a reference packing.", description_construct, parse_args_construct),
    "submit": ("Submit a packing to the catalog.", description_submit, parse_args_submit),
    "auto": ("Propagate a catalog entry to fewer vectors.", description_auto,
             parse_args_auto),
    "table": ("Print the leaderboard.", description_table, parse_args_table),
    "fsck": ("Check the catalog.", description_fsck, parse_args_fsck),
    "import": ("Import a local file into the catalog.", description_import,
               parse_args_import),
}


def parse_args_linepack(argv=None):
    """Parse entry points arguments for linepack functionality."""
    description = """LinePack command-line tools"""
    parser = argparse.ArgumentParser(prog="linepack", description=description)

    # main parser to handle basic command and help function
    parser.add_argument(
        "-v",
        "--version",
        action="version",
        version="{} (LinePack version {})".format(parser.prog, __version__),
    )

    # command parser, stored in parser.command
    subparser = parser.add_subparsers(
        metavar="<Commands>", help="<Functions>", dest="command"
    )
    subparser.required = True

    for command, (help_text, description_command, parse_args) in SCRIPT_ARGS.items():
        parser_command = subparser.add_parser(
            command,
            help=help_text,
            description=description_command,
            formatter_class=RawDescriptionHelpFormatter,
        )
        parse_args(parser_command)

    return parser.parse_args(argv)


def main(argv=None):
    """Entry point function for LinePack; returns the exit code."""
    arg = parse_args_linepack(argv)  # parse all variables for each functions
    main_fun = SCRIPT_MAIN[arg.command]  # call the main executable function
    logging.basicConfig(level=logging.INFO, format='%(levelname)s: %(message)s')
    try:
        return main_fun(arg)  # run the function
    except (OSError, CatalogLockedError) as error:
        logging.error(error)
        return EXIT_IO
    except (ValueError, IndexError, ArithmeticError) as error:
        logging.error(error)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
