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
"""Test the linepack command-line tools."""


import os
import shutil
import tempfile
from contextlib import contextmanager
from importlib import import_module

from numpy.testing import assert_raises, assert_equal

from linepack.field import Field
from linepack.constructions import simplex
from linepack.catalog import Catalog, read_packing, write_packing
from linepack.scripts.main import main, parse_args_linepack
try:
    from importlib_resources import path
except ImportError:
    from importlib.resources import path


@contextmanager
def tmpdir(name):
    """Create temporary directory that gets deleted after accessing it."""
    dn = tempfile.mkdtemp(name)
    try:
        yield dn
    finally:
        shutil.rmtree(dn)


def test_parse_args():
    args = parse_args_linepack(["solve", "--d", "3", "--n", "9", "--restarts", "4"])
    assert_equal((args.command, args.d, args.n, args.restarts), ("solve", 3, 9, 4))
    assert args.require_tight is None and not args.no_ap
    args = parse_args_linepack(["table", "--format", "csv"])
    assert_equal(args.format, "csv")
    assert_raises(SystemExit, parse_args_linepack, [])
    assert_raises(SystemExit, parse_args_linepack, ["submit", "packing.txt"])
    assert_raises(SystemExit, parse_args_linepack, ["construct", "sic"])


def test_main_certify():
    with path("linepack.data", "etf_3_9_hesse.txt") as fname:
        assert_equal(main(["certify", str(fname)]), 0)
    with tmpdir("linepack.test.test_main.certify") as dn:
        fname = os.path.join(dn, "broken.txt")
        with open(fname, "w") as handle:
            handle.write("# projpack v1\nC 2 2\n1 0 0 0\n1 0 0\n")
        assert_equal(main(["certify", fname]), 3)
        assert_equal(main(["certify", os.path.join(dn, "missing.txt")]), 4)
        fname = os.path.join(dn, "single.txt")
        with open(fname, "w") as handle:
            handle.write("# projpack v1\nC 2 1\n1 0 0 0\n")
        assert_equal(main(["certify", fname]), 3)


def test_main_construct():
    with tmpdir("linepack.test.test_main.construct") as dn:
        out = os.path.join(dn, "mub5.txt")
        assert_equal(main(["construct", "mub", "--d", "5", "--out", out]), 0)
        frame = read_packing(out)
        assert_equal((frame.d, frame.n), (5, 30))
        removed = os.path.join(dn, "mub5_29.txt")
        assert_equal(main(["construct", "removal", "--input", out, "--index", "30",
                           "--out", removed]), 0)
        assert_equal(read_packing(removed).vectors, frame.vectors[:, :29])
        assert_equal(main(["construct", "removal", "--input", out, "--index", "31"]), 3)
        assert_equal(main(["construct", "mub", "--d", "4"]), 3)
        assert_equal(main(["construct", "simplex"]), 3)
        catalog = os.path.join(dn, "catalog")
        assert_equal(main(["construct", "simplex", "--d", "3", "--catalog", catalog]), 0)
        assert_equal(Catalog(catalog).get(3, 4, "C").creator_note, "etf")
        assert_equal(main(["construct", "simplex", "--d", "3", "--catalog", catalog]), 2)


def test_main_bounds():
    assert_equal(main(["bounds", "--d", "5", "--n", "7"]), 0)
    assert_equal(main(["bounds", "--d", "5", "--n-max", "49"]), 0)
    assert_equal(main(["bounds", "--d", "3", "--d-max", "7", "--n-max", "49", "--field", "R"]),
                 0)
    assert_equal(main(["bounds", "--d", "5"]), 3)
    assert_equal(main(["bounds", "--d", "1", "--n", "3"]), 3)
    with tmpdir("linepack.test.test_main.bounds") as dn:
        fname = os.path.join(dn, "bounds.png")
        assert_equal(main(["bounds", "--d", "3", "--plot", fname]), 0)
        assert os.path.isfile(fname)


def test_main_catalog():
    with tmpdir("linepack.test.test_main.catalog") as dn:
        catalog = os.path.join(dn, "catalog")
        fname = os.path.join(dn, "simplex.txt")
        write_packing(simplex(3, Field.REAL), fname)
        assert_equal(main(["submit", fname, "--note", "etf", "--catalog", catalog]), 0)
        assert_equal(main(["submit", fname, "--note", "etf", "--catalog", catalog]), 2)
        assert_equal(main(["submit", fname, "--note", "etf", "--promote", "--catalog",
                           catalog]), 0)
        assert Catalog(catalog).get(3, 4, "C") is not None
        assert_equal(main(["auto", "--d", "3", "--n", "4", "--field", "R", "--catalog",
                           catalog]), 0)
        assert_equal(main(["auto", "--d", "3", "--n", "9", "--catalog", catalog]), 3)
        for fmt in ["text", "csv", "json"]:
            assert_equal(main(["table", "--format", fmt, "--catalog", catalog]), 0)
        assert_equal(main(["fsck", "--catalog", catalog]), 0)
        with path("linepack.data", "etf_3_9_hesse.txt") as hesse:
            assert_equal(main(["import", str(hesse), "--catalog", catalog]), 0)
        assert_equal(Catalog(catalog).get(3, 9, "C").creator_note, "import")
        assert abs(Catalog(catalog).get(3, 8, "C").coherence - 0.5) <= 1e-12
        # a stale lock is an I/O error
        open(os.path.join(catalog, ".lock"), "w").close()
        assert_equal(main(["submit", fname, "--note", "etf", "--catalog", catalog]), 4)


def test_main_solve():
    with tmpdir("linepack.test.test_main.solve") as dn:
        out = os.path.join(dn, "best.txt")
        catalog = os.path.join(dn, "catalog")
        assert_equal(main(["solve", "--d", "2", "--n", "3", "--field", "R", "--restarts", "2",
                           "--out", out, "--catalog", catalog, "--note", "ab"]), 0)
        frame = read_packing(out)
        assert frame.field is Field.REAL
        entry = Catalog(catalog).get(2, 3, "R")
        assert_equal(entry.creator_note, "ab")
        assert abs(entry.coherence - 0.5) <= 1e-5
        config = os.path.join(dn, "solver.cfg")
        with open(config, "w") as handle:
            handle.write("d = 2\nn = 4\nrestarts = 2\nbeta_rounds = 4\n")
        assert_equal(main(["solve", "--config", config, "--seed", "3", "--warm-start",
                           out.replace("best", "missing")]), 4)
        assert_equal(main(["solve", "--config", config, "--no-ap"]), 0)
        assert_equal(main(["solve", "--n", "4"]), 3)
        assert_equal(main(["solve", "--d", "2", "--n", "4", "--field", "R", "--phase-q", "4"]),
                     3)


def test_main_solve_all_restarts_aborted(monkeypatch):
    # every restart ends on non-finite values
    # the module object, since linepack.optimizer.anneal resolves to the anneal function
    monkeypatch.setattr(import_module("linepack.optimizer.anneal"), "_restart",
                        lambda cfg, index, warm_start=None: (index, float("inf"), None, 0))
    assert_equal(main(["solve", "--d", "2", "--n", "3", "--field", "R", "--restarts", "2"]), 3)
