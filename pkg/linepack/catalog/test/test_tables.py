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
"""Test linepack.catalog.tables."""


import csv
import io

from numpy.testing import assert_raises, assert_equal

from linepack.field import Field
from linepack.bounds import gerzon
from linepack.catalog.tables import BOUND_COLUMNS, bound_rows, bounds_table


def test_bounds_table():
    rows = list(csv.reader(io.StringIO(bounds_table().decode("utf-8"))))
    assert_equal(tuple(rows[0]), BOUND_COLUMNS)
    assert_equal(len(rows), 1 + sum(49 - d for d in range(3, 8)))
    for row in rows[1:]:
        d, n = int(row[0]), int(row[1])
        assert_equal(row[2], "C")
        assert 3 <= d <= 7 and d < n <= 49
        # orthoplex and levenstein are gated by Gerzon's bound
        assert (row[5] == "") == (n <= gerzon(d, Field.COMPLEX))
        assert (row[6] == "") == (n <= gerzon(d, Field.COMPLEX))
        assert_equal(float(row[7]), max(float(cell) for cell in row[3:7] if cell))
    row = [row for row in rows if row[:2] == ["5", "7"]][0]
    assert_equal(row[8], "BukhCox")
    assert 0.2644 <= float(row[7]) <= 0.2646
    row = [row for row in rows if row[:2] == ["5", "31"]][0]
    assert_equal(row[8], "Levenstein")


def test_bound_rows():
    rows = bound_rows(2, 2, 5, "R")
    assert_equal([row[1] for row in rows], ["3", "4", "5"])
    assert_equal(rows[0][8], "Welch")
    assert_equal(rows[0][4], "0.5")
    assert_raises(ValueError, bound_rows, 1, 3, 10, "C")
    assert_raises(ValueError, bound_rows, 4, 3, 10, "C")
    assert_raises(ValueError, bound_rows, 3, 5, 5, "C")
