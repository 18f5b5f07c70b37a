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
"""Tables of lower bounds for ranges of dimensions and vector counts."""


import csv
import io

from linepack.field import Field
from linepack.bounds.bounds import best_lower_bound


__all__ = ["BOUND_COLUMNS", "bound_rows", "bounds_table"]


BOUND_COLUMNS = ("d", "n", "field", "bukh_cox", "welch", "orthoplex", "levenstein", "best",
                 "best_name")


def _cell(value):
    return "" if value is None else "%.12g" % value


def bound_rows(d_min, d_max, n_max, field):
    """Return one row of formatted cells per ``(d, n)`` with ``d < n <= n_max``.

    Inapplicable bounds are empty cells.
    """
    field = Field.from_tag(field)
    if not 2 <= d_min <= d_max:
        raise ValueError("Arguments should satisfy 2 <= d_min <= d_max! Given d_min={0}, "
                         "d_max={1}".format(d_min, d_max))
    if n_max <= d_max:
        raise ValueError("Argument n_max should exceed d_max! Given n_max={0}, d_max={1}".format(
            n_max, d_max))
    rows = []
    for d in range(d_min, d_max + 1):
        for n in range(d + 1, n_max + 1):
            report = best_lower_bound(d, n, field)
            rows.append([str(d), str(n), field.tag, _cell(report.bukh_cox), _cell(report.welch),
                         _cell(report.orthoplex), _cell(report.levenstein), _cell(report.best),
                         str(report.best_name)])
    return rows


def bounds_table(d_min=3, d_max=7, n_max=49, field=Field.COMPLEX):
    """Return a CSV table of all applicable bounds, with 12 significant digits.

    The default range covers dimensions 3 to 7 and up to 49 vectors.

    Parameters
    ----------
    d_min, d_max : int
        Range of dimensions, ``2 <= d_min <= d_max``.
    n_max : int
        Largest number of vectors, ``n_max > d_max``.
    field : Field or str, optional
        Scalar field.

    Returns
    -------
    table : bytes
        UTF-8 CSV with header ``d,n,field,bukh_cox,welch,orthoplex,levenstein,best,best_name``.
    """
    stream = io.StringIO(newline="")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(BOUND_COLUMNS)
    writer.writerows(bound_rows(d_min, d_max, n_max, field))
    return stream.getvalue().encode("utf-8")
