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
"""Reading and writing packing files.

A packing file is plain text with LF line endings and a trailing newline::

    # projpack v1
    C 3 4
    re_1 im_1 re_2 im_2 re_3 im_3
    ...

The first line is the format tag, the second gives the field (``C`` or ``R``), the
dimension `d` and the number of vectors `n`; each of the `n` data lines holds one vector
as `2d` decimals. Further lines starting with ``#`` are comments. The canonical form
written by :func:`serialize_packing` has no comments and uses 17 significant digits, so
it is bit-exact under re-parsing.
"""


import numpy as np

from linepack.field import Field
from linepack.frames.frame import UnitFrame


__all__ = ["PackingFormatError", "PackingHeaderError", "PackingRowCountError",
           "PackingValueError", "PackingFieldError", "PackingNormError", "FORMAT_TAG",
           "parse_packing", "serialize_packing", "read_packing", "write_packing", "read_points"]


FORMAT_TAG = "# projpack v1"


class PackingFormatError(ValueError):
    """Raised on a malformed packing file; `lineno` is the 1-based offending line."""

    def __init__(self, message, lineno):
        super(PackingFormatError, self).__init__("line {0}: {1}".format(lineno, message))
        self.lineno = lineno


class PackingHeaderError(PackingFormatError):
    """Missing format tag or malformed size line."""


class PackingRowCountError(PackingFormatError):
    """Number of data lines differs from the declared `n`."""


class PackingValueError(PackingFormatError):
    """Wrong number of columns, unparsable or non-finite number, or blank line."""


class PackingFieldError(PackingFormatError):
    """Real-tagged file with a nonzero imaginary part."""


class PackingNormError(PackingFormatError):
    """Vector whose norm deviates from one by more than the tolerance."""


def _parse_size(line, lineno):
    tokens = line.split()
    if len(tokens) != 3:
        raise PackingHeaderError("expected '<C|R> <d> <n>', got {0!r}".format(line), lineno)
    try:
        field = Field.from_tag(tokens[0])
        d, n = int(tokens[1]), int(tokens[2])
    except ValueError:
        raise PackingHeaderError("expected '<C|R> <d> <n>', got {0!r}".format(line), lineno)
    if len(tokens[0]) != 1 or d < 1 or n < 1:
        raise PackingHeaderError("expected '<C|R> <d> <n>' with d, n >= 1, got {0!r}".format(
            line), lineno)
    return field, d, n


def _parse_row(line, lineno, field, d, norm_tol):
    tokens = line.split()
    if len(tokens) != 2 * d:
        raise PackingValueError("expected {0} numbers, got {1}".format(2 * d, len(tokens)),
                                lineno)
    try:
        numbers = np.array([float(token) for token in tokens])
    except ValueError as error:
        raise PackingValueError(str(error), lineno)
    if not np.all(np.isfinite(numbers)):
        raise PackingValueError("non-finite number", lineno)
    if field is Field.REAL and np.any(numbers[1::2] != 0.0):
        raise PackingFieldError("real packing with nonzero imaginary part", lineno)
    vector = numbers[0::2] + 1j * numbers[1::2]
    deviation = abs(np.linalg.norm(vector) - 1.0)
    if deviation > norm_tol:
        raise PackingNormError("norm deviates from 1 by {0:.3g} > {1:.3g}".format(
            deviation, norm_tol), lineno)
    return vector


def parse_packing(data, norm_tol=1e-8):
    """Return the frame stored in the text of a packing file.

    Parameters
    ----------
    data : bytes or str
        File content.
    norm_tol : float, optional
        Largest accepted deviation of a vector norm from one.

    Raises
    ------
    PackingFormatError
        The subclass names the defect, ``lineno`` the line.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError:
            raise PackingHeaderError("file is not UTF-8 text", 1)
    lines = data.split("\n")
    if not data.endswith("\n"):
        raise PackingValueError("missing trailing newline", len(lines))
    lines = lines[:-1]
    if not lines or lines[0].rstrip() != FORMAT_TAG:
        raise PackingHeaderError("first line should be {0!r}".format(FORMAT_TAG), 1)

    size, rows, lineno = None, [], 1
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("#"):
            continue
        if not line.strip():
            raise PackingValueError("blank line", lineno)
        if size is None:
            size = _parse_size(line, lineno)
            continue
        field, d, n = size
        if len(rows) == n:
            raise PackingRowCountError("more than the declared n={0} vectors".format(n), lineno)
        rows.append(_parse_row(line, lineno, field, d, norm_tol))
    if size is None:
        raise PackingHeaderError("missing size line '<C|R> <d> <n>'", lineno)
    field, d, n = size
    if len(rows) != n:
        raise PackingRowCountError("declared n={0} vectors, found {1}".format(n, len(rows)),
                                   lineno)
    return UnitFrame(np.array(rows).T, field, norm_tol=norm_tol, d=d, n=n)


def _format(x):
    # adding zero turns -0.0 into 0.0
    return "%.17g" % (x + 0.0)


def serialize_packing(frame):
    """Return the canonical bytes of a packing file holding `frame`."""
    lines = [FORMAT_TAG, "{0} {1} {2}".format(frame.field.tag, frame.d, frame.n)]
    for j in range(frame.n):
        column = frame.vectors[:, j]
        lines.append(" ".join("{0} {1}".format(_format(z.real), _format(z.imag))
                              for z in column))
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_packing(fname, norm_tol=1e-8):
    """Return the frame stored in the packing file `fname`."""
    with open(str(fname), "rb") as handle:
        return parse_packing(handle.read(), norm_tol)


def write_packing(frame, fname):
    """Write `frame` to `fname` in canonical form."""
    with open(str(fname), "wb") as handle:
        handle.write(serialize_packing(frame))


def read_points(fname):
    """Return the points of a text file with three coordinates per line, as columns.

    Lines starting with ``#`` are skipped.
    """
    points = np.loadtxt(str(fname), comments="#", ndmin=2)
    if points.shape[1] != 3:
        raise ValueError("Points file {0} should have 3 columns! Found {1}".format(
            fname, points.shape[1]))
    return points.T
