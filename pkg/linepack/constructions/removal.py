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
"""Packings Obtained by Removing Vectors."""


import numpy as np

from linepack.frames.frame import UnitFrame, gram


__all__ = ["remove_vector", "best_removal"]


def remove_vector(frame, j):
    """Return the frame without its `j`-th vector (0-based); coherence cannot increase.

    Parameters
    ----------
    frame : UnitFrame
        Frame with at least two vectors.
    j : int
        Index of the removed vector, ``0 <= j < n``.
    """
    if frame.n < 2:
        raise ValueError("Cannot remove a vector from a frame with n={0}".format(frame.n))
    if not 0 <= j < frame.n:
        raise IndexError("Argument j should be in [0, {0})! Given j={1}".format(frame.n, j))
    return UnitFrame(np.delete(frame.vectors, j, axis=1), frame.field, norm_tol=frame.norm_tol)


def best_removal(frame):
    """Return the single-vector removal with the smallest coherence, and its index.

    All `n` removals are evaluated; ties go to the smallest index.

    Returns
    -------
    frame : UnitFrame
        Frame with `n` - 1 vectors.
    index : int
        0-based index of the removed vector.
    """
    n = frame.n
    if n < 3:
        raise ValueError("Best removal needs at least 3 vectors! Given n={0}".format(n))
    moduli = gram(frame).moduli
    np.fill_diagonal(moduli, 0.0)
    scores = np.empty(n)
    for j in range(n):
        keep = np.arange(n) != j
        scores[j] = np.max(moduli[np.ix_(keep, keep)])
    # removals equal up to rounding count as ties
    index = int(np.nonzero(scores <= np.min(scores) * (1.0 + 1e-14) + 1e-15)[0][0])
    return remove_vector(frame, index), index
