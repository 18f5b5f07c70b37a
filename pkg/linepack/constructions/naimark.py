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
"""Naimark Complements of Tight Frames."""


import numpy as np

from linepack.frames.frame import UnitFrame
from linepack.frames.analysis import is_tight
from linepack.utils.linalg import orthonormal_complement


__all__ = ["naimark_complement"]


def naimark_complement(frame, tol=1e-8):
    r"""Return the Naimark complement of a unit-norm tight frame.

    The rows of :math:`\sqrt{d/n}\,\Phi` are orthonormal in :math:`\mathbb{F}^n`; an
    orthonormal basis of their orthogonal complement, stacked as rows, is a tight frame
    of `n` vectors in :math:`\mathbb{F}^{n-d}`. Its columns are rescaled to unit norm and
    each column is rotated so that its first nonzero entry is positive real. The
    complement of an equiangular tight frame is again equiangular and tight.

    Parameters
    ----------
    frame : UnitFrame
        Tight frame with more vectors than its dimension.
    tol : float, optional
        Tightness tolerance checked before completing.
    """
    d, n = frame.d, frame.n
    if n <= d:
        raise ValueError("Naimark complement of n={0} vectors in dimension d={1} is "
                         "empty!".format(n, d))
    tight, residual = is_tight(frame, tol)
    if not tight:
        raise ValueError("Argument frame should be tight! Relative residual={0}".format(residual))

    rows = np.sqrt(d / float(n)) * frame.array()
    complement = orthonormal_complement(rows) * np.sqrt(n / float(n - d))
    complement = complement / np.linalg.norm(complement, axis=0)
    # fix the phase of each column for bit-reproducible output
    for j in range(n):
        pivot = complement[np.nonzero(np.abs(complement[:, j]) > 1e-12)[0][0], j]
        complement[:, j] *= np.conjugate(pivot) / np.abs(pivot)
    if not np.iscomplexobj(rows):
        complement = complement.real
    return UnitFrame(complement, frame.field)
