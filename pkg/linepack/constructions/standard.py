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
"""Simplices, Planar Packings and Packings Lifted from the Sphere."""


import numpy as np

from linepack.field import Field
from linepack.frames.frame import UnitFrame
from linepack.utils.linalg import eigh


__all__ = ["simplex", "planar_lines", "bloch_lift"]


def simplex(d, field=Field.COMPLEX):
    """Return the simplex: `d` + 1 equiangular unit vectors with coherence `1/d`.

    The vertices of a regular simplex centered at the origin are the rows of an
    orthonormal basis of the top eigenspace of :math:`I - J/(d+1)`, rescaled to the
    unit sphere.

    Parameters
    ----------
    d : int
        Ambient dimension, at least one.
    field : Field or str, optional
        Field tag of the result; the vectors are real in both cases.
    """
    if d < 1:
        raise ValueError("Argument d should be positive! Given d={0}".format(d))
    size = d + 1
    centered = np.eye(size) - np.full((size, size), 1.0 / size)
    _, eigvec = eigh(centered, rank=d)
    return UnitFrame(eigvec.T, field, normalize=True)


def planar_lines(n):
    r"""Return `n` lines in :math:`\mathbb{R}^2` at angles :math:`\pi k/n`.

    By the pigeonhole principle this packing is optimal; its coherence is
    :math:`\cos(\pi/n)`.
    """
    if n < 1:
        raise ValueError("Argument n should be positive! Given n={0}".format(n))
    angles = np.pi * np.arange(n) / n
    return UnitFrame(np.vstack([np.cos(angles), np.sin(angles)]), Field.REAL, normalize=True)


def bloch_lift(points):
    r"""Return the lines of :math:`\mathbb{C}^2` corresponding to points of the sphere.

    A unit vector with polar angle :math:`\theta` and azimuth :math:`\phi` maps to
    :math:`(\cos(\theta/2), e^{i\phi}\sin(\theta/2))`, so that
    :math:`|\langle\psi_a,\psi_b\rangle|^2 = (1 + \langle x_a, x_b\rangle)/2`. Spherical
    codes therefore give packings in :math:`\mathbb{C}\mathbb{P}^1`.

    Parameters
    ----------
    points : np.ndarray, shape=(3, n)
        Columns are points of the sphere (rescaled to unit length).
    """
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[0] != 3:
        raise ValueError("Argument points should be a 2D-array with 3 rows! "
                         "Given points.shape={0}".format(points.shape))
    norms = np.linalg.norm(points, axis=0)
    if np.any(norms == 0.0):
        raise ValueError("Argument points cannot contain the origin!")
    x, y, z = points / norms
    theta = np.arccos(np.clip(z, -1.0, 1.0))
    phi = np.arctan2(y, x)
    vectors = np.vstack([np.cos(0.5 * theta), np.exp(1j * phi) * np.sin(0.5 * theta)])
    return UnitFrame(vectors, Field.COMPLEX, normalize=True)
