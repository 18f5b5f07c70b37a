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
r"""Smoothed coherence: a log-sum-exp surrogate of the largest squared inner product.

For pair weights :math:`a_{jk} = |\langle\varphi_j,\varphi_k\rangle|^2` the squared
surrogate is

.. math::
   L_\beta(\Phi) = \frac{1}{\beta} \log \sum_{j<k} e^{\beta a_{jk}},
   \qquad \mu^2 \le L_\beta \le \mu^2 + \frac{\log P}{\beta},

with :math:`P = n(n-1)/2`, and the smoothed coherence is :math:`\sqrt{L_\beta}`.
"""


import numpy as np
from scipy.special import logsumexp, softmax

from linepack.frames.frame import UnitFrame


__all__ = ["smoothed_coherence", "smoothed_coherence_gradient"]


def _check(frame, beta):
    if not isinstance(frame, UnitFrame):
        raise TypeError("Argument frame should be a UnitFrame! Given {0}".format(type(frame)))
    if beta <= 0:
        raise ValueError("Argument beta should be positive! Given beta={0}".format(beta))
    if frame.n < 2:
        raise ValueError("Smoothed coherence needs at least two vectors! Given n={0}".format(
            frame.n))


def squared_surrogate(vectors, beta, gradient=True):
    r"""Return :math:`L_\beta` of the columns of `vectors` and its Euclidean gradient.

    The gradient with respect to the real and imaginary parts of every entry, written as a
    complex array, is :math:`2\Phi(W \circ G)` where `W` holds the symmetric softmax
    weights of the pairs.

    Parameters
    ----------
    vectors : np.ndarray, shape=(d, n)
        Columns with unit norm; real or complex.
    beta : float
        Smoothing parameter.
    gradient : bool, optional
        When False only the value is computed.
    """
    n = vectors.shape[1]
    entries = vectors.conjugate().T.dot(vectors)
    rows, cols = np.triu_indices(n, 1)
    squares = np.abs(entries[rows, cols]) ** 2
    value = logsumexp(beta * squares) / beta
    if not np.isfinite(value):
        raise FloatingPointError("Smoothed coherence is not finite.")
    if not gradient:
        return value, None
    weights = np.zeros((n, n))
    weights[rows, cols] = softmax(beta * squares)
    weights += weights.T
    return value, 2.0 * vectors.dot(weights * entries)


def tangent_projection(vectors, directions):
    r"""Project each column of `directions` on the tangent space of the sphere.

    The real inner product :math:`\mathrm{Re}\langle x, y\rangle` is used, so the
    component along :math:`\varphi_j` removed from column `j` is
    :math:`\mathrm{Re}(\varphi_j^* e_j)\,\varphi_j`.
    """
    radial = np.sum(vectors.conjugate() * directions, axis=0).real
    return directions - vectors * radial


def smoothed_coherence(frame, beta):
    r"""Return the smoothed coherence :math:`\sqrt{L_\beta(\Phi)}`.

    It is at least the coherence and tends to it as `beta` grows.

    Parameters
    ----------
    frame : UnitFrame
        Frame with at least two vectors.
    beta : float
        Positive smoothing parameter.
    """
    _check(frame, beta)
    value, _ = squared_surrogate(frame.array(), beta, gradient=False)
    return float(np.sqrt(max(value, 0.0)))


def smoothed_coherence_gradient(frame, beta):
    """Return the Riemannian gradient of the smoothed coherence on the product of spheres.

    Returns
    -------
    gradient : np.ndarray, shape=(d, n)
        Column `j` is tangent to the unit sphere at the `j`-th vector; real for real
        frames.
    """
    _check(frame, beta)
    vectors = frame.array()
    value, egrad = squared_surrogate(vectors, beta)
    if value <= 0.0:
        return np.zeros_like(vectors)
    return tangent_projection(vectors, egrad) / (2.0 * np.sqrt(value))
