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
"""Escaping non-spanning maximal-angle configurations by orthogonal perturbation.

If the vectors achieving the coherence with :math:`\\varphi_j` do not span F^d, then
moving :math:`\\varphi_j` along a unit vector `v` orthogonal to all of them, with
:math:`\\mathrm{Re}\\langle \\varphi_j, v\\rangle \\ge 0`, strictly shrinks each of those
inner products: after normalization they are divided by at least :math:`\\sqrt{1+t^2}`.
"""


import numpy as np
import scipy.linalg

from linepack.field import Field
from linepack.frames.frame import UnitFrame


__all__ = ["perturb_escape"]


# inner products this close to the coherence count as maximal
_NEIGHBOUR_TOL = 1e-8


def _moduli(vectors):
    moduli = np.abs(vectors.conjugate().T.dot(vectors))
    np.fill_diagonal(moduli, 0.0)
    return moduli


def _score(vectors):
    """Return the coherence and the number of pairs attaining it."""
    moduli = _moduli(vectors)
    mu = float(np.max(moduli))
    count = int(np.count_nonzero(np.triu(moduli, 1) >= mu - _NEIGHBOUR_TOL))
    return mu, count


def _escape_direction(vectors, j, neighbours, rng, real):
    """Return a unit vector orthogonal to the neighbours of vector `j`, or None."""
    basis = scipy.linalg.null_space(vectors[:, neighbours].conjugate().T)
    if basis.shape[1] == 0:
        return None
    weights = rng.standard_normal(basis.shape[1])
    if not real:
        weights = weights + 1j * rng.standard_normal(basis.shape[1])
    direction = basis.dot(weights)
    direction /= np.linalg.norm(direction)
    if np.real(np.vdot(direction, vectors[:, j])) < 0:
        direction = -direction
    return direction


def escape(vectors, trials, step, rng, real):
    """Array version of :func:`perturb_escape`."""
    best_mu, best_count = _score(vectors)
    if best_mu <= _NEIGHBOUR_TOL:
        return vectors
    improved = True
    passes = 0
    while improved and passes < vectors.shape[1]:
        improved = False
        passes += 1
        for j in range(vectors.shape[1]):
            moduli = _moduli(vectors)
            neighbours = np.nonzero(moduli[j] >= best_mu - _NEIGHBOUR_TOL)[0]
            if neighbours.size == 0:
                continue
            direction = _escape_direction(vectors, j, neighbours, rng, real)
            if direction is None:
                continue
            t = step
            for _ in range(trials):
                candidate = vectors.copy()
                moved = candidate[:, j] + t * direction
                candidate[:, j] = moved / np.linalg.norm(moved)
                mu, count = _score(candidate)
                if mu < best_mu - 1e-15 or (mu <= best_mu + 1e-15 and count < best_count):
                    vectors, best_mu, best_count = candidate, mu, count
                    improved = True
                    break
                t *= 0.5
    return vectors


def perturb_escape(frame, trials, step, rng_seed):
    """Return the frame after orthogonal escape moves that lower the coherence.

    Each vector whose maximal-angle neighbours (within 1e-8 of the coherence) leave room
    in F^d is pushed along a random direction orthogonal to them. Step sizes ``step``,
    ``step/2``, ... are tried, at most `trials` per vector; a move is kept when the
    coherence drops, or stays equal while fewer pairs attain it. Passes over all vectors
    repeat while moves are accepted.

    Parameters
    ----------
    frame : UnitFrame
        Packing with at least two vectors.
    trials : int
        Step sizes tried per vector.
    step : float
        Largest step size.
    rng_seed : int
        Seed of the random directions.
    """
    if frame.n < 2:
        raise ValueError("Argument frame should have at least two vectors! Given n={0}".format(
            frame.n))
    if trials < 1 or step <= 0:
        raise ValueError("Arguments should satisfy trials >= 1 and step > 0! "
                         "Given trials={0}, step={1}".format(trials, step))
    rng = np.random.default_rng(rng_seed)
    real = frame.field is Field.REAL
    vectors = escape(frame.array(), trials, step, rng, real)
    if np.array_equal(vectors, frame.array()):
        return frame
    return UnitFrame(vectors, frame.field, norm_tol=max(1e-12, frame.norm_tol))
