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
"""Alternating projections between structured Gram matrices and rank-d factors."""


import numpy as np

from linepack.field import Field
from linepack.frames.frame import UnitFrame
from linepack.utils.linalg import eigh, psd_factor, normalize_columns


__all__ = ["alternating_projection", "phase_quantize", "tight_polish"]


def max_modulus(vectors):
    """Return the coherence of the columns of `vectors`."""
    entries = np.abs(vectors.conjugate().T.dot(vectors))
    np.fill_diagonal(entries, 0.0)
    return float(np.max(entries))


def tightness(vectors):
    """Return the relative distance of the frame operator from (n/d) I."""
    d, n = vectors.shape
    scale = n / float(d)
    eigval = np.linalg.eigvalsh(vectors.dot(vectors.conjugate().T))
    return float(np.max(np.abs(eigval - scale)) / scale)


def _factor(gram, d, tight):
    """Return column-normalized rows of the best rank-`d` factor of `gram`."""
    n = gram.shape[0]
    gram = 0.5 * (gram + gram.conjugate().T)
    eigenvalues = n / float(d) if tight else None
    factor = psd_factor(gram, min(d, n), eigenvalues)
    if factor.shape[0] < d:
        factor = np.vstack([factor, np.zeros((d - n, n), dtype=factor.dtype)])
    return normalize_columns(factor)


def tight_polish(vectors, iters=100, tol=1e-12):
    r"""Return unit columns close to `vectors` whose frame operator is :math:`(n/d) I`.

    Alternates the closest tight frame :math:`\sqrt{n/d}\,S^{-1/2}\Phi`, with
    :math:`S = \Phi\Phi^*`, and column normalization until the relative tightness
    residual drops below `tol`.

    Parameters
    ----------
    vectors : np.ndarray, shape=(d, n)
        Columns spanning F^d; requires ``n >= d``.
    """
    d, n = vectors.shape
    if n < d:
        raise ValueError("A tight frame needs n >= d! Given d={0}, n={1}".format(d, n))
    for _ in range(iters):
        if tightness(vectors) <= tol:
            break
        eigval, eigvec = eigh(vectors.dot(vectors.conjugate().T))
        if eigval[-1] <= 0.0:
            raise FloatingPointError("Vectors do not span; tight polish is undefined.")
        inv_sqrt = (eigvec / np.sqrt(eigval)).dot(eigvec.conjugate().T)
        vectors = normalize_columns(np.sqrt(n / float(d)) * inv_sqrt.dot(vectors))
    return vectors


def project(vectors, target_mu, iters, require_tight=False, patience=None):
    """Array version of :func:`alternating_projection`; returns the best iterate.

    With `require_tight` only iterates with tightness residual at most 1e-6 compete.
    """
    d, n = vectors.shape
    if patience is None:
        patience = iters

    def score(candidate):
        if require_tight and tightness(candidate) > 1e-6:
            return np.inf
        return max_modulus(candidate)

    best, best_mu = vectors, score(vectors)
    stale = 0
    for _ in range(iters):
        gram = vectors.conjugate().T.dot(vectors)
        moduli = np.abs(gram)
        # clip moduli above the target, keeping the phases
        scale = np.ones_like(moduli)
        np.divide(target_mu, moduli, out=scale, where=moduli > target_mu)
        gram = gram * scale
        np.fill_diagonal(gram, 1.0)
        vectors = _factor(gram, d, require_tight)
        if require_tight:
            vectors = tight_polish(vectors)
        mu = score(vectors)
        if mu < best_mu:
            best, best_mu, stale = vectors, mu, 0
        else:
            stale += 1
            if stale >= patience:
                break
    return best


def alternating_projection(frame, target_mu, iters, require_tight=False, patience=None):
    """Return the best-coherence iterate of alternating projections.

    Each iteration resets the Gram diagonal to one, clips the moduli of off-diagonal
    entries at `target_mu` without changing their phases, then keeps the `d` leading
    eigenvalues. When `require_tight` is set those eigenvalues are all replaced by `n/d`,
    so the iterates are unit-norm tight frames. The factor is renormalized column-wise.

    Parameters
    ----------
    frame : UnitFrame
        Starting packing.
    target_mu : float
        Coherence target in (0, 1).
    iters : int
        Largest number of iterations.
    require_tight : bool, optional
        Search among unit-norm tight frames only.
    patience : int, optional
        Stop after this many iterations without improvement; never by default.
    """
    if not 0 < target_mu < 1:
        raise ValueError("Argument target_mu should be in (0, 1)! Given target_mu={0}".format(
            target_mu))
    if iters < 1:
        raise ValueError("Argument iters should be positive! Given iters={0}".format(iters))
    if require_tight and frame.n < frame.d:
        raise ValueError("A tight frame needs n >= d! Given d={0}, n={1}".format(frame.d, frame.n))
    best = project(frame.array(), target_mu, iters, require_tight, patience)
    return UnitFrame(best, frame.field, norm_tol=max(1e-12, frame.norm_tol))


def phase_quantize(frame, q):
    r"""Return the frame whose Gram phases are rounded to `q`-th roots of unity.

    Every off-diagonal Gram entry keeps its modulus while its phase :math:`\theta` becomes
    :math:`2\pi\,\mathrm{round}(q\theta/2\pi)/q`; the result is projected back to rank `d`
    and renormalized. Coherence may go up or down; callers compare.

    Parameters
    ----------
    frame : UnitFrame
        Complex packing.
    q : int
        Number of allowed phases.
    """
    if frame.field is Field.REAL:
        raise ValueError("Phase quantization is only supported for complex packings!")
    if q < 1:
        raise ValueError("Argument q should be positive! Given q={0}".format(q))
    gram = frame.vectors.conjugate().T.dot(frame.vectors)
    turns = np.round(q * np.angle(gram) / (2.0 * np.pi))
    gram = np.abs(gram) * np.exp(2j * np.pi * turns / q)
    np.fill_diagonal(gram, 1.0)
    return UnitFrame(_factor(gram, frame.d, False), frame.field, norm_tol=1e-12)
