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
"""Certification-Grade Analysis of Unit-Norm Frames.

Coherence, angle set, tightness, equiangularity and spanning tests. All functions are
pure functions of an immutable ``UnitFrame``.
"""


import numpy as np
import scipy.linalg

from linepack.frames.frame import UnitFrame, gram, frame_operator


__all__ = ["AngleProfile", "coherence", "angle_profile", "is_tight", "is_equiangular",
           "spans"]


class AngleProfile(object):
    """Distinct squared moduli of pairwise inner products and their multiplicities."""

    def __init__(self, values, counts, cluster_tol):
        """Initialize class.

        Parameters
        ----------
        values : sequence of float
            Sorted distinct cluster representatives.
        counts : sequence of int
            Number of pairs in each cluster.
        cluster_tol : float
            Threshold used by the single-linkage clustering.
        """
        if len(values) != len(counts):
            raise ValueError("Values & counts should have the same length! {0}!={1}".format(
                len(values), len(counts)))
        self._values = tuple(float(value) for value in values)
        self._counts = tuple(int(count) for count in counts)
        self._cluster_tol = cluster_tol

    @property
    def values(self):
        """Sorted distinct squared moduli :math:`|\\langle\\varphi_j,\\varphi_k\\rangle|^2`."""
        return self._values

    @property
    def counts(self):
        """Multiplicity of each distinct value."""
        return self._counts

    @property
    def cluster_tol(self):
        """Clustering threshold."""
        return self._cluster_tol

    def is_subset_of(self, targets, tol):
        """Return whether every value lies within `tol` of one of `targets`."""
        targets = np.asarray(targets, dtype=float)
        return all(np.min(np.abs(targets - value)) <= tol for value in self._values)

    def __len__(self):
        return len(self._values)

    def __repr__(self):
        pairs = ", ".join("{0:.12g} (x{1})".format(v, c) for v, c in zip(self._values,
                                                                           self._counts))
        return "AngleProfile({0})".format(pairs)


def _check_pairs(frame):
    """Raise if the frame has fewer than two vectors."""
    if not isinstance(frame, UnitFrame):
        raise TypeError("Argument frame should be a UnitFrame! Given {0}".format(type(frame)))
    if frame.n < 2:
        raise ValueError("Coherence needs at least two vectors! Given n={0}".format(frame.n))


def coherence(frame):
    r"""Return the coherence :math:`\mu(\Phi) = \max_{j<k} |\langle\varphi_j,\varphi_k\rangle|`.

    Parameters
    ----------
    frame : UnitFrame
        Frame with at least two vectors.
    """
    _check_pairs(frame)
    return float(np.max(gram(frame).offdiagonal_moduli()))


def angle_profile(frame, cluster_tol=1e-6):
    """Return the angle set of the frame, clustered by single linkage.

    Parameters
    ----------
    frame : UnitFrame
        Frame with at least two vectors.
    cluster_tol : float, optional
        Squared moduli closer than this to their sorted neighbour share a cluster.
        Each cluster is represented by its mean.
    """
    _check_pairs(frame)
    if cluster_tol < 0:
        raise ValueError("Argument cluster_tol cannot be negative! Given cluster_tol={0}".format(
            cluster_tol))
    squares = np.sort(gram(frame).offdiagonal_moduli() ** 2)
    # split wherever the gap between sorted neighbours exceeds the threshold
    breaks = np.nonzero(np.diff(squares) > cluster_tol)[0] + 1
    clusters = np.split(squares, breaks)
    values = [float(np.mean(cluster)) for cluster in clusters]
    counts = [cluster.size for cluster in clusters]
    return AngleProfile(values, counts, cluster_tol)


def is_tight(frame, tol=1e-10):
    r"""Return whether the frame is tight, and the relative residual.

    The residual is :math:`\|\Phi\Phi^* - (n/d) I\|_2 / (n/d)`; frames with fewer vectors
    than the dimension cannot be tight and report an infinite residual.

    Parameters
    ----------
    frame : UnitFrame
        Unit-norm frame.
    tol : float, optional
        Largest residual accepted as tight.

    Returns
    -------
    tight : bool
    residual : float
    """
    if frame.n < frame.d:
        return False, np.inf
    scale = frame.n / float(frame.d)
    operator = frame_operator(frame)
    # the extreme eigenvalues of the frame operator are the optimal frame bounds (A, B)
    eigval = np.linalg.eigvalsh(operator)
    residual = float(np.max(np.abs(eigval - scale)) / scale)
    return residual <= tol, residual


def is_equiangular(frame, tol=1e-10):
    """Return whether all off-diagonal moduli of the Gram matrix agree within `tol`."""
    _check_pairs(frame)
    moduli = gram(frame).offdiagonal_moduli()
    return bool(np.max(moduli) - np.min(moduli) <= tol)


def spans(frame, tol=1e-10):
    """Return whether the vectors span F^d, using the `d`-th singular value."""
    if frame.n < frame.d:
        return False
    sigma = scipy.linalg.svdvals(frame.vectors)
    return bool(sigma[frame.d - 1] > tol * sigma[0])
