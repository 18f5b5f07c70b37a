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
"""Unit-Norm Frames and Their Gram Matrices.

A packing of `n` lines in :math:`\\mathbb{F}^d` is stored as a `d` by `n` array whose
columns are unit vectors spanning the lines. Real frames are kept in the complex
representation with zero imaginary parts; the field tag decides which formulas apply.

Inner products are conjugate-linear in the second argument,
:math:`\\langle x, y \\rangle = \\sum_i x_i \\overline{y_i}`, and the Gram matrix stores
:math:`G_{jk} = \\langle \\varphi_k, \\varphi_j \\rangle`, i.e. :math:`G = \\Phi^* \\Phi`.
"""


import numpy as np

from linepack.field import Field


__all__ = ["UnitFrame", "GramMatrix", "gram", "frame_operator"]


class UnitFrame(object):
    """Class of unit-norm frames, i.e. packings of lines in real or complex space."""

    def __init__(self, vectors, field=Field.COMPLEX, norm_tol=1e-10, normalize=False,
                 d=None, n=None):
        """Initialize class.

        Parameters
        ----------
        vectors : np.ndarray, shape=(d, n)
            Array whose columns are the frame vectors.
        field : Field or str, optional
            Scalar field of the packing.
        norm_tol : float, optional
            Largest accepted deviation of a column norm from one.
        normalize : bool, optional
            When True, columns are rescaled to unit norm instead of being checked.
        d : int, optional
            Declared ambient dimension; checked against the array when given.
        n : int, optional
            Declared number of vectors; checked against the array when given.
        """
        field = Field.from_tag(field)
        vectors = np.asarray(vectors)
        if vectors.ndim != 2 or vectors.shape[0] < 1 or vectors.shape[1] < 1:
            raise ValueError("Argument vectors should be a non-empty 2D-array! "
                             "Given vectors.shape={0}".format(vectors.shape))
        if d is not None and vectors.shape[0] != d:
            raise ValueError("Declared dimension d={0} does not match the array with {1} "
                             "rows!".format(d, vectors.shape[0]))
        if n is not None and vectors.shape[1] != n:
            raise ValueError("Declared vector count n={0} does not match the array with {1} "
                             "columns!".format(n, vectors.shape[1]))
        if norm_tol < 0:
            raise ValueError("Argument norm_tol cannot be negative! Given norm_tol={0}".format(
                norm_tol))
        vectors = np.array(vectors, dtype=complex)
        if not np.all(np.isfinite(vectors)):
            raise ValueError("Argument vectors should only contain finite values!")
        if field is Field.REAL and np.any(vectors.imag != 0.0):
            raise ValueError("Vectors of a real frame should have zero imaginary parts!")

        norms = np.linalg.norm(vectors, axis=0)
        if normalize:
            if np.any(norms == 0.0):
                raise ValueError("Cannot normalize a frame with a zero vector!")
            vectors /= norms
        else:
            deviation = np.max(np.abs(norms - 1.0))
            if deviation > norm_tol:
                raise ValueError("Frame vectors should have unit norm within {0}! Largest "
                                 "deviation is {1}".format(norm_tol, deviation))
        vectors.setflags(write=False)

        self._vectors = vectors
        self._field = field
        self._norm_tol = norm_tol

    @classmethod
    def orthonormal(cls, d, n, field=Field.COMPLEX):
        """Return the first `n` standard basis vectors of F^d, requiring ``n <= d``."""
        if n > d:
            raise ValueError("Argument n should not exceed d! Given d={0}, n={1}".format(d, n))
        return cls(np.eye(d, n), field)

    @property
    def field(self):
        """Scalar field of the packing."""
        return self._field

    @property
    def d(self):
        """Ambient dimension."""
        return self._vectors.shape[0]

    @property
    def n(self):
        """Number of vectors."""
        return self._vectors.shape[1]

    @property
    def norm_tol(self):
        """Tolerance on column norms used when the frame was built."""
        return self._norm_tol

    @property
    def vectors(self):
        """Read-only complex array of shape (d, n) whose column `j` is :math:`\\varphi_j`."""
        return self._vectors

    def array(self):
        """Return a writable copy of the vectors, real-valued for real frames."""
        if self._field is Field.REAL:
            return self._vectors.real.copy()
        return self._vectors.copy()

    def column(self, j):
        """Return a copy of the `j`-th vector."""
        return self._vectors[:, j].copy()

    def as_complex(self):
        """Return the same packing filed as a complex packing."""
        return UnitFrame(self._vectors, Field.COMPLEX, norm_tol=self._norm_tol)

    def __repr__(self):
        return "UnitFrame(d={0}, n={1}, field={2})".format(self.d, self.n, self._field.tag)


class GramMatrix(object):
    """Class of Hermitian Gram matrices of pairwise inner products."""

    def __init__(self, entries):
        """Initialize class.

        Parameters
        ----------
        entries : np.ndarray, shape=(n, n)
            Square matrix; it is symmetrized so that the stored entries are exactly Hermitian.
        """
        entries = np.asarray(entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError("Argument entries should be a square 2D-array! "
                             "Given entries.shape={0}".format(entries.shape))
        entries = 0.5 * (entries + entries.conjugate().T)
        entries.setflags(write=False)
        self._entries = entries

    @property
    def n(self):
        """Number of frame vectors."""
        return self._entries.shape[0]

    @property
    def entries(self):
        """Read-only Hermitian array of inner products."""
        return self._entries

    @property
    def moduli(self):
        """Absolute values of all entries."""
        return np.abs(self._entries)

    def offdiagonal_moduli(self):
        """Return the absolute values of the entries above the diagonal, row by row."""
        rows, cols = np.triu_indices(self.n, 1)
        return np.abs(self._entries[rows, cols])

    def eigenvalues(self):
        """Return the eigenvalues in decreasing order."""
        return np.linalg.eigvalsh(self._entries)[::-1]

    def is_psd(self, tol=None):
        """Return whether all eigenvalues exceed ``-tol`` (default ``1e-9 * n``)."""
        if tol is None:
            tol = 1e-9 * self.n
        return bool(np.min(self.eigenvalues()) >= -tol)

    def __repr__(self):
        return "GramMatrix(n={0})".format(self.n)


def gram(frame):
    r"""Return the Gram matrix :math:`G_{jk} = \langle \varphi_k, \varphi_j \rangle`.

    The diagonal is reset to exactly one.

    Parameters
    ----------
    frame : UnitFrame
        Unit-norm frame.
    """
    if not isinstance(frame, UnitFrame):
        raise TypeError("Argument frame should be a UnitFrame! Given {0}".format(type(frame)))
    vectors = frame.vectors
    entries = vectors.conjugate().T.dot(vectors)
    entries = 0.5 * (entries + entries.conjugate().T)
    np.fill_diagonal(entries, 1.0)
    return GramMatrix(entries)


def frame_operator(frame):
    r"""Return the frame operator :math:`\Phi \Phi^*` of shape (d, d)."""
    vectors = frame.vectors
    operator = vectors.dot(vectors.conjugate().T)
    return 0.5 * (operator + operator.conjugate().T)
