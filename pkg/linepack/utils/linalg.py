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
"""Tools for Hermitian eigendecomposition, factorization and orthogonal completion."""

import warnings

import numpy as np
import scipy.linalg


__all__ = ["eigh", "psd_factor", "orthonormal_complement", "normalize_columns"]


def eigh(matrix, rank=None):
    """Return the largest eigenvalues and eigenvectors of a Hermitian matrix.

    Parameters
    ----------
    matrix : np.ndarray(N, N)
        Square Hermitian matrix (real symmetric or complex Hermitian).
    rank : {None, int}
        Number of leading eigenpairs to keep. All are kept when None.

    Returns
    -------
    eigval : np.ndarray(K,)
        Eigenvalues sorted in decreasing order.
    eigvec : np.ndarray(N, K)
        Matrix where the columns are the corresponding eigenvectors to the eigval.

    Raises
    ------
    TypeError
        If `matrix` is not a two-dimensional numpy array.
        If `rank` is not an integer.
    ValueError
        If `matrix` is not a square matrix.
        If `matrix` is not Hermitian.
        If `rank` is not in [1, N].

    Note
    ----
    This code mainly uses scipy.linalg.eigh

    """
    if not (isinstance(matrix, np.ndarray) and matrix.ndim == 2):
        raise TypeError("Given matrix must be a two-dimensional numpy array.")
    if matrix.shape[0] != matrix.shape[1]:
        raise ValueError("Given matrix must be square.")
    if not np.allclose(matrix.conjugate().T, matrix):
        raise ValueError("Given matrix must be Hermitian.")
    size = matrix.shape[0]
    if rank is None:
        rank = size
    if not isinstance(rank, (int, np.integer)):
        raise TypeError("Given rank must be an integer.")
    if not 1 <= rank <= size:
        raise ValueError("Given rank must be between 1 and {0}. Given rank={1}".format(size, rank))

    # NOTE: scipy returns eigenvalues in increasing order; subset_by_index selects the top ones
    eigval, eigvec = scipy.linalg.eigh(matrix, subset_by_index=[size - rank, size - 1])
    return eigval[::-1], eigvec[:, ::-1]


def psd_factor(matrix, rank, eigenvalues=None):
    r"""Return a rank-`rank` factor :math:`\Phi` with :math:`\Phi^* \Phi \approx` `matrix`.

    The best positive semidefinite approximation of rank `rank` is taken: the leading
    eigenvalues are clipped at zero, or replaced by `eigenvalues` when given.

    Parameters
    ----------
    matrix : np.ndarray(N, N)
        Hermitian matrix, typically a structured Gram matrix.
    rank : int
        Number of rows of the factor.
    eigenvalues : {None, float, np.ndarray(rank,)}
        Prescribed eigenvalues of the reconstructed matrix.

    Returns
    -------
    factor : np.ndarray(rank, N)
        Rows are the scaled leading eigenvectors.

    """
    eigval, eigvec = eigh(matrix, rank=rank)
    if eigenvalues is not None:
        eigval = np.broadcast_to(np.asarray(eigenvalues, dtype=float), eigval.shape)
    eigval = np.clip(eigval, 0.0, None)
    return np.sqrt(eigval)[:, None] * eigvec.conjugate().T


def orthonormal_complement(rows, threshold=1e-10):
    """Return rows spanning the orthogonal complement of the row space of `rows`.

    Parameters
    ----------
    rows : np.ndarray(K, N)
        Matrix whose row space is complemented inside F^N.
    threshold : {1e-10, float}
        Relative singular-value threshold deciding the numerical rank of `rows`.

    Returns
    -------
    complement : np.ndarray(N - rank, N)
        Orthonormal rows, orthogonal to every row of `rows` under the inner
        product that is conjugate-linear in its second argument.

    Warns
    -----
    If `rows` is rank deficient, since the complement is then larger than N - K.

    """
    if not (isinstance(rows, np.ndarray) and rows.ndim == 2):
        raise TypeError("Given rows must be a two-dimensional numpy array.")
    # x is orthogonal to row r iff sum_i x_i conj(rows[r, i]) = 0
    basis = scipy.linalg.null_space(rows.conjugate(), rcond=threshold)
    if basis.shape[1] != rows.shape[1] - rows.shape[0]:
        warnings.warn("Rows are rank deficient; complement has dimension {0} instead of {1}."
                      "".format(basis.shape[1], rows.shape[1] - rows.shape[0]), RuntimeWarning)
    return basis.T


def normalize_columns(matrix):
    """Return `matrix` with every column scaled to unit Euclidean norm.

    Raises
    ------
    FloatingPointError
        If a column is zero or not finite.

    """
    norms = np.linalg.norm(matrix, axis=0)
    if not np.all(np.isfinite(norms)) or np.any(norms == 0.0):
        raise FloatingPointError("Cannot normalize zero or non-finite columns.")
    return matrix / norms
