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
"""Maximal Sets of Mutually Unbiased Bases in Prime Dimension."""


import numpy as np
import sympy as sp

from linepack.field import Field
from linepack.frames.frame import UnitFrame


__all__ = ["UnsupportedParameterError", "mub_maximal"]


class UnsupportedParameterError(ValueError):
    """Raised when a construction is requested for parameters it does not cover."""


# eigenbases of the three Pauli matrices; the quadratic-phase formula needs d odd
_QUBIT_BASES = np.array([
    [1, 0, 1, 1, 1, 1],
    [0, 1, 1, -1, 1j, -1j],
]) / np.array([1, 1, np.sqrt(2), np.sqrt(2), np.sqrt(2), np.sqrt(2)])


def mub_maximal(d):
    r"""Return a maximal set of :math:`d + 1` mutually unbiased bases of :math:`\mathbb{C}^d`.

    The standard basis comes first, followed for each :math:`a = 0, \dots, d-1` by the
    basis with vectors :math:`d^{-1/2}\,(\omega^{a j^2 + b j})_{j}`, :math:`b = 0,\dots,d-1`,
    :math:`\omega = e^{2\pi i/d}`, i.e. the unitary DFT with quadratic phases. For
    :math:`d = 2` the Pauli eigenbases are used. The coherence is :math:`1/\sqrt{d}`.

    Parameters
    ----------
    d : int
        A prime dimension.

    Raises
    ------
    UnsupportedParameterError
        If `d` is not prime (prime powers need finite-field arithmetic).
    """
    if not sp.isprime(int(d)):
        raise UnsupportedParameterError("Argument d should be prime! Given d={0}".format(d))
    if d == 2:
        return UnitFrame(_QUBIT_BASES, Field.COMPLEX)

    index = np.arange(d)
    blocks = [np.eye(d, dtype=complex)]
    for a in range(d):
        # exponents are reduced modulo d before exponentiation to keep phases exact
        exponents = (a * index[:, None] ** 2 + index[:, None] * index[None, :]) % d
        blocks.append(np.exp(2j * np.pi * exponents / d) / np.sqrt(d))
    return UnitFrame(np.hstack(blocks), Field.COMPLEX)
