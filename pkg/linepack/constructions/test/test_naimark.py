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
"""Test linepack.constructions.naimark."""


import numpy as np
from numpy.testing import assert_raises, assert_allclose, assert_equal

from linepack.field import Field
from linepack.bounds import welch, Saturation, classify_saturation
from linepack.frames import UnitFrame, coherence, gram, certify, is_tight
from linepack.catalog import read_packing
from linepack.constructions.standard import simplex
from linepack.constructions.naimark import naimark_complement
try:
    from importlib_resources import path
except ImportError:
    from importlib.resources import path


def load_hesse():
    with path("linepack.data", "etf_3_9_hesse.txt") as fname:
        return read_packing(fname)


def test_naimark_hesse():
    frame = load_hesse()
    assert_equal((frame.d, frame.n), (3, 9))
    complement = naimark_complement(frame)
    assert_equal((complement.d, complement.n), (6, 9))
    assert abs(coherence(complement) - 0.25) <= 1e-10
    assert abs(welch(6, 9) - 0.25) <= 1e-15
    assert classify_saturation(certify(complement)) is Saturation.ETF


def test_naimark_involution():
    for frame in [load_hesse(), simplex(4, Field.REAL), simplex(3)]:
        twice = naimark_complement(naimark_complement(frame))
        assert_equal((twice.d, twice.n), (frame.d, frame.n))
        assert_allclose(gram(twice).moduli, gram(frame).moduli, atol=1e-10)


def test_naimark_properties():
    complement = naimark_complement(simplex(4, Field.REAL))
    assert complement.field is Field.REAL
    assert complement.array().dtype == float
    assert is_tight(complement, 1e-10)[0]
    # first nonzero entry of every column is positive real
    for j in range(complement.n):
        column = complement.vectors[:, j]
        pivot = column[np.nonzero(np.abs(column) > 1e-12)[0][0]]
        assert abs(pivot.imag) <= 1e-15 and pivot.real > 0.0
    # simplex of 3 vectors in F^2 completes to 3 scalars in F^1
    complement = naimark_complement(simplex(2))
    assert_equal((complement.d, complement.n), (1, 3))
    assert_allclose(np.abs(complement.vectors), 1.0)
    assert abs(coherence(complement) - 1.0) <= 1e-12


def test_naimark_raises():
    assert_raises(ValueError, naimark_complement, UnitFrame.orthonormal(3, 3))
    frame = UnitFrame(np.array([[1.0, 1.0, 0.0], [0.0, 1.0, 1.0]]), normalize=True)
    assert_raises(ValueError, naimark_complement, frame)
