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
"""Test linepack.constructions.standard."""


import numpy as np
from numpy.testing import assert_raises, assert_allclose, assert_equal, assert_almost_equal

from linepack.field import Field
from linepack.bounds import Saturation, classify_saturation, BoundName
from linepack.frames import coherence, certify, is_tight, is_equiangular
from linepack.constructions.standard import simplex, planar_lines, bloch_lift


def test_simplex_examples():
    frame = simplex(2, Field.REAL)
    assert_equal((frame.d, frame.n), (2, 3))
    assert_almost_equal(coherence(frame), 0.5, decimal=14)
    frame = simplex(3)
    assert_equal((frame.d, frame.n), (3, 4))
    assert_almost_equal(coherence(frame), 1.0 / 3.0, decimal=14)
    assert_raises(ValueError, simplex, 0)
    # one dimension: two opposite points span the same line
    assert_almost_equal(coherence(simplex(1)), 1.0, decimal=14)


def test_simplex_is_etf():
    for field in Field:
        for d in range(2, 13):
            frame = simplex(d, field)
            assert frame.field is field
            assert_allclose(frame.vectors.imag, 0.0)
            assert abs(coherence(frame) - 1.0 / d) <= 1e-12
            assert is_tight(frame, 1e-10)[0]
            assert is_equiangular(frame, 1e-10)
            cert = certify(frame)
            assert cert.saturated_bound is BoundName.WELCH
            assert classify_saturation(cert) is Saturation.ETF


def test_planar_lines():
    for n in range(2, 9):
        frame = planar_lines(n)
        assert frame.field is Field.REAL
        assert_almost_equal(coherence(frame), np.cos(np.pi / n), decimal=14)
    assert_almost_equal(coherence(planar_lines(3)), 0.5, decimal=14)
    assert_raises(ValueError, planar_lines, 0)


def test_bloch_lift():
    # octahedron lifts to three mutually unbiased bases of C^2
    octahedron = np.hstack([np.eye(3), -np.eye(3)])
    frame = bloch_lift(octahedron)
    assert_equal((frame.d, frame.n), (2, 6))
    assert_almost_equal(coherence(frame), 1.0 / np.sqrt(2), decimal=14)
    # tetrahedron lifts to an equiangular tight frame of 4 vectors
    tetrahedron = np.array([[1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]], dtype=float)
    frame = bloch_lift(2.0 * tetrahedron)
    assert_almost_equal(coherence(frame), np.sqrt(1.0 / 3.0), decimal=14)
    assert classify_saturation(certify(frame)) is Saturation.ETF
    assert_raises(ValueError, bloch_lift, np.ones((2, 4)))
    assert_raises(ValueError, bloch_lift, np.zeros((3, 2)))
