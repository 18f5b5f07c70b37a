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
"""Test linepack.optimizer.escape."""


import numpy as np
from numpy.testing import assert_raises, assert_equal

from linepack.field import Field
from linepack.frames import UnitFrame, coherence
from linepack.constructions import mub_maximal
from linepack.optimizer.escape import perturb_escape


def test_perturb_escape_planar_star():
    # three lines of a plane inside R^3: the third axis is free
    a = 0.3
    frame = UnitFrame(np.array([[1.0, np.cos(a), np.cos(a)],
                                [0.0, np.sin(a), -np.sin(a)],
                                [0.0, 0.0, 0.0]]), Field.REAL)
    before = coherence(frame)
    result = perturb_escape(frame, 10, 0.1, 0)
    assert result.field is Field.REAL
    assert_equal((result.d, result.n), (3, 3))
    assert coherence(result) < before
    # same seed, same result
    assert_equal(perturb_escape(frame, 10, 0.1, 0).vectors, result.vectors)


def test_perturb_escape_complex():
    vectors = np.array([[1.0, 1.0, 1.0, 1.0],
                        [0.0, 1.0, 1j, -1.0],
                        [0.0, 0.0, 0.0, 0.0]])
    frame = UnitFrame(vectors, Field.COMPLEX, normalize=True)
    result = perturb_escape(frame, 10, 0.1, 3)
    assert coherence(result) < coherence(frame)


def test_perturb_escape_spanning():
    # neighbours of every vector span C^2: no escape move exists
    frame = mub_maximal(2)
    assert perturb_escape(frame, 5, 0.1, 0) is frame
    frame = UnitFrame.orthonormal(3, 3)
    assert perturb_escape(frame, 5, 0.1, 0) is frame


def test_perturb_escape_raises():
    assert_raises(ValueError, perturb_escape, UnitFrame.orthonormal(2, 1), 5, 0.1, 0)
    assert_raises(ValueError, perturb_escape, mub_maximal(2), 0, 0.1, 0)
    assert_raises(ValueError, perturb_escape, mub_maximal(2), 5, 0.0, 0)
