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
"""Test linepack.constructions.label."""


import numpy as np
from numpy.testing import assert_raises, assert_equal

from linepack.field import Field
from linepack.frames import coherence
from linepack.constructions.label import ConstructionKind, ConstructionLabel, construct
from linepack.constructions.mub import mub_maximal


def test_construction_label():
    label = ConstructionLabel("mub", [5])
    assert label.kind is ConstructionKind.MUB_MAXIMAL
    assert_equal(label.params, (5,))
    assert_equal(label.note, "mub")
    assert_equal(label, ConstructionLabel(ConstructionKind.MUB_MAXIMAL, (5,), "mub"))
    assert label != ConstructionLabel("mub", (7,))
    assert_equal(len({label, ConstructionLabel("mub", (5,))}), 1)
    assert_equal(ConstructionLabel("removal").note, "AUTO")
    assert_equal(ConstructionLabel("simplex", (3,)).note, "etf")
    assert_equal(ConstructionLabel("simplex", (3,), " mine ").note, "mine")
    assert_raises(ValueError, ConstructionLabel, "simplex", (3,), "  ")
    assert_raises(ValueError, ConstructionLabel, "sic")


def test_construct():
    frame, label = construct("simplex", d=4, field=Field.REAL)
    assert_equal((frame.d, frame.n), (4, 5))
    assert frame.field is Field.REAL
    assert_equal(label, ConstructionLabel("simplex", (4,)))
    frame, label = construct("mub", d=3)
    assert_equal(frame.n, 12)
    frame, label = construct("planar", d=5)
    assert_equal((frame.d, frame.n), (2, 5))
    frame, label = construct("conj")
    assert_equal(label.params, (3, 5))
    frame, label = construct("naimark", frame=construct("simplex", d=3)[0])
    assert_equal((frame.d, frame.n), (1, 4))
    assert_equal(label.note, "naimark")
    frame, label = construct("removal", frame=mub_maximal(5))
    assert_equal(frame.n, 29)
    assert_equal(label.note, "AUTO")
    assert abs(coherence(frame) - 1.0 / np.sqrt(5)) <= 1e-12
    frame, label = construct("removal", frame=mub_maximal(5), index=3)
    assert_equal(label.params, (3,))
    frame, label = construct("sphere", points=np.hstack([np.eye(3), -np.eye(3)]))
    assert_equal(label.params, (6,))
    assert_raises(ValueError, construct, "simplex")
    assert_raises(ValueError, construct, "naimark")
    assert_raises(ValueError, construct, "sphere")
