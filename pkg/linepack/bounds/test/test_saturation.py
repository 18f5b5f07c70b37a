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
"""Test linepack.bounds.saturation."""


import numpy as np
from numpy.testing import assert_warns, assert_equal

from linepack.field import Field
from linepack.bounds.bounds import welch, levenstein, BoundName
from linepack.bounds.saturation import Saturation, classify_saturation, TOLERANCE_PROFILES
from linepack.frames.analysis import AngleProfile
from linepack.frames.certificate import Certificate, certify
from linepack.frames.frame import UnitFrame
from linepack.constructions import simplex, mub_maximal


def test_saturation_bound_names():
    assert Saturation.ETF.bound is BoundName.WELCH
    assert Saturation.ORTHOPLEX_SATURATING.bound is BoundName.ORTHOPLEX
    assert Saturation.LEVENSTEIN_TIGHT_TWO_DISTANCE.bound is BoundName.LEVENSTEIN
    assert Saturation.NONE.bound is BoundName.NONE


def test_classify_constructions():
    tol = TOLERANCE_PROFILES["exact"]
    assert classify_saturation(certify(simplex(4)), tol) is Saturation.ETF
    assert classify_saturation(certify(mub_maximal(3)), tol) is Saturation.ORTHOPLEX_SATURATING
    assert classify_saturation(certify(UnitFrame.orthonormal(3, 3)), tol) is Saturation.NONE
    rng = np.random.default_rng(0)
    frame = UnitFrame(rng.standard_normal((3, 7)) + 1j * rng.standard_normal((3, 7)),
                      normalize=True)
    assert classify_saturation(certify(frame), tol) is Saturation.NONE


def test_classify_levenstein():
    mu = levenstein(3, 20, Field.COMPLEX)
    profile = AngleProfile([0.0, mu * mu], [40, 150], 1e-6)
    cert = Certificate(3, 20, Field.COMPLEX, mu, profile, True, 0.0, False, True)
    assert classify_saturation(cert) is Saturation.LEVENSTEIN_TIGHT_TWO_DISTANCE
    # not tight
    cert = Certificate(3, 20, Field.COMPLEX, mu, profile, False, 0.1, False, True)
    assert classify_saturation(cert) is Saturation.NONE
    # a third angle
    profile = AngleProfile([0.0, 0.1, mu * mu], [40, 10, 140], 1e-6)
    cert = Certificate(3, 20, Field.COMPLEX, mu, profile, True, 0.0, False, True)
    assert classify_saturation(cert) is Saturation.NONE


def test_classify_contradiction_warns():
    mu = welch(2, 5)
    profile = AngleProfile([mu * mu], [10], 1e-6)
    cert = Certificate(2, 5, Field.COMPLEX, mu, profile, True, 0.0, True, True)
    assert assert_warns(RuntimeWarning, classify_saturation, cert) is Saturation.ETF
    diagnostics = []
    with assert_warns(RuntimeWarning):
        assert classify_saturation(cert, diagnostics=diagnostics) is Saturation.ETF
    assert_equal(len(diagnostics), 1)
    assert "violates" in diagnostics[0]


def test_certify_reports_contradiction(monkeypatch):
    # with Gerzon's bound forced to 2, the 12 lines of the maximal MUB of C^3 exceed
    # the orthoplex limit 2(Z - 1)
    monkeypatch.setattr("linepack.bounds.saturation.gerzon", lambda d, field: 2)
    with assert_warns(RuntimeWarning):
        cert = certify(mub_maximal(3))
    assert cert.saturated_bound is BoundName.ORTHOPLEX
    assert not cert.is_valid
    assert "Orthoplex saturation" in cert.diagnostics[0]
    assert certify(simplex(3)).is_valid
