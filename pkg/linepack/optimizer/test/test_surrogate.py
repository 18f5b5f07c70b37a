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
"""Test linepack.optimizer.surrogate."""


import numpy as np
from numpy.testing import assert_raises, assert_allclose, assert_equal

from linepack.field import Field
from linepack.frames import UnitFrame, coherence
from linepack.optimizer.surrogate import smoothed_coherence, smoothed_coherence_gradient


def random_frame(d, n, field, rng):
    vectors = rng.standard_normal((d, n))
    if field is Field.COMPLEX:
        vectors = vectors + 1j * rng.standard_normal((d, n))
    return UnitFrame(vectors, field, normalize=True)


def random_tangent(frame, rng):
    vectors = frame.array()
    direction = rng.standard_normal(vectors.shape)
    if frame.field is Field.COMPLEX:
        direction = direction + 1j * rng.standard_normal(vectors.shape)
    radial = np.sum(vectors.conjugate() * direction, axis=0).real
    direction = direction - vectors * radial
    return direction / np.linalg.norm(direction)


def smoothed_along(frame, direction, t, beta):
    moved = frame.array() + t * direction
    return smoothed_coherence(UnitFrame(moved, frame.field, normalize=True), beta)


def test_smoothed_coherence_sandwich():
    rng = np.random.default_rng(5)
    for field in Field:
        for d, n in [(2, 3), (3, 7), (4, 10)]:
            frame = random_frame(d, n, field, rng)
            mu = coherence(frame)
            pairs = n * (n - 1) / 2.0
            for beta in [1.0, 10.0, 100.0, 1000.0]:
                value = smoothed_coherence(frame, beta)
                assert mu <= value + 1e-15
                assert value <= np.sqrt(mu ** 2 + np.log(pairs) / beta) + 1e-12


def test_smoothed_coherence_orthonormal():
    # all pairs vanish, so the value is sqrt(log(pairs) / beta)
    for d, beta in [(3, 10.0), (4, 1.0), (5, 1000.0)]:
        frame = UnitFrame.orthonormal(d, d)
        pairs = d * (d - 1) / 2.0
        assert_allclose(smoothed_coherence(frame, beta), np.sqrt(np.log(pairs) / beta),
                        rtol=1e-14)
    assert_allclose(smoothed_coherence(UnitFrame.orthonormal(3, 3), 10.0), 0.33145321,
                    atol=1e-8)


def test_smoothed_coherence_limit():
    rng = np.random.default_rng(6)
    frame = random_frame(3, 7, Field.COMPLEX, rng)
    values = [smoothed_coherence(frame, beta) for beta in [1e2, 1e3, 1e4, 1e5, 1e6]]
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert values[-1] - coherence(frame) <= 1e-5


def test_smoothed_coherence_gradient_tangent():
    rng = np.random.default_rng(7)
    for field in Field:
        frame = random_frame(3, 8, field, rng)
        grad = smoothed_coherence_gradient(frame, 20.0)
        assert_equal(grad.shape, (3, 8))
        if field is Field.REAL:
            assert grad.dtype == float
        radial = np.sum(frame.array().conjugate() * grad, axis=0).real
        assert_allclose(radial, 0.0, atol=1e-12)


def test_smoothed_coherence_gradient_finite_difference():
    rng = np.random.default_rng(8)
    # the third derivative grows like beta**2, so the step shrinks with beta
    for beta, h in [(10.0, 1e-6), (1000.0, 1e-7)]:
        for field in Field:
            for _ in range(20):
                d = int(rng.integers(2, 5))
                n = int(rng.integers(d + 1, 3 * d + 2))
                frame = random_frame(d, n, field, rng)
                grad = smoothed_coherence_gradient(frame, beta)
                gnorm = np.linalg.norm(grad)
                for direction in [grad / gnorm, random_tangent(frame, rng)]:
                    exact = np.sum(grad.conjugate() * direction).real
                    approx = (smoothed_along(frame, direction, h, beta) -
                              smoothed_along(frame, direction, -h, beta)) / (2.0 * h)
                    assert abs(approx - exact) <= 1e-5 * gnorm


def test_smoothed_coherence_raises():
    frame = UnitFrame.orthonormal(2, 2)
    assert_raises(ValueError, smoothed_coherence, frame, 0.0)
    assert_raises(ValueError, smoothed_coherence_gradient, frame, -1.0)
    assert_raises(ValueError, smoothed_coherence, UnitFrame.orthonormal(2, 1), 1.0)
    assert_raises(TypeError, smoothed_coherence, np.identity(2), 1.0)
