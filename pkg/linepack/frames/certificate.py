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
"""Certificates Aggregating the Analysis of a Packing."""


import logging

from linepack.bounds import best_lower_bound, classify_saturation, BoundName, TOLERANCE_PROFILES
from linepack.frames.analysis import coherence, angle_profile, is_tight, is_equiangular, spans


__all__ = ["Certificate", "certify"]


class Certificate(object):
    """Certified quantities of a packing: coherence, angle set, tightness and saturation."""

    def __init__(self, d, n, field, coherence, angle_profile, is_tight, tightness_residual,
                 is_equiangular, spans, saturated_bound=BoundName.NONE, lower_bound=0.0,
                 diagnostics=()):
        self._d = d
        self._n = n
        self._field = field
        self._coherence = coherence
        self._angle_profile = angle_profile
        self._is_tight = is_tight
        self._tightness_residual = tightness_residual
        self._is_equiangular = is_equiangular
        self._spans = spans
        self._saturated_bound = saturated_bound
        self._lower_bound = lower_bound
        self._diagnostics = tuple(diagnostics)

    @property
    def d(self):
        """Ambient dimension."""
        return self._d

    @property
    def n(self):
        """Number of vectors."""
        return self._n

    @property
    def field(self):
        """Scalar field."""
        return self._field

    @property
    def coherence(self):
        """Coherence, or None when the frame has fewer than two vectors."""
        return self._coherence

    @property
    def angle_profile(self):
        """Clustered angle set, or None when the frame has fewer than two vectors."""
        return self._angle_profile

    @property
    def is_tight(self):
        """Whether the frame operator is a multiple of the identity."""
        return self._is_tight

    @property
    def tightness_residual(self):
        """Relative spectral distance of the frame operator from ``(n/d) I``."""
        return self._tightness_residual

    @property
    def is_equiangular(self):
        """Whether all pairs have the same modulus."""
        return self._is_equiangular

    @property
    def spans(self):
        """Whether the vectors span the ambient space."""
        return self._spans

    @property
    def saturated_bound(self):
        """Name of the saturated lower bound, ``BoundName.NONE`` if none."""
        return self._saturated_bound

    @property
    def lower_bound(self):
        """Best applicable lower bound on coherence."""
        return self._lower_bound

    @property
    def gap(self):
        """Coherence minus the best lower bound."""
        if self._coherence is None:
            return None
        return self._coherence - self._lower_bound

    @property
    def diagnostics(self):
        """Messages explaining why the certificate is degenerate or suspicious."""
        return self._diagnostics

    @property
    def is_valid(self):
        """Whether the certificate is free of diagnostics."""
        return not self._diagnostics

    def __repr__(self):
        if self._coherence is None:
            return "Certificate(d={0}, n={1}, field={2}, {3})".format(
                self._d, self._n, self._field.tag, "; ".join(self._diagnostics))
        return ("Certificate(d={0}, n={1}, field={2}, coherence={3:.15g}, tight={4}, "
                "equiangular={5}, spans={6}, saturated={7})").format(
                    self._d, self._n, self._field.tag, self._coherence, self._is_tight,
                    self._is_equiangular, self._spans, self._saturated_bound)


def certify(frame, profile="exact", cluster_tol=1e-6):
    """Return the :class:`Certificate` of a frame.

    Parameters
    ----------
    frame : UnitFrame
        Packing to certify.
    profile : {"exact", "numerical"}, optional
        Tolerance profile for tightness, equiangularity and saturation; exact
        constructions use 1e-8 and numerically optimized frames 1e-5.
    cluster_tol : float, optional
        Single-linkage threshold of the angle profile.
    """
    if profile not in TOLERANCE_PROFILES:
        raise ValueError("Argument profile={0} is not known! Choices: {1}".format(
            profile, sorted(TOLERANCE_PROFILES)))
    tol = TOLERANCE_PROFILES[profile]
    d, n, field = frame.d, frame.n, frame.field
    tight, residual = is_tight(frame, tol)
    spanning = spans(frame)
    if n < 2:
        return Certificate(d, n, field, None, None, tight, residual, False, spanning,
                           diagnostics=("n<2: coherence is undefined for n={0}".format(n),))

    mu = coherence(frame)
    profile_ = angle_profile(frame, cluster_tol)
    equiangular = is_equiangular(frame, tol)
    bound = best_lower_bound(d, n, field).best if d >= 2 else 0.0
    diagnostics = []
    if mu < bound - 1e-10:
        # a frame below a proven lower bound means the input or the arithmetic is broken
        diagnostics.append("coherence {0!r} is below the lower bound {1!r}".format(mu, bound))
        logging.warning("Certificate of d={0}, n={1}: {2}".format(d, n, diagnostics[-1]))

    draft = Certificate(d, n, field, mu, profile_, tight, residual, equiangular, spanning,
                        lower_bound=bound)
    saturated = classify_saturation(draft, tol, diagnostics).bound
    return Certificate(d, n, field, mu, profile_, tight, residual, equiangular, spanning,
                       saturated, bound, diagnostics)
