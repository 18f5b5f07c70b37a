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
"""Classification of Packings that Saturate a Coherence Lower Bound.

Equality in the Welch--Rankin bound characterizes equiangular tight frames; equality in
the Levenstein bound requires a tight frame with angle set :math:`\\{0, \\mu^2\\}`. The
orthoplex bound has no such characterization and is recognized by value. Equality in
the Bukh--Cox bound has no known characterization and is never reported.
"""


import warnings
from enum import Enum
from math import sqrt

from linepack.bounds.bounds import gerzon, welch, levenstein, BoundName


__all__ = ["Saturation", "classify_saturation", "TOLERANCE_PROFILES"]


# saturation tolerances for exact constructions and for numerically optimized frames
TOLERANCE_PROFILES = {"exact": 1e-8, "numerical": 1e-5}


class Saturation(Enum):
    """Kinds of bound saturation."""

    ETF = "ETF"
    ORTHOPLEX_SATURATING = "OrthoplexSaturating"
    LEVENSTEIN_TIGHT_TWO_DISTANCE = "LevensteinTightTwoDistance"
    NONE = "None"

    @property
    def bound(self):
        """Name of the saturated bound."""
        return {Saturation.ETF: BoundName.WELCH,
                Saturation.ORTHOPLEX_SATURATING: BoundName.ORTHOPLEX,
                Saturation.LEVENSTEIN_TIGHT_TWO_DISTANCE: BoundName.LEVENSTEIN,
                Saturation.NONE: BoundName.NONE}[self]

    def __str__(self):
        return self.value


def _contradiction(message, diagnostics):
    warnings.warn(message, RuntimeWarning)
    if diagnostics is not None:
        diagnostics.append(message)


def classify_saturation(cert, tol=TOLERANCE_PROFILES["exact"], diagnostics=None):
    """Return which lower bound, if any, the certified frame saturates.

    Parameters
    ----------
    cert : Certificate
        Certificate of a valid frame; needs ``d``, ``n``, ``field``, ``coherence``,
        ``is_tight``, ``is_equiangular`` and ``angle_profile``.
    tol : float, optional
        Tolerance on coherence equalities and on the angle set.
    diagnostics : list, optional
        Receives the message of a contradiction, see below.

    Warns
    -----
    If a saturation is detected although the corresponding necessary condition on `n`
    fails, which means the certificate contradicts the theory and should be inspected.
    The message is also appended to `diagnostics`.
    """
    d, n, field, mu = cert.d, cert.n, cert.field, cert.coherence
    if mu is None or d < 2 or n <= d:
        return Saturation.NONE
    zeta = gerzon(d, field)

    if abs(mu - welch(d, n)) <= tol and cert.is_equiangular and cert.is_tight:
        # Naimark complements of simplices lie in F^1, where Gerzon's bound does not apply
        if n - d >= 2 and n > min(zeta, gerzon(n - d, field)):
            _contradiction("ETF with n={0} violates n <= min(Z(d), Z(n-d)) for d={1}.".format(
                n, d), diagnostics)
        return Saturation.ETF

    if n > zeta and abs(mu - 1.0 / sqrt(d)) <= tol:
        if n > 2 * (zeta - 1):
            _contradiction("Orthoplex saturation with n={0} violates n <= 2(Z(d)-1)={1}.".format(
                n, 2 * (zeta - 1)), diagnostics)
        return Saturation.ORTHOPLEX_SATURATING

    if (n > zeta and abs(mu - levenstein(d, n, field)) <= tol and cert.is_tight and
            cert.angle_profile.is_subset_of([0.0, mu * mu], tol)):
        return Saturation.LEVENSTEIN_TIGHT_TWO_DISTANCE

    return Saturation.NONE
