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
r"""Lower Bounds on the Coherence of Line Packings.

This module evaluates Gerzon's bound :math:`\mathcal{Z}(d, \mathbb{F})` and the four
closed-form lower bounds on coherence (Bukh--Cox, Welch--Rankin, orthoplex and
Levenstein) together with Welch's bound on higher moments. Every bound is gated by the
range of `n` on which it is proven; outside that range an
:class:`BoundApplicabilityError` is raised instead of extrapolating.
"""


from enum import Enum
from math import comb, sqrt

from linepack.field import Field


__all__ = ["BoundName", "BoundApplicabilityError", "BoundReport", "gerzon", "bukh_cox",
           "welch", "orthoplex", "levenstein", "generalized_welch", "best_lower_bound"]


class BoundName(Enum):
    """Names of the coherence lower bounds."""

    BUKH_COX = "BukhCox"
    WELCH = "Welch"
    ORTHOPLEX = "Orthoplex"
    LEVENSTEIN = "Levenstein"
    NONE = "None"

    def __str__(self):
        return self.value


# preference among bounds attaining the maximum; bounds with a known equality
# characterization are named first
TIE_ORDER = (BoundName.WELCH, BoundName.ORTHOPLEX, BoundName.LEVENSTEIN, BoundName.BUKH_COX)


class BoundApplicabilityError(ValueError):
    """Raised when a bound is evaluated outside the range where it is proven."""


def _gerzon_continuous(x, field):
    """Gerzon's bound extended to real arguments (used for continuous-n analysis)."""
    if field is Field.COMPLEX:
        return x * x
    return 0.5 * x * (x + 1.0)


def gerzon(d, field):
    r"""Return Gerzon's bound, :math:`d^2` for complex and :math:`d(d+1)/2` for real space.

    Parameters
    ----------
    d : int
        Ambient dimension, at least one.
    field : Field or str
        Scalar field.
    """
    field = Field.from_tag(field)
    if d < 1:
        raise ValueError("Argument d should be positive! Given d={0}".format(d))
    if field is Field.COMPLEX:
        return d * d
    return d * (d + 1) // 2


def _bukh_cox_value(d, n, field):
    """Evaluate the Bukh--Cox expression for real-valued `n`."""
    m = float(field.m)
    excess = n - d
    zeta = _gerzon_continuous(excess, field)
    return zeta / (n * (1.0 + m * (excess - 1.0) * sqrt(1.0 / m + excess)) - zeta)


def _welch_value(d, n):
    """Evaluate the Welch--Rankin expression for real-valued `n`."""
    return sqrt((n - d) / (d * (n - 1.0)))


def _levenstein_value(d, n, field):
    """Evaluate the Levenstein expression for real-valued `n`."""
    m = float(field.m)
    return sqrt((n * (m + 1.0) - d * (m * d + 1.0)) / ((n - d) * (m * d + 1.0)))


def bukh_cox(d, n, field):
    r"""Return the Bukh--Cox bound, valid for :math:`n > d \geq 2`.

    .. math::
       \mu \geq \frac{\mathcal{Z}(n-d)}{n\left(1 + m(n-d-1)\sqrt{m^{-1} + n - d}\right)
                 - \mathcal{Z}(n-d)}

    Parameters
    ----------
    d : int
        Ambient dimension.
    n : int
        Number of vectors.
    field : Field or str
        Scalar field; sets :math:`m` and :math:`\mathcal{Z}`.
    """
    field = Field.from_tag(field)
    if d < 2 or n <= d:
        raise BoundApplicabilityError("Bukh-Cox bound requires n > d >= 2! Given d={0}, "
                                      "n={1}".format(d, n))
    return _bukh_cox_value(d, n, field)


def welch(d, n):
    r"""Return the Welch--Rankin bound :math:`\sqrt{(n-d)/(d(n-1))}`, valid for :math:`n > d`."""
    if d < 1 or n <= d:
        raise BoundApplicabilityError("Welch bound requires n > d >= 1! Given d={0}, "
                                      "n={1}".format(d, n))
    return _welch_value(d, n)


def orthoplex(d):
    r"""Return the orthoplex bound :math:`1/\sqrt{d}`.

    The bound does not depend on `n`; callers gate it to :math:`n > \mathcal{Z}(d)`.
    """
    if d < 2:
        raise BoundApplicabilityError("Orthoplex bound requires d >= 2! Given d={0}".format(d))
    return 1.0 / sqrt(d)


def levenstein(d, n, field, boundary=False):
    r"""Return the Levenstein bound, valid for :math:`n > \mathcal{Z}(d, \mathbb{F})`.

    .. math::
       \mu \geq \sqrt{\frac{n(m+1) - d(md+1)}{(n-d)(md+1)}}

    Parameters
    ----------
    d : int
        Ambient dimension.
    n : int
        Number of vectors.
    field : Field or str
        Scalar field.
    boundary : bool, optional
        Also evaluate the formula at :math:`n = \mathcal{Z}(d)`, where it coincides with
        the Welch--Rankin bound but is not a proven bound in its own right.
    """
    field = Field.from_tag(field)
    zeta = gerzon(d, field)
    if d < 2 or n < zeta or (n == zeta and not boundary):
        raise BoundApplicabilityError("Levenstein bound requires n > Z(d)={0}! Given d={1}, "
                                      "n={2}".format(zeta, d, n))
    return _levenstein_value(d, n, field)


def generalized_welch(d, n, t):
    r"""Return Welch's bound on the :math:`2t`-th power of coherence.

    .. math::
       \mu^{2t} \geq \frac{1}{n-1}\left(\frac{n}{\binom{d+t-1}{t}} - 1\right)

    The right-hand side is clamped at zero, so the result is zero whenever
    :math:`n \leq \binom{d+t-1}{t}`.
    """
    if d < 1 or n < 1 or t < 1:
        raise ValueError("Arguments d, n & t should be positive! Given d={0}, n={1}, "
                         "t={2}".format(d, n, t))
    if n < 2:
        return 0.0
    value = (n / float(comb(d + t - 1, t)) - 1.0) / (n - 1.0)
    if value <= 0.0:
        return 0.0
    return value ** (1.0 / (2 * t))


class BoundReport(object):
    """All applicable coherence lower bounds for one ``(d, n, field)``."""

    def __init__(self, d, n, field, values, applicability):
        """Initialize class.

        Parameters
        ----------
        d : int
            Ambient dimension.
        n : int
            Number of vectors.
        field : Field
            Scalar field.
        values : dict
            Map from :class:`BoundName` to the bound value, for applicable bounds only.
        applicability : dict
            Map from :class:`BoundName` to ``(applicable, reason)``.
        """
        self._d = d
        self._n = n
        self._field = field
        self._values = dict(values)
        self._applicability = dict(applicability)
        if self._values:
            best = max(self._values.values())
            # the name follows TIE_ORDER among bounds within 1e-12 of the maximum
            self._best_name = next(name for name in TIE_ORDER
                                   if name in self._values and self._values[name] >= best - 1e-12)
            self._best = best
        else:
            self._best, self._best_name = 0.0, BoundName.NONE

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
    def bukh_cox(self):
        """Bukh--Cox bound, or None when not applicable."""
        return self._values.get(BoundName.BUKH_COX)

    @property
    def welch(self):
        """Welch--Rankin bound, or None when not applicable."""
        return self._values.get(BoundName.WELCH)

    @property
    def orthoplex(self):
        """Orthoplex bound, or None when not applicable."""
        return self._values.get(BoundName.ORTHOPLEX)

    @property
    def levenstein(self):
        """Levenstein bound, or None when not applicable."""
        return self._values.get(BoundName.LEVENSTEIN)

    @property
    def best(self):
        """Largest applicable bound (zero when ``n <= d``)."""
        return self._best

    @property
    def best_name(self):
        """Name of the bound attaining :attr:`best`."""
        return self._best_name

    @property
    def applicability(self):
        """Map from bound name to ``(applicable, reason)``."""
        return dict(self._applicability)

    def values(self):
        """Return a dict of the applicable bound values."""
        return dict(self._values)

    def __repr__(self):
        return "BoundReport(d={0}, n={1}, field={2}, best={3:.12g} [{4}])".format(
            self._d, self._n, self._field.tag, self._best, self._best_name)


def best_lower_bound(d, n, field):
    """Return a :class:`BoundReport` with every bound applicable at ``(d, n, field)``.

    Parameters
    ----------
    d : int
        Ambient dimension, at least two.
    n : int
        Number of vectors, at least two.
    field : Field or str
        Scalar field.
    """
    field = Field.from_tag(field)
    if d < 2 or n < 2:
        raise ValueError("Arguments d & n should be at least 2! Given d={0}, n={1}".format(d, n))
    zeta = gerzon(d, field)
    values, applicability = {}, {}
    if n > d:
        values[BoundName.BUKH_COX] = bukh_cox(d, n, field)
        values[BoundName.WELCH] = welch(d, n)
        applicability[BoundName.BUKH_COX] = (True, "n > d")
        applicability[BoundName.WELCH] = (True, "n > d")
    else:
        applicability[BoundName.BUKH_COX] = (False, "n <= d: orthonormal vectors exist")
        applicability[BoundName.WELCH] = (False, "n <= d: orthonormal vectors exist")
    if n > zeta:
        values[BoundName.ORTHOPLEX] = orthoplex(d)
        values[BoundName.LEVENSTEIN] = levenstein(d, n, field)
        applicability[BoundName.ORTHOPLEX] = (True, "n > Z(d)={0}".format(zeta))
        applicability[BoundName.LEVENSTEIN] = (True, "n > Z(d)={0}".format(zeta))
    else:
        applicability[BoundName.ORTHOPLEX] = (False, "n <= Z(d)={0}".format(zeta))
        if n == zeta:
            reason = "boundary n = Z(d)={0}: formula equals Welch, not applied".format(zeta)
        else:
            reason = "n < Z(d)={0}".format(zeta)
        applicability[BoundName.LEVENSTEIN] = (False, reason)
    return BoundReport(d, n, field, values, applicability)
