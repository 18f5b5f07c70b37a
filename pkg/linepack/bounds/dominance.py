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
"""Dominance Analysis of the Coherence Lower Bounds.

Treating `n` as a continuous variable locates where the Bukh--Cox bound hands over to
the Welch--Rankin bound; integer scans locate where the Levenstein bound overtakes the
orthoplex bound and which bound is largest on each range of `n`.
"""


import numpy as np
from scipy.optimize import bisect

from linepack.field import Field
from linepack.bounds.bounds import (gerzon, orthoplex, levenstein, best_lower_bound,
                                    _bukh_cox_value, _welch_value)


__all__ = ["Crossovers", "dominance_crossovers", "bound_regimes"]


class Crossovers(object):
    """Crossover points between the coherence lower bounds for fixed ``(d, field)``."""

    def __init__(self, d, field, coincidence, roots, levenstein_over_orthoplex):
        self._d = d
        self._field = field
        self._coincidence = coincidence
        self._roots = tuple(roots)
        self._levenstein_over_orthoplex = levenstein_over_orthoplex

    @property
    def d(self):
        """Ambient dimension."""
        return self._d

    @property
    def field(self):
        """Scalar field."""
        return self._field

    @property
    def coincidence(self):
        """The vector count ``d + 1`` at which Bukh--Cox and Welch--Rankin are equal."""
        return self._coincidence

    @property
    def roots(self):
        """Real `n` beyond ``d + 1`` where the Bukh--Cox and Welch--Rankin bounds cross."""
        return self._roots

    @property
    def levenstein_over_orthoplex(self):
        """Smallest integer `n` where Levenstein strictly exceeds orthoplex (None if beyond)."""
        return self._levenstein_over_orthoplex

    def __repr__(self):
        return "Crossovers(d={0}, field={1}, roots={2}, levenstein>orthoplex at n={3})".format(
            self._d, self._field.tag, ["{0:.6f}".format(r) for r in self._roots],
            self._levenstein_over_orthoplex)


def dominance_crossovers(d, field, n_max, step=0.01, xtol=1e-6):
    """Return the crossover points of the lower bounds for ``d + 1 <= n <= n_max``.

    Parameters
    ----------
    d : int
        Ambient dimension, at least two.
    field : Field or str
        Scalar field.
    n_max : int
        Largest number of vectors scanned; must exceed `d`.
    step : float, optional
        Grid spacing used to bracket sign changes before bisection.
    xtol : float, optional
        Absolute tolerance of the bisection.
    """
    field = Field.from_tag(field)
    if d < 2:
        raise ValueError("Argument d should be at least 2! Given d={0}".format(d))
    if n_max <= d:
        raise ValueError("Argument n_max should exceed d! Given d={0}, n_max={1}".format(
            d, n_max))

    def difference(x):
        return _bukh_cox_value(d, x, field) - _welch_value(d, x)

    # both bounds equal 1/d at n = d + 1; the scan starts just above that point
    grid = np.arange(d + 1.0 + step, n_max + 0.5 * step, step)
    signs = np.sign([difference(x) for x in grid])
    roots = []
    for index in np.nonzero(signs[:-1] * signs[1:] < 0)[0]:
        roots.append(bisect(difference, grid[index], grid[index + 1], xtol=xtol))

    threshold = orthoplex(d) + 1e-12
    crossing = None
    for n in range(gerzon(d, field) + 1, n_max + 1):
        if levenstein(d, n, field) > threshold:
            crossing = n
            break
    return Crossovers(d, field, float(d + 1), roots, crossing)


def bound_regimes(d, field, n_max):
    """Return maximal ranges of `n` with the same largest bound.

    Returns
    -------
    regimes : list of tuple
        Triples ``(BoundName, n_first, n_last)`` covering ``d + 1 <= n <= n_max``.
    """
    field = Field.from_tag(field)
    regimes = []
    for n in range(d + 1, n_max + 1):
        name = best_lower_bound(d, n, field).best_name
        if regimes and regimes[-1][0] is name:
            regimes[-1] = (name, regimes[-1][1], n)
        else:
            regimes.append((name, n, n))
    return regimes
