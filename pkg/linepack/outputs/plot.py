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
"""Plotting Module: coherence bounds against the number of vectors."""


import numpy as np

import matplotlib
matplotlib.use('agg')
import matplotlib.pyplot as plt

from matplotlib import rcParams

from linepack.field import Field
from linepack.bounds.bounds import BoundName, best_lower_bound


__all__ = ['plot_bounds']


# line color of every bound
_STYLE = {BoundName.BUKH_COX: 'tab:green', BoundName.WELCH: 'tab:blue',
          BoundName.ORTHOPLEX: 'tab:red', BoundName.LEVENSTEIN: 'tab:purple'}


def plot_bounds(d, field, n_max, fname, catalog=None, xlim=None, ylim=None, dpi=300):
    r"""Plot the coherence lower bounds of dimension `d` versus the number of vectors.

    Each bound is drawn over the range of `n` where it applies. Coherences of the best
    known packings of a catalog are added as black dots.

    Parameters
    ----------
    d : int
        Ambient dimension, at least two.
    field : Field or str
        Scalar field.
    n_max : int
        Largest number of vectors, ``n_max > d``.
    fname : str
        A string representing the path to a filename for storing the plot.
        If the given filename does not have a proper extension, the 'png' format is used
        by default, i.e. plot is saved as filename.png.
    catalog : Catalog, optional
        Leaderboard whose entries of dimension `d` are plotted.
    xlim : 1-D array or sequence of length 2, optional
        The lower and higher limit of x axis.
    ylim : 1-D array or sequence of length 2, optional
        The lower and higher limit of y axis.
    dpi : int, optional
        Resolution of raster formats.
    """
    field = Field.from_tag(field)
    if n_max <= d:
        raise ValueError('Argument n_max should exceed d! Given n_max={0}, d={1}'.format(n_max, d))
    # set font
    rcParams['font.family'] = 'serif'
    rcParams['mathtext.fontset'] = 'stix'
    # create figure
    fig = plt.figure()
    ax = fig.add_subplot(1, 1, 1)
    ns = np.arange(d + 1, n_max + 1)
    reports = [best_lower_bound(d, int(n), field) for n in ns]
    for name, color in _STYLE.items():
        values = np.array([report.values().get(name, np.nan) for report in reports])
        if np.all(np.isnan(values)):
            continue
        ax.plot(ns, values, color=color, label=str(name))
    if catalog is not None:
        entries = [entry for entry in catalog.entries()
                   if entry.d == d and entry.field is field and entry.n <= n_max]
        if entries:
            ax.scatter([entry.n for entry in entries], [entry.coherence for entry in entries],
                       marker='o', color='k', s=12, label='best known', zorder=3)
    # set axis range
    if xlim:
        if len(xlim) != 2:
            raise ValueError('Argument xlim={0} should have a length 2!'.format(len(xlim)))
        ax.set_xlim(*xlim)
    if ylim:
        if len(ylim) != 2:
            raise ValueError('Argument ylim={0} should have a length 2!'.format(len(ylim)))
        ax.set_ylim(*ylim)
    ax.set_xlabel('number of vectors n', fontsize=12, fontweight='bold')
    ax.set_ylabel('coherence', fontsize=12, fontweight='bold')
    ax.set_title(r'Lower bounds in $\mathbb{{{0}}}^{{{1}}}$'.format(field.tag, d))
    ax.legend(frameon=False)
    # hide the right and top spines
    ax.spines['right'].set_visible(False)
    ax.spines['top'].set_visible(False)
    ax.xaxis.tick_bottom()
    ax.yaxis.tick_left()
    # save plot ('.png' extension is added by default, if filename is not a supported format)
    fig.savefig(fname, dpi=dpi)
    plt.close(fig)
