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
"""A Conjectured Optimal Packing of Five Lines in Three Complex Dimensions."""


from math import sqrt

import numpy as np

from linepack.field import Field
from linepack.frames.frame import UnitFrame


__all__ = ["conjecture_c3n5"]


def conjecture_c3n5():
    r"""Return the closed-form packing of 5 vectors in :math:`\mathbb{C}^3`.

    .. math::
       \Phi = \begin{bmatrix} a & b & b & c & c \\ b & a & b & cw & cw^2 \\
                              b & b & a & cw^2 & cw \end{bmatrix},\quad
       a = \frac{\sqrt{13} + \sqrt{2 + \sqrt{13}} - 1}{3\sqrt{3}},\;
       b = \sqrt{\frac{1 - a^2}{2}},\; c = \frac{1}{\sqrt{3}},\; w = e^{2\pi i/3}

    The constants are evaluated from the closed form at run time.
    """
    a = (sqrt(13.0) + sqrt(2.0 + sqrt(13.0)) - 1.0) / (3.0 * sqrt(3.0))
    b = sqrt((1.0 - a * a) / 2.0)
    c = 1.0 / sqrt(3.0)
    w = np.exp(2j * np.pi / 3.0)
    vectors = np.array([[a, b, b, c, c],
                        [b, a, b, c * w, c * w ** 2],
                        [b, b, a, c * w ** 2, c * w]])
    return UnitFrame(vectors, Field.COMPLEX, norm_tol=1e-14)
