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
"""The Coherence Lower Bounds Module."""


from linepack.bounds.bounds import *
from linepack.bounds.dominance import *
from linepack.bounds.saturation import *

# explicit export list, so that a star import of this package does not rebind
# ``linepack.bounds`` to its ``bounds`` submodule
from linepack.bounds import bounds as _bounds, dominance as _dominance, saturation as _saturation
__all__ = _bounds.__all__ + _dominance.__all__ + _saturation.__all__
