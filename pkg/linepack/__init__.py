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
# pragma pylint: disable=wildcard-import
"""The Main LinePack Package."""


from linepack.field import *
from linepack.frames import *
from linepack.bounds import *
from linepack.constructions import *
from linepack.optimizer import *
from linepack.catalog import *
from linepack.utils import *
from linepack.outputs import *


__version__ = '0.1.0'
