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
"""The Scalar Field Module.

Lines are packed either in real or in complex projective space. The field decides the
bound formulas (through Gerzon's bound and the real dimension ``2m`` of a scalar) and the
tangent spaces used by the optimizer.
"""

from enum import Enum
from fractions import Fraction


__all__ = ["Field"]


class Field(Enum):
    """Scalar field of a packing, tagged ``R`` or ``C`` as in packing files."""

    REAL = "R"
    COMPLEX = "C"

    @property
    def tag(self):
        """One-letter tag used in packing files and catalog keys."""
        return self.value

    @property
    def m(self):
        r"""Half of the real dimension of a scalar, :math:`2m = \dim_{\mathbb{R}} \mathbb{F}`."""
        if self is Field.REAL:
            return Fraction(1, 2)
        return Fraction(1)

    @property
    def is_complex(self):
        """Whether scalars carry a phase."""
        return self is Field.COMPLEX

    @classmethod
    def from_tag(cls, tag):
        """Return the field for a tag; accepts ``R``/``C`` and the enum itself.

        Parameters
        ----------
        tag : str or Field
            One of ``"R"``, ``"C"``, ``"real"``, ``"complex"`` (case-insensitive).
        """
        if isinstance(tag, cls):
            return tag
        if not isinstance(tag, str):
            raise TypeError("Argument tag should be a string! Given tag={0}".format(tag))
        key = tag.strip().lower()
        if key in ("r", "real"):
            return cls.REAL
        if key in ("c", "complex"):
            return cls.COMPLEX
        raise ValueError("Argument tag should be one of R or C! Given tag={0}".format(tag))

    def __str__(self):
        return self.value
