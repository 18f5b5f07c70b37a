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
"""Labels of Reference Constructions and a Dispatcher Building Them by Name."""


from enum import Enum

from linepack.field import Field
from linepack.constructions.standard import simplex, planar_lines, bloch_lift
from linepack.constructions.mub import mub_maximal
from linepack.constructions.naimark import naimark_complement
from linepack.constructions.conjecture import conjecture_c3n5
from linepack.constructions.removal import best_removal, remove_vector


__all__ = ["ConstructionKind", "ConstructionLabel", "construct"]


class ConstructionKind(Enum):
    """Kinds of reference constructions."""

    SIMPLEX = "simplex"
    MUB_MAXIMAL = "mub"
    NAIMARK_COMPLEMENT = "naimark"
    CONJECTURE_C3N5 = "conj"
    REMOVAL = "removal"
    PLANAR = "planar"
    BLOCH = "sphere"

    def __str__(self):
        return self.value


# catalog creator notes written for each construction
_NOTES = {
    ConstructionKind.SIMPLEX: "etf",
    ConstructionKind.MUB_MAXIMAL: "mub",
    ConstructionKind.NAIMARK_COMPLEMENT: "naimark",
    ConstructionKind.CONJECTURE_C3N5: "conj",
    ConstructionKind.REMOVAL: "AUTO",
    ConstructionKind.PLANAR: "planar",
    ConstructionKind.BLOCH: "sphere",
}


class ConstructionLabel(object):
    """Provenance of a packing produced by a construction."""

    def __init__(self, kind, params=(), note=None):
        """Initialize class.

        Parameters
        ----------
        kind : ConstructionKind or str
            Construction kind, or its value such as ``"mub"``.
        params : sequence of int, optional
            Integer parameters of the construction, e.g. ``(d,)`` or ``(j,)``.
        note : str, optional
            Catalog creator note; the conventional note of `kind` by default.
        """
        kind = ConstructionKind(kind)
        if note is None:
            note = _NOTES[kind]
        if not isinstance(note, str) or not note.strip():
            raise ValueError("Argument note should be a non-empty string! Given note={0}".format(
                note))
        self._kind = kind
        self._params = tuple(int(p) for p in params)
        self._note = note.strip()

    @property
    def kind(self):
        """Construction kind."""
        return self._kind

    @property
    def params(self):
        """Integer parameters."""
        return self._params

    @property
    def note(self):
        """Catalog creator note."""
        return self._note

    def __eq__(self, other):
        if not isinstance(other, ConstructionLabel):
            return NotImplemented
        return (self._kind, self._params, self._note) == (other.kind, other.params, other.note)

    def __hash__(self):
        return hash((self._kind, self._params, self._note))

    def __repr__(self):
        return "ConstructionLabel({0}, {1}, note={2!r})".format(self._kind.value,
                                                                list(self._params), self._note)


def construct(kind, d=None, field=Field.COMPLEX, frame=None, index=None, points=None):
    """Build a reference packing by kind and return it with its label.

    Parameters
    ----------
    kind : ConstructionKind or str
        Construction to run.
    d : int, optional
        Dimension for ``simplex`` and ``mub``; number of lines for ``planar``.
    field : Field or str, optional
        Field of a ``simplex``.
    frame : UnitFrame, optional
        Input packing of ``naimark`` and ``removal``.
    index : int, optional
        0-based index removed by ``removal``; the best removal is searched when None.
    points : np.ndarray, optional
        Points of the sphere lifted by ``sphere``.

    Returns
    -------
    frame : UnitFrame
    label : ConstructionLabel
    """
    kind = ConstructionKind(kind)
    if kind in (ConstructionKind.SIMPLEX, ConstructionKind.MUB_MAXIMAL, ConstructionKind.PLANAR):
        if d is None:
            raise ValueError("Construction {0} needs argument d!".format(kind))
        if kind is ConstructionKind.SIMPLEX:
            return simplex(d, field), ConstructionLabel(kind, (d,))
        if kind is ConstructionKind.MUB_MAXIMAL:
            return mub_maximal(d), ConstructionLabel(kind, (d,))
        return planar_lines(d), ConstructionLabel(kind, (d,))
    if kind is ConstructionKind.CONJECTURE_C3N5:
        return conjecture_c3n5(), ConstructionLabel(kind, (3, 5))
    if kind is ConstructionKind.BLOCH:
        if points is None:
            raise ValueError("Construction {0} needs argument points!".format(kind))
        lifted = bloch_lift(points)
        return lifted, ConstructionLabel(kind, (lifted.n,))
    if frame is None:
        raise ValueError("Construction {0} needs an input frame!".format(kind))
    if kind is ConstructionKind.NAIMARK_COMPLEMENT:
        return naimark_complement(frame), ConstructionLabel(kind, (frame.d, frame.n))
    if index is None:
        removed, index = best_removal(frame)
    else:
        removed = remove_vector(frame, index)
    return removed, ConstructionLabel(kind, (index,))
