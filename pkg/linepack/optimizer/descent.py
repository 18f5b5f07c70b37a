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
"""Projected gradient descent of the smoothed coherence on products of unit spheres."""


import numpy as np

from linepack.frames.frame import UnitFrame
from linepack.optimizer.surrogate import squared_surrogate, tangent_projection
from linepack.utils.linalg import normalize_columns


__all__ = ["descent_round"]


# sufficient decrease constant of the backtracking line search
_ARMIJO = 1e-4
_MIN_STEP = 1e-16


def descend(vectors, beta, max_iters, step_init, grad_tol):
    """Run backtracking descent on column-normalized `vectors` and count the iterations.

    Real arrays stay real, so real packings are searched inside real space.

    Returns
    -------
    vectors : np.ndarray
        Final iterate; its surrogate value is not larger than the input's.
    iterations : int

    Raises
    ------
    FloatingPointError
        If the iterates stop being finite.
    """
    value, egrad = squared_surrogate(vectors, beta)
    step = step_init
    iterations = 0
    for iterations in range(1, max_iters + 1):
        tgrad = tangent_projection(vectors, egrad)
        gnorm2 = float(np.sum(np.abs(tgrad) ** 2))
        if not np.isfinite(gnorm2):
            raise FloatingPointError("Gradient of the smoothed coherence is not finite.")
        if np.sqrt(gnorm2) <= grad_tol:
            break
        while True:
            candidate = normalize_columns(vectors - step * tgrad)
            cand_value, cand_grad = squared_surrogate(candidate, beta)
            if cand_value <= value - _ARMIJO * step * gnorm2:
                break
            step *= 0.5
            if step < _MIN_STEP:
                return vectors, iterations
        vectors, value, egrad = candidate, cand_value, cand_grad
        step = min(2.0 * step, step_init)
    return vectors, iterations


def descent_round(frame, beta, cfg):
    """Return the frame after one round of descent of the smoothed coherence.

    Parameters
    ----------
    frame : UnitFrame
        Starting packing.
    beta : float
        Smoothing parameter of this round.
    cfg : SolverConfig
        Supplies `max_iters_per_round`, `step_init` and `grad_tol`.
    """
    if frame.n < 2:
        return frame
    vectors, _ = descend(frame.array(), beta, cfg.max_iters_per_round, cfg.step_init,
                         cfg.grad_tol)
    return UnitFrame(vectors, frame.field, norm_tol=max(1e-12, frame.norm_tol))
