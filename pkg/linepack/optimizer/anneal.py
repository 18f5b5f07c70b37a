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
"""Multi-restart search for low-coherence packings with a growing smoothing parameter."""


import logging
import warnings
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from linepack.field import Field
from linepack.frames.frame import UnitFrame
from linepack.frames.analysis import coherence, spans
from linepack.frames.certificate import certify
from linepack.bounds.bounds import best_lower_bound
from linepack.utils.linalg import normalize_columns
from linepack.optimizer.config import SolverConfig
from linepack.optimizer.descent import descend
from linepack.optimizer.projection import (project, tight_polish, phase_quantize, max_modulus,
                                           tightness)
from linepack.optimizer.escape import escape


__all__ = ["SolveResult", "anneal", "random_frame"]


class SolveResult(object):
    """Outcome of a packing search."""

    def __init__(self, best_frame, per_restart_coherences, iterations_used, certificate,
                 lower_bound):
        """Initialize class.

        Parameters
        ----------
        best_frame : UnitFrame
            Winning packing.
        per_restart_coherences : sequence of float
            Best exact coherence of every restart, in restart order; ``inf`` marks a restart
            aborted by non-finite arithmetic.
        iterations_used : int
            Descent iterations summed over restarts.
        certificate : Certificate
            Certificate of the winner.
        lower_bound : float
            Best lower bound on the coherence for (d, n, field).
        """
        self._best_frame = best_frame
        self._per_restart = tuple(float(c) for c in per_restart_coherences)
        self._iterations = int(iterations_used)
        self._certificate = certificate
        self._lower_bound = float(lower_bound)

    @property
    def best_frame(self):
        """Winning packing."""
        return self._best_frame

    @property
    def best_coherence(self):
        """Coherence of the winning packing."""
        return min(self._per_restart)

    @property
    def certificate(self):
        """Certificate of the winning packing."""
        return self._certificate

    @property
    def per_restart_coherences(self):
        """Best coherence of each restart."""
        return self._per_restart

    @property
    def iterations_used(self):
        """Total number of descent iterations."""
        return self._iterations

    @property
    def gap_to_bound(self):
        """Distance from the best coherence to the best lower bound."""
        return self.best_coherence - self._lower_bound

    def __repr__(self):
        return "SolveResult(d={0}, n={1}, field={2}, coherence={3:.12g}, gap={4:.3g})".format(
            self._best_frame.d, self._best_frame.n, self._best_frame.field.tag,
            self.best_coherence, self.gap_to_bound)


def random_frame(d, n, field, rng):
    """Return `n` independent uniformly distributed unit vectors of F^d.

    Parameters
    ----------
    rng : np.random.Generator
        Source of the standard Gaussian entries; complex entries draw the real parts first.
    """
    field = Field.from_tag(field)
    vectors = rng.standard_normal((d, n))
    if field is Field.COMPLEX:
        vectors = vectors + 1j * rng.standard_normal((d, n))
    return UnitFrame(vectors, field, normalize=True)


class _Tracker(object):
    """Best iterate of one restart by exact coherence."""

    def __init__(self, require_tight):
        self.require_tight = require_tight
        self.vectors = None
        self.mu = np.inf

    def offer(self, vectors):
        if self.require_tight and tightness(vectors) > 1e-6:
            return False
        mu = max_modulus(vectors)
        if mu < self.mu:
            self.vectors, self.mu = vectors, mu
            return True
        return False


def _ap_schedule(vectors, cfg):
    """Shrink the projection target while alternating projections keep improving."""
    mu = max_modulus(vectors)
    for _ in range(cfg.ap_max_shrinks):
        if mu <= 0.0:
            break
        candidate = project(vectors, mu * cfg.ap_shrink, cfg.ap_iters, cfg.require_tight,
                            cfg.ap_patience)
        cand_mu = max_modulus(candidate)
        if not cand_mu < mu:
            break
        vectors, mu = candidate, cand_mu
    return vectors


def _restart(cfg, index, warm_start=None):
    """Run one restart; return (index, coherence, vectors, iterations)."""
    rng = np.random.default_rng([cfg.seed, index])
    real = cfg.field is Field.REAL
    if warm_start is not None:
        vectors = normalize_columns(np.array(warm_start, dtype=float if real else complex))
    else:
        vectors = random_frame(cfg.d, cfg.n, cfg.field, rng).array()
    tracker = _Tracker(cfg.require_tight)
    iterations = 0
    beta = cfg.beta_init
    try:
        if cfg.require_tight:
            vectors = tight_polish(vectors)
        tracker.offer(vectors)
        first_ap_round = cfg.beta_rounds - cfg.ap_rounds
        for round_index in range(cfg.beta_rounds):
            vectors, steps = descend(vectors, beta, cfg.max_iters_per_round, cfg.step_init,
                                     cfg.grad_tol)
            iterations += steps
            tracker.offer(tight_polish(vectors) if cfg.require_tight else vectors)
            if cfg.ap_enabled and round_index >= first_ap_round:
                refined = _ap_schedule(vectors, cfg)
                if tracker.offer(refined):
                    vectors = refined
            beta *= cfg.beta_growth
        if tracker.vectors is not None and cfg.phase_quantize_q is not None:
            best = UnitFrame(tracker.vectors, cfg.field, norm_tol=1e-10)
            quantized = phase_quantize(best, cfg.phase_quantize_q).array()
            if cfg.require_tight:
                quantized = tight_polish(quantized)
            tracker.offer(quantized)
            tracker.offer(_ap_schedule(quantized, cfg))
        if tracker.vectors is not None and cfg.escape_enabled:
            tracker.offer(escape(tracker.vectors, 10, 1e-3, rng, real))
    except FloatingPointError as error:
        logging.warning("Restart {0} aborted: {1}".format(index, error))
        return index, np.inf, None, iterations
    return index, tracker.mu, tracker.vectors, iterations


def _run_restart(args):
    return _restart(*args)


def _log_init(cfg):
    """Log an overview of the search."""
    logging.basicConfig(level=logging.INFO, format='%(levelname)s: %(message)s')
    logging.info("Packing search : d={0}, n={1}, field={2}".format(cfg.d, cfg.n, cfg.field))
    logging.info("Restarts       : {0} (seed {1}, workers {2})".format(cfg.restarts, cfg.seed,
                                                                     cfg.workers))
    logging.info("Smoothing      : beta={0} x {1} over {2} rounds".format(
        cfg.beta_init, cfg.beta_growth, cfg.beta_rounds))


def anneal(cfg, warm_start=None):
    """Search for a low-coherence packing with independent restarts.

    Every restart draws Gaussian vectors from a generator seeded with
    ``(cfg.seed, restart)``, then runs `beta_rounds` descent rounds, multiplying beta by
    `beta_growth` after each, optionally refining the last `ap_rounds` rounds with
    alternating projections. The best exact coherence seen is kept per restart, and the
    lowest over restarts wins (lowest restart index on ties). Serial and parallel runs give
    identical results; `workers` processes share the restarts.

    Parameters
    ----------
    cfg : SolverConfig
        Search configuration.
    warm_start : UnitFrame, optional
        Packing used in place of the random start of restart 0.

    Returns
    -------
    result : SolveResult
    """
    if not isinstance(cfg, SolverConfig):
        raise TypeError("Argument cfg should be a SolverConfig! Given {0}".format(type(cfg)))
    _log_init(cfg)
    if cfg.d >= 2:
        report = best_lower_bound(cfg.d, cfg.n, cfg.field)
        lower, lower_name = report.best, report.best_name
    else:
        # all lines of F^1 coincide
        lower, lower_name = 1.0, "trivial"
    if cfg.n <= cfg.d:
        frame = UnitFrame.orthonormal(cfg.d, cfg.n, cfg.field)
        mu = coherence(frame)
        logging.info("n <= d: orthonormal vectors have coherence {0}".format(mu))
        return SolveResult(frame, [mu], 0, certify(frame, "numerical"), lower)

    warm = None
    if warm_start is not None:
        if (warm_start.d, warm_start.n) != (cfg.d, cfg.n):
            raise ValueError("Warm start has shape ({0}, {1}) instead of ({2}, {3})!".format(
                warm_start.d, warm_start.n, cfg.d, cfg.n))
        if cfg.field is Field.REAL and warm_start.field is not Field.REAL:
            raise ValueError("A complex warm start cannot seed a real search!")
        warm = warm_start.array()

    jobs = [(cfg, index, warm if index == 0 else None) for index in range(cfg.restarts)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            outcomes = list(executor.map(_run_restart, jobs))
    else:
        outcomes = [_run_restart(job) for job in jobs]

    coherences = [mu for _, mu, _, _ in outcomes]
    iterations = sum(steps for _, _, _, steps in outcomes)
    for index, mu, _, steps in outcomes:
        logging.info("Restart {0:4d} : coherence {1:.12f} after {2} iterations".format(
            index, mu, steps))
    winner = int(np.argmin(coherences))
    if not np.isfinite(coherences[winner]):
        raise FloatingPointError("All {0} restarts aborted on non-finite values.".format(
            cfg.restarts))
    frame = UnitFrame(outcomes[winner][2], cfg.field, norm_tol=1e-12)
    if not spans(frame):
        warnings.warn("Best packing does not span F^{0}; it is not a Grassmannian "
                      "frame.".format(cfg.d), RuntimeWarning)
    result = SolveResult(frame, coherences, iterations, certify(frame, "numerical"),
                         lower)
    logging.info("Best coherence : {0:.12f} (restart {1}, gap to {2} bound {3:.3e})".format(
        result.best_coherence, winner, lower_name, result.gap_to_bound))
    return result
