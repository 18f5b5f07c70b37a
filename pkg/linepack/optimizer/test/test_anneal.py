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
"""Test linepack.optimizer.anneal."""


import os
import time

import numpy as np
import pytest
from numpy.testing import assert_raises, assert_equal

from linepack.field import Field
from linepack.frames import UnitFrame, is_tight
from linepack.constructions import simplex
from linepack.optimizer.config import SolverConfig
from linepack.optimizer.anneal import anneal, random_frame, SolveResult


# searches with the full default schedule take minutes
slow = pytest.mark.skipif(not os.environ.get("LINEPACK_SLOW_TESTS"),
                          reason="set LINEPACK_SLOW_TESTS=1 to run full searches")
# restarts are shared by processes; results do not depend on the count
WORKERS = min(4, os.cpu_count() or 1)


def small_config(d, n, field, **options):
    values = dict(restarts=4, beta_rounds=6, max_iters_per_round=300, ap_iters=50)
    values.update(options)
    return SolverConfig(d, n, field, **values)


def test_random_frame():
    frame = random_frame(3, 5, "R", np.random.default_rng(0))
    assert frame.field is Field.REAL
    assert_equal((frame.d, frame.n), (3, 5))
    again = random_frame(3, 5, Field.REAL, np.random.default_rng(0))
    assert_equal(frame.vectors, again.vectors)


def test_anneal_orthonormal():
    result = anneal(SolverConfig(3, 3, "C", restarts=2))
    assert isinstance(result, SolveResult)
    assert_equal(result.best_coherence, 0.0)
    assert_equal(result.per_restart_coherences, (0.0,))
    assert_equal(result.iterations_used, 0)
    assert_equal(result.gap_to_bound, 0.0)


def test_anneal_three_real_lines():
    result = anneal(small_config(2, 3, "R"))
    assert result.best_frame.field is Field.REAL
    assert result.best_coherence <= 0.5 + 1e-5
    assert_equal(len(result.per_restart_coherences), 4)
    assert_equal(result.best_coherence, min(result.per_restart_coherences))
    assert result.gap_to_bound >= -1e-12
    assert result.iterations_used > 0
    assert abs(result.certificate.coherence - result.best_coherence) <= 1e-15


def test_anneal_four_complex_lines():
    result = anneal(small_config(2, 4, "C", restarts=8))
    assert result.best_coherence <= np.sqrt(1.0 / 3.0) + 1e-4


def test_anneal_deterministic():
    cfg = small_config(2, 4, "C", restarts=3, beta_rounds=3, seed=7)
    first, second = anneal(cfg), anneal(cfg)
    assert_equal(first.per_restart_coherences, second.per_restart_coherences)
    assert_equal(first.best_frame.vectors, second.best_frame.vectors)
    parallel = anneal(cfg.replace(workers=2))
    assert_equal(parallel.per_restart_coherences, first.per_restart_coherences)
    # restarts of different seeds may reach the same optimum; the packings still differ
    other = anneal(cfg.replace(seed=8))
    assert not np.array_equal(other.best_frame.vectors, first.best_frame.vectors)
    draws = [random_frame(2, 4, "C", np.random.default_rng([seed, 0])).vectors for seed in (7, 8)]
    assert not np.array_equal(draws[0], draws[1])


def test_anneal_warm_start():
    cfg = small_config(2, 3, "R", restarts=1, beta_rounds=2)
    result = anneal(cfg, warm_start=simplex(2, Field.REAL))
    assert result.best_coherence <= 0.5 + 1e-12
    assert_raises(ValueError, anneal, cfg, simplex(3, Field.REAL))
    assert_raises(ValueError, anneal, cfg, simplex(2, Field.COMPLEX).as_complex())
    assert_raises(TypeError, anneal, {"d": 2, "n": 3})


def test_anneal_require_tight():
    result = anneal(small_config(2, 4, "C", restarts=2, require_tight=True))
    assert is_tight(result.best_frame, 1e-6)[0]
    assert result.certificate.is_tight


def test_anneal_refinements():
    cfg = small_config(2, 4, "C", restarts=2, phase_quantize_q=6, escape_enabled=True)
    result = anneal(cfg)
    assert result.best_coherence <= np.sqrt(1.0 / 3.0) + 1e-2
    result = anneal(cfg.replace(ap_enabled=False, phase_quantize_q=None))
    assert result.best_coherence <= np.sqrt(1.0 / 3.0) + 1e-2


@slow
def test_anneal_sic_three():
    start = time.perf_counter()
    result = anneal(SolverConfig(3, 9, "C", seed=0, workers=WORKERS))
    assert result.best_coherence <= 0.5 + 1e-3
    assert time.perf_counter() - start <= 300.0


@slow
def test_anneal_seven_lines_five_dimensions():
    start = time.perf_counter()
    result = anneal(SolverConfig(5, 7, "C", seed=0, workers=WORKERS))
    assert result.best_coherence <= 0.267
    assert time.perf_counter() - start <= 300.0


def test_anneal_projection_rounds():
    # projections in the last round only, with a single target shrink
    cfg = small_config(2, 3, "R", ap_rounds=1, ap_max_shrinks=1)
    result = anneal(cfg)
    assert result.best_coherence <= 0.5 + 1e-5
    # more projection rounds than descent rounds refine every round
    result = anneal(cfg.replace(ap_rounds=10, restarts=2))
    assert result.best_coherence <= 0.5 + 1e-5
