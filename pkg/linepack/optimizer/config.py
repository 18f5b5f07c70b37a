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
"""Solver configuration: restart count, smoothing schedule and refinement switches."""


import configparser

from linepack.field import Field


__all__ = ["SolverConfig"]


def _to_bool(value):
    if isinstance(value, bool):
        return value
    key = str(value).strip().lower()
    if key not in configparser.RawConfigParser.BOOLEAN_STATES:
        raise ValueError("Boolean option should be one of true/false! Given {0}".format(value))
    return configparser.RawConfigParser.BOOLEAN_STATES[key]


def _to_optional_int(value):
    if value is None or str(value).strip().lower() in ("", "none"):
        return None
    return int(value)


# field name -> (converter, default); d, n and field have no default
_FIELDS = {
    "d": (int, None),
    "n": (int, None),
    "field": (Field.from_tag, None),
    "restarts": (int, 32),
    "seed": (int, 0),
    "beta_init": (float, 50.0),
    "beta_growth": (float, 2.0),
    "beta_rounds": (int, 12),
    "max_iters_per_round": (int, 2000),
    "step_init": (float, 0.1),
    "grad_tol": (float, 1e-12),
    "ap_enabled": (_to_bool, True),
    "ap_shrink": (float, 0.995),
    "ap_iters": (int, 200),
    "ap_patience": (int, 20),
    "ap_rounds": (int, 3),
    "ap_max_shrinks": (int, 20),
    "require_tight": (_to_bool, False),
    "phase_quantize_q": (_to_optional_int, None),
    "escape_enabled": (_to_bool, False),
    "workers": (int, 1),
}


class SolverConfig(object):
    """Validated, immutable configuration of a multi-restart packing search.

    Every option is available as a read-only attribute of the same name. The smoothing
    parameter starts at `beta_init` and is multiplied by `beta_growth` after each of the
    `beta_rounds` descent rounds. Alternating projections refine the iterate only in the
    last `ap_rounds` rounds, shrinking their target at most `ap_max_shrinks` times.
    """

    def __init__(self, d, n, field=Field.COMPLEX, **options):
        """Initialize class.

        Parameters
        ----------
        d : int
            Ambient dimension.
        n : int
            Number of lines.
        field : Field or str, optional
            Scalar field.
        options :
            Any other field of the configuration; see ``SolverConfig.fields()``.
        """
        unknown = set(options) - set(_FIELDS)
        if unknown:
            raise ValueError("Unknown solver options {0}!".format(sorted(unknown)))
        values = {"d": int(d), "n": int(n), "field": Field.from_tag(field)}
        for name, (convert, default) in _FIELDS.items():
            if name in values:
                continue
            value = options.get(name, default)
            values[name] = default if value is None else convert(value)
        self._values = values
        self._check()

    def _check(self):
        v = self._values
        if v["d"] < 1 or v["n"] < 2:
            raise ValueError("Arguments d and n should satisfy d >= 1 and n >= 2! "
                             "Given d={0}, n={1}".format(v["d"], v["n"]))
        for name in ("restarts", "beta_rounds", "max_iters_per_round", "ap_iters",
                     "ap_patience", "ap_rounds", "ap_max_shrinks", "workers"):
            if v[name] < 1:
                raise ValueError("Argument {0} should be positive! Given {0}={1}".format(
                    name, v[name]))
        if not 0 <= v["seed"] < 2 ** 64:
            raise ValueError("Argument seed should be a 64-bit unsigned integer! "
                             "Given seed={0}".format(v["seed"]))
        if v["beta_init"] <= 0 or v["beta_growth"] <= 1:
            raise ValueError("Arguments should satisfy beta_init > 0 and beta_growth > 1! "
                             "Given beta_init={0}, beta_growth={1}".format(v["beta_init"],
                                                                           v["beta_growth"]))
        if v["step_init"] <= 0 or v["grad_tol"] < 0:
            raise ValueError("Arguments should satisfy step_init > 0 and grad_tol >= 0! "
                             "Given step_init={0}, grad_tol={1}".format(v["step_init"],
                                                                        v["grad_tol"]))
        if not 0 < v["ap_shrink"] < 1:
            raise ValueError("Argument ap_shrink should be in (0, 1)! Given ap_shrink={0}".format(
                v["ap_shrink"]))
        q = v["phase_quantize_q"]
        if q is not None:
            if q < 1:
                raise ValueError("Argument phase_quantize_q should be positive! "
                                 "Given phase_quantize_q={0}".format(q))
            if v["field"] is Field.REAL:
                raise ValueError("Phase quantization is only supported for complex packings!")

    @classmethod
    def fields(cls):
        """Return the option names in their canonical order."""
        return list(_FIELDS)

    @classmethod
    def from_file(cls, fname, **overrides):
        """Initialize class from a flat ``key = value`` file.

        Keys must match option names exactly; ``#`` starts a comment line. Keyword
        arguments override values read from the file.

        Parameters
        ----------
        fname : str
            Path to the configuration file.
        """
        parser = configparser.ConfigParser(comment_prefixes=("#",), inline_comment_prefixes=("#",),
                                           interpolation=None)
        parser.optionxform = str
        with open(fname, "r") as handle:
            parser.read_string("[solver]\n" + handle.read(), source=str(fname))
        values = dict(parser["solver"])
        values.update((key, val) for key, val in overrides.items() if val is not None)
        missing = [key for key in ("d", "n") if key not in values]
        if missing:
            raise ValueError("Configuration file {0} misses {1}!".format(fname, missing))
        return cls(**values)

    def replace(self, **changes):
        """Return a copy with some options changed."""
        values = self.as_dict()
        values.update(changes)
        return SolverConfig(**values)

    def as_dict(self):
        """Return the options as a plain dictionary."""
        return dict(self._values)

    def __getattr__(self, name):
        values = self.__dict__.get("_values")
        if values is None or name not in values:
            raise AttributeError(name)
        return values[name]

    def __getstate__(self):
        return self._values

    def __setstate__(self, state):
        self._values = state

    def __eq__(self, other):
        if not isinstance(other, SolverConfig):
            return NotImplemented
        return self._values == other._values

    def __repr__(self):
        return "SolverConfig({0})".format(", ".join(
            "{0}={1}".format(key, val) for key, val in self._values.items()))
