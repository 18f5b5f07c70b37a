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
"""The Catalog Module: a local leaderboard of the best known packings.

A catalog is a directory holding ``index.jsonl`` (one JSON object per entry) and the
packings themselves under ``packings/<field>/<d>/<n>.txt``. Every mutation takes an
advisory lock file at the root and rewrites files atomically (temporary file, then
rename), so readers always see a consistent snapshot.
"""


import os
import csv
import io
import json
import time
import logging
import tempfile
from contextlib import contextmanager
from enum import Enum

from linepack.field import Field
from linepack.frames.analysis import coherence
from linepack.frames.certificate import certify
from linepack.bounds.bounds import best_lower_bound
from linepack.constructions.removal import best_removal
from linepack.catalog.packing import (parse_packing, serialize_packing, read_packing,
                                      read_points, PackingFormatError)
from linepack.constructions.standard import bloch_lift


__all__ = ["CatalogEntry", "Catalog", "Decision", "Submission", "CatalogLockedError",
           "default_root", "IMPROVEMENT_TOL"]


# a submission must beat the incumbent by more than this
IMPROVEMENT_TOL = 1e-10
# re-certified coherence must match the index within this
RECERTIFY_TOL = 1e-9
COLUMNS = ("d", "n", "field", "coherence", "lower_bound", "gap", "creator_note")


class CatalogLockedError(RuntimeError):
    """Raised when another process holds the catalog lock."""


class Decision(Enum):
    """Outcome of a submission."""

    ACCEPTED = "Accepted"
    REJECTED_WORSE = "RejectedWorse"
    REJECTED_INVALID = "RejectedInvalid"

    def __str__(self):
        return self.value


def default_root():
    """Return ``$LINEPACK_CATALOG`` or ``./catalog``."""
    return os.environ.get("LINEPACK_CATALOG", "catalog")


def lower_bound(d, n, field):
    """Return the best lower bound on coherence, including the degenerate cases."""
    if d == 1:
        # all lines of F^1 coincide
        return 1.0
    return best_lower_bound(d, n, field).best


class CatalogEntry(object):
    """Leaderboard row of one ``(d, n, field)``."""

    def __init__(self, d, n, field, coherence, lower_bound, creator_note, timestamp,
                 packing_ref):
        """Initialize class.

        Parameters
        ----------
        d, n : int
            Dimension and number of vectors.
        field : Field or str
            Scalar field.
        coherence : float
            Certified coherence of the packing.
        lower_bound : float
            Best lower bound at ``(d, n, field)``.
        creator_note : str
            Initials, construction tag or ``"AUTO"``.
        timestamp : float
            UTC seconds since the epoch.
        packing_ref : str
            Packing file path relative to the catalog root, with ``/`` separators.
        """
        if not isinstance(creator_note, str) or not creator_note.strip():
            raise ValueError("Argument creator_note should be a non-empty string! "
                             "Given creator_note={0!r}".format(creator_note))
        if coherence < lower_bound - IMPROVEMENT_TOL:
            raise ValueError("Coherence {0!r} is below the lower bound {1!r}!".format(
                coherence, lower_bound))
        self._d = int(d)
        self._n = int(n)
        self._field = Field.from_tag(field)
        self._coherence = float(coherence)
        self._lower_bound = float(lower_bound)
        self._creator_note = creator_note.strip()
        self._timestamp = float(timestamp)
        self._packing_ref = str(packing_ref)

    @property
    def d(self):
        """Ambient dimension."""
        return self._d

    @property
    def n(self):
        """Number of vectors."""
        return self._n

    @property
    def field(self):
        """Scalar field."""
        return self._field

    @property
    def key(self):
        """Catalog key ``(d, n, field)``."""
        return self._d, self._n, self._field

    @property
    def coherence(self):
        return self._coherence

    @property
    def lower_bound(self):
        return self._lower_bound

    @property
    def gap(self):
        """Coherence minus lower bound."""
        return self._coherence - self._lower_bound

    @property
    def creator_note(self):
        return self._creator_note

    @property
    def timestamp(self):
        return self._timestamp

    @property
    def packing_ref(self):
        return self._packing_ref

    def to_dict(self):
        """Return the JSON-ready fields of the entry."""
        return {"d": self._d, "n": self._n, "field": self._field.tag,
                "coherence": self._coherence, "lower_bound": self._lower_bound,
                "creator_note": self._creator_note, "timestamp": self._timestamp,
                "packing_ref": self._packing_ref}

    @classmethod
    def from_dict(cls, data):
        """Initialize class from the fields written by :meth:`to_dict`."""
        return cls(data["d"], data["n"], data["field"], data["coherence"], data["lower_bound"],
                   data["creator_note"], data["timestamp"], data["packing_ref"])

    def __eq__(self, other):
        if not isinstance(other, CatalogEntry):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return "CatalogEntry(d={0}, n={1}, field={2}, coherence={3:.12g}, note={4!r})".format(
            self._d, self._n, self._field.tag, self._coherence, self._creator_note)


class Submission(object):
    """Result of :meth:`Catalog.submit`."""

    def __init__(self, decision, certificate, entry=None, propagated=(), reason=""):
        self._decision = decision
        self._certificate = certificate
        self._entry = entry
        self._propagated = tuple(propagated)
        self._reason = reason

    @property
    def decision(self):
        """A :class:`Decision`."""
        return self._decision

    @property
    def certificate(self):
        """Certificate of the submitted frame."""
        return self._certificate

    @property
    def entry(self):
        """The new entry when accepted, the incumbent when rejected as worse, else None."""
        return self._entry

    @property
    def propagated(self):
        """Keys created or improved by AUTO propagation."""
        return self._propagated

    @property
    def reason(self):
        """Human readable explanation of the decision."""
        return self._reason

    def __repr__(self):
        return "Submission({0}, {1!r})".format(self._decision, self._reason)


class Catalog(object):
    """Leaderboard of best known packings stored in a directory."""

    def __init__(self, root=None, create=True):
        """Initialize class.

        Parameters
        ----------
        root : str, optional
            Catalog directory; ``$LINEPACK_CATALOG`` or ``./catalog`` by default.
        create : bool, optional
            Create the directory when missing.
        """
        root = default_root() if root is None else str(root)
        if not os.path.isdir(root):
            if not create:
                raise OSError("Catalog directory {0} does not exist!".format(root))
            os.makedirs(root)
        self._root = root
        self._entries = self._read_index()

    @property
    def root(self):
        """Catalog directory."""
        return self._root

    @property
    def index_path(self):
        """Path of the JSON-lines index."""
        return os.path.join(self._root, "index.jsonl")

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        d, n, field = key
        return (d, n, Field.from_tag(field)) in self._entries

    def get(self, d, n, field):
        """Return the entry at ``(d, n, field)`` or None."""
        return self._entries.get((d, n, Field.from_tag(field)))

    def entries(self):
        """Return all entries sorted by field tag, dimension and number of vectors."""
        return [self._entries[key] for key in sorted(self._entries,
                                                      key=lambda k: (k[2].tag, k[0], k[1]))]

    def packing_path(self, entry):
        """Return the absolute path of the packing file of `entry`."""
        return os.path.join(self._root, *entry.packing_ref.split("/"))

    def load_frame(self, entry):
        """Return the packing of `entry`."""
        return read_packing(self.packing_path(entry))

    def _read_index(self):
        entries = {}
        if not os.path.exists(self.index_path):
            return entries
        with open(self.index_path, "r", encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    entry = CatalogEntry.from_dict(json.loads(line))
                except (KeyError, ValueError) as error:
                    raise ValueError("Corrupt catalog index {0}, line {1}: {2}".format(
                        self.index_path, lineno, error))
                entries[entry.key] = entry
        return entries

    def _write_atomic(self, path, data):
        directory = os.path.dirname(path)
        if not os.path.isdir(directory):
            os.makedirs(directory)
        handle, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-")
        try:
            with os.fdopen(handle, "wb") as stream:
                stream.write(data)
            os.replace(tmp_path, path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise

    def _write_index(self):
        lines = [json.dumps(entry.to_dict(), sort_keys=True) for entry in self.entries()]
        data = "".join(line + "\n" for line in lines)
        self._write_atomic(self.index_path, data.encode("utf-8"))

    @contextmanager
    def _lock(self):
        lock_path = os.path.join(self._root, ".lock")
        try:
            handle = os.open(lock_path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
        except FileExistsError:
            raise CatalogLockedError("Catalog {0} is locked by another writer ({1} exists)."
                                     "".format(self._root, lock_path))
        try:
            os.write(handle, str(os.getpid()).encode("ascii"))
            os.close(handle)
            # another writer may have changed the index since it was read
            self._entries = self._read_index()
            yield
        finally:
            os.remove(lock_path)

    def _install(self, frame, certificate, note):
        """Write the packing and its index entry; the lock must be held."""
        d, n, field = frame.d, frame.n, frame.field
        ref = "packings/{0}/{1}/{2}.txt".format(field.tag, d, n)
        self._write_atomic(os.path.join(self._root, *ref.split("/")), serialize_packing(frame))
        entry = CatalogEntry(d, n, field, certificate.coherence, lower_bound(d, n, field),
                             note, time.time(), ref)
        self._entries[entry.key] = entry
        self._write_index()
        return entry

    def _submit(self, frame, note, propagate):
        certificate = certify(frame, "numerical")
        key = (frame.d, frame.n, frame.field.tag)
        if not certificate.is_valid:
            reason = "; ".join(certificate.diagnostics)
            logging.info("Rejected {0}: invalid ({1})".format(key, reason))
            return Submission(Decision.REJECTED_INVALID, certificate, reason=reason)
        incumbent = self.get(frame.d, frame.n, frame.field)
        if incumbent is not None and not (certificate.coherence
                                          < incumbent.coherence - IMPROVEMENT_TOL):
            reason = "coherence {0:.12g} does not improve on {1:.12g} ({2})".format(
                certificate.coherence, incumbent.coherence, incumbent.creator_note)
            logging.info("Rejected {0}: {1}".format(key, reason))
            return Submission(Decision.REJECTED_WORSE, certificate, incumbent, reason=reason)
        entry = self._install(frame, certificate, note)
        logging.info("Accepted {0}: coherence {1:.12g}, note {2!r}".format(
            key, entry.coherence, entry.creator_note))
        propagated = self._propagate(frame.d, frame.n, frame.field) if propagate else []
        return Submission(Decision.ACCEPTED, certificate, entry, propagated,
                          reason="new best at {0}".format(key))

    def submit(self, frame, note, propagate=True):
        """Certify `frame` and keep it when it beats the incumbent.

        A frame is accepted when no entry exists at its ``(d, n, field)`` or when its
        coherence is below the incumbent's by more than 1e-10. Accepted frames trigger
        AUTO propagation to fewer vectors unless `propagate` is False.

        Parameters
        ----------
        frame : UnitFrame
            Candidate packing.
        note : str
            Creator note of the entry.

        Returns
        -------
        submission : Submission
        """
        if not isinstance(note, str) or not note.strip():
            raise ValueError("Argument note should be a non-empty string! Given note={0!r}"
                             "".format(note))
        with self._lock():
            return self._submit(frame, note, propagate)

    def _propagate(self, d, n, field):
        source = self.get(d, n, field)
        if source is None:
            raise ValueError("No catalog entry at (d={0}, n={1}, field={2})!".format(
                d, n, field.tag))
        updated = []
        frame = self.load_frame(source)
        while frame.n - 1 >= 2:
            removed, index = best_removal(frame)
            mu = coherence(removed)
            target = self.get(d, removed.n, field)
            if target is not None and not mu < target.coherence - IMPROVEMENT_TOL:
                break
            entry = self._install(removed, certify(removed, "numerical"), "AUTO")
            logging.info("AUTO {0}: removed vector {1} of n={2}, coherence {3:.12g}".format(
                entry.key[:2] + (field.tag,), index + 1, frame.n, entry.coherence))
            updated.append(entry.key)
            frame = removed
        return updated

    def auto_propagate(self, d, n, field):
        """Fill or improve entries with fewer vectors by removing vectors.

        The best single-vector removal of the ``(d, n)`` packing replaces the ``(d, n - 1)``
        entry when that is missing or worse by more than 1e-10, and the process repeats
        downwards while it improves and at least two vectors remain.

        Returns
        -------
        keys : list of tuple
            Keys ``(d, n, field)`` created or improved, in decreasing `n`.
        """
        field = Field.from_tag(field)
        with self._lock():
            return self._propagate(d, n, field)

    def render_table(self, fmt="text"):
        """Return the leaderboard as bytes in ``text``, ``csv`` or ``json`` format.

        Rows are sorted by field, `d` and `n`; numbers have 12 significant digits.
        """
        rows = []
        for entry in self.entries():
            rows.append([entry.d, entry.n, entry.field.tag, float("%.12g" % entry.coherence),
                         float("%.12g" % entry.lower_bound), float("%.12g" % entry.gap),
                         entry.creator_note])
        if fmt == "json":
            data = [dict(zip(COLUMNS, row)) for row in rows]
            return (json.dumps(data, indent=1) + "\n").encode("utf-8")
        if fmt == "csv":
            stream = io.StringIO(newline="")
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(COLUMNS)
            for row in rows:
                writer.writerow(row[:3] + ["%.12g" % x for x in row[3:6]] + row[6:])
            return stream.getvalue().encode("utf-8")
        if fmt != "text":
            raise ValueError("Argument fmt should be one of text, csv, json! Given fmt={0}".format(
                fmt))
        lines = ["{0:>3} {1:>4} {2:>5} {3:>18} {4:>18} {5:>18}  {6}".format(*COLUMNS)]
        for row in rows:
            lines.append("{0:>3d} {1:>4d} {2:>5} {3:>18.12g} {4:>18.12g} {5:>18.12g}  {6}".format(
                *row))
        return ("\n".join(lines) + "\n").encode("utf-8")

    def _check(self):
        problems = []
        for entry in self.entries():
            key = "({0}, {1}, {2})".format(entry.d, entry.n, entry.field.tag)
            try:
                frame = self.load_frame(entry)
            except (OSError, PackingFormatError) as error:
                problems.append("{0}: packing file unreadable: {1}".format(key, error))
                continue
            if (frame.d, frame.n, frame.field) != entry.key:
                problems.append("{0}: packing file holds ({1}, {2}, {3})".format(
                    key, frame.d, frame.n, frame.field.tag))
                continue
            mu = certify(frame, "numerical").coherence
            if mu is None or abs(mu - entry.coherence) > RECERTIFY_TOL:
                problems.append("{0}: re-certified coherence {1!r} differs from {2!r}".format(
                    key, mu, entry.coherence))
            larger = self.get(entry.d, entry.n + 1, entry.field)
            if larger is not None and entry.coherence > larger.coherence + IMPROVEMENT_TOL:
                problems.append("{0}: coherence {1:.12g} exceeds {2:.12g} at n={3}".format(
                    key, entry.coherence, larger.coherence, entry.n + 1))
        return problems

    def fsck(self, repair=False):
        """Re-certify every entry and check that coherence grows with `n`.

        Parameters
        ----------
        repair : bool, optional
            Re-run AUTO propagation from every entry, largest `n` first, before checking.

        Returns
        -------
        problems : list of str
            Empty when the catalog is consistent.
        """
        if repair:
            with self._lock():
                for entry in sorted(self.entries(), key=lambda e: (e.field.tag, e.d, -e.n)):
                    if self.get(*entry.key) is entry:
                        self._propagate(entry.d, entry.n, entry.field)
        problems = self._check()
        for problem in problems:
            logging.warning("fsck {0}: {1}".format(self._root, problem))
        return problems

    def import_file(self, fname, note, promote=False, sphere=False):
        """Submit a local file: a packing file, or with `sphere` a file of 3D points.

        Parameters
        ----------
        fname : str
            Path of the file.
        note : str
            Creator note.
        promote : bool, optional
            File a real packing as a complex one.
        sphere : bool, optional
            Read points of the sphere and lift them to lines of C^2.
        """
        if sphere:
            frame = bloch_lift(read_points(fname))
        else:
            with open(str(fname), "rb") as handle:
                frame = parse_packing(handle.read())
        if promote:
            frame = frame.as_complex()
        logging.info("Importing {0} as (d={1}, n={2}, field={3})".format(
            fname, frame.d, frame.n, frame.field.tag))
        return self.submit(frame, note)

    def __repr__(self):
        return "Catalog({0!r}, entries={1})".format(self._root, len(self._entries))
