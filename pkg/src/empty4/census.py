"""Census persistence, statistics, and comparison.

A census is an ordered list of (V, b) rows, one per isomorphism class of
empty 4-simplices, stored as plain text: header lines starting with '#'
carry metadata, data lines are `V b0 b1 b2 b3 b4` with residues in [0,V).
Rows are sorted by (V, lexicographic tuple) and must be canonical fixpoints.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional

from .errors import InvariantViolation, ParseError
from .kernel import canonical, is_empty

FORMAT_ID = "empty4-census/1"


@dataclass(frozen=True)
class Census:
    rows: tuple  # of (V, (b0..b4)) pairs
    metadata: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def _validate_rows(rows) -> None:
    prev = None
    for V, b in rows:
        if prev is not None and (V, b) <= prev:
            if (V, b) == prev:
                raise InvariantViolation("duplicate row %d %s" % (V, b))
            raise InvariantViolation("rows out of order at %d %s" % (V, b))
        prev = (V, b)
        if not all(0 <= x < V for x in b):
            raise InvariantViolation("entries of %s out of range for V=%d" % (b, V))
        if canonical(V, b) != tuple(b):
            raise InvariantViolation("row %d %s is not canonical" % (V, b))
        if not is_empty(V, b):
            raise InvariantViolation("row %d %s is not empty" % (V, b))


def mk_census(rows: Iterable, metadata: Optional[dict] = None,
              validate: bool = True) -> Census:
    rows = tuple((int(V), tuple(int(x) for x in b)) for V, b in rows)
    if validate:
        _validate_rows(rows)
    return Census(rows, dict(metadata or {}))


# ---------------------------------------------------------------------------
# i/o

def write_census(c: Census, destination) -> None:
    """Write to a path or text file object; round-trips through read_census."""
    own = isinstance(destination, (str, bytes))
    fh = open(destination, "w") if own else destination
    try:
        fh.write("# %s\n" % FORMAT_ID)
        for key in sorted(c.metadata):
            fh.write("# %s: %s\n" % (key, c.metadata[key]))
        for V, b in c.rows:
            fh.write("%d %s\n" % (V, " ".join(str(x) for x in b)))
    finally:
        if own:
            fh.close()


def read_census(source, validate: bool = True) -> Census:
    own = isinstance(source, (str, bytes))
    fh = open(source) if own else source
    try:
        metadata = {}
        rows = []
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if ":" in body:
                    key, _, value = body.partition(":")
                    metadata[key.strip()] = value.strip()
                continue
            parts = line.split()
            if len(parts) != 6:
                raise ParseError("expected `V b0 b1 b2 b3 b4`, got %d fields"
                                 % len(parts), line=lineno)
            try:
                V, *b = (int(p) for p in parts)
            except ValueError:
                raise ParseError("non-integer field in %r" % line, line=lineno) from None
            if V < 1:
                raise ParseError("volume must be positive", line=lineno)
            rows.append((V, tuple(b)))
    finally:
        if own:
            fh.close()
    return mk_census(rows, metadata, validate=validate)


def census_to_text(c: Census) -> str:
    buf = io.StringIO()
    write_census(c, buf)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# statistics

def histogram_by_volume(c: Census) -> dict:
    out = {}
    for V, _ in c.rows:
        out[V] = out.get(V, 0) + 1
    return out


def width_histogram(c: Census) -> dict:
    """width -> (count, min volume, max volume); realizes every row."""
    from .geometry import realize, width
    from .tuples import mk_tuple
    out = {}
    for V, b in c.rows:
        w = width(realize(mk_tuple(V, b)))
        if w in out:
            n, lo, hi = out[w]
            out[w] = (n + 1, min(lo, V), max(hi, V))
        else:
            out[w] = (1, V, V)
    return out


def excess_report(c: Census) -> list:
    """Per row: (V-1, S-5, (V, b)) with S the sum of the facet volumes."""
    out = []
    for V, b in c.rows:
        S = sum(gcd(V, x) for x in b)
        out.append((V - 1, S - 5, (V, b)))
    return out


def diff_census(a: Census, b: Census):
    """(rows only in a, rows only in b), each sorted."""
    sa, sb = set(a.rows), set(b.rows)
    return sorted(sa - sb), sorted(sb - sa)
