"""Exhaustive enumeration of empty 4-simplices up to a volume bound.

Every empty 4-simplex has a unimodular facet, so its tuple can be written
with b0 = V-1; the kernel enumerates the remaining entries in sorted order,
screens (pairwise gcd, facet multiset, coset loop), canonicalizes, and
deduplicates.  Volumes are independent work items; within a volume the
leading-entry range is chunked across a worker pool.  Output ordering is
(V, lexicographic tuple), independent of worker count.

`enumerate_via_sublattices` is a deliberately separate small-volume oracle:
it enumerates Hermite-form bases (one per left-unimodular orbit), filters by
brute-force point counting, and deduplicates by exhaustive vertex matching —
no cyclicity assumption anywhere.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import gcd
from typing import Optional

from . import families
from .census import Census, mk_census
from .errors import CheckpointError, InvalidParams, VolumeTooLarge
from .kernel import enumerate_empty_chunk
from .tuples import CanonicalTuple, mk_tuple, symmetry_group
from .geometry import (SimplexCoords, brute_force_count, edge_matrix,
                       facet_volumes_geometric, mk_simplex)
from . import intmat

V_HARD_CAP = 7600

CHECKPOINT_FORMAT = "empty4-checkpoint/1"


@dataclass(frozen=True)
class SearchConfig:
    v_min: int = 1
    v_max: int = 419
    workers: int = 1
    prune_families: bool = True
    checkpoint_path: Optional[str] = None

    def __post_init__(self):
        if not 1 <= self.v_min <= self.v_max:
            raise InvalidParams("need 1 <= v_min <= v_max")
        if self.v_max > V_HARD_CAP:
            raise InvalidParams("v_max %d exceeds the verified range (%d)"
                                % (self.v_max, V_HARD_CAP))
        if self.workers < 1:
            raise InvalidParams("workers must be >= 1")


def _empty_rows(V: int, pool=None, chunks: int = 1) -> list:
    """Sorted canonical tuples of the empty classes of volume V."""
    if pool is None or chunks <= 1 or V < 4:
        return enumerate_empty_chunk(V, 0, V)
    bounds = [V * i // chunks for i in range(chunks + 1)]
    spans = [(V, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    out = set()
    for part in pool.starmap(enumerate_empty_chunk, spans):
        out.update(part)
    return sorted(out)


def enumerate_empty(V: int) -> set:
    """One CanonicalTuple per isomorphism class of empty 4-simplices of volume V."""
    if V < 1:
        raise ValueError("V must be positive")
    return {CanonicalTuple(V, b) for b in _empty_rows(V)}


def _load_checkpoint(cfg: SearchConfig, mode: str):
    path = cfg.checkpoint_path
    if not path or not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            state = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CheckpointError("unreadable checkpoint %s: %s" % (path, exc))
    for key, want in (("format", CHECKPOINT_FORMAT), ("v_min", cfg.v_min),
                      ("v_max", cfg.v_max), ("mode", mode)):
        if state.get(key) != want:
            raise CheckpointError("checkpoint %s does not match this search "
                                  "(%s: %r != %r)" % (path, key, state.get(key), want))
    return state


def _save_checkpoint(cfg: SearchConfig, mode: str, done: int, rows: list) -> None:
    path = cfg.checkpoint_path
    if not path:
        return
    state = {"format": CHECKPOINT_FORMAT, "v_min": cfg.v_min, "v_max": cfg.v_max,
             "mode": mode, "done": done, "rows": [[V, list(b)] for V, b in rows]}
    tmp = path + ".tmp"
    try:
        with open(tmp, "w") as fh:
            json.dump(state, fh)
        os.replace(tmp, path)
    except OSError as exc:
        raise CheckpointError("cannot write checkpoint %s: %s" % (path, exc))


def _version() -> str:
    try:
        from importlib.metadata import version
        return version("empty4")
    except Exception:
        return "unknown"


def _run(cfg: SearchConfig, mode: str) -> Census:
    prune = mode == "sporadic"
    state = _load_checkpoint(cfg, mode)
    if state is not None:
        rows = [(int(V), tuple(int(x) for x in b)) for V, b in state["rows"]]
        start = int(state["done"]) + 1
    else:
        rows, start = [], cfg.v_min

    pool = None
    try:
        if cfg.workers > 1:
            from multiprocessing import get_context
            pool = get_context("fork").Pool(cfg.workers)
        for V in range(start, cfg.v_max + 1):
            found = _empty_rows(V, pool, chunks=2 * cfg.workers)
            if prune:
                found = [b for b in found
                         if not families.canonical_in_family(V, b)]
            rows.extend((V, b) for b in found)
            _save_checkpoint(cfg, mode, V, rows)
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    meta = {
        "version": _version(),
        "mode": mode,
        "range": "%d..%d" % (cfg.v_min, cfg.v_max),
        "config": "%d.%d.%s" % (cfg.v_min, cfg.v_max, mode),
    }
    return mk_census(rows, meta, validate=False)


def enumerate_sporadic(cfg: SearchConfig) -> Census:
    """Census of the empty classes belonging to no infinite family."""
    return _run(cfg, "sporadic")


def enumerate_census(cfg: SearchConfig) -> Census:
    """Census of all empty classes in the configured volume range."""
    return _run(cfg, "full")


@lru_cache(maxsize=None)
def _sporadic_at(V: int) -> tuple:
    return tuple(b for b in _empty_rows(V)
                 if not families.canonical_in_family(V, b))


def singularity_count(V: int) -> int:
    """Total vertex-orbit count over the sporadic classes of volume V."""
    if V < 1:
        raise ValueError("V must be positive")
    return sum(symmetry_group(mk_tuple(V, b)).orbit_count
               for b in _sporadic_at(V))


# ---------------------------------------------------------------------------
# sublattice (Hermite-form) oracle — no cyclicity assumption

def _hnf_bases(V: int, d: int):
    """Upper-triangular bases, one per left-unimodular orbit of index V.

    H[i][i] > 0, prod = V; above-diagonal entries of column i lie in
    [0, H[i][i]); vertices of the associated simplex are the columns.
    """
    def diagonals(rest, n):
        if n == 1:
            yield (rest,)
            return
        for d0 in range(1, rest + 1):
            if rest % d0 == 0:
                for tail in diagonals(rest // d0, n - 1):
                    yield (d0,) + tail

    def fill(diag, col, H):
        if col == d:
            yield tuple(tuple(row) for row in H)
            return
        def above(i):
            if i == col:
                H[col][col] = diag[col]
                yield from fill(diag, col + 1, H)
                return
            for x in range(diag[col]):
                H[i][col] = x
                yield from above(i + 1)
        yield from above(0)

    for diag in diagonals(V, d):
        H = [[0] * d for _ in range(d)]
        yield from fill(diag, 0, H)


def _simplex_from_basis(H) -> SimplexCoords:
    d = len(H)
    verts = [(0,) * d] + [tuple(H[i][j] for i in range(d)) for j in range(d)]
    return mk_simplex(verts)


def _edge_gcd_screen(s: SimplexCoords) -> bool:
    """False when some edge vector is imprimitive (a lattice point inside)."""
    vs = s.vertices
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            g = 0
            for a, b in zip(vs[i], vs[j]):
                g = gcd(g, a - b)
            if g > 1:
                return False
    return True


def _lattice_isomorphic(s1: SimplexCoords, s2: SimplexCoords) -> bool:
    """Exhaustive vertex matching: some ordering with a unimodular transition."""
    E1 = edge_matrix(s1)
    d1 = intmat.det(E1)
    A1 = intmat.adjugate(E1)
    for perm in permutations(s2.vertices):
        v0 = perm[0]
        E2 = [[perm[j + 1][i] - v0[i] for j in range(s2.d)] for i in range(s2.d)]
        M = intmat.mat_mul(E2, A1)
        if all(x % d1 == 0 for row in M for x in row):
            return True
    return False


def enumerate_via_sublattices(V: int, cap: int = 15) -> set:
    """One SimplexCoords per isomorphism class of empty 4-simplices of volume V."""
    if V < 1:
        raise ValueError("V must be positive")
    if V > cap:
        raise VolumeTooLarge("V=%d above the sublattice-oracle cap %d" % (V, cap))
    reps = []        # (invariant_key, simplex)
    for H in _hnf_bases(V, 4):
        s = _simplex_from_basis(H)
        if not _edge_gcd_screen(s):
            continue
        if brute_force_count(s, 1) != 5:
            continue
        key = (tuple(sorted(facet_volumes_geometric(s))), brute_force_count(s, 2))
        if any(k == key and _lattice_isomorphic(r, s) for k, r in reps):
            continue
        reps.append((key, s))
    return {s for _, s in reps}
