"""Enumeration driver: determinism, checkpoints, pruning, the sublattice oracle."""

import json

import pytest

from empty4.errors import CheckpointError, InvalidParams, VolumeTooLarge
from empty4.families import is_any_family
from empty4.geometry import tuple_from_simplex
from empty4.search import (SearchConfig, _empty_rows, _lattice_isomorphic,
                           _sporadic_at, enumerate_census, enumerate_empty,
                           enumerate_sporadic, enumerate_via_sublattices,
                           singularity_count)
from empty4.tuples import CanonicalTuple, canonical_form, mk_tuple


def test_config_validation():
    with pytest.raises(InvalidParams):
        SearchConfig(v_min=0)
    with pytest.raises(InvalidParams):
        SearchConfig(v_min=10, v_max=5)
    with pytest.raises(InvalidParams):
        SearchConfig(v_max=10**6)
    with pytest.raises(InvalidParams):
        SearchConfig(workers=0)


def test_enumerate_empty_edges():
    assert enumerate_empty(1) == {CanonicalTuple(1, (0, 0, 0, 0, 0))}
    with pytest.raises(ValueError):
        enumerate_empty(0)


def test_worker_count_does_not_change_output():
    cfg1 = SearchConfig(v_min=1, v_max=60, workers=1)
    cfg2 = SearchConfig(v_min=1, v_max=60, workers=2)
    c1 = enumerate_census(cfg1)
    c2 = enumerate_census(cfg2)
    assert c1.rows == c2.rows
    assert c1.metadata["mode"] == "full"
    assert c1.metadata["range"] == "1..60"
    assert list(c1.rows) == sorted(c1.rows)


def test_pruning_soundness():
    full = enumerate_census(SearchConfig(v_min=1, v_max=80))
    spor = enumerate_sporadic(SearchConfig(v_min=1, v_max=80))
    kept = [(V, b) for V, b in full.rows if not is_any_family(mk_tuple(V, b))]
    assert list(spor.rows) == kept
    assert spor.metadata["mode"] == "sporadic"


def test_sporadic_spot_counts():
    for V, n in [(24, 1), (27, 1), (29, 3), (59, 51)]:
        assert len(_sporadic_at(V)) == n, V


def test_singularity_count():
    assert singularity_count(29) == 15
    with pytest.raises(ValueError):
        singularity_count(0)


def test_checkpoint_resume_and_mismatch(tmp_path):
    path = str(tmp_path / "ck.json")
    cfg = SearchConfig(v_min=1, v_max=10, checkpoint_path=path)
    first = enumerate_census(cfg)
    # completed checkpoint: a rerun resumes past the end without recomputing
    again = enumerate_census(cfg)
    assert again.rows == first.rows
    # same file, different search -> refuse
    with pytest.raises(CheckpointError):
        enumerate_census(SearchConfig(v_min=1, v_max=12, checkpoint_path=path))
    with pytest.raises(CheckpointError):
        enumerate_sporadic(cfg)


def test_checkpoint_corruption(tmp_path):
    path = str(tmp_path / "ck.json")
    with open(path, "w") as fh:
        fh.write("{{{not json")
    cfg = SearchConfig(v_min=1, v_max=5, checkpoint_path=path)
    with pytest.raises(CheckpointError):
        enumerate_census(cfg)
    with open(path, "w") as fh:
        json.dump({"format": "bogus"}, fh)
    with pytest.raises(CheckpointError):
        enumerate_census(cfg)


def test_sublattice_oracle_agrees():
    for V in range(1, 8):
        reps = enumerate_via_sublattices(V)
        keys = {canonical_form(tuple_from_simplex(s)) for s in reps}
        assert len(keys) == len(reps)            # reps are pairwise distinct
        assert keys == enumerate_empty(V), V


def test_sublattice_oracle_cap():
    with pytest.raises(VolumeTooLarge):
        enumerate_via_sublattices(16)
    with pytest.raises(VolumeTooLarge):
        enumerate_via_sublattices(5, cap=3)
    with pytest.raises(ValueError):
        enumerate_via_sublattices(0)


def _shift_shear(vertices):
    # unimodular shear plus a translation, vertex order reversed
    out = []
    for x, y, z, w in reversed(vertices):
        out.append((x + y + 3, y - 1, z + 2, w))
    return out


def test_lattice_isomorphism_matcher():
    V = next(v for v in range(5, 20) if len(_empty_rows(v)) >= 2)
    rows = _empty_rows(V)
    from empty4.geometry import mk_simplex, realize_any
    s1 = realize_any(mk_tuple(V, rows[0]))
    s2 = realize_any(mk_tuple(V, rows[1]))
    assert not _lattice_isomorphic(s1, s2)
    moved = mk_simplex(_shift_shear(s1.vertices))
    assert _lattice_isomorphic(s1, moved)
    assert _lattice_isomorphic(moved, s1)
