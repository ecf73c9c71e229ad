"""Residue-walk oracles: emptiness, hollowness, coset counting."""

from fractions import Fraction
from math import gcd

import pytest

from empty4 import kernel
from empty4.errors import NotHollow
from empty4.geometry import realize_any, brute_force_count
from empty4.oracle import (coprime_condition, coset_profile,
                           count_lattice_points_by_coset, empty_via_facets,
                           facet_volumes, is_empty, is_hollow)
from empty4.tuples import mk_tuple


def test_coset_profile_frozen_values():
    t = mk_tuple(42, (4, 7, 15, 17, 41))
    p = coset_profile(t, 1)
    assert p.residues == (Fraction(2, 21), Fraction(1, 6), Fraction(5, 14),
                          Fraction(17, 42), Fraction(41, 42))
    assert p.frac_sum == 2
    assert coset_profile(t, 6).frac_sum == 2


def test_coset_profile_rejects_bad_class():
    t = mk_tuple(7, (1, 2, 4, 0, 0))
    for j in (0, 7, -1):
        with pytest.raises(ValueError):
            coset_profile(t, j)


def test_emptiness_means_no_weight_one_class():
    for V, b in [(24, (1, 4, 11, 15, 17)), (42, (4, 7, 15, 17, 41)),
                 (20, (1, 3, 7, 9, 0)), (7, (1, 2, 4, 0, 0))]:
        t = mk_tuple(V, b)
        has_one = any(coset_profile(t, j).frac_sum == 1 for j in range(1, V))
        assert is_empty(t) == (not has_one), (V, b)


def test_hollowness_ignores_facet_classes():
    # a weight-one class with a zero residue sits on a facet: hollow, not empty
    t = mk_tuple(7, (1, 2, 4, 0, 0))
    assert not is_empty(t)
    assert is_hollow(t)


def white_classification(V, b):
    """Empty tetrahedra: residues split into two opposite pairs of units."""
    for j in range(1, 4):
        rest = [p for p in range(1, 4) if p != j]
        pairs = ((b[0], b[j]), (b[rest[0]], b[rest[1]]))
        if all((x + y) % V == 0 and gcd(x, V) == 1 for x, y in pairs):
            return True
    return False


def test_white_property_dimension_3():
    # in dimension 3, emptiness coincides with the two-unit-pair shape
    for V in range(2, 26):
        seen = set()
        for b0 in range(V):
            for b1 in range(b0, V):
                for b2 in range(b1, V):
                    b3 = (-(b0 + b1 + b2)) % V
                    if b3 < b2:
                        continue
                    b = (b0, b1, b2, b3)
                    if gcd(gcd(gcd(gcd(b0, b1), b2), b3), V) != 1:
                        continue
                    if b in seen:
                        continue
                    seen.add(b)
                    t = mk_tuple(V, b, d=3)
                    assert is_empty(t) == white_classification(V, b), (V, b)


def test_count_by_coset_against_brute_force():
    for V, b in [(42, (4, 7, 15, 17, 41)), (24, (1, 4, 11, 15, 17)),
                 (30, (6, 10, 15, 2, 27))]:
        t = mk_tuple(V, b)
        s = realize_any(t)
        for n in range(0, 4):
            assert count_lattice_points_by_coset(t, n) == brute_force_count(s, n)


def test_count_by_coset_dimension_3():
    t = mk_tuple(7, (1, 6, 2, 5), d=3)
    s = realize_any(t)
    for n in range(0, 5):
        assert count_lattice_points_by_coset(t, n) == brute_force_count(s, n)


def test_facet_volumes_are_gcds():
    t = mk_tuple(42, (4, 7, 15, 17, 41))
    assert facet_volumes(t) == (2, 7, 3, 1, 1)
    assert facet_volumes(mk_tuple(1, (0, 0, 0, 0, 0))) == (1, 1, 1, 1, 1)


def test_coprime_condition_examples():
    assert coprime_condition(mk_tuple(24, (1, 4, 11, 15, 17)))
    # 6 and 10 share the factor 2 of V=30
    assert not coprime_condition(mk_tuple(30, (6, 10, 15, 2, 27)))


def test_empty_via_facets_gate():
    t = mk_tuple(29, (1, 1, 1, 13, 13))
    assert not is_hollow(t)
    with pytest.raises(NotHollow):
        empty_via_facets(t)


def test_empty_via_facets_equivalence_exhaustive():
    for V in range(1, 31):
        for b in kernel.enumerate_classes(V):
            if not kernel.is_hollow(V, b):
                continue
            t = mk_tuple(V, b)
            assert empty_via_facets(t) == is_empty(t), (V, b)
