"""Exact arithmetic oracles on residue tuples.

The j-th coset of the quotient group Z_V contains, inside the half-open
fundamental box of the simplex, exactly the points with barycentric
coordinates ((j*b_i mod V)/V)_i shifted by nonnegative integers; its
barycentric weight sum s_j = (sum of residues)/V is an integer between 0
and d. Consequences used throughout:

* s_j = 1 for some j in [1,V)  <=>  the simplex contains a non-vertex
  lattice point (that j contributes exactly one, at height-1 barycentric
  weight);
* that point is *interior* iff additionally all d+1 residues are nonzero;
* dilation counts: the j-class contributes C(n - s_j + d, d) points to n*P.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from . import kernel
from .errors import NotHollow
from .tuples import CyclicTuple


@dataclass(frozen=True)
class CosetProfile:
    """Barycentric data of one quotient class j."""

    j: int
    residues: tuple[Fraction, ...]
    frac_sum: int


def coset_profile(t: CyclicTuple, j: int) -> CosetProfile:
    """Exact barycentric residues of class j (1 <= j < V) and their sum."""
    if not 1 <= j < t.V:
        raise ValueError(f"class index must be in [1, {t.V}), got {j}")
    res = tuple(Fraction((j * x) % t.V, t.V) for x in t.b)
    s = sum(res)
    assert s.denominator == 1, "entry sum is 0 mod V, so the weight is integral"
    return CosetProfile(j, res, int(s))


def is_empty(t: CyclicTuple) -> bool:
    """True iff the simplex contains no lattice point besides its vertices."""
    return kernel.is_empty(t.V, t.b)


def is_hollow(t: CyclicTuple) -> bool:
    """True iff the simplex contains no lattice point in its interior."""
    return kernel.is_hollow(t.V, t.b)


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def coprime_condition(t: CyclicTuple) -> bool:
    """No prime dividing V divides two or more entries.

    Necessary for emptiness: a prime p | V dividing entries at positions i
    and k forces the class j = V/p to have weight sum 1 in dimension 4.
    """
    for p in _prime_factors(t.V):
        if sum(1 for x in t.b if x % p == 0) >= 2:
            return False
    return True


def facet_volumes(t: CyclicTuple) -> tuple[int, ...]:
    """Normalized volumes of the d+1 facets: entry i gives gcd(V, b_i) for
    the facet opposite vertex i."""
    return tuple(gcd(t.V, x) for x in t.b)


def empty_via_facets(t: CyclicTuple) -> bool:
    """Emptiness of a *hollow* tuple decided facet by facet.

    For every facet volume W = gcd(V, b_i) > 1 the five residues mod W must
    form {0, a, W-a, c, W-c} with a, c units mod W. This multiset condition
    is necessary for emptiness unconditionally, and on hollow simplices it
    is also sufficient. Raises NotHollow when the input is not hollow.
    """
    if t.d != 4:
        raise ValueError("facet criterion is specific to dimension 4")
    if not is_hollow(t):
        raise NotHollow(f"{t} has an interior lattice point")
    V, b = t.V, t.b
    for bi in b:
        W = gcd(V, bi)
        if W == 1:
            continue
        res = sorted(x % W for x in b)
        if res[1] == 0:  # more than one zero residue
            return False
        rest = res[1:]
        if rest[0] + rest[3] != W or rest[1] + rest[2] != W:
            return False
        if gcd(rest[0], W) != 1 or gcd(rest[1], W) != 1:
            return False
    return True


def count_lattice_points_by_coset(t: CyclicTuple, n: int) -> int:
    """Number of lattice points in the n-th dilation, summed class by class.

    Class 0 carries the vertex lattice, contributing C(n+d, d); class j
    contributes C(n - s_j + d, d) (zero when s_j > n).
    """
    if n < 0:
        raise ValueError("dilation factor must be nonnegative")
    V, b, d = t.V, t.b, t.d
    total = comb(n + d, d)
    if V == 1:
        return total
    cur = list(b)
    for _ in range(1, V):
        s = sum(cur) // V
        if s <= n:
            total += comb(n - s + d, d)
        for i, step in enumerate(b):
            c = cur[i] + step
            if c >= V:
                c -= V
            cur[i] = c
    return total
