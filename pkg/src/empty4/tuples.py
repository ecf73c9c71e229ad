"""Residue-tuple encoding of cyclic lattice simplices.

A lattice d-simplex P with vertices v0..vd is *cyclic* when the quotient of
the ambient lattice by the sublattice spanned by P's vertices is a cyclic
group Z_V, V the normalized volume. Such a simplex is captured, up to
unimodular equivalence, by V together with the vector

    b = V * (barycentric coordinates of a generator of the quotient)  mod V.

Two encodings describe the same simplex class iff one arises from the other
by multiplying by a unit mod V (changing the chosen generator) and permuting
entries (relabelling vertices). This module provides the encoding, its
validation, the canonical representative and the symmetry group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from . import kernel
from .errors import NotAUnit, NotGenerator, ParseError, SumNotZero


@dataclass(frozen=True, eq=False)
class CyclicTuple:
    """Volume V plus the d+1 generator residues, reduced to [0, V).

    Invariants (enforced by :func:`mk_tuple`): sum(b) == 0 mod V and
    gcd(*b, V) == 1.
    """

    V: int
    b: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.b) - 1

    def __eq__(self, other):
        if not isinstance(other, CyclicTuple):
            return NotImplemented
        return self.V == other.V and self.b == other.b

    def __hash__(self):
        return hash((self.V, self.b))

    def __str__(self):
        return f"{self.V}:" + ",".join(str(x) for x in self.b)

    def __repr__(self):
        return f"{type(self).__name__}({self.V}, {self.b})"


class CanonicalTuple(CyclicTuple):
    """A CyclicTuple that is the representative of its isomorphism class
    (produced by :func:`canonical_form`; compares equal to the plain tuple
    with the same data)."""

    __slots__ = ()


def mk_tuple(V: int, entries, d: int | None = None) -> CyclicTuple:
    """Validate and reduce an integer vector into a CyclicTuple.

    Entries may be arbitrary ints (reduced mod V). Raises SumNotZero or
    NotGenerator when the defining invariants fail.
    """
    if V < 1:
        raise ValueError(f"volume must be positive, got {V}")
    b = tuple(int(x) % V for x in entries)
    if d is None:
        d = len(b) - 1
    elif len(b) != d + 1:
        raise ValueError(f"expected {d + 1} entries, got {len(b)}")
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if sum(b) % V != 0:
        raise SumNotZero(f"entries of {V}:{b} sum to {sum(b)} != 0 mod {V}")
    g = gcd(*b, V)
    if g != 1:
        raise NotGenerator(
            f"residues of {V}:{b} generate the subgroup of index {g}, not Z_{V}"
        )
    return CyclicTuple(V, b)


def parse_tuple(text: str) -> CyclicTuple:
    """Parse the ``V:b0,b1,...,bd`` syntax (entries may be negative)."""
    text = text.strip()
    head, sep, tail = text.partition(":")
    if not sep:
        raise ParseError(f"expected 'V:b0,b1,...' syntax, got {text!r}")
    try:
        V = int(head)
    except ValueError:
        raise ParseError(f"bad volume {head!r}") from None
    try:
        entries = [int(p) for p in tail.split(",")]
    except ValueError:
        raise ParseError(f"bad entry list {tail!r}") from None
    if len(entries) < 2:
        raise ParseError("need at least two entries")
    return mk_tuple(V, entries)


def units(V: int) -> tuple[int, ...]:
    """The units mod V (for V = 1 the single residue acts as the unit)."""
    if V == 1:
        return (1,)
    return tuple(u for u in range(1, V) if gcd(u, V) == 1)


def unit_multiply(t: CyclicTuple, u: int) -> CyclicTuple:
    """The tuple of the same simplex with generator scaled by u."""
    if gcd(u, t.V) != 1:
        raise NotAUnit(f"{u} is not invertible mod {t.V}")
    return CyclicTuple(t.V, tuple((u * x) % t.V for x in t.b))


def canonical_form(t: CyclicTuple) -> CanonicalTuple:
    """The class representative: pointwise-lex minimum over all unit
    multiples, each taken in sorted entry order.

    Sorting realizes the lexicographically smallest permutation of a
    multiset, so this is the true minimum over the whole unit x permutation
    orbit. Idempotent; equal across isomorphic tuples.
    """
    return CanonicalTuple(t.V, kernel.canonical(t.V, t.b))


def is_isomorphic(s: CyclicTuple, t: CyclicTuple) -> bool:
    """True iff the tuples encode unimodularly equivalent simplices."""
    if s.V != t.V or s.d != t.d:
        return False
    return kernel.canonical(s.V, s.b) == kernel.canonical(t.V, t.b)


@dataclass(frozen=True)
class SymmetryGroup:
    """Vertex permutations realized by unit multiplications.

    ``elements`` are permutations sigma stored as image tuples; sigma is in
    the group iff some unit u has b[sigma(i)] == u*b[i] mod V for all i.
    ``orbit_count`` is the number of vertex orbits.
    """

    elements: frozenset[tuple[int, ...]]
    orbit_count: int

    def __len__(self):
        return len(self.elements)


def symmetry_group(t: CyclicTuple) -> SymmetryGroup:
    V, b = t.V, t.b
    n = len(b)
    ref = sorted(b)
    positions: dict[int, list[int]] = {}
    for i, x in enumerate(b):
        positions.setdefault(x, []).append(i)

    elements: set[tuple[int, ...]] = set()
    for u in units(V):
        c = [(u * x) % V for x in b]
        if sorted(c) != ref:
            continue
        # all bijections sigma with b[sigma(i)] == c[i]: choose, per distinct
        # value, a bijection from the positions of that value in c onto its
        # positions in b
        values = list(positions)
        pools = []
        for v in values:
            targets = positions[v]
            sources = [i for i, x in enumerate(c) if x == v]
            pools.append((sources, list(itertools.permutations(targets))))
        for choice in itertools.product(*(perms for _, perms in pools)):
            sigma = [0] * n
            for (sources, _), perm in zip(pools, choice):
                for src, dst in zip(sources, perm):
                    sigma[src] = dst
            elements.add(tuple(sigma))

    # vertex orbits via union-find over all group elements
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sigma in elements:
        for i, j in enumerate(sigma):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    orbits = len({find(i) for i in range(n)})
    return SymmetryGroup(frozenset(elements), orbits)
