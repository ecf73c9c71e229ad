"""Infinite families of empty 4-simplices: generation, admissibility, membership.

A family member of volume V is one of

* k=1:              (alpha+beta, -alpha, -beta, -1, 1)      gcd(alpha,beta,V)=1
* k=2, primitive:   (1, -2, alpha, -2*alpha, 1+alpha)       V odd, gcd(alpha,V)=1
* k=2, nonprimitive: V/2*(0,1,0,1,0) + (-1,-1,alpha,-alpha,2)   V in 4Z, gcd(alpha,V)=1
* k=3:              sign*(V/I)*(I*a) + b   for the 29 + 23 rows in tables.py

Membership testing is exact template matching over (unit, permutation, sign)
choices; `is_any_family` is the fast screen used by the enumerator's pruning
stage (unit-pair test for k=1, per-volume cached canonical forms for the
rest — equivalent to nonempty `family_membership` on empty tuples).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Optional

from . import tables
from .errors import IndexMismatch, InvalidParams
from .kernel import canonical
from .tuples import CyclicTuple, mk_tuple, units


@dataclass(frozen=True)
class FamilySpec:
    """One family: either a k<=2 parametric shape or a k=3 table row."""

    id: str
    k: int
    index: int
    a_num: Optional[tuple]  # I*a for k=3 nonprimitive rows, else None
    b: Optional[tuple]      # integer dependence for k=3 rows, else None
    sign_choices: bool
    cond2: Optional[tuple] = None  # ("eq"|"ne", residue) on m = sign*(V/I)
    cond3: Optional[tuple] = None
    never_empty: bool = False
    max_facets: Optional[tuple] = None


K1 = FamilySpec(id="k1", k=1, index=1, a_num=None, b=None, sign_choices=False)
K2_PRIMITIVE = FamilySpec(id="k2p", k=2, index=1, a_num=None, b=None,
                          sign_choices=False)
K2_NONPRIMITIVE = FamilySpec(id="k2n", k=2, index=2, a_num=None, b=None,
                             sign_choices=False)

PRIMITIVE_SPECS = tuple(
    FamilySpec(id="p%02d" % (i + 1), k=3, index=1, a_num=None, b=row,
               sign_choices=False,
               max_facets=tables.PRIMITIVE_MAX_FACETS.get(row, (1, 1, 1, 1, 1)))
    for i, row in enumerate(tables.PRIMITIVE_ROWS)
)

NONPRIMITIVE_SPECS = tuple(
    FamilySpec(id="q%02d" % (i + 1), k=3, index=idx, a_num=a_num, b=b,
               sign_choices=True, cond2=c2, cond3=c3, never_empty=ne,
               max_facets=mf)
    for i, (idx, a_num, b, c2, c3, ne, mf) in enumerate(tables.NONPRIMITIVE_ROWS)
)

ALL_SPECS = (K1, K2_PRIMITIVE, K2_NONPRIMITIVE) + PRIMITIVE_SPECS + NONPRIMITIVE_SPECS

_SPEC_BY_ID = {s.id: s for s in ALL_SPECS}


def get_spec(spec_id: str) -> FamilySpec:
    try:
        return _SPEC_BY_ID[spec_id]
    except KeyError:
        raise KeyError("unknown family id %r" % (spec_id,)) from None


@dataclass(frozen=True)
class FamilyLabel:
    """Witness of family membership; regenerates the tuple up to isomorphism."""

    spec_id: str
    params: tuple = ()
    sign: int = 1

    def regenerate(self, V: int) -> CyclicTuple:
        return family_generate(self.spec_id, V, self.params, self.sign)

    def __str__(self):
        spec = get_spec(self.spec_id)
        if spec.k == 1:
            return "k=1 alpha=%d beta=%d" % self.params
        if spec.k == 2:
            shape = "primitive" if spec.id == "k2p" else "nonprimitive"
            return "k=2 %s alpha=%d" % (shape, self.params[0])
        if spec.sign_choices:
            return "k=3 row %s sign=%+d" % (spec.id, self.sign)
        return "k=3 row %s" % spec.id


def _as_spec(spec) -> FamilySpec:
    if isinstance(spec, FamilySpec):
        return spec
    return get_spec(spec)


def family_generate(spec, V: int, params=(), sign: int = 1) -> CyclicTuple:
    """Member of the family at volume V; hollow always, empty iff admissible."""
    spec = _as_spec(spec)
    if V < 1:
        raise ValueError("V must be positive")
    if spec.k == 1:
        alpha, beta = params
        if gcd(gcd(alpha, beta), V) != 1:
            raise InvalidParams("k=1 needs gcd(alpha, beta, V) = 1")
        return mk_tuple(V, (alpha + beta, -alpha, -beta, -1, 1))
    if spec.k == 2:
        (alpha,) = params
        if gcd(alpha, V) != 1:
            raise InvalidParams("k=2 needs gcd(alpha, V) = 1")
        if spec.id == "k2p":
            return mk_tuple(V, (1, -2, alpha, -2 * alpha, 1 + alpha))
        if V % 2 != 0:
            raise IndexMismatch("index-2 shape needs even V")
        h = V // 2
        return mk_tuple(V, (-1, h - 1, alpha, h - alpha, 2))
    # k = 3 table rows
    if V % spec.index != 0:
        raise IndexMismatch("row %s has index %d, which does not divide V=%d"
                            % (spec.id, spec.index, V))
    if sign not in (1, -1):
        raise InvalidParams("sign must be +1 or -1")
    k = V // spec.index
    if spec.a_num is None:
        entries = spec.b
    else:
        entries = tuple(sign * k * an + bi for an, bi in zip(spec.a_num, spec.b))
    return mk_tuple(V, entries)


def admissible(spec, V: int, sign: int = 1) -> bool:
    """Does the family produce an *empty* simplex at volume V (with this sign)?"""
    spec = _as_spec(spec)
    if V < 1:
        raise ValueError("V must be positive")
    if spec.k == 1:
        return True
    if spec.id == "k2p":
        return V % 2 == 1
    if spec.id == "k2n":
        if V % 2 != 0:
            raise IndexMismatch("index-2 shape needs even V")
        return V % 4 == 0
    if V % spec.index != 0:
        raise IndexMismatch("row %s has index %d, which does not divide V=%d"
                            % (spec.id, spec.index, V))
    if spec.never_empty:
        return False
    if spec.a_num is None:
        # primitive: no prime of V may divide two entries
        b = spec.b
        for i in range(5):
            for j in range(i + 1, 5):
                if gcd(gcd(b[i], b[j]), V) > 1:
                    return False
        return True
    m = sign * (V // spec.index)
    for cond, mod in ((spec.cond2, 2), (spec.cond3, 3)):
        if cond is None:
            continue
        op, r = cond
        if op == "eq" and m % mod != r:
            return False
        if op == "ne" and m % mod == r:
            return False
    return True


# ---------------------------------------------------------------------------
# membership

def width1_test(t: CyclicTuple):
    """Parameters (alpha, beta) if t has an opposite unit pair, else None.

    This is the raw shape test; unlike a k=1 label it does not insist on
    gcd(alpha, beta, V) = 1 (for empty tuples the two coincide).
    """
    V, b = t.V, t.b
    n = len(b)
    for i in range(n):
        if gcd(b[i], V) != 1:
            continue
        for j in range(n):
            if i != j and (b[i] + b[j]) % V == 0:
                u = (-pow(b[i], -1, V)) % V if V > 1 else 0
                rest = [(u * b[p]) % V for p in range(n) if p not in (i, j)]
                # template (alpha+beta, -alpha, -beta): any assignment works
                return ((-rest[1]) % V, (-rest[2]) % V)
    return None


def _k1_labels(t: CyclicTuple) -> set:
    V, b = t.V, t.b
    out = set()
    for i in range(5):
        if gcd(b[i], V) != 1:
            continue
        for j in range(5):
            if i == j or (b[i] + b[j]) % V != 0:
                continue
            u = (-pow(b[i], -1, V)) % V if V > 1 else 0
            rest = [(u * b[p]) % V for p in range(5) if p not in (i, j)]
            for q, r in itertools.permutations(range(3), 2):
                alpha = (-rest[q]) % V
                beta = (-rest[r]) % V
                if gcd(gcd(alpha, beta), V) == 1:
                    out.add(FamilyLabel("k1", (alpha, beta)))
    return out


def _match_template(t: CyclicTuple, template) -> set:
    """All alpha making some unit/permutation of t equal template(alpha).

    template(alpha) -> 5-tuple of residues, or None when alpha is rejected.
    """
    V, b = t.V, t.b
    out = set()
    seen_alpha = set()
    for u in units(V):
        c = tuple((u * x) % V for x in b)
        for alpha in set(c):
            if alpha in seen_alpha or gcd(alpha, V) != 1:
                continue
            want = template(alpha)
            if want is not None and sorted(want) == sorted(c):
                seen_alpha.add(alpha)
                out.add((alpha,))
    return out


def _k2_labels(t: CyclicTuple) -> set:
    V = t.V
    out = set()
    if V % 2 == 1:
        def prim(alpha):
            return (1 % V, -2 % V, alpha, (-2 * alpha) % V, (1 + alpha) % V)
        for params in _match_template(t, prim):
            out.add(FamilyLabel("k2p", params))
    if V % 2 == 0:
        h = V // 2
        def nonprim(alpha):
            return ((-1) % V, (h - 1) % V, alpha, (h - alpha) % V, 2 % V)
        for params in _match_template(t, nonprim):
            out.add(FamilyLabel("k2n", params))
    return out


def _k3_labels(t: CyclicTuple) -> set:
    V = t.V
    key = canonical(V, t.b)
    out = set()
    for spec in PRIMITIVE_SPECS + NONPRIMITIVE_SPECS:
        if V % spec.index != 0:
            continue
        signs = (1, -1) if spec.sign_choices else (1,)
        for sign in signs:
            member = family_generate(spec, V, (), sign)
            if canonical(V, member.b) == key:
                out.add(FamilyLabel(spec.id, (), sign))
    return out


def family_membership(t: CyclicTuple) -> set:
    """All family labels whose generated member is isomorphic to t."""
    return _k1_labels(t) | _k2_labels(t) | _k3_labels(t)


@lru_cache(maxsize=32)
def _family_canonicals(V: int) -> frozenset:
    """Canonical forms of every k=2 / k=3 family member of volume V."""
    out = set()
    for spec in PRIMITIVE_SPECS + NONPRIMITIVE_SPECS:
        if V % spec.index:
            continue
        for sign in (1, -1) if spec.sign_choices else (1,):
            member = family_generate(spec, V, (), sign)
            out.add(canonical(V, member.b))
    for alpha in units(V):
        out.add(canonical(V, mk_tuple(V, (1, -2, alpha, -2 * alpha, 1 + alpha)).b))
    if V % 2 == 0:
        h = V // 2
        for alpha in units(V):
            out.add(canonical(V, mk_tuple(V, (-1, h - 1, alpha, h - alpha, 2)).b))
    return frozenset(out)


def _unit_pair(V: int, b: tuple) -> bool:
    for i in range(len(b)):
        if gcd(b[i], V) != 1:
            continue
        for j in range(len(b)):
            if i != j and (b[i] + b[j]) % V == 0:
                return True
    return False


def canonical_in_family(V: int, b: tuple) -> bool:
    """Pruning predicate for an already-canonical empty tuple b of volume V."""
    return _unit_pair(V, b) or b in _family_canonicals(V)


def is_any_family(t: CyclicTuple) -> bool:
    """Fast screen: equivalent to family_membership(t) != set() on empty tuples."""
    if width1_test(t) is not None:
        return True
    return canonical(t.V, t.b) in _family_canonicals(t.V)


# ---------------------------------------------------------------------------
# hollow shapes (width 1 and 2); no emptiness claims attached

def hollow_generate(width: int, row: int, V: int, params) -> CyclicTuple:
    """Member of the row-th hollow width-`width` shape at volume V."""
    if width == 1:
        shapes = tables.HOLLOW_WIDTH1
        if not 0 <= row < len(shapes):
            raise ValueError("width-1 row out of range")
        alpha, beta, gamma = params
        entries = tuple(ca * alpha + cb * beta + cg * gamma
                        for ca, cb, cg in shapes[row])
    elif width == 2:
        shapes = tables.HOLLOW_WIDTH2
        if not 0 <= row < len(shapes):
            raise ValueError("width-2 row out of range")
        alpha, beta = params
        if any(h for _, _, h in shapes[row]) and V % 2 != 0:
            raise IndexMismatch("this shape needs even V")
        h = V // 2
        entries = tuple(ca * alpha + cb * beta + ch * h
                        for ca, cb, ch in shapes[row])
    else:
        raise ValueError("width must be 1 or 2")
    from .errors import NotGenerator
    try:
        return mk_tuple(V, entries)
    except NotGenerator as exc:
        raise InvalidParams(str(exc)) from None
