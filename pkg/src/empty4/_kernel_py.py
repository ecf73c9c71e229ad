"""Pure-Python twin of the compiled search kernel.

Slow but dependency-free. ``empty4.kernel`` selects this module when the
compiled extension is missing or when EMPTY4_FORCE_PY_KERNEL is set. The two
implementations must stay in lockstep; tests compare them on shared inputs.

Functions here work on plain ints / tuples, not on CyclicTuple objects, so
both kernels can be driven from worker processes with minimal pickling.
"""

from math import gcd


def _units(V):
    if V == 1:
        return [1]
    return [u for u in range(1, V) if gcd(u, V) == 1]


def is_empty(V, b):
    """True iff the simplex encoded by (V, b) contains only its vertices.

    Criterion: no j in [1,V) may have coset barycentric sum equal to 1,
    i.e. residue sum equal to V (such a j contributes exactly one
    non-vertex lattice point).
    """
    if V == 1:
        return True
    cur = [x % V for x in b]
    for _ in range(1, V):
        if sum(cur) == V:
            return False
        for i, step in enumerate(b):
            c = cur[i] + step
            if c >= V:
                c -= V
            cur[i] = c
    return True


def is_hollow(V, b):
    """True iff no lattice point lies in the simplex's relative interior.

    Same scan as :func:`is_empty`, but a residue sum of V only produces an
    *interior* point when every residue is nonzero (a zero residue puts the
    point on the facet opposite that vertex).
    """
    if V == 1:
        return True
    b = [x % V for x in b]
    cur = list(b)
    for _ in range(1, V):
        if sum(cur) == V and 0 not in cur:
            return False
        for i, step in enumerate(b):
            c = cur[i] + step
            if c >= V:
                c -= V
            cur[i] = c
    return True


def canonical(V, b):
    """Lex-min over units u of sorted((u*b) mod V); the representative of
    the unit-multiplication x permutation orbit of b."""
    if V == 1:
        return (0,) * len(b)
    best = None
    for u in range(1, V):
        if gcd(u, V) != 1:
            continue
        img = sorted(u * x % V for x in b)
        if best is None or img < best:
            best = img
    return tuple(best)


def _facet_screen_ok(V, c1, c2, c3, c4, G):
    # Necessary condition on each facet of volume g > 1: the five residues
    # mod g must be {0, a, g-a, c, g-c} with a, c coprime to g.  With the
    # pairwise screen already passed, exactly one entry is 0 mod g (the
    # entry that produced g), and b0 = V-1 is g-1.
    for ci in (c1, c2, c3, c4):
        g = G[ci]
        if g == 1:
            continue
        res = sorted(x % g for x in (V - 1, c1, c2, c3, c4) if x != ci)
        if res[0] == 0:
            return False
        if res[0] + res[3] != g or res[1] + res[2] != g:
            return False
        if gcd(res[0], g) != 1 or gcd(res[1], g) != 1:
            return False
    return True


def _empty_fast(V, c1, c2, c3, c4):
    # b = (V-1, c1, c2, c3, c4).  Scan j and V-j together: with s = residue
    # sum at j and z = number of zero residues among c's (the b0 residue
    # V-j is never 0), the V-j test "sum == V" is equivalent to
    # s == (4 - z) * V.  Fails fast on the first non-vertex point.
    r0 = V - 1
    r1, r2, r3, r4 = c1, c2, c3, c4
    half = V // 2
    for _ in range(half):
        s = r0 + r1 + r2 + r3 + r4
        if s == V:
            return False
        z = (r1 == 0) + (r2 == 0) + (r3 == 0) + (r4 == 0)
        if s == (4 - z) * V:
            return False
        r0 -= 1
        r1 += c1
        if r1 >= V:
            r1 -= V
        r2 += c2
        if r2 >= V:
            r2 -= V
        r3 += c3
        if r3 >= V:
            r3 -= V
        r4 += c4
        if r4 >= V:
            r4 -= V
    return True


def enumerate_empty_chunk(V, lo, hi):
    """Canonical forms of the empty tuples of volume V whose normalized
    encoding (V-1, c1<=c2<=c3<=c4) has c1 in [lo, hi).

    Every empty 4-simplex has a unimodular facet, hence an isomorphic tuple
    with b0 = V-1; sorting the rest is a further unit-free normalization.
    Chunks may emit duplicate canonical forms; callers union them.
    """
    if V == 1:
        return [(0, 0, 0, 0, 0)] if lo <= 0 < hi else []
    units = _units(V)
    G = [gcd(x, V) for x in range(V)]
    out = set()
    for c1 in range(lo, min(hi, V)):
        g1 = G[c1]
        for c2 in range(c1, V):
            g2 = G[c2]
            if g1 > 1 and g2 > 1 and gcd(g1, g2) > 1:
                continue
            K = (1 - c1 - c2) % V
            for c3_lo, c3_hi in ((c2, K // 2), (max(c2, K + 1), (K + V) // 2)):
                for c3 in range(c3_lo, c3_hi + 1):
                    g3 = G[c3]
                    if g3 > 1 and (
                        (g1 > 1 and gcd(g1, g3) > 1) or (g2 > 1 and gcd(g2, g3) > 1)
                    ):
                        continue
                    c4 = K - c3
                    if c4 < 0:
                        c4 += V
                    g4 = G[c4]
                    if g4 > 1 and (
                        (g1 > 1 and gcd(g1, g4) > 1)
                        or (g2 > 1 and gcd(g2, g4) > 1)
                        or (g3 > 1 and gcd(g3, g4) > 1)
                    ):
                        continue
                    if not _facet_screen_ok(V, c1, c2, c3, c4, G):
                        continue
                    if not _empty_fast(V, c1, c2, c3, c4):
                        continue
                    b = (V - 1, c1, c2, c3, c4)
                    best = None
                    for u in units:
                        img = sorted(u * x % V for x in b)
                        if best is None or img < best:
                            best = img
                    out.add(tuple(best))
    return sorted(out)


def enumerate_classes(V):
    """Canonical forms of ALL valid tuples of volume V (not only empty ones).

    Used by exhaustive oracle-equivalence and normalization-soundness tests.
    """
    if V == 1:
        return [(0, 0, 0, 0, 0)]
    units = _units(V)
    seen = set()
    for b0 in range(V):
        for b1 in range(b0, V):
            for b2 in range(b1, V):
                s3 = b0 + b1 + b2
                for b3 in range(b2, V):
                    b4 = -(s3 + b3) % V
                    if b4 < b3:
                        continue
                    if gcd(b0, b1, b2, b3, b4, V) != 1:
                        continue
                    b = (b0, b1, b2, b3, b4)
                    best = None
                    for u in units:
                        img = sorted(u * x % V for x in b)
                        if best is None or img < best:
                            best = img
                    seen.add(tuple(best))
    return sorted(seen)
