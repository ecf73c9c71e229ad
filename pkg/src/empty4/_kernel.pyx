# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel: emptiness scan, canonical form, volume enumeration.

Mirror of _kernel_py.py — keep semantics identical; tests compare the two
backends on shared inputs. All C-level modular arithmetic keeps operands
non-negative (cdivision truncates toward zero).
"""

from libc.stdlib cimport free, malloc


cdef inline long c_gcd(long a, long b) nogil:
    cdef long t
    while b:
        t = a % b
        a = b
        b = t
    return a if a >= 0 else -a


cdef inline void sort5(long* v) nogil:
    cdef int i, j
    cdef long key
    for i in range(1, 5):
        key = v[i]
        j = i - 1
        while j >= 0 and v[j] > key:
            v[j + 1] = v[j]
            j -= 1
        v[j + 1] = key


cdef inline void sort4(long* v) nogil:
    cdef int i, j
    cdef long key
    for i in range(1, 4):
        key = v[i]
        j = i - 1
        while j >= 0 and v[j] > key:
            v[j + 1] = v[j]
            j -= 1
        v[j + 1] = key


cdef long* _unit_table(long V, long* n_units):
    cdef long* units = <long*> malloc(V * sizeof(long))
    cdef long u, cnt = 0
    for u in range(1, V):
        if c_gcd(u, V) == 1:
            units[cnt] = u
            cnt += 1
    n_units[0] = cnt
    return units


cdef void _canon5(long V, long* units, long n_units, long* b, long* best) nogil:
    cdef long img[5]
    cdef long u
    cdef int k, i, better
    for i in range(5):
        best[i] = V  # larger than any residue
    for k in range(n_units):
        u = units[k]
        for i in range(5):
            img[i] = (u * b[i]) % V
        sort5(img)
        better = 0
        for i in range(5):
            if img[i] < best[i]:
                better = 1
                break
            elif img[i] > best[i]:
                break
        if better:
            for i in range(5):
                best[i] = img[i]


def is_empty(long V, b):
    """True iff no j in [1,V) has residue sum V (the coset of j would hold a
    non-vertex lattice point)."""
    cdef long r[16]
    cdef long st[16]
    cdef int n = len(b), i
    cdef long s, j
    if V == 1:
        return True
    if n > 16:
        raise ValueError("tuple too long for kernel")
    for i in range(n):
        st[i] = b[i] % V
        r[i] = st[i]
    for j in range(1, V):
        s = 0
        for i in range(n):
            s += r[i]
        if s == V:
            return False
        for i in range(n):
            r[i] += st[i]
            if r[i] >= V:
                r[i] -= V
    return True


def is_hollow(long V, b):
    """True iff no coset puts a point in the relative interior (residue sum V
    with all residues nonzero)."""
    cdef long r[16]
    cdef long st[16]
    cdef int n = len(b), i, anyzero
    cdef long s, j
    if V == 1:
        return True
    if n > 16:
        raise ValueError("tuple too long for kernel")
    for i in range(n):
        st[i] = b[i] % V
        r[i] = st[i]
    for j in range(1, V):
        s = 0
        anyzero = 0
        for i in range(n):
            s += r[i]
            if r[i] == 0:
                anyzero = 1
        if s == V and not anyzero:
            return False
        for i in range(n):
            r[i] += st[i]
            if r[i] >= V:
                r[i] -= V
    return True


def canonical(long V, b):
    """Lex-min over units u of sorted((u*b) mod V). 5-entry tuples take the
    fast path; other lengths fall back to a generic scan."""
    cdef long bb[5]
    cdef long best[5]
    cdef long n_units
    cdef long* units
    cdef int i
    if V == 1:
        return (0,) * len(b)
    if len(b) != 5:
        return _canonical_generic(V, b)
    for i in range(5):
        bb[i] = b[i] % V
    units = _unit_table(V, &n_units)
    _canon5(V, units, n_units, bb, best)
    free(units)
    return (best[0], best[1], best[2], best[3], best[4])


def _canonical_generic(long V, b):
    cdef long u
    best = None
    for u in range(1, V):
        if c_gcd(u, V) != 1:
            continue
        img = sorted((u * x) % V for x in b)
        if best is None or img < best:
            best = img
    return tuple(best)


def enumerate_empty_chunk(long V, long lo, long hi):
    """Canonical forms of empty tuples (V-1, c1<=c2<=c3<=c4), c1 in [lo,hi).

    Every empty 4-simplex has a unimodular facet, hence an isomorphic tuple
    with b0 = V-1 and the remaining entries sorted. Chunks may emit
    duplicate canonical forms; callers union them.
    """
    cdef long c1, c2, c3, c4, K, g1, g2, g3, g4, gi, half, s, j
    cdef long r0, r1, r2, r3, r4, z
    cdef long lim1, lim2, lim2_hi, which
    cdef long res[4]
    cdef long bb[5]
    cdef long best[5]
    cdef long thr[5]
    cdef long n_units
    cdef long* units
    cdef long* G
    cdef int i, k, ok

    if V == 1:
        return [(0, 0, 0, 0, 0)] if lo <= 0 < hi else []
    if hi > V:
        hi = V

    units = _unit_table(V, &n_units)
    G = <long*> malloc(V * sizeof(long))
    for c1 in range(V):
        G[c1] = c_gcd(c1, V)
    for i in range(5):
        thr[i] = (4 - i) * V
    half = V // 2

    out = set()
    for c1 in range(lo, hi):
        g1 = G[c1]
        for c2 in range(c1, V):
            g2 = G[c2]
            if g1 > 1 and g2 > 1 and c_gcd(g1, g2) > 1:
                continue
            K = (c1 + c2 + V - 1) % V
            if K != 0:
                K = V - K  # K = (1 - c1 - c2) mod V
            # two c3 intervals keep c4 >= c3 with c4 = (K - c3) mod V
            lim1 = K // 2
            lim2 = c2 if c2 > K + 1 else K + 1
            lim2_hi = (K + V) // 2
            for which in range(2):
                if which == 0:
                    c3 = c2
                    if lim1 < c3:
                        continue
                else:
                    c3 = lim2
                    if lim2_hi < c3:
                        continue
                while True:
                    g3 = G[c3]
                    ok = 1
                    if g3 > 1:
                        if (g1 > 1 and c_gcd(g1, g3) > 1) or (g2 > 1 and c_gcd(g2, g3) > 1):
                            ok = 0
                    if ok:
                        c4 = K - c3
                        if c4 < 0:
                            c4 += V
                        g4 = G[c4]
                        if g4 > 1:
                            if (
                                (g1 > 1 and c_gcd(g1, g4) > 1)
                                or (g2 > 1 and c_gcd(g2, g4) > 1)
                                or (g3 > 1 and c_gcd(g3, g4) > 1)
                            ):
                                ok = 0
                        if ok and (g1 > 1 or g2 > 1 or g3 > 1 or g4 > 1):
                            # facet multiset screen, every facet volume > 1
                            bb[0] = V - 1
                            bb[1] = c1
                            bb[2] = c2
                            bb[3] = c3
                            bb[4] = c4
                            for k in range(1, 5):
                                gi = G[bb[k]]
                                if gi == 1:
                                    continue
                                z = 0
                                for i in range(5):
                                    if i == k:
                                        continue
                                    res[z] = bb[i] % gi
                                    z += 1
                                sort4(res)
                                if res[0] == 0 or res[0] + res[3] != gi or res[1] + res[2] != gi:
                                    ok = 0
                                    break
                                if c_gcd(res[0], gi) != 1 or c_gcd(res[1], gi) != 1:
                                    ok = 0
                                    break
                        if ok:
                            # paired scan: j and V-j together; with s the
                            # residue sum at j and z the zero count among the
                            # c residues, the V-j failure reads s == (4-z)*V
                            r0 = V - 1
                            r1 = c1
                            r2 = c2
                            r3 = c3
                            r4 = c4
                            for j in range(half):
                                s = r0 + r1 + r2 + r3 + r4
                                if s == V:
                                    ok = 0
                                    break
                                z = 0
                                if r1 == 0:
                                    z += 1
                                if r2 == 0:
                                    z += 1
                                if r3 == 0:
                                    z += 1
                                if r4 == 0:
                                    z += 1
                                if s == thr[z]:
                                    ok = 0
                                    break
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
                        if ok:
                            bb[0] = V - 1
                            bb[1] = c1
                            bb[2] = c2
                            bb[3] = c3
                            bb[4] = c4
                            _canon5(V, units, n_units, bb, best)
                            out.add((best[0], best[1], best[2], best[3], best[4]))
                    c3 += 1
                    if which == 0:
                        if c3 > lim1:
                            break
                    else:
                        if c3 > lim2_hi:
                            break
    free(G)
    free(units)
    return sorted(out)


def enumerate_classes(long V):
    """Canonical forms of ALL valid tuples of volume V (not only empty)."""
    cdef long b0, b1, b2, b3, b4, s3, g
    cdef long bb[5]
    cdef long best[5]
    cdef long n_units
    cdef long* units
    if V == 1:
        return [(0, 0, 0, 0, 0)]
    units = _unit_table(V, &n_units)
    seen = set()
    for b0 in range(V):
        for b1 in range(b0, V):
            g = c_gcd(c_gcd(b0, V), b1)
            for b2 in range(b1, V):
                s3 = b0 + b1 + b2
                for b3 in range(b2, V):
                    b4 = (s3 + b3) % V
                    if b4 != 0:
                        b4 = V - b4
                    if b4 < b3:
                        continue
                    if c_gcd(c_gcd(c_gcd(g, b2), b3), b4) != 1:
                        continue
                    bb[0] = b0
                    bb[1] = b1
                    bb[2] = b2
                    bb[3] = b3
                    bb[4] = b4
                    _canon5(V, units, n_units, bb, best)
                    seen.add((best[0], best[1], best[2], best[3], best[4]))
    free(units)
    return sorted(seen)
