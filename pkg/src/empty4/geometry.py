"""Coordinate-level geometry: realizations, volumes, widths, Ehrhart data.

Tuples abstract simplices up to lattice equivalence; this module moves
between that encoding and explicit vertex coordinates, and evaluates the
geometric quantities (facet volumes, lattice width, h*-vector, Ehrhart
polynomial, brute-force point counts) used to cross-check the residue
oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd
from itertools import combinations, product

import numpy as np

from . import intmat
from .errors import Degenerate, NoUnitEntry, NotCyclic, NotEmpty, ParseError
from .oracle import facet_volumes, is_empty
from .tuples import CyclicTuple, mk_tuple


@dataclass(frozen=True)
class SimplexCoords:
    """d+1 integer vertices in Z^d, affinely independent."""

    vertices: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.vertices) - 1

    def __str__(self):
        return "\n".join(",".join(str(x) for x in v) for v in self.vertices)


def mk_simplex(vertices) -> SimplexCoords:
    vs = tuple(tuple(int(x) for x in v) for v in vertices)
    if not vs:
        raise ValueError("no vertices")
    d = len(vs) - 1
    if any(len(v) != d for v in vs):
        raise ValueError(f"expected {d + 1} vertices of dimension {d}")
    s = SimplexCoords(vs)
    if intmat.det(edge_matrix(s)) == 0:
        raise Degenerate(f"vertices are affinely dependent: {vs}")
    return s


def parse_simplex(text: str) -> SimplexCoords:
    """One vertex per line, comma-separated integer coordinates."""
    rows = []
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append(tuple(int(p) for p in line.split(",")))
        except ValueError:
            raise ParseError(f"bad vertex {line!r}", line=ln) from None
    if len(rows) < 2:
        raise ParseError("need at least two vertices")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("vertices have mixed dimensions")
    if len(rows) != len(rows[0]) + 1:
        raise ParseError(
            f"need d+1 vertices of dimension d, got {len(rows)} of dimension {len(rows[0])}"
        )
    try:
        return mk_simplex(rows)
    except Degenerate:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from None


def edge_matrix(s: SimplexCoords):
    """Columns are v_i - v_0, i = 1..d."""
    v0 = s.vertices[0]
    d = s.d
    return [[s.vertices[j + 1][i] - v0[i] for j in range(d)] for i in range(d)]


def volume(s: SimplexCoords) -> int:
    """Normalized volume: |det| of the edge matrix."""
    D = intmat.det(edge_matrix(s))
    if D == 0:
        raise Degenerate("zero volume")
    return abs(D)


def realize(t: CyclicTuple) -> SimplexCoords:
    """Standard coordinates conv(e_1, ..., e_d, v) for a tuple with a unit
    entry (the unit entry's vertex is placed opposite a unimodular facet and
    becomes the apex v, listed last).

    Recipe: for the smallest unit-entry index i, rescale by u = -b_i^{-1} so
    position i reads -1, then shift the other entries by multiples of V
    (largest entry down first / smallest up, ties to the lowest index) until
    they sum to V; those d entries are the apex coordinates.
    """
    V, b = t.V, t.b
    i0 = next((i for i, x in enumerate(b) if gcd(x, V) == 1), None)
    if i0 is None:
        raise NoUnitEntry(f"{t} has no entry coprime to {V}")
    if V == 1:
        u = 0
    else:
        u = (V - pow(b[i0], -1, V)) % V
    c = [(u * x) % V for x in b]
    c[i0] = -1
    rest = [j for j in range(len(b)) if j != i0]
    s = sum(c)
    while s > V:
        j = max(rest, key=lambda k: (c[k], -k))
        c[j] -= V
        s -= V
    while s < V:
        j = min(rest, key=lambda k: (c[k], k))
        c[j] += V
        s += V
    d = t.d
    verts = [tuple(1 if r == i else 0 for r in range(d)) for i in range(d)]
    verts.append(tuple(c[j] for j in rest))
    return SimplexCoords(tuple(verts))


def realize_any(t: CyclicTuple) -> SimplexCoords:
    """Coordinates for an arbitrary tuple (no unit entry needed).

    Works in the basis of the ambient lattice Z^d + Z*(b_1..b_d)/V: the unit
    vectors get coordinates adj(B)_i / V^(d-2) where B is the Hermite basis
    of the V-scaled ambient lattice. First vertex is the origin.
    """
    V, b, d = t.V, t.b, t.d
    rows = [[V if i == j else 0 for j in range(d)] for i in range(d)]
    rows.append(list(b[1:]))
    B = intmat.row_hnf(rows)
    assert len(B) == d
    adjB = intmat.adjugate(B)
    scale = V ** (d - 2)
    verts = [(0,) * d]
    for i in range(d):
        row = adjB[i]
        assert all(x % scale == 0 for x in row), "lattice basis scaling failed"
        verts.append(tuple(x // scale for x in row))
    return SimplexCoords(tuple(verts))


def tuple_from_simplex(s: SimplexCoords) -> CyclicTuple:
    """Residue tuple of a cyclic simplex given by coordinates.

    Raises Degenerate for flat input and NotCyclic (with the invariant
    factor profile) when the vertex-lattice quotient is not cyclic.
    """
    E = edge_matrix(s)
    D = intmat.det(E)
    if D == 0:
        raise Degenerate("zero volume")
    V = abs(D)
    d = s.d
    if V == 1:
        return mk_tuple(1, (0,) * (d + 1))
    diag, _L, Linv = intmat.smith_normal_form(E)
    nontrivial = [x for x in diag if x != 1]
    if len(nontrivial) != 1:
        raise NotCyclic(nontrivial)
    k = diag.index(nontrivial[0])
    g = [Linv[r][k] for r in range(d)]
    sign = 1 if D > 0 else -1
    x = intmat.mat_vec(intmat.adjugate(E), g)
    bs = [(sign * xi) % V for xi in x]
    b0 = (-sum(bs)) % V
    return mk_tuple(V, [b0] + bs)


def facet_volumes_geometric(s: SimplexCoords) -> tuple[int, ...]:
    """Normalized volume of each facet (entry i omits vertex i): the gcd of
    the maximal minors of the facet's edge matrix."""
    d = s.d
    out = []
    for i in range(d + 1):
        rest = [s.vertices[j] for j in range(d + 1) if j != i]
        base = rest[0]
        edges = [[v[r] - base[r] for v in rest[1:]] for r in range(d)]  # d x (d-1)
        g = 0
        for rows in combinations(range(d), d - 1):
            minor = [edges[r] for r in rows]
            g = gcd(g, abs(intmat.det(minor)))
        if g == 0:
            raise Degenerate(f"facet {i} is degenerate")
        out.append(g)
    return tuple(out)


def _width_fast(s: SimplexCoords) -> int | None:
    """Width scan for conv(e_1..e_d, v) vertex sets (realize output).

    Any functional with range <= w on the vertex set can be written
    f = m*(1,..,1) + g with g in [0,w]^d (anchor m at the minimum value);
    the e_i values are then m + g_i automatically inside the window and only
    the apex value m*T + g.v constrains m, with T = sum(v) - 1.
    """
    d = s.d
    for i in range(d):
        if s.vertices[i] != tuple(1 if r == i else 0 for r in range(d)):
            return None
    v = s.vertices[d]
    T = sum(v) - 1
    if T <= 0:
        return None  # realize output always has T = V >= 1
    w = 0
    while True:
        w += 1
        for g in product(range(w + 1), repeat=d):
            gv = sum(a * b for a, b in zip(g, v))
            # integer m with 0 <= m*T + gv <= w
            m_lo = -(gv // T)
            m_hi = (w - gv) // T
            for m in range(m_lo, m_hi + 1):
                if all(gi == -m for gi in g):
                    continue  # f = m*1 + g is the zero functional
                return w


def width(s: SimplexCoords) -> int:
    """Lattice width: min over nonzero integer functionals f of
    max f(P) - min f(P)."""
    E = edge_matrix(s)
    D = intmat.det(E)
    if D == 0:
        raise Degenerate("zero volume")
    fast = _width_fast(s)
    if fast is not None:
        return fast
    d = s.d
    adjT = [list(col) for col in zip(*intmat.adjugate(E))]
    bound = min(
        max(v[i] for v in s.vertices) - min(v[i] for v in s.vertices)
        for i in range(d)
    )
    for w in range(1, bound):
        # f integral <=> g = E^T f has adj(E)^T g == 0 mod det; width of f
        # equals the range of {0} with g
        for g in product(range(-w, w + 1), repeat=d):
            if max(g + (0,)) - min(g + (0,)) != w:
                continue  # smaller ranges were already scanned
            if all(
                sum(adjT[i][j] * g[j] for j in range(d)) % D == 0 for i in range(d)
            ):
                return w
    return bound


def hstar(t: CyclicTuple) -> tuple[int, ...]:
    """h*-vector (1, 0, h2, h3, 0) of an empty 4-simplex: the volume and
    facet-volume sum determine the middle entries."""
    if t.d != 4:
        raise ValueError("h* formula is specific to dimension 4")
    if not is_empty(t):
        raise NotEmpty(f"{t} has a non-vertex lattice point")
    V = t.V
    S = sum(facet_volumes(t))
    assert (V + S) % 2 == 0, "V and facet-volume sum must share parity"
    h2 = (V + S) // 2 - 3
    h3 = (V - S) // 2 + 2
    return (1, 0, h2, h3, 0)


def _rising_binom_poly(a: int, d: int) -> list[Fraction]:
    """Coefficients (ascending) of C(n + a, d) as a polynomial in n."""
    poly = [Fraction(1)]
    for r in range(a - d + 1, a + 1):
        poly = [Fraction(0)] + poly[:]  # multiply by n
        for i, coef in enumerate(poly[1:], start=0):
            poly[i] += coef * r
    return [c / factorial(d) for c in poly]


def ehrhart_polynomial(t: CyclicTuple) -> tuple[Fraction, ...]:
    """Ehrhart polynomial of an empty 4-simplex, coefficients in descending
    degree order (n^4 first). Derived from the h*-vector expansion
    sum_k h_k * C(n + 4 - k, 4)."""
    hs = hstar(t)
    d = t.d
    coeffs = [Fraction(0)] * (d + 1)
    for k, hk in enumerate(hs):
        if hk == 0:
            continue
        for i, c in enumerate(_rising_binom_poly(d - k, d)):
            coeffs[i] += hk * c
    return tuple(reversed(coeffs))


# ---------------------------------------------------------------------------
# brute-force lattice point counting (test oracle; deliberately dumb)


@lru_cache(maxsize=8)
def _sector_grid(V: int, d: int):
    """Integer grids z >= 0 with sum(z) <= V, as d flat int64 arrays.

    Built one leading-coordinate slice at a time to keep peak memory at a
    single (V+1)^(d-1) block.
    """
    shape = (V + 1,) * (d - 1)
    axes = [
        np.arange(V + 1, dtype=np.int16).reshape(
            tuple(V + 1 if i == j else 1 for i in range(d - 1))
        )
        for j in range(d - 1)
    ]
    tail_sum = np.zeros(shape, dtype=np.int16)
    for a in axes:
        tail_sum = tail_sum + a
    parts: list[list[np.ndarray]] = [[] for _ in range(d)]
    for z0 in range(V + 1):
        mask = tail_sum <= V - z0
        k = int(mask.sum())
        parts[0].append(np.full(k, z0, dtype=np.int64))
        for j in range(d - 1):
            parts[j + 1].append(
                np.broadcast_to(axes[j], shape)[mask].astype(np.int64)
            )
    return tuple(np.concatenate(p) for p in parts)


def brute_force_count(s: SimplexCoords, n: int = 1) -> int:
    """Number of lattice points in n*P by direct enumeration.

    Chooses among three equivalent enumerations by size: the coordinate
    bounding box, the barycentric sector {z >= 0, sum z <= nV}, or (for
    dimension-4 dilations whose sector is too large) residue classes read
    off a [0,V)^d grid. All are straight grid scans, independent of the
    residue-walk oracles they validate.
    """
    if n < 0:
        raise ValueError("dilation factor must be nonnegative")
    if n == 0:
        return 1
    E = edge_matrix(s)
    D = intmat.det(E)
    if D == 0:
        raise Degenerate("zero volume")
    V = abs(D)
    d = s.d
    sign = 1 if D > 0 else -1
    M = [[sign * x for x in row] for row in intmat.adjugate(E)]  # V * E^{-1}
    v0 = s.vertices[0]

    los = [min(v[i] for v in s.vertices) * n for i in range(d)]
    his = [max(v[i] for v in s.vertices) * n for i in range(d)]
    box_cells = 1
    for lo, hi in zip(los, his):
        box_cells *= hi - lo + 1
    sector_cells = comb(n * V + d, d)

    if box_cells <= 2_000_000 and box_cells <= sector_cells:
        # y = M (p - n v0) >= 0 componentwise, sum(y) <= n V
        shape = [1] * d
        acc_rows = []
        for i in range(d + 1):
            row = M[i] if i < d else [sum(M[r][j] for r in range(d)) for j in range(d)]
            off = -sum(row[j] * n * v0[j] for j in range(d))
            acc = np.full((1,) * d, off, dtype=np.int64)
            for j in range(d):
                shape_j = shape[:]
                shape_j[j] = his[j] - los[j] + 1
                axis = (np.arange(los[j], his[j] + 1, dtype=np.int64) * row[j]).reshape(
                    shape_j
                )
                acc = acc + axis
            acc_rows.append(acc)
        mask = acc_rows[0] >= 0
        for i in range(1, d):
            mask &= acc_rows[i] >= 0
        mask &= acc_rows[d] <= n * V
        return int(mask.sum())

    if sector_cells <= 2_000_000:
        # p = n v0 + E z / V with z in the sector and E z == 0 mod V
        zs = _sector_grid(n * V, d)
        mask = None
        for i in range(d):
            acc = zs[0] * E[i][0]
            for j in range(1, d):
                acc = acc + zs[j] * E[i][j]
            m = acc % V == 0
            mask = m if mask is None else (mask & m)
        return int(mask.sum())

    # residue-class decomposition: z = r + V*m splits the congruence (a
    # [0,V)^d grid scan on r) from the sector condition (a stars-and-bars
    # count over m >= 0 with sum(m) <= n - ceil(sum(r)/V))
    grid_cells = V**d
    if grid_cells > 50_000_000:
        raise ValueError(f"brute-force grid too large (V={V}, d={d})")
    emax = max(abs(x) for row in E for x in row)
    dtype = np.int32 if emax * (V - 1) * d < 2**31 else np.int64
    shape = [1] * d
    weight = None
    for i in range(d):
        row = E[i]
        acc = np.zeros((1,) * d, dtype=dtype)
        for j in range(d):
            shape_j = shape[:]
            shape_j[j] = V
            axis = (np.arange(V, dtype=dtype) * dtype(row[j])).reshape(shape_j)
            acc = acc + axis
        m = acc % V == 0
        weight = m if weight is None else (weight & m)
        del acc, m
    rsum = np.zeros((1,) * d, dtype=np.int32)
    for j in range(d):
        shape_j = shape[:]
        shape_j[j] = V
        rsum = rsum + np.arange(V, dtype=np.int32).reshape(shape_j)
    csums = rsum[weight]
    heights = -((-csums) // V)  # ceil
    total = 0
    for h in np.unique(heights):
        if h <= n:
            total += int((heights == h).sum()) * comb(n - int(h) + d, d)
    return total
