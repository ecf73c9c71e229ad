"""Exact integer matrix helpers: determinant, adjugate, Hermite and Smith
normal forms. Sizes here are tiny (at most 5x5), so clarity beats asymptotic
cleverness; everything is plain Python ints and stays exact.

Matrices are lists of row lists.
"""

from __future__ import annotations


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_vec(A, v):
    return [sum(A[i][j] * v[j] for j in range(len(v))) for i in range(len(A))]


def det(M):
    """Fraction-free Gaussian elimination (Bareiss)."""
    n = len(M)
    A = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _minor(M, i, j):
    return [row[:j] + row[j + 1 :] for r, row in enumerate(M) if r != i]


def adjugate(M):
    """adj(M) with M @ adj(M) == det(M) * I."""
    n = len(M)
    if n == 1:
        return [[1]]
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det(_minor(M, i, j))
            A[j][i] = c if (i + j) % 2 == 0 else -c
    return A


def row_hnf(rows):
    """Row-style Hermite normal form.

    Returns the echelon basis of the row lattice: pivots positive, each
    pivot the only nonzero entry of its column among later rows, entries
    above a pivot reduced into [0, pivot). For a nonsingular square input
    this is the unique upper-triangular canonical form under left
    multiplication by GL_n(Z).
    """
    A = [list(map(int, r)) for r in rows]
    if not A:
        return []
    ncols = len(A[0])
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        # gather the nonzero entries of column c into row r (Euclid on rows)
        while True:
            pivots = [i for i in range(r, len(A)) if A[i][c] != 0]
            if not pivots:
                break
            best = min(pivots, key=lambda i: abs(A[i][c]))
            A[r], A[best] = A[best], A[r]
            done = True
            for i in range(r + 1, len(A)):
                if A[i][c] != 0:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    if A[i][c] != 0:
                        done = False
            if done:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
    return [row for row in A[:r]]


def smith_normal_form(M):
    """Smith normal form with tracked left transform.

    Returns (diag, L, Linv) where L @ M @ R == diag(diag) for some
    unimodular R (not returned), L is unimodular and Linv = L^{-1}. The
    diagonal is nonnegative with each entry dividing the next.
    """
    A = [row[:] for row in M]
    n = len(A)
    m = len(A[0])
    L = identity(n)
    Linv = identity(n)

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        L[i], L[j] = L[j], L[i]
        for r in range(n):
            Linv[r][i], Linv[r][j] = Linv[r][j], Linv[r][i]

    def row_sub(i, q, k):  # row_i -= q * row_k
        A[i] = [x - q * y for x, y in zip(A[i], A[k])]
        L[i] = [x - q * y for x, y in zip(L[i], L[k])]
        for r in range(n):
            Linv[r][k] += q * Linv[r][i]

    def row_neg(i):
        A[i] = [-x for x in A[i]]
        L[i] = [-x for x in L[i]]
        for r in range(n):
            Linv[r][i] = -Linv[r][i]

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]

    def col_sub(i, q, k):  # col_i -= q * col_k
        for row in A:
            row[i] -= q * row[k]

    for k in range(min(n, m)):
        while True:
            # choose the nonzero entry of smallest magnitude as pivot
            piv = None
            for i in range(k, n):
                for j in range(k, m):
                    if A[i][j] != 0 and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            if piv != (k, k):
                if piv[0] != k:
                    row_swap(k, piv[0])
                if piv[1] != k:
                    col_swap(k, piv[1])
            dirty = False
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    q = A[i][k] // A[k][k]
                    row_sub(i, q, k)
                    if A[i][k] != 0:
                        dirty = True
            for j in range(k + 1, m):
                if A[k][j] != 0:
                    q = A[k][j] // A[k][k]
                    col_sub(j, q, k)
                    if A[k][j] != 0:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the whole remaining block for the
            # divisibility chain; pull an offending row up and repeat
            offender = None
            for i in range(k + 1, n):
                for j in range(k + 1, m):
                    if A[i][j] % A[k][k] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_sub(k, -1, offender)  # row_k += row_offender
        if k < n and k < m and A[k][k] < 0:
            row_neg(k)
    diag = [A[i][i] for i in range(min(n, m))]
    return diag, L, Linv
