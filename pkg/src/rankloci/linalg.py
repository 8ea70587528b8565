"""Exact linear algebra over the rationals.

Matrices are plain lists of row lists whose entries are ints or rationals
(``rationals.rat`` values).  Rank goes through fraction-free Bareiss
elimination on integer-cleared rows, so no rational arithmetic happens on
the hot path.  Kernel, solve, and inverse use reduced row echelon form with
exact rational pivots.
"""

from __future__ import annotations

from math import gcd, lcm

from .rationals import ONE, ZERO, rat


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def mat_mul(A, B):
    if not A or not B:
        return []
    p, k, q = len(A), len(B), len(B[0])
    out = []
    for i in range(p):
        row = []
        Ai = A[i]
        for j in range(q):
            s = ZERO
            for t in range(k):
                a = Ai[t]
                if a:
                    s += a * B[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        s = ZERO
        for a, x in zip(row, v):
            if a and x:
                s += a * x
        out.append(s)
    return out


def _int_rows(A):
    """Scale each row by the lcm of its denominators; returns int rows."""
    rows = []
    for row in A:
        mult = 1
        for e in row:
            d = e.denominator if hasattr(e, "denominator") else 1
            if d != 1:
                mult = lcm(mult, int(d))
        if mult == 1:
            rows.append([int(e) for e in row])
        else:
            rows.append([int(e * mult) for e in row])
    return rows


def rank(A) -> int:
    """Exact rank via fraction-free Bareiss elimination."""
    if not A or not A[0]:
        return 0
    M = _int_rows(A)
    n, m = len(M), len(M[0])
    prev = 1
    pr = 0
    for c in range(m):
        # smallest nonzero pivot keeps intermediate minors small
        piv, best = -1, None
        for r in range(pr, n):
            v = M[r][c]
            if v:
                a = abs(v)
                if best is None or a < best:
                    piv, best = r, a
                    if a == 1:
                        break
        if piv < 0:
            continue
        if piv != pr:
            M[pr], M[piv] = M[piv], M[pr]
        pv = M[pr][c]
        for r in range(pr + 1, n):
            arc = M[r][c]
            row, prow = M[r], M[pr]
            if arc:
                for cc in range(c + 1, m):
                    row[cc] = (pv * row[cc] - arc * prow[cc]) // prev
                row[c] = 0
            elif prev != pv:
                for cc in range(c + 1, m):
                    row[cc] = (pv * row[cc]) // prev
        prev = pv
        pr += 1
        if pr == n:
            break
    return pr


def rref(A):
    """Reduced row echelon form (a copy) and the list of pivot columns."""
    M = [[rat(e) if isinstance(e, int) else e for e in row] for row in A]
    if not M or not M[0]:
        return M, []
    n, m = len(M), len(M[0])
    pivots = []
    pr = 0
    for c in range(m):
        piv = -1
        for r in range(pr, n):
            if M[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        M[pr], M[piv] = M[piv], M[pr]
        pv = M[pr][c]
        if pv != 1:
            M[pr] = [e / pv for e in M[pr]]
        for r in range(n):
            if r != pr and M[r][c]:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[pr])]
        pivots.append(c)
        pr += 1
        if pr == n:
            break
    return M, pivots


def nullspace(A):
    """Basis of the right kernel, in reduced-echelon parametrization.

    The basis vector attached to free column ``c`` has a 1 in slot ``c``;
    the ordering over free columns is ascending, so the output is canonical.
    """
    if not A or not A[0]:
        return []
    m = len(A[0])
    R, pivots = rref(A)
    pivset = set(pivots)
    basis = []
    for c in range(m):
        if c in pivset:
            continue
        v = [ZERO] * m
        v[c] = ONE
        for r, pc in enumerate(pivots):
            if R[r][c]:
                v[pc] = -R[r][c]
        basis.append(v)
    return basis


def nullity(A) -> int:
    if not A or not A[0]:
        return len(A[0]) if A else 0
    return len(A[0]) - rank(A)


def solve(A, b):
    """One exact solution of A x = b, or None when inconsistent."""
    if not A:
        return []
    m = len(A[0])
    aug = [list(row) + [bv] for row, bv in zip(A, b)]
    R, pivots = rref(aug)
    for r in range(len(R)):
        if all(not e for e in R[r][:m]) and R[r][m]:
            return None
    x = [ZERO] * m
    for r, c in enumerate(pivots):
        if c == m:
            return None
        x[c] = R[r][m]
    return x


def inverse(A):
    n = len(A)
    aug = [list(row) + list(idrow) for row, idrow in zip(A, identity(n))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R[:n]]


def det(A):
    """Exact determinant via Bareiss (integer-cleared rows)."""
    n = len(A)
    if n == 0:
        return ONE
    M = [list(row) for row in A]
    scale = ONE
    intM = []
    for row in M:
        mult = 1
        for e in row:
            d = e.denominator if hasattr(e, "denominator") else 1
            if d != 1:
                mult = lcm(mult, int(d))
        scale = scale * rat(1, mult)
        intM.append([int(e * mult) if mult != 1 else int(e) for e in row])
    M = intM
    prev = 1
    sign = 1
    for c in range(n - 1):
        piv = -1
        for r in range(c, n):
            if M[r][c]:
                piv = r
                break
        if piv < 0:
            return ZERO
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        pv = M[c][c]
        for r in range(c + 1, n):
            arc = M[r][c]
            for cc in range(c + 1, n):
                M[r][cc] = (pv * M[r][cc] - arc * M[c][cc]) // prev
            M[r][c] = 0
        prev = pv
    return scale * rat(sign * M[n - 1][n - 1])


def row_space_basis(A):
    """Canonical (rref) basis of the row space."""
    R, pivots = rref(A)
    return [R[i] for i in range(len(pivots))]
