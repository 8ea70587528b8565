"""Dense univariate polynomials over the rationals, plus the Smith normal
form of polynomial matrices.

A polynomial is a plain list of rational coefficients in ascending degree
order with no trailing zeros; the zero polynomial is the empty list.  The
function-per-operation style keeps the hot paths free of object overhead.
"""

from __future__ import annotations

from .rationals import ONE, ZERO, rat


def up_trim(f):
    while f and not f[-1]:
        f.pop()
    return f


def up_deg(f) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(f) - 1


def up_is_zero(f) -> bool:
    return not f


def up_add(f, g):
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else ZERO) + (g[i] if i < len(g) else ZERO) for i in range(n)]
    return up_trim(out)


def up_sub(f, g):
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else ZERO) - (g[i] if i < len(g) else ZERO) for i in range(n)]
    return up_trim(out)


def up_neg(f):
    return [-c for c in f]


def up_scale(f, c):
    if not c:
        return []
    return [c * x for x in f]


def up_mul(f, g):
    if not f or not g:
        return []
    out = [ZERO] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] += a * b
    return up_trim(out)


def up_divmod(f, g):
    """Quotient and remainder; g must be nonzero."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    lead = g[-1]
    if len(r) <= dg:
        return [], up_trim(r)
    q = [ZERO] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            c = c / lead
            q[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] -= c * g[j]
    return up_trim(q), up_trim(r)


def up_div_exact(f, g):
    q, r = up_divmod(f, g)
    if r:
        raise ValueError("inexact polynomial division")
    return q


def up_gcd(f, g):
    """Monic gcd (1 for coprime inputs, [] only if both are zero)."""
    a, b = list(f), list(g)
    while b:
        a, b = b, up_divmod(a, b)[1]
    return up_monic(a)


def up_monic(f):
    if not f:
        return []
    lead = f[-1]
    if lead == 1:
        return list(f)
    return [c / lead for c in f]


def up_diff(f):
    return up_trim([i * c for i, c in enumerate(f)][1:])


def up_eval(f, x):
    acc = ZERO
    for c in reversed(f):
        acc = acc * x + c
    return acc


def up_valuation(f) -> int:
    """Lowest nonzero coefficient index; -1 for zero."""
    for i, c in enumerate(f):
        if c:
            return i
    return -1


def up_squarefree_parts(f):
    """Multiplicity-graded squarefree split: list of (part, multiplicity).

    Uses the derivative-gcd chain f, gcd(f,f'), gcd of that with its
    derivative, ...; exact over a field of characteristic zero.  Parts are
    monic, squarefree, pairwise coprime, and constant parts are dropped.
    """
    if not f:
        raise ValueError("zero polynomial has no squarefree split")
    chain = [up_monic(f)]
    while up_deg(chain[-1]) > 0:
        chain.append(up_gcd(chain[-1], up_diff(chain[-1])))
    # w[k] = product of all distinct factors of multiplicity >= k+1
    w = [up_div_exact(chain[k], chain[k + 1]) for k in range(len(chain) - 1)]
    parts = []
    for k in range(len(w)):
        e = up_div_exact(w[k], w[k + 1]) if k + 1 < len(w) else w[k]
        if up_deg(e) > 0:
            parts.append((e, k + 1))
    return parts


def smith_invariant_factors(mat):
    """Invariant-factor chain of a matrix of polynomials over Q[x].

    Classical elimination over the PID Q[x]: a minimal-degree pivot clears
    its row and column by division with remainder, and a fix-up row addition
    enforces that the pivot divides the remaining submatrix.  Returns the
    monic chain d_1 | d_2 | ... of length equal to the rank; entries beyond
    the rank (which would be zero) are omitted.
    """
    M = [[up_trim(list(e)) for e in row] for row in mat]
    p = len(M)
    q = len(M[0]) if p else 0
    out = []
    top = 0
    while top < min(p, q):
        pi = pj = -1
        best = None
        for i in range(top, p):
            for j in range(top, q):
                e = M[i][j]
                if e:
                    d = len(e) - 1
                    if best is None or d < best:
                        best, pi, pj = d, i, j
                        if d == 0:
                            break
            if best == 0:
                break
        if best is None:
            break  # submatrix is zero
        if pi != top:
            M[top], M[pi] = M[pi], M[top]
        if pj != top:
            for row in M:
                row[top], row[pj] = row[pj], row[top]
        while True:
            dirty = False
            for i in range(top + 1, p):
                if M[i][top]:
                    qt, _ = up_divmod(M[i][top], M[top][top])
                    if qt:
                        Mi, Mt = M[i], M[top]
                        for j in range(top, q):
                            if Mt[j]:
                                Mi[j] = up_sub(Mi[j], up_mul(qt, Mt[j]))
                    if M[i][top]:  # remainder has smaller degree: promote it
                        M[top], M[i] = M[i], M[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(top + 1, q):
                if M[top][j]:
                    qt, _ = up_divmod(M[top][j], M[top][top])
                    if qt:
                        for i in range(top, p):
                            if M[i][top]:
                                M[i][j] = up_sub(M[i][j], up_mul(qt, M[i][top]))
                    if M[top][j]:
                        for row in M:
                            row[top], row[j] = row[j], row[top]
                        dirty = True
                        break
            if dirty:
                continue
            piv = M[top][top]
            bad = -1
            for i in range(top + 1, p):
                for j in range(top + 1, q):
                    if M[i][j] and up_divmod(M[i][j], piv)[1]:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad < 0:
                break
            Mt, Mb = M[top], M[bad]
            for j in range(top, q):
                Mt[j] = up_add(Mt[j], Mb[j])
        out.append(up_monic(M[top][top]))
        top += 1
    return out
