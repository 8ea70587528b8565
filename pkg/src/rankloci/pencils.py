"""Exact Kronecker invariants of matrix pencils s*M1 + t*M2 and the rank of
the corresponding 2 x p x q tensors.

A pencil is strictly equivalent to a direct sum of singular blocks L_eps
(eps x (eps+1), s on the diagonal, t on the superdiagonal), transposed
blocks L_eta^T, a regular part whose elementary structure is carried by the
invariant-factor chain d_1 | d_2 | ..., and a zero block.  The tensor rank
is

    rank = sum(eps_i) + sum(eta_j) + #eps + #eta + f + m(F),

with f the degree of the regular part and m(F) the number of invariant
factors that are not squarefree (equivalently, the maximum over eigenvalues
of the number of Jordan blocks of size >= 2).

Invariant factors are computed homogeneously: two univariate Smith forms,
one in s at t=1 and one in t at s=1, are recombined so that the factor t^a
captures the root at [1:0] with no special "infinite eigenvalue" path.  The
direct gcd-of-all-minors definition is implemented alongside as
``invariant_factors_minor_gcd`` and serves as a cross-check oracle at small
sizes.  Minimal indices come from kernel dimensions of the block-bidiagonal
coefficient systems of polynomial kernel vectors, computed by an
incremental ladder over exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import linalg, upoly as up
from .binary import (
    BinaryForm,
    divide_exact,
    gcd_binary,
    gcd_many,
    has_multiple_root,
    squarefree_decompose,
)
from .errors import InternalInvariantError
from .rationals import ONE, ZERO, parse_rational, rat, rat_str


class Pencil:
    """Pair of p x q rational matrices (M1, M2) read as s*M1 + t*M2."""

    __slots__ = ("rows", "cols", "M1", "M2")

    def __init__(self, M1, M2, shape=None):
        p = len(M1)
        q = len(M1[0]) if p else 0
        if shape is not None:
            if p and (shape[0] != p or shape[1] != q):
                raise ValueError("explicit shape disagrees with slice data")
            p, q = shape  # rowless blocks cannot carry their column count
        if len(M2) != p or any(len(r) != q for r in M1) or any(len(r) != q for r in M2):
            raise ValueError("pencil slices must have identical shapes")
        conv = lambda row: [rat(e) if isinstance(e, (int, str)) else e for e in row]
        self.rows, self.cols = p, q
        self.M1 = [conv(r) for r in M1]
        self.M2 = [conv(r) for r in M2]

    @classmethod
    def from_json(cls, m1, m2):
        parse = lambda m: [[parse_rational(e) for e in row] for row in m]
        if not isinstance(m1, list) or not isinstance(m2, list):
            raise ValueError("pencil JSON: m1 and m2 must be arrays of rows")
        return cls(parse(m1), parse(m2))

    def to_json(self):
        dump = lambda m: [[rat_str(e) for e in row] for row in m]
        return {"rows": self.rows, "cols": self.cols, "m1": dump(self.M1), "m2": dump(self.M2)}

    @property
    def is_zero(self) -> bool:
        return all(not e for row in self.M1 for e in row) and all(
            not e for row in self.M2 for e in row
        )

    def transpose(self) -> "Pencil":
        flip = lambda M: [[M[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Pencil(flip(self.M1), flip(self.M2), shape=(self.cols, self.rows))

    def entry(self, i: int, j: int) -> BinaryForm:
        return BinaryForm([self.M1[i][j], self.M2[i][j]])

    def substitute_st(self, a, b, c, d) -> "Pencil":
        """Change of pencil coordinates (s, t) -> (a s + b t, c s + d t)."""
        a, b, c, d = rat(a), rat(b), rat(c), rat(d)
        N1 = [[a * self.M1[i][j] + c * self.M2[i][j] for j in range(self.cols)] for i in range(self.rows)]
        N2 = [[b * self.M1[i][j] + d * self.M2[i][j] for j in range(self.cols)] for i in range(self.rows)]
        return Pencil(N1, N2)

    def conjugate(self, A, B) -> "Pencil":
        """Row transform A (p x p) and column transform B (q x q)."""
        return Pencil(linalg.mat_mul(linalg.mat_mul(A, self.M1), B),
                      linalg.mat_mul(linalg.mat_mul(A, self.M2), B))

    def __repr__(self):
        return f"Pencil({self.rows}x{self.cols})"


# -- canonical constructors -------------------------------------------------


def build_L(eps: int) -> Pencil:
    """The eps x (eps+1) singular block: s on the diagonal, t above it."""
    if eps < 1:
        raise ValueError("minimal-index block size must be positive")
    M1 = [[ONE if j == i else ZERO for j in range(eps + 1)] for i in range(eps)]
    M2 = [[ONE if j == i + 1 else ZERO for j in range(eps + 1)] for i in range(eps)]
    return Pencil(M1, M2)


def build_regular(F) -> Pencil:
    """s*Id + t*F for a square rational matrix F."""
    f = len(F)
    if any(len(r) != f for r in F):
        raise ValueError("regular part needs a square matrix")
    M1 = [[ONE if i == j else ZERO for j in range(f)] for i in range(f)]
    M2 = [[rat(e) if isinstance(e, (int, str)) else e for e in row] for row in F]
    return Pencil(M1, M2)


def zero_pencil(p: int, q: int) -> Pencil:
    return Pencil([[ZERO] * q for _ in range(p)], [[ZERO] * q for _ in range(p)], shape=(p, q))


def direct_sum(*pencils: Pencil) -> Pencil:
    """Block-diagonal sum; zero blocks Z_{p x q} with p or q zero are fine."""
    p = sum(P.rows for P in pencils)
    q = sum(P.cols for P in pencils)
    M1 = [[ZERO] * q for _ in range(p)]
    M2 = [[ZERO] * q for _ in range(p)]
    r0 = c0 = 0
    for P in pencils:
        for i in range(P.rows):
            for j in range(P.cols):
                M1[r0 + i][c0 + j] = P.M1[i][j]
                M2[r0 + i][c0 + j] = P.M2[i][j]
        r0 += P.rows
        c0 += P.cols
    return Pencil(M1, M2, shape=(p, q))


def jordan_block(size: int, eigenvalue) -> list:
    lam = rat(eigenvalue)
    return [[lam if i == j else (ONE if j == i + 1 else ZERO) for j in range(size)] for i in range(size)]


def symbolic_det(P: Pencil) -> BinaryForm:
    """det(s M1 + t M2) as a binary form of degree = size, by cofactors."""
    if P.rows != P.cols:
        raise ValueError("determinant needs a square pencil")
    n = P.rows
    grid = [[P.entry(i, j) for j in range(n)] for i in range(n)]

    def minor(rows, cols):
        if len(rows) == 1:
            return grid[rows[0]][cols[0]]
        acc = BinaryForm.zero(len(rows))
        r0 = rows[0]
        for k, c in enumerate(cols):
            e = grid[r0][c]
            if e.is_zero:
                continue
            sub = minor(rows[1:], cols[:k] + cols[k + 1 :])
            term = e * sub
            acc = acc + (term if k % 2 == 0 else -term)
        return acc

    if n == 0:
        return BinaryForm([ONE])
    return minor(tuple(range(n)), tuple(range(n)))


# -- normal rank -------------------------------------------------------------


def normal_rank(P: Pencil) -> int:
    """Rank over the function field: max of min(p,q)+1 specializations.

    Any nonzero r x r minor is a binary form of degree <= min(p, q), so it
    cannot vanish at min(p,q)+1 distinct values of s at t = 1.
    """
    best = 0
    for lam in range(min(P.rows, P.cols) + 1):
        A = [
            [lam * P.M1[i][j] + P.M2[i][j] for j in range(P.cols)]
            for i in range(P.rows)
        ]
        best = max(best, linalg.rank(A))
    return best


# -- invariant factors --------------------------------------------------------


def _smith_chain(P: Pencil, s_side: bool):
    """Univariate invariant factors of x*M1 + M2 (s_side) or M1 + x*M2."""
    A, B = (P.M1, P.M2) if s_side else (P.M2, P.M1)
    grid = [
        [up.up_trim([B[i][j], A[i][j]]) for j in range(P.cols)]
        for i in range(P.rows)
    ]
    return up.smith_invariant_factors(grid)


def invariant_factors(P: Pencil) -> list:
    """Homogeneous invariant-factor chain of the pencil (nonconstant only).

    d_k(s,t) = t^(a_k) * homogenization of e_k(s), where e_k is the k-th
    univariate invariant factor at t=1 and a_k the order of vanishing at
    t=0 of the k-th univariate invariant factor at s=1.  Monic in s; when
    the whole s-chain vanishes the factor is a pure t-power, monic in t.
    """
    if P.is_zero:
        return []
    es = _smith_chain(P, s_side=True)
    fs = _smith_chain(P, s_side=False)
    if len(es) != len(fs):
        raise InternalInvariantError(
            "the two dehomogenized Smith chains disagree in length",
            {"s_side": len(es), "t_side": len(fs)},
        )
    out = []
    for e, f in zip(es, fs):
        a = up.up_valuation(f)
        d = BinaryForm.from_upoly_s(e).shift_st(0, a)
        if d.degree >= 1:
            out.append(d.monic())
    return out


def invariant_factors_minor_gcd(P: Pencil) -> list:
    """Invariant factors straight from the definition: D_k = gcd of all k x k
    minors (homogeneous), d_k = D_k / D_{k-1}.  Exponential in the size;
    meant for small pencils and as an oracle for ``invariant_factors``."""
    grid = [[P.entry(i, j) for j in range(P.cols)] for i in range(P.rows)]

    def minor_det(rows, cols):
        if len(rows) == 1:
            return grid[rows[0]][cols[0]]
        acc = BinaryForm.zero(len(rows))
        r0 = rows[0]
        for k, c in enumerate(cols):
            e = grid[r0][c]
            if e.is_zero:
                continue
            term = e * minor_det(rows[1:], cols[:k] + cols[k + 1 :])
            acc = acc + (term if k % 2 == 0 else -term)
        return acc

    r = normal_rank(P)
    prev = BinaryForm([ONE])
    out = []
    for k in range(1, r + 1):
        g: Optional[BinaryForm] = None
        for rows in combinations(range(P.rows), k):
            for cols in combinations(range(P.cols), k):
                m = minor_det(rows, cols)
                if m.is_zero:
                    continue
                g = m.monic() if g is None else gcd_many([g, m])
                if g.is_constant:
                    break
            if g is not None and g.is_constant:
                break
        if g is None:
            raise InternalInvariantError("normal rank and vanishing minors disagree", {"k": k})
        d = divide_exact(g, prev).monic()
        if d.degree >= 1:
            out.append(d)
        prev = g
    return out


# -- minimal indices ----------------------------------------------------------


def _right_index_ladder(P: Pencil, count: int):
    """Multiset of right (column) minimal indices, via kernel dimensions of
    the coefficient systems of polynomial kernel vectors.

    A degree-k kernel vector x(s,t) = sum x_i s^(k-i) t^i satisfies
    M1 x_0 = 0, M1 x_i = -M2 x_(i-1), M2 x_k = 0.  The space of valid
    prefixes is carried by the values of its last block only; the number of
    minimal indices <= k is the jump c_k - c_(k-1) of full-solution counts.
    Returns (positive_indices, zero_index_count) with len + zeros == count.
    """
    if count == 0:
        return [], 0
    if P.rows == 0:
        return [], count  # no constraints: every column is a zero column
    M1, M2 = P.M1, P.M2
    q = P.cols
    ker1 = linalg.nullspace(M1)
    # rows y with y M1 = 0; the solvability condition for M1 x = -M2 v
    left_null = linalg.nullspace(linalg.transpose(M1))
    cond = [linalg.mat_vec(linalg.transpose(M2), y) for y in left_null]  # rows y*M2

    last = [v[:] for v in ker1]  # last-block values of the prefix space
    c_prev = 0
    found = {}
    total = 0
    k = 0
    while total < count:
        if k > P.rows + P.cols + 1:
            raise InternalInvariantError(
                "minimal-index ladder failed to terminate",
                {"pencil": P.to_json(), "found": found, "expected": count},
            )
        dim = len(last)
        # full solutions at degree k: prefixes whose last block lies in ker M2
        if dim:
            img = [linalg.mat_vec(M2, v) for v in last]
            c_k = dim - linalg.rank(img)
        else:
            c_k = 0
        n_k = c_k - c_prev  # number of minimal indices <= k
        jump = n_k - total
        if jump < 0 or n_k < 0:
            raise InternalInvariantError("kernel ladder dimensions are inconsistent",
                                         {"k": k, "c_k": c_k, "c_prev": c_prev})
        if jump:
            found[k] = jump
            total = n_k
        if total >= count:
            break
        c_prev = c_k
        # extend prefixes: keep those with M2 v in im(M1), append solutions
        if cond and dim:
            E = [[sum((c[j] * v[j] for j in range(q)), ZERO) for v in last] for c in cond]
            keep = linalg.nullspace(E)
        else:
            keep = [[ONE if i == j else ZERO for i in range(dim)] for j in range(dim)]
        new_last = []
        for u in keep:
            v = [sum((u[i] * last[i][j] for i in range(dim)), ZERO) for j in range(q)]
            rhs = [-x for x in linalg.mat_vec(M2, v)]
            x = linalg.solve(M1, rhs)
            if x is None:
                raise InternalInvariantError("prefix extension unexpectedly unsolvable", {"k": k})
            new_last.append(x)
        new_last.extend(v[:] for v in ker1)
        last = new_last
        k += 1
    eps = []
    zeros = found.get(0, 0)
    for idx in sorted(found):
        if idx > 0:
            eps.extend([idx] * found[idx])
    return eps, zeros


def minimal_indices(P: Pencil):
    """(eps, eta, zero_rows, zero_cols): the singular Kronecker data.

    eps and eta are the positive column and row minimal indices; the zero
    minimal indices are exactly the zero columns and rows of the normal
    form and are reported separately as the Z-block dimensions.
    """
    r = normal_rank(P)
    eps, zero_cols = _right_index_ladder(P, P.cols - r)
    eta, zero_rows = _right_index_ladder(P.transpose(), P.rows - r)
    return sorted(eps), sorted(eta), zero_rows, zero_cols


# -- assembled invariants and rank -------------------------------------------


@dataclass(frozen=True)
class KroneckerInvariants:
    eps: tuple
    eta: tuple
    factors: tuple  # nonconstant invariant factors, ascending divisibility
    zero_rows: int
    zero_cols: int

    @property
    def f(self) -> int:
        return sum(d.degree for d in self.factors)

    @property
    def factor_degrees(self) -> tuple:
        return tuple(d.degree for d in self.factors)

    @property
    def m_F(self) -> int:
        return sum(1 for d in self.factors if has_multiple_root(d))

    def to_json(self):
        return {
            "eps": list(self.eps),
            "eta": list(self.eta),
            "invariant_factors": [d.to_json() for d in self.factors],
            "zero_rows": self.zero_rows,
            "zero_cols": self.zero_cols,
        }


def kronecker_invariants(P: Pencil) -> KroneckerInvariants:
    """Full invariant set with the row/column budget identities enforced."""
    eps, eta, zero_rows, zero_cols = minimal_indices(P)
    factors = invariant_factors(P)
    inv = KroneckerInvariants(
        eps=tuple(eps), eta=tuple(eta), factors=tuple(factors),
        zero_rows=zero_rows, zero_cols=zero_cols,
    )
    f = inv.f
    row_budget = sum(eps) + sum(e + 1 for e in eta) + f + zero_rows
    col_budget = sum(e + 1 for e in eps) + sum(eta) + f + zero_cols
    if row_budget != P.rows or col_budget != P.cols:
        raise InternalInvariantError(
            "Kronecker budget identities violated",
            {"pencil": P.to_json(), "invariants": inv.to_json(),
             "row_budget": row_budget, "col_budget": col_budget},
        )
    for a, b in zip(factors, factors[1:]):
        try:
            divide_exact(b, a)
        except ValueError:
            raise InternalInvariantError(
                "invariant factors do not form a divisibility chain",
                {"factors": [d.to_json() for d in factors]},
            ) from None
    return inv


def is_concise_tensor(P: Pencil) -> bool:
    """Conciseness of the 2 x p x q tensor by its three flattening ranks:
    independent slices, no common left kernel, no common right kernel."""
    flat2 = [[e for row in P.M1 for e in row], [e for row in P.M2 for e in row]]
    if linalg.rank(flat2) < 2:
        return False
    side = [r1 + r2 for r1, r2 in zip(P.M1, P.M2)]
    if linalg.rank(side) < P.rows:
        return False
    stack = P.M1 + P.M2
    return linalg.rank(stack) >= P.cols


@dataclass(frozen=True)
class PencilRankReport:
    invariants: KroneckerInvariants
    f: int
    m_F: int
    rank: int
    concise: bool

    def to_json(self):
        return {
            "invariants": self.invariants.to_json(),
            "f": self.f,
            "m_F": self.m_F,
            "rank": self.rank,
            "concise": self.concise,
        }


def pencil_rank(P: Pencil) -> PencilRankReport:
    """Tensor rank of the 2 x p x q tensor behind the pencil."""
    inv = kronecker_invariants(P)
    f, m = inv.f, inv.m_F
    rank = sum(inv.eps) + sum(inv.eta) + len(inv.eps) + len(inv.eta) + f + m
    return PencilRankReport(invariants=inv, f=f, m_F=m, rank=rank, concise=is_concise_tensor(P))


# -- eigenstructure fingerprint ----------------------------------------------


def eigen_partition_spectrum(factors) -> tuple:
    """Multiset of per-root multiplicity profiles of an invariant-factor
    chain, computed Galois-stably (no root finding).

    Each projective root of the chain owns the tuple of its multiplicities
    in the successive factors (nonzero entries only; nondecreasing since
    the chain divides upward).  The returned value is the sorted tuple of
    those profiles with one entry per root of the algebraic closure.
    Conjugate roots share a profile, so gcds of the squarefree parts
    suffice to count them.
    """
    m = len(factors)
    if m == 0:
        return ()
    # P[i][c] = squarefree form whose roots have multiplicity >= c in factor i
    parts = []
    maxmult = 0
    for d in factors:
        graded = dict()
        for e, j in squarefree_decompose(d).parts:
            graded[j] = e
        top = max(graded) if graded else 0
        maxmult = max(maxmult, top)
        byfloor = {}
        for c in range(1, top + 1):
            acc = None
            for j, e in graded.items():
                if j >= c:
                    acc = e if acc is None else acc * e
            byfloor[c] = acc.monic() if acc is not None else BinaryForm([ONE])
        parts.append(byfloor)

    profiles = []

    def admissible(vec):
        return all(a <= b for a, b in zip(vec, vec[1:])) and vec[-1] >= 1

    def gen(i, prev, acc):
        if i == m:
            if acc and admissible(acc):
                profiles.append(tuple(acc))
            return
        for c in range(prev, maxmult + 1):
            gen(i + 1, c, acc + [c])

    gen(0, 0, [])
    # sort profiles downward (componentwise-larger first) so exact counting
    # can subtract already-assigned roots
    profiles.sort(key=lambda v: (sum(v), v), reverse=True)
    assigned = BinaryForm([ONE])
    spectrum = []
    for v in profiles:
        acc = None
        ok = True
        for i, c in enumerate(v):
            if c == 0:
                continue
            pw = parts[i].get(c)
            if pw is None:
                ok = False
                break
            acc = pw if acc is None else gcd_binary(acc, pw)
            if acc.is_constant:
                ok = False
                break
        if not ok or acc is None:
            continue
        fresh = divide_exact(acc, gcd_binary(acc, assigned)) if not assigned.is_constant else acc
        cnt = fresh.degree
        if cnt > 0:
            partition = tuple(c for c in v if c)
            spectrum.extend([partition] * cnt)
            assigned = (assigned * fresh).monic()
    return tuple(sorted(spectrum))
