"""Multivariate homogeneous forms: apolarity, conciseness, catalecticant
bounds, generic/maximal Waring rank formulas, and exact power-sum identities
for powers of the standard quadric.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Optional

from . import linalg
from .errors import InternalInvariantError
from .rationals import ONE, ZERO, parse_rational, rat, rat_str


def exponents(n: int, d: int):
    """All exponent vectors of length n summing to d, lexicographically."""
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in exponents(n - 1, d - first):
            out.append((first,) + rest)
    return out


class MultiForm:
    """Homogeneous form in n variables: a map exponent-vector -> coefficient.

    Zero coefficients are never stored; the zero form is the empty map with
    its nominal (n, degree) retained.
    """

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms):
        if n < 1 or degree < 0:
            raise ValueError("need n >= 1 and degree >= 0")
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            c = rat(c) if isinstance(c, (int, str)) else c
            if len(exps) != n or any(e < 0 for e in exps) or sum(exps) != degree:
                raise ValueError(f"exponent vector {exps} is not degree-{degree} in {n} variables")
            if c:
                clean[exps] = clean.get(exps, ZERO) + c
                if not clean[exps]:
                    del clean[exps]
        self.n = n
        self.degree = degree
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, n: int, degree: int):
        return cls(n, degree, {})

    @classmethod
    def monomial(cls, n: int, exps, coeff=1):
        return cls(n, sum(exps), {tuple(exps): rat(coeff)})

    @classmethod
    def linear(cls, coeffs):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = rat(c)
        return cls(n, 1, terms)

    @classmethod
    def variable(cls, n: int, i: int):
        e = [0] * n
        e[i] = 1
        return cls(n, 1, {tuple(e): ONE})

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or not {"n", "d", "terms"} <= set(obj):
            raise ValueError('form JSON needs {"n": ..., "d": ..., "terms": {...}}')
        n, d = obj["n"], obj["d"]
        if not isinstance(n, int) or not isinstance(d, int):
            raise ValueError("form JSON: n and d must be integers")
        terms = {}
        for key, val in obj["terms"].items():
            exps = tuple(int(x) for x in key.strip("[]").split(","))
            terms[exps] = parse_rational(val)
        return cls(n, d, terms)

    def to_json(self):
        keys = sorted(self.terms)
        return {
            "n": self.n,
            "d": self.degree,
            "terms": {"[" + ",".join(map(str, k)) + "]": rat_str(self.terms[k]) for k in keys},
        }

    # -- structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def __eq__(self, other):
        return (
            isinstance(other, MultiForm)
            and self.n == other.n
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.degree, tuple(sorted((k, rat_str(v)) for k, v in self.terms.items()))))

    def __repr__(self):
        if self.is_zero:
            return f"MultiForm(0; n={self.n}, d={self.degree})"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = rat_str(self.terms[exps])
            mono = "*".join(f"x{i+1}^{e}" if e > 1 else f"x{i+1}" for i, e in enumerate(exps) if e)
            mono = mono or "1"
            bits.append(mono if c == "1" else f"{c}*{mono}")
        return " + ".join(bits)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if (self.n, self.degree) != (other.n, other.degree):
            raise ValueError("form addition needs matching n and degree")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, ZERO) + v
        return MultiForm(self.n, self.degree, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = rat(c)
        if not c:
            return MultiForm.zero(self.n, self.degree)
        return MultiForm(self.n, self.degree, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("form product needs matching variable count")
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, ZERO) + c1 * c2
        return MultiForm(self.n, self.degree + other.degree, terms)

    def pow(self, k: int):
        out = MultiForm(self.n, 0, {(0,) * self.n: ONE})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def diff(self, j: int):
        terms = {}
        for exps, c in self.terms.items():
            if exps[j]:
                key = tuple(e - (1 if i == j else 0) for i, e in enumerate(exps))
                terms[key] = terms.get(key, ZERO) + exps[j] * c
        return MultiForm(self.n, self.degree - 1, terms)

    def substitute(self, A):
        """F(A y): A has one row per old variable, one column per new one."""
        m = len(A[0])
        rows = [MultiForm.linear(row) if any(row) else MultiForm.zero(m, 1) for row in A]
        out = MultiForm.zero(m, self.degree)
        cache = {}

        def lin_pow(i, e):
            key = (i, e)
            if key not in cache:
                cache[key] = rows[i].pow(e)
            return cache[key]

        for exps, c in self.terms.items():
            term = MultiForm(m, 0, {(0,) * m: c})
            for i, e in enumerate(exps):
                if e:
                    term = term * lin_pow(i, e)
            out = out + term
        return out


def apolar_apply(theta: MultiForm, F: MultiForm) -> MultiForm:
    """theta . F: the differentiation pairing with exact factorial scalars.

    On monomials, alpha^a . x^m = prod m_i!/(m_i - a_i)! x^(m-a) when m >= a
    componentwise and 0 otherwise; extended bilinearly.
    """
    if theta.n != F.n:
        raise ValueError("operator and form must share the variable count")
    if theta.degree > F.degree:
        raise ValueError("operator degree exceeds form degree")
    out = {}
    for a, u in theta.terms.items():
        for m, v in F.terms.items():
            if all(mi >= ai for mi, ai in zip(m, a)):
                scal = 1
                for mi, ai in zip(m, a):
                    if ai:
                        scal *= factorial(mi) // factorial(mi - ai)
                key = tuple(mi - ai for mi, ai in zip(m, a))
                out[key] = out.get(key, ZERO) + u * v * scal
    return MultiForm(F.n, F.degree - theta.degree, out)


def catalecticant_matrix(F: MultiForm, k: int):
    """Matrix of the degree-k catalecticant S^k(dual) -> S^(d-k)."""
    d = F.degree
    if not 0 <= k <= d:
        raise ValueError(f"catalecticant degree {k} out of range for degree {d}")
    cols = exponents(F.n, k)
    rows = exponents(F.n, d - k)
    mat = []
    for u in rows:
        row = []
        for a in cols:
            c = F.coefficient(tuple(ui + ai for ui, ai in zip(u, a)))
            if c:
                scal = 1
                for ui, ai in zip(u, a):
                    if ai:
                        scal *= factorial(ui + ai) // factorial(ui)
                row.append(c * scal)
            else:
                row.append(ZERO)
        mat.append(row)
    return mat


def catalecticant_rank_bound(F: MultiForm, k: int) -> int:
    """Exact rank of the degree-k catalecticant: a Waring-rank lower bound."""
    return linalg.rank(catalecticant_matrix(F, k))


@dataclass(frozen=True)
class ConcisenessReport:
    essential_count: int
    essential_basis: tuple  # linear MultiForms spanning the derivative span
    concise: bool

    def to_json(self):
        return {
            "essential_count": self.essential_count,
            "essential_basis": [b.to_json() for b in self.essential_basis],
            "concise": self.concise,
        }


def essential_variables(F: MultiForm) -> ConcisenessReport:
    """Essential-variable count and basis from the order-(d-1) derivatives.

    The span of the (d-1)th derivatives of F inside the linear forms is the
    smallest subspace V' with F in S^d V'; F is concise exactly when that
    span is everything.  For nonconcise F the membership F in S^d(span) is
    re-verified by an exact change of coordinates.
    """
    if F.is_zero:
        raise ValueError("conciseness undefined for the zero form")
    n, d = F.n, F.degree
    derivs = []
    for a in exponents(n, d - 1):
        theta = MultiForm.monomial(n, a)
        g = apolar_apply(theta, F)
        derivs.append([g.coefficient(tuple(1 if i == j else 0 for i in range(n))) for j in range(n)])
    basis_rows = linalg.row_space_basis(derivs)
    k = len(basis_rows)
    basis = tuple(MultiForm.linear(row) for row in basis_rows)
    if k < n:
        _verify_membership(F, basis_rows)
    return ConcisenessReport(essential_count=k, essential_basis=basis, concise=(k == n))


def _verify_membership(F: MultiForm, basis_rows):
    """Check F is a polynomial in the essential linear forms, exactly."""
    n, k = F.n, len(basis_rows)
    P = [list(r) for r in basis_rows]
    for j in range(n):  # complete to a basis with unit vectors
        cand = [ONE if i == j else ZERO for i in range(n)]
        if linalg.rank(P + [cand]) > len(P):
            P.append(cand)
    Pinv = linalg.inverse(P)
    # x = Pinv y, so G(y) = F(Pinv y) must only involve y_1..y_k
    G = F.substitute(Pinv)
    for exps in G.terms:
        if any(exps[j] for j in range(k, n)):
            raise InternalInvariantError(
                "form does not lie in the power of its essential span",
                {"form": F.to_json(), "essential_count": k},
            )


def linear_apolar_kernel_dim(F: MultiForm) -> int:
    """dim of the linear part of the annihilator (independent conciseness test)."""
    mat = catalecticant_matrix(F, 1)
    return len(linalg.nullspace(mat))


def generic_waring_rank(n: int, d: int):
    """Generic Waring rank and whether the last proper secant variety is a
    hypersurface.

    Quadrics diagonalize (g = n); binary forms follow Sylvester's floor
    formula; for n, d >= 3 the Alexander-Hirschowitz count applies, with the
    four exceptional pairs (3,4), (4,4), (5,3), (5,4) raised by one.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if n == 1 or d == 1:
        return 1, False
    if d == 2:
        return n, True
    if n == 2:
        return (d + 2) // 2, d % 2 == 0
    exceptional = {(3, 4): 6, (4, 4): 10, (5, 3): 8, (5, 4): 15}
    if (n, d) in exceptional:
        return exceptional[(n, d)], True
    dim = comb(d + n - 1, d)
    g = -(-dim // n)  # ceil
    return g, dim % n == 1


@dataclass(frozen=True)
class MaxRankBounds:
    codim_plus_one: int
    two_g: int
    refined_2g_minus: int
    two_binomial_ceiling: int
    known_exact: Optional[int]
    best: int

    def to_json(self):
        return {
            "codim_plus_one": self.codim_plus_one,
            "two_g": self.two_g,
            "refined_2g_minus": self.refined_2g_minus,
            "two_binomial_ceiling": self.two_binomial_ceiling,
            "known_exact": self.known_exact,
            "best": self.best,
        }


_KNOWN_MAX_RANK = {(3, 3): 5, (3, 4): 7, (3, 5): 10, (4, 3): 7}


def max_rank_bounds(n: int, d: int) -> MaxRankBounds:
    """All applicable upper bounds for the maximal Waring rank, plus the few
    known exact values (quadrics, binary forms, and the four classical
    low-degree cases)."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    dim = comb(d + n - 1, d)
    g, hypersurf = generic_waring_rank(n, d)
    codim_plus_one = dim - n + 1
    two_g = 2 * g
    refined = 2 * g - 2 if hypersurf else 2 * g - 1
    two_binomial_ceiling = -(-2 * dim // n)
    known: Optional[int] = _KNOWN_MAX_RANK.get((n, d))
    if d == 1:
        known = 1
    elif d == 2:
        known = n
    elif n == 2:
        known = d
    candidates = [codim_plus_one, two_g, refined, two_binomial_ceiling]
    if known is not None:
        candidates.append(known)
    return MaxRankBounds(
        codim_plus_one=codim_plus_one,
        two_g=two_g,
        refined_2g_minus=refined,
        two_binomial_ceiling=two_binomial_ceiling,
        known_exact=known,
        best=min(candidates),
    )


def high_rank_implies_concise(n: int, d: int) -> bool:
    """Whether every form of greater-than-generic rank must be concise:
    true for n = 2, 3 (any d >= 2), and for d >= n + 1 otherwise."""
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    if n <= 3:
        return True
    return d >= n + 1


# -- powers of the standard quadric and exact power-sum identities ---------


def power_of_quadric(n: int, k: int) -> MultiForm:
    """(x_1^2 + ... + x_n^2)^k, exactly expanded."""
    q = MultiForm(n, 2, {tuple(2 if i == j else 0 for i in range(n)): ONE for j in range(n)})
    return q.pow(k)


@dataclass(frozen=True)
class PowerSumExpression:
    """Sum of coeff * (linear form)^exponent with one shared exponent."""

    summands: tuple  # of (coeff, MultiForm linear, int exponent)

    def __post_init__(self):
        if not self.summands:
            raise ValueError("empty power-sum expression")
        e0 = self.summands[0][2]
        for c, lin, e in self.summands:
            if e != e0:
                raise ValueError("all exponents in a power-sum expression must agree")
            if lin.degree != 1 or lin.is_zero:
                raise ValueError("power-sum bases must be nonzero linear forms")

    @property
    def exponent(self) -> int:
        return self.summands[0][2]

    @property
    def term_count(self) -> int:
        return sum(1 for c, _, _ in self.summands if c)


def expand_power_sum(expr: PowerSumExpression) -> MultiForm:
    n = expr.summands[0][1].n
    acc = MultiForm.zero(n, expr.exponent)
    for c, lin, e in expr.summands:
        if c:
            acc = acc + lin.pow(e).scale(c)
    return acc


def verify_identity(expr: PowerSumExpression, target: MultiForm) -> bool:
    return expand_power_sum(expr) == target


def _unit_vec(n, i, sign=1):
    v = [ZERO] * n
    v[i] = rat(sign)
    return v


def reznick_quartic_identity(n: int):
    """Q_n^2 = (1/6) sum_{i<j} [(x_i+x_j)^4 + (x_i-x_j)^4] + (4-n)/3 sum x_i^4.

    The +- is summed over both sign choices per pair.  Returns the
    expression, the target Q_n^2, and the implied rank bound n^2.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    sixth = rat(1, 6)
    summands = []
    for i, j in combinations(range(n), 2):
        for sign in (1, -1):
            v = _unit_vec(n, i)
            v[j] = rat(sign)
            summands.append((sixth, MultiForm.linear(v), 4))
    cn = rat(4 - n, 3)
    for i in range(n):
        summands.append((cn, MultiForm.linear(_unit_vec(n, i)), 4))
    return PowerSumExpression(tuple(summands)), power_of_quadric(n, 2), n * n


def reznick_sextic_identity(n: int):
    """60 Q_n^3 as a signed sum of sixth powers (triples, pairs, singles).

    Per triple i<j<k the +- runs over the four sign patterns of (x_j, x_k)
    with x_i fixed positive (a global sign is invisible at even exponent).
    Returns the expression for Q_n^3 itself (coefficients divided by 60),
    the target Q_n^3, and the bound 4 C(n,3) + 2 C(n,2) + n.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    summands = []
    w = rat(1, 60)
    for i, j, k in combinations(range(n), 3):
        for sj in (1, -1):
            for sk in (1, -1):
                v = _unit_vec(n, i)
                v[j] = rat(sj)
                v[k] = rat(sk)
                summands.append((w, MultiForm.linear(v), 6))
    wp = rat(2 * (5 - n), 60)
    for i, j in combinations(range(n), 2):
        for sign in (1, -1):
            v = _unit_vec(n, i)
            v[j] = rat(sign)
            summands.append((wp, MultiForm.linear(v), 6))
    ws = rat(2 * (n * n - 9 * n + 38), 60)
    for i in range(n):
        summands.append((ws, MultiForm.linear(_unit_vec(n, i)), 6))
    bound = 4 * comb(n, 3) + 2 * comb(n, 2) + n
    return PowerSumExpression(tuple(summands)), power_of_quadric(n, 3), bound
