"""Shared random generators for the test suite.

All randomness flows through explicit random.Random instances seeded by the
caller, so every test is reproducible from its stated seed.
"""

from __future__ import annotations

import random

from rankloci import linalg
from rankloci.binary import BinaryForm
from rankloci.forms import MultiForm, exponents
from rankloci.pencils import (
    Pencil,
    build_L,
    build_regular,
    direct_sum,
    jordan_block,
    zero_pencil,
)
from rankloci.rationals import rat

EIGENVALUE_POOL = [0, 1, -1, 2, -2, "1/2"]


def rand_invertible(rng: random.Random, n: int, lo=-3, hi=3):
    while True:
        A = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        if n == 0 or linalg.det(A) != 0:
            return A


def rand_gl2(rng: random.Random, lo=-4, hi=4):
    while True:
        a, b, c, d = (rng.randint(lo, hi) for _ in range(4))
        if a * d - b * c != 0:
            return a, b, c, d


def rand_binary_form(rng: random.Random, d: int, lo=-6, hi=6) -> BinaryForm:
    while True:
        f = BinaryForm([rng.randint(lo, hi) for _ in range(d + 1)])
        if not f.is_zero:
            return f


def rand_multiform(rng: random.Random, n: int, d: int, lo=-4, hi=4) -> MultiForm:
    while True:
        terms = {e: rng.randint(lo, hi) for e in exponents(n, d)}
        F = MultiForm(n, d, terms)
        if not F.is_zero:
            return F


def rand_pencil(rng: random.Random, p: int, q: int, lo=-5, hi=5) -> Pencil:
    M1 = [[rng.randint(lo, hi) for _ in range(q)] for _ in range(p)]
    M2 = [[rng.randint(lo, hi) for _ in range(q)] for _ in range(p)]
    return Pencil(M1, M2)


def sample_canonical_pencil(rng: random.Random, max_side: int = 10):
    """Random Kronecker data (eps, eta, jordan blocks, zero block) fitting in
    max_side x max_side, plus its assembled pencil."""
    while True:
        eps = sorted(rng.randint(1, 4) for _ in range(rng.randint(0, 2)))
        eta = sorted(rng.randint(1, 4) for _ in range(rng.randint(0, 2)))
        jordan = [(rng.choice(EIGENVALUE_POOL), rng.randint(1, 4)) for _ in range(rng.randint(0, 3))]
        p0, q0 = rng.randint(0, 1), rng.randint(0, 1)
        f = sum(s for _, s in jordan)
        rows = sum(eps) + sum(e + 1 for e in eta) + f + p0
        cols = sum(e + 1 for e in eps) + sum(eta) + f + q0
        if 1 <= rows <= max_side and 1 <= cols <= max_side and (eps or eta or jordan):
            break
    blocks = [build_L(e) for e in eps] + [build_L(e).transpose() for e in eta]
    if jordan:
        F = [[rat(0)] * f for _ in range(f)]
        at = 0
        for lam, size in jordan:
            J = jordan_block(size, lam)
            for i in range(size):
                for j in range(size):
                    F[at + i][at + j] = J[i][j]
            at += size
        blocks.append(build_regular(F))
    blocks.append(zero_pencil(p0, q0))
    return (eps, eta, jordan, p0, q0), direct_sum(*blocks)


def canonical_truth(eps, eta, jordan, p0, q0):
    """Ground-truth (eps, eta, factor degrees, m_F, rank, p0, q0) of assembled
    Kronecker data: the k-th invariant factor from the top collects the k-th
    largest Jordan block of every eigenvalue."""
    by_lam = {}
    for lam, size in jordan:
        by_lam.setdefault(str(rat(lam)), []).append(size)
    chains = [sorted(v, reverse=True) for v in by_lam.values()]
    degs = []
    i = 0
    while True:
        tot = sum(c[i] for c in chains if len(c) > i)
        if not tot:
            break
        degs.append(tot)
        i += 1
    m = max((sum(1 for s in v if s >= 2) for v in by_lam.values()), default=0)
    f = sum(s for _, s in jordan)
    rank = sum(eps) + sum(eta) + len(eps) + len(eta) + f + m
    return tuple(eps), tuple(eta), tuple(sorted(degs)), m, rank, p0, q0


def conjugated(rng: random.Random, P: Pencil) -> Pencil:
    """Random GL2 substitution of (s, t) followed by row/column transforms."""
    a, b, c, d = rand_gl2(rng)
    Q = P.substitute_st(a, b, c, d)
    return Q.conjugate(rand_invertible(rng, Q.rows), rand_invertible(rng, Q.cols))


def distinct_rationals(rng: random.Random, count: int, num=12, den=4):
    """Random distinct small rationals."""
    out = set()
    while len(out) < count:
        out.add(rat(rng.randint(-num, num), rng.randint(1, den)))
    return sorted(out)
