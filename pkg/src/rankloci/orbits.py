"""Orbit dimensions through Lie-algebra stabilizers.

For a group G acting linearly on a space V and a point X != 0, the tangent
space at the identity to the stabilizer of X is the kernel of the linear
map g |-> d(rho)(g).X, so dim(G.X) = dim G - dim ker.  The stabilizer of
the projective class [X] corresponds to the augmented homogeneous system
d(rho)(g).X = c X in the unknowns (g, c): solving it exactly avoids the
"subtract one for scaling" shortcut entirely, and the shortcut's validity
(scalars acting nontrivially) is then asserted instead of assumed.

Two actions are wired up: GL_2 x GL_p x GL_q on pencils, and GL_n by
substitution on homogeneous forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import InternalInvariantError
from .forms import MultiForm, exponents
from .pencils import Pencil
from .rationals import ZERO


@dataclass(frozen=True)
class OrbitReport:
    group_dim: int
    stabilizer_dim: int            # annihilator of the point itself
    projective_stabilizer_dim: int  # kernel of the augmented system
    affine_orbit_dim: int
    projective_orbit_dim: int

    def to_json(self):
        return {
            "group_dim": self.group_dim,
            "stabilizer_dim": self.stabilizer_dim,
            "projective_stabilizer_dim": self.projective_stabilizer_dim,
            "affine_orbit_dim": self.affine_orbit_dim,
            "projective_orbit_dim": self.projective_orbit_dim,
        }


def _report(group_dim: int, rows, unknowns: int) -> OrbitReport:
    """Assemble a report from the augmented system (last column = scaling)."""
    rank_aug = linalg.rank(rows)
    rank_plain = linalg.rank([r[:-1] for r in rows])
    stab = unknowns - rank_plain
    proj_stab = (unknowns + 1) - rank_aug
    affine = group_dim - stab
    projective = group_dim - proj_stab
    if projective != affine - 1:
        raise InternalInvariantError(
            "scalars do not rescale this point; projective dimension shortcut invalid",
            {"affine_orbit_dim": affine, "projective_orbit_dim": projective},
        )
    return OrbitReport(
        group_dim=group_dim,
        stabilizer_dim=stab,
        projective_stabilizer_dim=proj_stab,
        affine_orbit_dim=affine,
        projective_orbit_dim=projective,
    )


def pencil_stabilizer(T: Pencil) -> OrbitReport:
    """Stabilizer of a pencil under (g1, g2, g3) in gl_2 x gl_p x gl_q.

    The derivative of the action on s M1 + t M2 is

        ((a s + c t) M1 + (b s + d t) M2) + (s g2 M1 + t g2 M2)
            - (s M1 g3 + t M2 g3),        g1 = [[a, b], [c, d]],

    and equating the s- and t-coefficient matrices to zero (or to c times
    M1, M2 for the projective version) gives 2pq linear equations in
    4 + p^2 + q^2 (+1) unknowns, solved exactly.
    """
    if T.is_zero:
        raise ValueError("stabilizer of the zero pencil is everything")
    p, q = T.rows, T.cols
    M = (T.M1, T.M2)
    unknowns = 4 + p * p + q * q
    g2_off = 4
    g3_off = 4 + p * p
    rows = []
    for part in (0, 1):  # s-coefficient, then t-coefficient
        for i in range(p):
            for j in range(q):
                row = [ZERO] * (unknowns + 1)
                if part == 0:
                    row[0] = M[0][i][j]   # a
                    row[1] = M[1][i][j]   # b
                else:
                    row[2] = M[0][i][j]   # c
                    row[3] = M[1][i][j]   # d
                slab = M[part]
                for k in range(p):
                    row[g2_off + i * p + k] += slab[k][j]
                for k in range(q):
                    row[g3_off + k * q + j] -= slab[i][k]
                row[unknowns] = -slab[i][j]  # scaling column
                rows.append(row)
    return _report(4 + p * p + q * q, rows, unknowns)


def form_stabilizer(F: MultiForm) -> OrbitReport:
    """Stabilizer of a form under the substitution action of gl_n.

    d(rho)(g).F = sum_{i,j} g_ij x_i dF/dx_j; the projective stabilizer
    solves d(rho)(g).F = c F in the n^2 + 1 unknowns (g, c).
    """
    if F.is_zero:
        raise ValueError("stabilizer of the zero form is everything")
    n, d = F.n, F.degree
    monos = exponents(n, d)
    mono_index = {m: r for r, m in enumerate(monos)}
    unknowns = n * n
    rows = [[ZERO] * (unknowns + 1) for _ in monos]
    partials = [F.diff(j) for j in range(n)]
    for j in range(n):
        for exps, c in partials[j].terms.items():
            for i in range(n):
                key = tuple(e + (1 if t == i else 0) for t, e in enumerate(exps))
                rows[mono_index[key]][i * n + j] += c
    for exps, c in F.terms.items():
        rows[mono_index[exps]][unknowns] = -c
    return _report(n * n, rows, unknowns)
