"""
Matrix pencils, Kronecker invariants, and tensor rank
=====================================================

A 2 x p x q tensor is a pencil s M1 + t M2 of p x q matrices.  Its exact
rank is read off the Kronecker data: minimal indices, invariant factors,
and the count of non-squarefree factors.
"""


from rankloci import Pencil, build_L, build_regular, direct_sum, pencil_rank
from rankloci.pencils import invariant_factors, minimal_indices

# Singular blocks: L_eps is eps x (eps+1) with s on the diagonal, t above.
L2 = build_L(2)
print("L_2 =", L2.to_json()["m1"], "+ t *", L2.to_json()["m2"])
print("minimal indices:", minimal_indices(L2))

# Regular blocks carry Jordan data through invariant factors.
J = build_regular([[0, 1], [0, 0]])            # [[s, t], [0, s]]
print("\ninvariant factors of [[s,t],[0,s]]:", [str(d) for d in invariant_factors(J)])

# Direct sums are not additive in rank: two rank-3 blocks with different
# eigenvalues give a rank-5 sum, because their 2x2 Jordan structures share
# a single invariant-factor chain.
K = Pencil([[1, 0], [0, 1]], [[1, 1], [0, 1]])  # [[s+t, t], [0, s+t]]
S = direct_sum(J, K)
print("\nrank(J) =", pencil_rank(J).rank, " rank(K) =", pencil_rank(K).rank,
      " rank(J + K) =", pencil_rank(S).rank)
print("factors of the sum:", [str(d) for d in invariant_factors(S)])

# An invertible conjugate of a canonical pencil carries the same invariants.
base = direct_sum(build_L(1), build_regular([[0, 1], [0, 0]]))  # 3 x 4
A = [[1, 2, 0], [0, 1, 1], [1, 0, 1]]
B = [[1, 0, 1, 0], [2, 1, 0, 0], [0, 0, 1, 1], [0, 1, 0, 1]]
moved = base.substitute_st(1, 1, -1, 2).conjugate(A, B)
print("\ncanonical:", pencil_rank(base).to_json()["invariants"])
print("conjugate:", pencil_rank(moved).to_json()["invariants"])
print("ranks agree:", pencil_rank(base).rank == pencil_rank(moved).rank)
