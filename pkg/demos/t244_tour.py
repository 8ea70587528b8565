"""
The 2 x 4 x 4 landscape
=======================

Generic rank 4, maximal rank 6.  The rank-5 locus is the discriminant
divisor of det(s M1 + t M2); the unique rank-6 orbit is 24-dimensional.
"""

from rankloci import classify_t244, max_rank_tensor, nesting_experiment, t4_pencil, t5_pencil
from rankloci.orbits import pencil_stabilizer
from rankloci.t244 import load_registry

# A diagonal pencil with four distinct eigenvalues is as generic as it gets.
rep = classify_t244(t4_pencil(0, 1, 2, 3))
print("T4(0,1,2,3):", rep.orbit_id, "rank", rep.rank, "locus", rep.locus,
      "orbit dim", rep.orbit_dim)
print("  cross-ratio class:", rep.cross_ratio, "multiset:",
      [str(r) for r in rep.cross_ratio.ratios])

# One Jordan block pushes the rank to 5 and onto the discriminant divisor.
rep = classify_t244(t5_pencil(0, 1, -1))
print("T5(0,1,-1):", rep.orbit_id, "rank", rep.rank, "locus", rep.locus,
      "discriminant", rep.discriminant)

# The maximal-rank tensor: det = s^4, orbit dimension 6 n^2 = 24.
T6 = max_rank_tensor(2)
rep = classify_t244(T6)
orb = pencil_stabilizer(T6)
print("T6:", rep.orbit_id, "rank", rep.rank, "locus", rep.locus,
      "| stabilizer", orb.stabilizer_dim, "orbit", orb.projective_orbit_dim)

# The fourteen remaining concise orbits, with dimensions and ranks.
print("\nlow-dimensional concise orbits:")
for entry in load_registry().entries:
    print(f"  {entry.orbit_id}: dim {entry.dim:>2}  rank {entry.rank}")

# Join experiments: a generic rank-one tensor added to T6 lands in the
# T5 family (rank 5); added to T5 it falls back to the generic rank 4.
summary = nesting_experiment(seed=0, trials=50)
for key in ("t6_plus_rank1", "t5_plus_rank1"):
    part = summary[key]
    print(f"\n{key}: {part['generic']}/{part['trials']} generic,"
          f" rank histogram {part['rank_histogram']}")
