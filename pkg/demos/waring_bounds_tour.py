"""
Multivariate forms: conciseness, rank bounds, and exact identities
==================================================================
"""

from rankloci import (
    MultiForm,
    catalecticant_rank_bound,
    essential_variables,
    generic_waring_rank,
    max_rank_bounds,
    power_of_quadric,
    reznick_quartic_identity,
    reznick_sextic_identity,
    verify_identity,
)
from rankloci.orbits import form_stabilizer

# Essential variables: x^2 y + y^2 z needs all three, (x+y)^3 only one.
F = MultiForm(3, 3, {(2, 1, 0): 1, (0, 2, 1): 1})
print("x^2 y + y^2 z concise:", essential_variables(F).concise)
G = MultiForm.linear([1, 1, 0]).pow(3)
print("(x+y)^3 essential count:", essential_variables(G).essential_count)

# Its orbit is 6-dimensional, the maximal-rank locus for plane cubics.
print("orbit dimension of x^2 y + y^2 z:", form_stabilizer(F).projective_orbit_dim)

# Generic rank: the dimension count with four exceptional pairs.
for (n, d) in ((3, 4), (4, 4), (5, 3), (5, 4), (3, 5)):
    g, hyp = generic_waring_rank(n, d)
    print(f"generic rank g_({n},{d}) = {g:>2}   last secant hypersurface: {hyp}")

# Maximal-rank bounds, with the known exact values where they exist.
print("\nmaximal-rank bounds for (3,4):", max_rank_bounds(3, 4).to_json())

# Exact power-sum identities for squares and cubes of x1^2 + ... + xn^2,
# and the catalecticant lower bound they sandwich.
for n in (3, 4):
    expr, target, bound = reznick_quartic_identity(n)
    ok = verify_identity(expr, target)
    low = catalecticant_rank_bound(power_of_quadric(n, 2), 2)
    print(f"n={n}: quartic identity {ok}, {low} <= rank(Q^2) <= {bound}")
    expr, target, bound = reznick_sextic_identity(n)
    ok = verify_identity(expr, target)
    low = catalecticant_rank_bound(power_of_quadric(n, 3), 3)
    print(f"n={n}: sextic identity  {ok}, {low} <= rank(Q^3) <= {bound}")
