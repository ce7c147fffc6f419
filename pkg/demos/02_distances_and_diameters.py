"""
Distances and diameters
=======================

BFS over the Cayley structure gives shortest paths.  Two families have
exact diameters: FJ(n, 1) -- the permutahedron -- has diameter C(n,2),
and FJ(n, n-1) has diameter 2.  Everything else obeys the lower bound
ceil(C(n,2) / C(k+1,2)).
"""

from math import comb

import fjgraphs as fj

spec = fj.FlagGraphSpec(4, 1)
profile = fj.bfs(spec, fj.identity(4))
print("FJ(4,1) distances from the identity:")
for dist in range(profile.eccentricity + 1):
    row = [fj.perm_to_string(spec.ordering[i]) for i in range(24) if profile.distances[i] == dist]
    print(f"  d={dist}: {' '.join(row)}")
print("farthest vertex is the reversal, at distance C(4,2) =", comb(4, 2))
print()

print("measured diameters against the lower bound:")
print(" n  k  diameter  bound")
for n in range(2, 6):
    for k in range(1, n):
        d = fj.diameter(fj.FlagGraphSpec(n, k))
        lb = fj.diameter_lower_bound(n, k)
        tight = "  (tight)" if d == lb else ""
        print(f" {n}  {k}  {d:8d}  {lb:5d}{tight}")
print()

# A single edge of FJ(n, k) never hides more than C(k+1, 2) adjacent swaps:
for n, k in ((4, 2), (5, 3), (5, 4)):
    ok, witness = fj.edge_transposition_bound_check(fj.FlagGraphSpec(n, k))
    print(f"every FJ({n},{k}) edge within {comb(k + 1, 2)} adjacent swaps: {ok}")
print()

# Connectivity is measured, not assumed (k = 0 is the edgeless exception):
print("FJ(5,2) connected:", fj.is_connected(fj.FlagGraphSpec(5, 2)))
print("FJ(3,0) connected:", fj.is_connected(fj.FlagGraphSpec(3, 0)))
