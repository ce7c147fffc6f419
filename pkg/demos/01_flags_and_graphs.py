"""
Building Full-Flag Johnson graphs
=================================

A permutation of [n] doubles as a full flag of nested subsets: the i-th
member of the flag is the set of its first i entries.  Two permutations are
adjacent in FJ(n, k) when their flags disagree in exactly k places.
"""

import fjgraphs as fj

u = (1, 2, 3, 4, 5)
v = (2, 1, 3, 5, 4)
w = (3, 2, 4, 1, 5)

print("flag of", fj.perm_to_string(v), "=", [sorted(fj.prefix_set(v, i)) for i in range(1, 6)])
print()

# u and v disagree in 2 prefix positions, u and w in 3:
print("mismatch(u, v) =", fj.prefix_mismatch_count(u, v))
print("mismatch(u, w) =", fj.prefix_mismatch_count(u, w))
print("u ~ v in FJ(5,2)?", fj.adjacent(fj.FlagGraphSpec(5, 2), u, v))
print("u ~ w in FJ(5,2)?", fj.adjacent(fj.FlagGraphSpec(5, 2), u, w))
print("u ~ w in FJ(5,3)?", fj.adjacent(fj.FlagGraphSpec(5, 3), u, w))
print()

# Adjacency has a purely combinatorial reading: v splits over u into
# consecutive windows, each an irreducible rearrangement, and the number of
# windows is n - k.  The boundaries are the indices where the flags agree.
a = (1, 2, 3, 4, 5, 6, 7)
b = (2, 3, 1, 4, 6, 7, 5)
bounds = fj.block_boundaries(a, b)
print("block boundaries of", fj.perm_to_string(b), "over the identity:", bounds)
prev = 0
for stop in bounds:
    window = fj.relative_pattern(a[prev:stop], b[prev:stop])
    print(f"  window {prev + 1}..{stop}: pattern {window}, irreducible: {fj.is_irreducible(window)}")
    prev = stop
print()

# That makes FJ(n, k) a Cayley graph: its connection set is every
# permutation made of exactly n-k irreducible blocks.
print("connection set of FJ(3,1):", [fj.perm_to_string(g) for g in fj.generators(3, 1)])
print("connection set of FJ(4,2):", [fj.perm_to_string(g) for g in fj.generators(4, 2)])
print("degree of FJ(4,2):", fj.degree(4, 2))
print("irreducible counts:", [fj.irreducible_count(m) for m in range(1, 9)])
print()

spec = fj.FlagGraphSpec(4, 2)
print("neighbors of the identity in FJ(4,2):")
for q in fj.neighbors(spec, fj.identity(4)):
    print("  ", fj.perm_to_string(q))

edges = fj.build_edges(spec)
print("FJ(4,2):", spec.vertex_count, "vertices,", len(edges), "edges")
print()

# Edge lists export as DOT / CSV / JSON; here is the smallest graph as DOT:
tiny = fj.FlagGraphSpec(2, 1)
print(fj.edges_to_dot(tiny, fj.build_edges(tiny)))
