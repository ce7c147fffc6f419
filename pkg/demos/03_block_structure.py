"""
Recursive block structure of adjacency matrices
===============================================

Stack the n+1 insertion images of an ordering of S_n and the adjacency
matrix of FJ(n+1, k) falls apart into (n+1)^2 blocks of size n! with rigid
contents: zeros far from the diagonal, copies of FJ(n, k) in the corners,
copies of FJ(n, k-1) on the flanks.
"""

from math import factorial

import fjgraphs as fj

S = fj.enumerate_permutations(3)
Sbar = fj.concatenated_ordering(S)
print("stacked ordering of S_4 (blocks of 6):")
for b in range(4):
    print("  ", " ".join(fj.perm_to_string(p) for p in Sbar[6 * b : 6 * (b + 1)]))
print()

A = fj.adjacency_matrix(4, 2, Sbar)
print("A(FJ(4,2)) under the stacked ordering, 6x6 block grid:")
print(fj.matrix_to_text(A))

report = fj.verify_recursive_blocks(3, 2)
print("block identities for FJ(4,2):", "all pass" if report.passed else report.failures())
for assertion in report.assertions:
    print(f"  {assertion.name:<14} block {assertion.block}: {'ok' if assertion.passed else assertion.detail}")
print()

# For k = 1 the diagonal blocks are themselves meaningful subgraphs: the
# corners are the smaller permutahedron and each interior block is the
# Cayley graph missing exactly one adjacent transposition.
report = fj.verify_permutahedron_blocks(3)
print("permutahedron anatomy for FJ(4,1):", "all pass" if report.passed else report.failures())
b = factorial(3)
A41 = fj.adjacency_matrix(4, 1, fj.concatenated_ordering(S))
regs = [fj.block_regularity(fj.block(A41, i, i, b)) for i in range(1, 5)]
print("diagonal block regularities:", regs)
