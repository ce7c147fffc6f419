"""Size guards and numeric tolerances shared across the package.

The defaults keep every computation interactive on one machine.  Library
functions take them as keyword arguments, so any of these can be raised per
call; the command-line tool additionally honours the FJ_GRAPH_CAP,
FJ_MATRIX_CAP and FJ_EIGEN_CAP environment variables.
"""

GRAPH_CAP = 8       # largest n for vertex orderings, edge lists, BFS (8! = 40320)
MATRIX_CAP = 7      # largest n for dense n! x n! adjacency matrices (7! = 5040)
EIGEN_CAP = 720     # largest matrix order accepted by the dense eigensolver

EIG_TOL = 1e-12     # off-diagonal Frobenius norm at which Jacobi sweeps stop
MATCH_TOL = 1e-8    # absolute tolerance when matching values across spectra
MERGE_TOL = 1e-7    # computed eigenvalues closer than this collapse into one

PERM_STR_DIGITS = 9  # permutations up to this size serialize as digit strings


class CapExceeded(ValueError):
    """An input is larger than the configured size guard allows."""


class TheoremViolation(RuntimeError):
    """A structural property that must always hold failed its check.

    Raised instead of silently returning a value so that a contradiction
    (a disconnected non-trivial graph, a non-regular block, ...) is never
    swallowed by downstream code.
    """
