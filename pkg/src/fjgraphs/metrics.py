"""
Breadth-first search metrics on FJ(n, k): single-source distances,
eccentricity, connectivity, diameters, and the adjacent-transposition bound
that every edge must satisfy.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb

import numpy as np

from .config import GRAPH_CAP, CapExceeded, TheoremViolation
from .graphs import FlagGraphSpec, build_edges, generators
from .perms import Perm, identity, kendall_distance

UNREACHED = 0xFFFF  # uint16 sentinel: no path found


@dataclass(frozen=True)
class DistanceProfile:
    """Shortest-path lengths from one source, indexed by ordering rank."""

    source: Perm
    distances: np.ndarray  # uint16, UNREACHED where there is no path
    eccentricity: int
    reached: int

    @property
    def connected(self) -> bool:
        return self.reached == len(self.distances)


def bfs(spec: FlagGraphSpec, source, cap: int = GRAPH_CAP) -> DistanceProfile:
    """
    Breadth-first distances from ``source`` to every vertex.  The frontier
    holds ranks, neighbors come from right products with the connection set,
    and expansion stops as soon as every vertex has a distance -- which cuts
    the work sharply on dense connection sets whose BFS trees are shallow.
    """
    if spec.k == 0:
        raise ValueError("FJ(n, 0) has no edges; BFS is undefined")
    if spec.n > cap:
        raise CapExceeded(f"n={spec.n} exceeds the graph cap {cap}")
    src = spec.rank(source)
    total = spec.vertex_count
    ordering = spec.ordering
    rank_of = spec._rank_of
    gens0 = [tuple(j - 1 for j in g) for g in generators(spec.n, spec.k)]

    dist = np.full(total, UNREACHED, dtype=np.uint16)
    dist[src] = 0
    frontier = deque([src])
    assigned = 1
    while frontier and assigned < total:
        a = frontier.popleft()
        d = int(dist[a]) + 1
        u = ordering[a]
        for g in gens0:
            b = rank_of[tuple(u[i] for i in g)]
            if dist[b] == UNREACHED:
                dist[b] = d
                assigned += 1
                frontier.append(b)
    ecc = int(dist[dist != UNREACHED].max())
    return DistanceProfile(tuple(source), dist, ecc, assigned)


def is_connected(spec: FlagGraphSpec, cap: int = GRAPH_CAP) -> bool:
    """
    Measured connectivity (one BFS), even though every FJ(n, k) with k >= 1
    is connected.  For k = 0 there are no edges, so only the one-vertex
    graph n = 1 counts as connected.
    """
    if spec.k == 0:
        return spec.n == 1
    return bfs(spec, identity(spec.n), cap=cap).connected


def diameter(spec: FlagGraphSpec, mode: str = "transitive", cap: int = GRAPH_CAP) -> int:
    """
    Largest eccentricity.  Mode "transitive" runs a single BFS from the
    identity, valid because a Cayley graph looks the same from every vertex;
    "exhaustive" runs a BFS from every source and is kept as the slow
    cross-check of that shortcut.  A disconnected graph here would contradict
    the connectivity of every non-trivial FJ(n, k), so it raises
    TheoremViolation instead of returning anything.
    """
    if spec.k == 0:
        raise ValueError("FJ(n, 0) has no edges; its diameter is undefined")
    if mode not in ("transitive", "exhaustive"):
        raise ValueError(f"unknown mode {mode!r}")
    profile = bfs(spec, identity(spec.n), cap=cap)
    if not profile.connected:
        raise TheoremViolation(
            f"FJ({spec.n},{spec.k}) reached only {profile.reached} of {spec.vertex_count} vertices"
        )
    if mode == "transitive":
        return profile.eccentricity
    best = profile.eccentricity
    for p in spec.ordering:
        prof = bfs(spec, p, cap=cap)
        if not prof.connected:
            raise TheoremViolation(f"FJ({spec.n},{spec.k}) disconnected from source {p}")
        best = max(best, prof.eccentricity)
    return best


def diameter_lower_bound(n: int, k: int) -> int:
    """
    ceil(C(n,2) / C(k+1,2)).  Going from the identity to the reversal costs
    C(n,2) adjacent transpositions in total, while crossing one edge accounts
    for at most C(k+1,2) of them; the diameter is an integer, so the ratio
    rounds up.

    >>> diameter_lower_bound(7, 3)
    4
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    return -(-comb(n, 2) // comb(k + 1, 2))


def edge_transposition_bound_check(spec: FlagGraphSpec, cap: int = GRAPH_CAP):
    """
    Every edge (u, v) satisfies kendall_distance(u, v) <= C(k+1, 2).
    Returns (True, None), or (False, (u, v)) with the offending edge.
    """
    bound = comb(spec.k + 1, 2)
    for a, b in build_edges(spec, cap=cap):
        u, v = spec.ordering[a], spec.ordering[b]
        if kendall_distance(u, v) > bound:
            return False, (u, v)
    return True, None
