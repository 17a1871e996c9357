"""Exact domination number via branch-and-bound over closed-neighbourhood cover.

The search branches on the uncovered vertex with the fewest remaining
candidate dominators and tries candidates in increasing index, so witnesses
are deterministic. Subtrees are cut with a packing bound: uncovered vertices
whose candidate sets are pairwise disjoint each need their own dominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import Graph, GraphError, closed_masks, iter_bits, regularity, to_mask

ORACLE_MAX_VERTICES = 16


@dataclass(frozen=True)
class DominationCertificate:
    gamma: int
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {"gamma": self.gamma, "witness": list(self.witness)}


def dominates_mask(closed: list[int], full: int, dmask: int) -> bool:
    covered = 0
    for v in iter_bits(dmask):
        covered |= closed[v]
    return covered == full


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    dmask = to_mask(vertices)
    if dmask & ~g.full_mask:
        raise GraphError("vertex set contains a vertex outside the graph")
    return dominates_mask(closed_masks(g), g.full_mask, dmask)


def _packing_bound(uncovered: int, cand: list[int], allowed: int) -> int:
    # greedy: uncovered vertices with pairwise disjoint candidate sets
    used = 0
    count = 0
    for v in iter_bits(uncovered):
        c = cand[v] & allowed
        if not c & used:
            used |= c
            count += 1
    return count


def find_dominating_set(closed: list[int], n: int, budget: int) -> Optional[int]:
    """Return a dominating set mask of size at most ``budget``, or ``None``.

    ``closed[v]`` is the closed neighbourhood of ``v``; it is also the set of
    vertices able to dominate ``v`` since adjacency is symmetric.
    """
    full = (1 << n) - 1

    def search(covered: int, chosen: int, allowed: int, k: int) -> Optional[int]:
        if covered == full:
            return chosen
        if k == 0:
            return None
        uncovered = full & ~covered
        best_v, best_count = -1, n + 1
        for v in iter_bits(uncovered):
            c = (closed[v] & allowed).bit_count()
            if c < best_count:
                best_v, best_count = v, c
                if c <= 1:
                    break
        if best_count == 0:
            return None
        if _packing_bound(uncovered, closed, allowed) > k:
            return None
        for u in iter_bits(closed[best_v] & allowed):
            found = search(covered | closed[u], chosen | 1 << u, allowed, k - 1)
            if found is not None:
                return found
            # any solution containing u was explored in the branch above
            allowed &= ~(1 << u)
        return None

    return search(0, 0, full, budget)


def domination_number(g: Graph) -> DominationCertificate:
    closed = closed_masks(g)
    k = max(1, _packing_bound(g.full_mask, closed, g.full_mask))
    while True:
        found = find_dominating_set(closed, g.n, k)
        if found is not None:
            if found.bit_count() != k or not dominates_mask(closed, g.full_mask, found):
                raise AssertionError(f"solver returned a bad witness {bin(found)}")
            return DominationCertificate(k, tuple(iter_bits(found)))
        k += 1


def has_dominating_set(g: Graph, budget: int) -> bool:
    return find_dominating_set(closed_masks(g), g.n, budget) is not None


def domination_number_oracle(g: Graph) -> int:
    """Exact domination number by plain enumeration of vertex subsets by size."""
    if g.n > ORACLE_MAX_VERTICES:
        raise GraphError(f"oracle limited to n <= {ORACLE_MAX_VERTICES}, got {g.n}")
    closed = [{v} | {u for u in range(g.n) if g.adj[v] >> u & 1} for v in range(g.n)]
    everything = set(range(g.n))
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            if set().union(*(closed[v] for v in subset)) == everything:
                return size
    raise AssertionError("the full vertex set always dominates")


def two_dominating_set_regular(g: Graph) -> tuple[int, int]:
    """Build a dominating pair of an (n-3)-regular graph.

    Take ``x = 0`` and its two non-neighbours ``y < z``. If ``y`` and ``z``
    are adjacent, ``{x, y}`` dominates; otherwise ``{x, w}`` does, for the
    lowest-indexed common neighbour ``w`` of ``y`` and ``z``.
    """
    if g.n < 4:
        raise GraphError(f"need n >= 4, got {g.n}")
    if regularity(g) != g.n - 3:
        raise GraphError(f"graph is not {g.n - 3}-regular")
    x = 0
    y, z = iter_bits(g.full_mask & ~g.adj[x] & ~(1 << x))
    if g.adj[y] >> z & 1:
        pair = (x, y)
    else:
        common = g.adj[y] & g.adj[z]
        if not common:
            raise GraphError(f"non-neighbours {y} and {z} of {x} have no common neighbour")
        pair = (x, next(iter_bits(common)))
    return tuple(sorted(pair))  # type: ignore[return-value]
