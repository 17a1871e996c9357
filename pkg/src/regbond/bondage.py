"""Exact bondage number by iterative deepening over canonical edge subsets.

Subsets of size k = 1, 2, ... are visited in lexicographic order of edge
indices, so the first bondage set found is the lexicographically first
minimum one. Removing edges never creates a dominating set, so every
dominating set of G - B of size gamma(G) is a minimum dominating set of G.
The search keeps those as a cache. A cached set D survives B unless some
vertex outside D loses every edge into D; when even the cheapest way to kill
some cached D needs more edges than the remaining budget (using only edges
still available in the lexicographic order), the branch is cut. Only leaves
that kill every cached set reach the domination solver, which is asked the
decision question "is there a dominating set of size gamma(G)?".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .domination import domination_number, domination_number_oracle, find_dominating_set
from .graph import Edge, Graph, GraphError, iter_bits, remove_edges, star

ORACLE_MAX_VERTICES = 8
ORACLE_MAX_EDGES = 16


@dataclass(frozen=True)
class BondageCertificate:
    b: int
    witness: tuple[Edge, ...]
    gamma_before: int
    gamma_after: int

    def to_json(self) -> dict:
        return {
            "gamma_before": self.gamma_before,
            "b": self.b,
            "witness": [list(e) for e in self.witness],
            "gamma_after": self.gamma_after,
        }


def gamma_after_removal(g: Graph, removed: Iterable[Edge]) -> int:
    return domination_number(remove_edges(g, removed)).gamma


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise GraphError("bondage number is undefined for an edgeless graph")


class _Search:
    def __init__(self, g: Graph, gamma: int, seed: tuple[int, ...]) -> None:
        self.g = g
        self.gamma = gamma
        self.edges = g.edges()
        # per-vertex mask of incident edge indices
        self.incident = [0] * g.n
        for i, (u, v) in enumerate(self.edges):
            self.incident[u] |= 1 << i
            self.incident[v] |= 1 << i
        self.cache: list[list[int]] = []
        self.seen: set[int] = set()
        self.add_dominating_set(sum(1 << v for v in seed))
        self.solver_calls = 0

    def add_dominating_set(self, dmask: int) -> None:
        if dmask in self.seen:
            return
        self.seen.add(dmask)
        d_edges = 0
        for v in iter_bits(dmask):
            d_edges |= self.incident[v]
        outside = self.g.full_mask & ~dmask
        # D fails to dominate G - B iff some outside v has all its edges into D in B
        kills = sorted(
            {self.incident[v] & d_edges for v in iter_bits(outside)},
            key=lambda mask: mask.bit_count(),
        )
        self.cache.append(kills)

    def _is_bondage(self, chosen: int) -> bool:
        adj = list(self.g.adj)
        for i in iter_bits(chosen):
            u, v = self.edges[i]
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        closed = [row | 1 << v for v, row in enumerate(adj)]
        self.solver_calls += 1
        found = find_dominating_set(closed, self.g.n, self.gamma)
        if found is None:
            return True
        self.add_dominating_set(found)
        return False

    def run(self, k: int) -> Optional[int]:
        m = len(self.edges)
        full = (1 << m) - 1
        cache = self.cache

        def dfs(start: int, chosen: int, left: int) -> Optional[int]:
            unavailable = ~(full >> start << start) & ~chosen
            for kills in cache:
                need = left + 1
                for mask in kills:
                    if mask & unavailable:
                        continue
                    c = (mask & ~chosen).bit_count()
                    if c < need:
                        need = c
                        if c == 0:
                            break
                if need > left:
                    return None
            if left == 0:
                return chosen if self._is_bondage(chosen) else None
            for i in range(start, m - left + 1):
                found = dfs(i + 1, chosen | 1 << i, left - 1)
                if found is not None:
                    return found
            return None

        return dfs(0, 0, k)


def bondage_number(g: Graph) -> BondageCertificate:
    """Exact bondage number with the lexicographically first minimum bondage set."""
    _require_edges(g)
    dom = domination_number(g)
    search = _Search(g, dom.gamma, dom.witness)
    for k in range(1, g.m + 1):
        found = search.run(k)
        if found is not None:
            witness = tuple(search.edges[i] for i in iter_bits(found))
            after = gamma_after_removal(g, witness)
            if after != dom.gamma + 1:
                raise AssertionError(f"witness moves gamma {dom.gamma} -> {after}")
            return BondageCertificate(k, witness, dom.gamma, after)
    raise AssertionError("removing every edge always raises gamma of a nonempty graph")


def star_bondage_upper_bound(g: Graph) -> Optional[tuple[int, tuple[Edge, ...]]]:
    """Smallest vertex star whose removal raises gamma, lowest vertex on ties."""
    _require_edges(g)
    gamma = domination_number(g).gamma
    best: Optional[tuple[int, tuple[Edge, ...]]] = None
    for x in sorted(range(g.n), key=lambda v: (g.adj[v].bit_count(), v)):
        edges = tuple(star(g, x))
        if not edges:
            continue
        if best is not None and len(edges) >= best[0]:
            break
        if gamma_after_removal(g, edges) > gamma:
            best = (len(edges), edges)
    return best


def bondage_number_oracle(
    g: Graph, max_vertices: int = ORACLE_MAX_VERTICES, max_edges: int = ORACLE_MAX_EDGES
) -> int:
    """Exact bondage number by unpruned enumeration of edge subsets by size.

    The default limits keep the run short; callers may raise them knowingly.
    """
    _require_edges(g)
    if g.n > max_vertices or g.m > max_edges:
        raise GraphError(f"oracle limited to n <= {max_vertices} and m <= {max_edges}")
    gamma = domination_number_oracle(g)
    edges = g.edges()
    for size in range(1, len(edges) + 1):
        for subset in combinations(edges, size):
            if domination_number_oracle(remove_edges(g, subset)) > gamma:
                return size
    raise AssertionError("removing every edge always raises gamma of a nonempty graph")


def bondage_witness_oracle(g: Graph, **limits: int) -> tuple[Edge, ...]:
    """Lexicographically first minimum bondage set, by unpruned enumeration."""
    b = bondage_number_oracle(g, **limits)
    gamma = domination_number_oracle(g)
    for subset in combinations(g.edges(), b):
        if domination_number_oracle(remove_edges(g, subset)) > gamma:
            return subset
    raise AssertionError("unreachable")
