"""Named graph families and the complete list of (n-3)-regular graphs.

An (n-3)-regular graph of order n has a 2-regular complement, i.e. a
disjoint union of cycles. Partitions of n into parts >= 3 therefore list
the family once per isomorphism class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Graph, GraphError, MAX_VERTICES, complement, empty_graph, from_edge_list, regularity


@dataclass(frozen=True)
class CyclePartition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts:
            raise GraphError("partition needs at least one part")
        if any(p < 3 for p in parts):
            raise GraphError(f"cycle lengths must be >= 3, got {list(parts)}")
        if list(parts) != sorted(parts, reverse=True):
            raise GraphError(f"parts must be non-increasing, got {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Sequence[int]) -> CyclePartition:
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "+".join(f"C{p}" for p in self.parts)


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"order {n} outside 1..{MAX_VERTICES}")


def complete_graph(n: int) -> Graph:
    _check_order(n)
    return complement(empty_graph(n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    _check_order(n)
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _check_order(n)
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_cycles(partition: CyclePartition | Sequence[int]) -> Graph:
    """Cycles laid out on consecutive vertex blocks, in the order of the parts."""
    if not isinstance(partition, CyclePartition):
        partition = CyclePartition.of(partition)
    _check_order(partition.n)
    edges = []
    offset = 0
    for p in partition.parts:
        edges += [(offset + i, offset + (i + 1) % p) for i in range(p)]
        offset += p
    return from_edge_list(partition.n, edges)


def cocktail_party(t: int) -> Graph:
    """K_{2,...,2} with t parts; vertex 2i is paired with 2i+1."""
    if t < 2:
        raise GraphError(f"cocktail party graph needs t >= 2, got {t}")
    _check_order(2 * t)
    return complement(from_edge_list(2 * t, [(2 * i, 2 * i + 1) for i in range(t)]))


def cycle_partitions(n: int) -> Iterator[CyclePartition]:
    """Partitions of n into parts >= 3, non-increasing, in lexicographically decreasing order."""

    def rec(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for p in range(min(largest, remaining), 2, -1):
            if remaining - p in (1, 2):
                continue
            for rest in rec(remaining - p, p):
                yield (p,) + rest

    for parts in rec(n, n):
        yield CyclePartition(parts)


def enumerate_n_minus_3_regular(n: int) -> list[tuple[CyclePartition, Graph]]:
    if n < 4:
        raise GraphError(f"(n-3)-regular family needs n >= 4, got {n}")
    _check_order(n)
    out = []
    for partition in cycle_partitions(n):
        g = complement(disjoint_cycles(partition))
        if regularity(g) != n - 3:
            raise AssertionError(f"complement of {partition} is not {n - 3}-regular")
        out.append((partition, g))
    return out
