"""Immutable small simple graphs with bitset adjacency rows."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 64

Edge = tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Raised for invalid graph construction or queries."""


class Graph6Error(GraphError):
    """Raised when a graph6 string cannot be decoded."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an integer bitset of the neighbours of ``v``. Instances are
    validated on construction and never mutated afterwards.
    """

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"order {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        degree_sum = 0
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {u} references a vertex >= {self.n}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
            degree_sum += row.bit_count()
        object.__setattr__(self, "m", degree_sum // 2)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, graph6={to_graph6(self)!r})"

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(iter_bits(self.adj[v]))

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs, rejecting loops, duplicates and bad indices."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"order {n} outside 1..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        if adj[u] >> v & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def regularity(g: Graph) -> Optional[int]:
    """Return the common degree if ``g`` is regular, else ``None``."""
    degrees = set(g.degrees())
    return degrees.pop() if len(degrees) == 1 else None


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g._check_vertex(v)
    return frozenset(iter_bits(g.adj[v] | 1 << v))


def closed_masks(g: Graph) -> list[int]:
    return [row | 1 << v for v, row in enumerate(g.adj)]


def star(g: Graph, x: int) -> list[Edge]:
    """Edges incident to ``x`` in canonical order."""
    g._check_vertex(x)
    return sorted(canonical_edge(x, y) for y in iter_bits(g.adj[x]))


def remove_edges(g: Graph, removed: Iterable[tuple[int, int]]) -> Graph:
    """Return a copy of ``g`` without the given edges; each must be present."""
    adj = list(g.adj)
    for u, v in removed:
        if not (0 <= u < g.n and 0 <= v < g.n) or not adj[u] >> v & 1:
            raise GraphError(f"edge ({u}, {v}) not in graph")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


# graph6 -------------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_size(g.n) + body


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string, tolerating a ``>>graph6<<`` header and surrounding whitespace."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 input")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range")
    values = [ord(ch) - 63 for ch in s]
    if values[0] < 63:
        n, values = values[0], values[1:]
    elif len(values) >= 4 and values[1] < 63:
        n = values[1] << 12 | values[2] << 6 | values[3]
        values = values[4:]
    else:
        raise Graph6Error("malformed or unsupported size prefix")
    if n == 0:
        raise Graph6Error("graph6 encodes an empty vertex set")
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(values) != expected:
        raise Graph6Error(f"expected {expected} data characters for n={n}, got {len(values)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if values[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if values and values[-1] & ((1 << (expected * 6 - nbits)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(adj))


# plain edge-list text -----------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines of ``"u v"``. Blank lines and ``#`` comments are ignored."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        header = [int(tok) for tok in lines[0].split()]
        pairs = [tuple(int(tok) for tok in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise GraphError("edge-list header must be 'n m'")
    n, m = header
    if len(pairs) != m:
        raise GraphError(f"header declares {m} edges, found {len(pairs)}")
    for p in pairs:
        if len(p) != 2:
            raise GraphError(f"edge line must hold two vertices, got {p}")
    return from_edge_list(n, pairs)  # type: ignore[arg-type]


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
