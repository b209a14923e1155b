"""Immutable simple undirected graphs plus the text codecs used by the tools.

Vertices are dense integers 0..n-1.  Edges are stored canonically as sorted
(u, v) pairs with u < v, and the edge list itself is sorted, so iteration
order is deterministic everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import CodecError, InputError, UnsupportedSizeError

Edge = tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1 with a sorted edge tuple."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"negative vertex count {self.n}")
        prev: Edge | None = None
        for u, v in self.edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise InputError(f"edge ({u},{v}) out of range for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise InputError(f"edge list not sorted/unique at ({u},{v})")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Normalize arbitrary (u, v) pairs: orient, dedupe, sort."""
        canon = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        return cls(n, tuple(sorted(canon)))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks; the workhorse of every search."""
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree_of(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def without_edges(self, drop: Iterable[Edge]) -> "Graph":
        gone = {(u, v) if u < v else (v, u) for u, v in drop}
        return Graph(self.n, tuple(e for e in self.edges if e not in gone))

    def without_vertex(self, v: int) -> "Graph":
        """Delete v and relabel vertices above it down by one."""
        if not (0 <= v < self.n):
            raise InputError(f"vertex {v} out of range")
        kept = []
        for a, b in self.edges:
            if v in (a, b):
                continue
            a2 = a - 1 if a > v else a
            b2 = b - 1 if b > v else b
            kept.append((a2, b2))
        return Graph.from_edges(self.n - 1, kept)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def degree(g: Graph, v: int) -> int:
    if not (0 <= v < g.n):
        raise InputError(f"vertex {v} out of range for n={g.n}")
    return g.degree_of(v)


def neighbors(g: Graph, v: int) -> tuple[int, ...]:
    if not (0 <= v < g.n):
        raise InputError(f"vertex {v} out of range for n={g.n}")
    return g.adjacency[v]


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (vacuous for n <= 1)."""
    if g.n <= 1:
        return True
    adj = g.adj_bits
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def connected_components(g: Graph) -> list[frozenset[int]]:
    adj = g.adj_bits
    unseen = set(range(g.n))
    comps = []
    while unseen:
        root = min(unseen)
        seen = 1 << root
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= frontier
        comp = frozenset(v for v in unseen if (seen >> v) & 1)
        comps.append(comp)
        unseen -= comp
    return comps


def bridges(g: Graph) -> frozenset[int]:
    """Edge ids whose removal increases the number of connected components.

    Iterative lowpoint DFS (works per component, no recursion limits).
    """
    n = g.n
    adj = g.adjacency
    index = g.edge_index
    pre = [-1] * n
    low = [0] * n
    counter = 0
    out: set[int] = set()
    for root in range(n):
        if pre[root] != -1:
            continue
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        pre[root] = counter
        low[root] = counter
        counter += 1
        while stack:
            v, parent, i = stack.pop()
            if i < len(adj[v]):
                stack.append((v, parent, i + 1))
                w = adj[v][i]
                if pre[w] == -1:
                    pre[w] = counter
                    low[w] = counter
                    counter += 1
                    stack.append((w, v, 0))
                elif w != parent:
                    low[v] = min(low[v], pre[w])
            else:
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] == pre[v]:
                        a, b = (parent, v) if parent < v else (v, parent)
                        out.add(index[(a, b)])
    return frozenset(out)


def _graph6_bit_count(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 line (n <= 62) into a Graph."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise CodecError("empty graph6 string")
    first = ord(s[0])
    if s[0] == ":":
        raise CodecError("sparse6 input is not supported", offset=0)
    if s[0] == "&":
        raise CodecError("digraph6 input is not supported", offset=0)
    if s[0] == "~":
        raise UnsupportedSizeError("long-form graph6 (n > 62) is not supported", offset=0)
    if not (63 <= first <= 126):
        raise CodecError(f"character {s[0]!r} out of graph6 range", offset=0)
    n = first - 63
    nbits = _graph6_bit_count(n)
    ndata = (nbits + 5) // 6
    if len(s) - 1 != ndata:
        raise CodecError(
            f"expected {ndata} data bytes for n={n}, got {len(s) - 1}",
            offset=min(len(s), ndata + 1),
        )
    values = []
    for i, ch in enumerate(s[1:], start=1):
        o = ord(ch)
        if not (63 <= o <= 126):
            raise CodecError(f"character {ch!r} out of graph6 range", offset=i)
        values.append(o - 63)
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = values[k // 6]
            bit = (byte >> (5 - (k % 6))) & 1
            if bit:
                edges.append((u, v))
            k += 1
    # padding bits beyond the triangle must be zero
    for k in range(nbits, ndata * 6):
        byte = values[k // 6]
        if (byte >> (5 - (k % 6))) & 1:
            raise CodecError("nonzero trailing padding bits", offset=1 + k // 6)
    return Graph(n, tuple(edges))


def emit_graph6(g: Graph) -> str:
    """Encode a Graph in canonical short graph6 form."""
    if g.n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(f"n={g.n} exceeds the short graph6 limit of {GRAPH6_MAX_N}")
    n = g.n
    index = g.edge_index
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in index else 0)
    out = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        group = bits[i:i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the simple edge-list format: a header line ``n <count>`` then ``u v`` lines."""
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise InputError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: unparsable vertex count {parts[1]!r}") from None
            if n < 0:
                raise InputError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: unparsable token in {raw!r}") from None
        if u == v:
            raise InputError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"line {lineno}: endpoint out of range for n={n}")
        pairs.append((u, v))
    if n is None:
        raise InputError("missing 'n <count>' header line")
    return Graph.from_edges(n, pairs)


def read_graph6_lines(text: str) -> Iterator[Graph]:
    """Yield graphs from a multi-line graph6 document, skipping blank lines."""
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line)
