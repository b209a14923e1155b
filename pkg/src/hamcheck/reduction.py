"""Vertex classification by forcing pressure, and the edge-elimination fixpoint.

A vertex of degree 2 forces both of its edges into any Hamilton cycle.  A
vertex whose neighborhood contains two such low-degree vertices therefore has
both of its cycle edges spoken for ("saturated"), so its edges toward
higher-degree neighbors can never be used; three or more low-degree neighbors
("overloaded") rule out a Hamilton cycle outright, as does any vertex of
degree below two.  The fixpoint repeatedly deletes the unusable edges, since
deletions lower degrees and can create new saturated/overloaded vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, StructuralError
from .graph import Edge, Graph, is_connected

CLASS_FREE = "free"
CLASS_DEAD_END = "dead_end"          # has a neighbor of degree 1
CLASS_SATURATED = "saturated"        # exactly two neighbors of degree <= 2
CLASS_OVERLOADED = "overloaded"      # three or more neighbors of degree <= 2

REJECT_OVERLOAD = "overload"
REJECT_UNDERDEGREE = "underdegree"
REJECT_DISCONNECTED = "disconnected"
REJECT_BRIDGE = "bridge"


@dataclass(frozen=True)
class VertexClass:
    label: str
    witnesses: tuple[int, ...]


@dataclass(frozen=True)
class Rejection:
    reason: str
    vertex: int | None = None


@dataclass(frozen=True)
class ReductionResult:
    reduced: Graph
    eliminated: tuple[Edge, ...]
    forced: frozenset[Edge]
    rejected: Rejection | None

    @property
    def ok(self) -> bool:
        return self.rejected is None


def classify_vertex(g: Graph, v: int) -> VertexClass:
    """Classify v from the degrees of its neighbors on the current graph.

    Reporting precedence: dead_end (a degree-1 neighbor exists), then
    overloaded, then saturated.
    """
    if not (0 <= v < g.n):
        raise InputError(f"vertex {v} out of range for n={g.n}")
    adj = g.adjacency
    ones = tuple(w for w in adj[v] if len(adj[w]) == 1)
    if ones:
        return VertexClass(CLASS_DEAD_END, ones)
    lows = tuple(w for w in adj[v] if len(adj[w]) <= 2)
    if len(lows) >= 3:
        return VertexClass(CLASS_OVERLOADED, lows)
    if len(lows) == 2:
        return VertexClass(CLASS_SATURATED, lows)
    return VertexClass(CLASS_FREE, ())


def forced_edges(g: Graph) -> frozenset[Edge]:
    """Edges with at least one endpoint of degree 2."""
    adj = g.adjacency
    return frozenset(e for e in g.edges if len(adj[e[0]]) == 2 or len(adj[e[1]]) == 2)


def _round_eliminations(g: Graph, vertex_order: Sequence[int]) -> list[Edge]:
    """One round of deletions: per saturated vertex, the edges to non-witnesses.

    Classes are evaluated once against the incoming graph; the round's
    deletions are applied as a batch by the caller.
    """
    adj = g.adjacency
    out: list[Edge] = []
    seen = set()
    for v in vertex_order:
        cls = classify_vertex(g, v)
        if cls.label != CLASS_SATURATED:
            continue
        wit = set(cls.witnesses)
        for w in adj[v]:
            if w in wit:
                continue
            e = (v, w) if v < w else (w, v)
            if e not in seen:
                seen.add(e)
                out.append(e)
    out.sort()
    return out


def _fixpoint(
    g: Graph,
    *,
    tolerate_damage: bool,
    vertex_order: Sequence[int] | None = None,
) -> ReductionResult:
    """Iterate elimination rounds until stable.

    With ``tolerate_damage`` False (the preprocessing pass) any overloaded
    vertex, vertex of degree < 2, or disconnection is a rejection.  With it
    True (used when inducing the connectivity core) only overloaded vertices
    stop the process; low degrees and disconnection are left for the caller
    to read off the result.
    """
    cur = g
    eliminated: list[Edge] = []
    forced: set[Edge] = set()
    order = vertex_order if vertex_order is not None else range(g.n)
    while True:
        adj = cur.adjacency
        if not tolerate_damage:
            for v in range(cur.n):
                if len(adj[v]) < 2:
                    return ReductionResult(cur, tuple(eliminated), frozenset(forced),
                                           Rejection(REJECT_UNDERDEGREE, v))
            if not is_connected(cur):
                return ReductionResult(cur, tuple(eliminated), frozenset(forced),
                                       Rejection(REJECT_DISCONNECTED))
        for v in range(cur.n):
            if classify_vertex(cur, v).label == CLASS_OVERLOADED:
                return ReductionResult(cur, tuple(eliminated), frozenset(forced),
                                       Rejection(REJECT_OVERLOAD, v))
        forced |= forced_edges(cur)
        drop = _round_eliminations(cur, order)
        if not drop:
            return ReductionResult(cur, tuple(eliminated), frozenset(forced), None)
        eliminated.extend(drop)
        cur = cur.without_edges(drop)


def reduce_graph(g: Graph) -> ReductionResult:
    """Run the elimination fixpoint as a preprocessing pass.

    Requires a connected graph with n >= 3; any overloaded vertex, degree
    drop below 2, or disconnection terminates with a rejection witness.
    """
    if g.n < 3:
        raise StructuralError(f"need n >= 3, got n={g.n}")
    if not is_connected(g):
        raise StructuralError("input graph must be connected")
    return _fixpoint(g, tolerate_damage=False)


def core_fixpoint(g: Graph) -> ReductionResult:
    """Elimination fixpoint for core induction: tolerates low degree and
    disconnection, stops only on an overloaded vertex."""
    return _fixpoint(g, tolerate_damage=True)


def eliminate_one_at_a_time(g: Graph, order_picker) -> ReductionResult:
    """Order-sensitivity probe: delete a single eliminable edge at a time,
    chosen by ``order_picker(candidates)``, with full reclassification after
    every deletion.  Used by tests to confirm the fixpoint is order-free.
    """
    if g.n < 3:
        raise StructuralError(f"need n >= 3, got n={g.n}")
    if not is_connected(g):
        raise StructuralError("input graph must be connected")
    cur = g
    eliminated: list[Edge] = []
    forced: set[Edge] = set()
    while True:
        adj = cur.adjacency
        for v in range(cur.n):
            if len(adj[v]) < 2:
                return ReductionResult(cur, tuple(eliminated), frozenset(forced),
                                       Rejection(REJECT_UNDERDEGREE, v))
        if not is_connected(cur):
            return ReductionResult(cur, tuple(eliminated), frozenset(forced),
                                   Rejection(REJECT_DISCONNECTED))
        for v in range(cur.n):
            if classify_vertex(cur, v).label == CLASS_OVERLOADED:
                return ReductionResult(cur, tuple(eliminated), frozenset(forced),
                                       Rejection(REJECT_OVERLOAD, v))
        forced |= forced_edges(cur)
        candidates = _round_eliminations(cur, range(cur.n))
        if not candidates:
            return ReductionResult(cur, tuple(eliminated), frozenset(forced), None)
        e = order_picker(candidates)
        eliminated.append(e)
        cur = cur.without_edges([e])


def classify_all(g: Graph) -> list[VertexClass]:
    return [classify_vertex(g, v) for v in range(g.n)]
