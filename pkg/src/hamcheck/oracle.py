"""Exact Hamiltonicity ground truth by two independent exhaustive methods.

``hamiltonian_backtrack`` does pruned lexicographic backtracking and returns a
canonical witness cycle; ``hamiltonian_dp`` propagates reachable (visited-set,
endpoint) states over the subset lattice using big-integer bitsets.  The two
share nothing beyond the graph representation, which is what makes their
agreement a meaningful cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetError
from .graph import Graph

DP_MAX_N = 24
ENUMERATION_MAX_N = 14


@dataclass(frozen=True)
class HamCycle:
    """A Hamilton cycle as a canonical vertex permutation.

    Canonical form: starts at vertex 0 and the second vertex is smaller than
    the last, which kills all 2n rotation/reflection symmetries.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        assert len(vs) >= 3 and vs[0] == 0 and vs[1] < vs[-1]
        assert len(set(vs)) == len(vs)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        out = set()
        vs = self.vertices
        for i, u in enumerate(vs):
            v = vs[(i + 1) % len(vs)]
            out.add((u, v) if u < v else (v, u))
        return frozenset(out)

    def is_valid_for(self, g: Graph) -> bool:
        if len(self.vertices) != g.n or set(self.vertices) != set(range(g.n)):
            return False
        return all(e in g.edge_index for e in self.edge_set())


def _feasible(adj: tuple[int, ...], cur: int, used: int, full: int) -> bool:
    """Correctness-neutral pruning for partial paths starting at vertex 0.

    A completion is a path cur -> (all unvisited) -> 0.  It requires (a) the
    unvisited region plus {cur, 0} to be connected, and (b) every unvisited
    vertex to have at least two available neighbors among unvisited | {cur, 0}.
    """
    remaining = full & ~used
    if remaining == 0:
        return True
    region = remaining | 1 | (1 << cur)
    # flood fill from cur within the region
    seen = 1 << cur
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & region & ~seen
        seen |= frontier
    if (seen & remaining) != remaining or not (seen & 1):
        return False
    # degree availability
    if not (adj[cur] & remaining):
        return False
    if not (adj[0] & (remaining | (1 << cur))):
        return False
    r = remaining
    while r:
        low = r & -r
        w = low.bit_length() - 1
        if (adj[w] & region & ~(1 << w)).bit_count() < 2:
            return False
        r ^= low
    return True


def hamiltonian_backtrack(g: Graph) -> HamCycle | None:
    """Return the lexicographically first canonical Hamilton cycle, if any."""
    n = g.n
    if n < 3:
        return None
    adj = g.adj_bits
    if any(b.bit_count() < 2 for b in adj):
        return None
    full = (1 << n) - 1
    path = [0]
    # iterative DFS: stack of neighbor iterators, ascending vertex order
    iters = [iter(g.adjacency[0])]
    used = 1
    while iters:
        try:
            w = next(iters[-1])
        except StopIteration:
            iters.pop()
            used ^= 1 << path.pop()
            continue
        if used == full:
            # only closing the cycle remains
            if w == 0 and path[1] < path[-1]:
                return HamCycle(tuple(path))
            continue
        if w == 0 or (used >> w) & 1:
            continue
        new_used = used | (1 << w)
        if new_used != full and not _feasible(adj, w, new_used, full):
            continue
        path.append(w)
        used = new_used
        iters.append(iter(g.adjacency[w]))
    return None


def _not_has_bit(w: int, nbits: int) -> int:
    """Big integer with bit m set exactly when subset-mask m lacks vertex w."""
    block = (1 << (1 << w)) - 1
    period = 1 << (w + 1)
    pat = block
    width = period
    while width < nbits:
        pat |= pat << width
        width *= 2
    return pat & ((1 << nbits) - 1)


def hamiltonian_dp(g: Graph) -> bool:
    """Subset dynamic programming over vertex bitmasks (independent method)."""
    n = g.n
    if n > DP_MAX_N:
        raise BudgetError("hamiltonian-dp", DP_MAX_N, n)
    if n < 3:
        return False
    adj = g.adj_bits
    if any(b == 0 for b in adj):
        return False
    nmasks = 1 << n
    not_has = [_not_has_bit(w, nmasks) for w in range(n)]
    # reach[v] has bit m set iff some simple path from 0 to v visits exactly m
    reach = [0] * n
    reach[0] = 1 << 1  # the path [0] visits mask {0} = 1
    edges_directed = [(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges]
    changed = True
    while changed:
        changed = False
        for u, v in edges_directed:
            src = reach[u]
            if not src:
                continue
            add = (src & not_has[v]) << (1 << v)
            new = reach[v] | add
            if new != reach[v]:
                reach[v] = new
                changed = True
    full_bit = nmasks - 1
    for v in g.adjacency[0]:
        if v != 0 and (reach[v] >> full_bit) & 1:
            return True
    return False


def enumerate_hamilton_cycles(g: Graph, cap: int = 100000) -> list[HamCycle]:
    """All Hamilton cycles up to rotation/reflection, in lexicographic order."""
    n = g.n
    if n > ENUMERATION_MAX_N:
        raise BudgetError("hamilton-enumeration", ENUMERATION_MAX_N, n)
    if n < 3:
        return []
    adj = g.adj_bits
    if any(b.bit_count() < 2 for b in adj):
        return []
    full = (1 << n) - 1
    out: list[HamCycle] = []
    path = [0]
    iters = [iter(g.adjacency[0])]
    used = 1
    while iters:
        try:
            w = next(iters[-1])
        except StopIteration:
            iters.pop()
            used ^= 1 << path.pop()
            continue
        if used == full:
            if w == 0 and path[1] < path[-1]:
                if len(out) >= cap:
                    raise BudgetError("hamilton-enumeration", cap, len(out))
                out.append(HamCycle(tuple(path)))
            continue
        if w == 0 or (used >> w) & 1:
            continue
        new_used = used | (1 << w)
        if new_used != full and not _feasible(adj, w, new_used, full):
            continue
        path.append(w)
        used = new_used
        iters.append(iter(g.adjacency[w]))
    return out
