"""Classical graph invariants: independence number, alpha-criticality,
claw detection, vertex connectivity, Hamiltonicity.

All searches are exact. Independence uses branch and bound on the
maximum-degree vertex; connectivity uses unit-capacity max-flow over the
vertex-split digraph; Hamiltonicity is backtracking with degree and
connectivity pruning.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .errors import PreconditionError
from .graph import Graph, bits, count_components, iter_bits


# -- independence ----------------------------------------------------------


def _greedy_clique_cover_bound(rows, sub: int) -> int:
    """Number of cliques in a greedy clique cover of the induced subgraph;
    an upper bound on its independence number."""
    cnt = 0
    rem = sub
    while rem:
        b = rem & -rem
        v = b.bit_length() - 1
        clique = b
        cand = rows[v] & rem & ~b
        while cand:
            cb = cand & -cand
            u = cb.bit_length() - 1
            clique |= cb
            cand &= rows[u]
        rem &= ~clique
        cnt += 1
    return cnt


def _alpha_rec(rows, sub: int, best: list, current: int, size: int):
    if sub == 0:
        if size > best[0]:
            best[0] = size
            best[1] = current
        return
    if size + _greedy_clique_cover_bound(rows, sub) <= best[0]:
        return
    # branch on the densest remaining vertex: exclude it, or take it and
    # drop its whole closed neighborhood
    v = -1
    vdeg = -1
    m = sub
    while m:
        b = m & -m
        u = b.bit_length() - 1
        d = (rows[u] & sub).bit_count()
        if d > vdeg:
            vdeg = d
            v = u
        m ^= b
    if vdeg == 0:
        # remaining vertices are pairwise nonadjacent: take them all
        total = size + sub.bit_count()
        if total > best[0]:
            best[0] = total
            best[1] = current | sub
        return
    vbit = 1 << v
    _alpha_rec(rows, sub & ~(rows[v] | vbit), best, current | vbit, size + 1)
    _alpha_rec(rows, sub & ~vbit, best, current, size)


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact independence number with a maximum independent set witness."""
    alpha, witness = independence_in_mask(g.rows, g.vertex_mask())
    return alpha, bits(witness)


def independence_in_mask(rows, sub: int) -> tuple[int, int]:
    """(alpha, witness mask) for the subgraph induced on `sub`."""
    best = [0, 0]
    _alpha_rec(rows, sub, best, 0, 0)
    return best[0], best[1]


def is_alpha_critical(g: Graph) -> tuple[bool, list[tuple[int, int]]]:
    """Whether deleting any single edge raises the independence number.

    Edgeless graphs are vacuously critical. Returns the list of edges
    whose deletion does not raise alpha (empty iff critical).
    """
    alpha, _ = independence_number(g)
    failing = []
    for u, v in g.edges():
        rows = list(g.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        a2, _ = independence_in_mask(rows, g.vertex_mask())
        if a2 <= alpha:
            failing.append((u, v))
    return not failing, failing


def alpha_critical_fast(rows: list, n: int) -> bool:
    """Early-exit criticality test on raw adjacency rows."""
    full = (1 << n) - 1
    alpha, _ = independence_in_mask(rows, full)
    for u in range(n):
        r = rows[u] >> (u + 1)
        base = u + 1
        while r:
            b = r & -r
            v = base + b.bit_length() - 1
            r ^= b
            t = list(rows)
            t[u] &= ~(1 << v)
            t[v] &= ~(1 << u)
            a2, _ = independence_in_mask(t, full)
            if a2 <= alpha:
                return False
    return True


# -- claws -----------------------------------------------------------------


def find_claw(g: Graph) -> Optional[tuple[int, tuple[int, int, int]]]:
    """First induced K_{1,3}: (center, leaves) with the smallest center,
    then lexicographically smallest leaves. None if the graph is claw-free."""
    for c in range(g.n):
        nbrs = g.neighbors(c)
        if len(nbrs) < 3:
            continue
        for trio in combinations(nbrs, 3):
            x, y, z = trio
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return c, trio
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


# -- vertex connectivity ---------------------------------------------------


class _Dinic:
    """Unit-style max-flow; enough for vertex connectivity on <= 64 vertices."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        self.head = [[] for _ in range(nodes)]
        self.to = []
        self.cap = []

    def add_edge(self, u: int, v: int, cap: int):
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        flow = 0
        while flow < limit:
            level = [-1] * self.nodes
            level[s] = 0
            queue = [s]
            for u in queue:
                for eid in self.head[u]:
                    v = self.to[eid]
                    if self.cap[eid] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                break
            it = [0] * self.nodes

            def dfs(u: int, pushed: int) -> int:
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    eid = self.head[u][it[u]]
                    v = self.to[eid]
                    if self.cap[eid] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[eid]))
                        if got:
                            self.cap[eid] -= got
                            self.cap[eid ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while flow < limit:
                pushed = dfs(s, limit - flow)
                if not pushed:
                    break
                flow += pushed
        return flow


def _pair_connectivity(g: Graph, s: int, t: int, limit: int) -> int:
    """Minimum vertex cut separating non-adjacent s and t (<= limit)."""
    big = g.n + 1
    dinic = _Dinic(2 * g.n)
    for v in range(g.n):
        dinic.add_edge(2 * v, 2 * v + 1, 1 if v not in (s, t) else big)
    for u, v in g.edges():
        dinic.add_edge(2 * u + 1, 2 * v, big)
        dinic.add_edge(2 * v + 1, 2 * u, big)
    return dinic.max_flow(2 * s + 1, 2 * t, limit)


def vertex_connectivity(g: Graph) -> int:
    """kappa(G): n-1 for complete graphs, 0 when disconnected, otherwise the
    minimum vertex-cut size over all non-adjacent pairs."""
    n = g.n
    if n <= 1:
        return 0 if n == 0 else 0
    if g.is_complete():
        return n - 1
    if not g.is_connected():
        return 0
    best = n - 1
    # kappa <= delta, and every minimum cut misses either a fixed
    # minimum-degree vertex or one of its neighbors
    v0 = min(range(n), key=g.degree)
    sources = [v0] + list(g.neighbors(v0))
    seen_pairs = set()
    for s in sources:
        for t in range(n):
            if t == s or g.has_edge(s, t):
                continue
            key = (min(s, t), max(s, t))
            if key in seen_pairs:
                continue
            seen_pairs.add(key)
            best = min(best, _pair_connectivity(g, s, t, best))
            if best == 0:
                return 0
    return best


def vertex_connectivity_per_edge(g: Graph) -> list[tuple[tuple[int, int], int]]:
    return [((u, v), vertex_connectivity(g.delete_edge(u, v))) for u, v in g.edges()]


# -- Hamiltonicity ---------------------------------------------------------


def is_hamiltonian(g: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Backtracking Hamiltonian cycle search with degree pruning.

    Returns (True, cycle) with the cycle as a vertex sequence of length n,
    or (False, None). Graphs on fewer than 3 vertices are out of domain.
    """
    n = g.n
    if n < 3:
        raise PreconditionError("Hamiltonian cycles need at least 3 vertices")
    if any(g.degree(v) < 2 for v in range(n)):
        return False, None
    if not g.is_connected():
        return False, None
    rows = g.rows
    full = g.vertex_mask()
    start = 0
    path = [start]
    visited = 1 << start

    def feasible(current: int, visited: int) -> bool:
        rem = full & ~visited
        if rem == 0:
            return True
        # unvisited vertices plus the two path endpoints must stay connected
        if count_components(rows, rem | (1 << current) | (1 << start)) > 1:
            return False
        # every unvisited vertex needs two usable neighbors; the endpoints one
        for v in iter_bits(rem):
            free = (rows[v] & rem).bit_count()
            bonus = (1 if rows[v] & (1 << current) else 0) + (
                1 if rows[v] & (1 << start) else 0
            )
            if free + bonus < 2:
                return False
        return True

    def extend(current: int) -> bool:
        nonlocal visited
        if len(path) == n:
            return bool(rows[current] & (1 << start))
        cands = sorted(
            iter_bits(rows[current] & ~visited),
            key=lambda v: (rows[v] & ~visited).bit_count(),
        )
        for v in cands:
            path.append(v)
            visited |= 1 << v
            if feasible(v, visited) and extend(v):
                return True
            path.pop()
            visited &= ~(1 << v)
        return False

    if extend(start):
        return True, tuple(path)
    return False, None


def is_cycle_graph(g: Graph) -> bool:
    """True iff the graph is a single cycle C_n (n >= 3)."""
    return (
        g.n >= 3
        and g.is_connected()
        and all(g.degree(v) == 2 for v in range(g.n))
    )
