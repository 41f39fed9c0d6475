"""Immutable bitset-backed simple graphs on at most 64 vertices.

Each vertex's adjacency row is a Python int used as a 64-bit mask, so
vertex sets are plain ints throughout the hot paths and the public API
converts to sorted tuples at the boundary.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import PreconditionError, UnsupportedSizeError

MAX_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask for an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> tuple[int, ...]:
    """Sorted tuple of the vertex indices set in `mask`."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Undirected simple graph with dense vertex indices 0..n-1."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > MAX_VERTICES:
            raise UnsupportedSizeError(
                f"vertex count {n} outside supported range 0..{MAX_VERTICES}"
            )
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop edge ({u},{v}) not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        rows = tuple(rows)
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "rows", rows)
        if g.n > MAX_VERTICES:
            raise UnsupportedSizeError(f"vertex count {g.n} exceeds {MAX_VERTICES}")
        full = (1 << g.n) - 1
        for v, row in enumerate(rows):
            if row & (1 << v):
                raise ValueError(f"diagonal bit set at vertex {v}")
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{g.n - 1}")
        for v in range(g.n):
            for u in iter_bits(rows[v]):
                if not rows[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return g

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] & (1 << v))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            base = u + 1
            while row:
                b = row & -row
                out.append((u, base + b.bit_length() - 1))
                row ^= b
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def is_complete(self) -> bool:
        full = self.vertex_mask()
        return all(self.rows[v] == full ^ (1 << v) for v in range(self.n))

    def is_connected(self) -> bool:
        return count_components(self.rows, self.vertex_mask()) <= 1

    # -- derived graphs ---------------------------------------------------

    def delete_edge(self, u: int, v: int) -> "Graph":
        """Same vertex set with edge (u, v) removed."""
        if u == v or not self.has_edge(u, v):
            raise PreconditionError(f"({u},{v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.from_rows(rows)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("loop edge not allowed")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.from_rows(rows)

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on the complement of `vertices`.

        Indices are re-densified; the returned map sends each surviving old
        index to its new index so downstream witnesses can be translated
        back to the original labels.
        """
        drop = mask_of(vertices)
        keep = [v for v in range(self.n) if not drop & (1 << v)]
        old_to_new = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in iter_bits(self.rows[v] & ~drop):
                row |= 1 << old_to_new[u]
            rows.append(row)
        return Graph.from_rows(rows), old_to_new

    def subgraph_mask(self, keep_mask: int) -> tuple["Graph", dict[int, int]]:
        return self.delete_vertices(bits(self.vertex_mask() & ~keep_mask))

    # -- components -------------------------------------------------------

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples, ordered by minimum vertex."""
        return [bits(m) for m in component_masks(self.rows, self.vertex_mask())]

    def component_count(self, removed_mask: int = 0) -> int:
        return count_components(self.rows, self.vertex_mask() & ~removed_mask)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def component_masks(rows, alive: int) -> list[int]:
    """Masks of the connected components of the subgraph induced on `alive`,
    ordered by their minimum vertex."""
    comps = []
    rem = alive
    while rem:
        seed = rem & -rem
        comp = 0
        frontier = seed
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & alive & ~comp
        comps.append(comp)
        rem &= ~comp
    return comps


def count_components(rows, alive: int) -> int:
    cnt = 0
    rem = alive
    while rem:
        seed = rem & -rem
        comp = 0
        frontier = seed
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & alive & ~comp
        cnt += 1
        rem &= ~comp
    return cnt


# -- named constructors ---------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at index 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return Graph(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i--i+5."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph(g.n + h.n, edges)
