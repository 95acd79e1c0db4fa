"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency rows are Python ints used as bitsets: bit ``v`` of ``rows[u]`` is
set iff ``uv`` is an edge. Every detector in the package is written in terms
of row intersections and population counts.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import IndexOutOfRange, SelfLoop

__all__ = [
    "Graph",
    "bits",
    "mask_of",
    "from_edge_list",
    "complement",
    "induced_subgraph",
    "open_neighborhood",
    "closed_neighborhood",
    "is_connected",
    "components",
    "bfs_layers",
    "distances_from",
    "diameter",
    "is_clique",
    "is_independent",
    "complete_join",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "empty_graph",
    "complete_bipartite",
    "petersen_graph",
    "bull_graph",
    "claw_graph",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        rows = self.rows
        for u, row in enumerate(rows):
            if row & ~full or row < 0:
                raise IndexOutOfRange(f"row {u} references a vertex >= {self.n}")
            if row >> u & 1:
                raise SelfLoop(f"vertex {u} is adjacent to itself")
            while row:
                low = row & -row
                v = low.bit_length() - 1
                if not rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                row ^= low

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(bits(r)) for r in self.rows)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered pairs; duplicate pairs collapse."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"edge ({u}, {v}) is a loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~r & ~(1 << u) for u, r in enumerate(g.rows)))


def _check_set(g: Graph, s: Iterable[int]) -> list[int]:
    vs = sorted(set(s))
    if vs and (vs[0] < 0 or vs[-1] >= g.n):
        raise IndexOutOfRange(f"vertex set {vs} not within 0..{g.n - 1}")
    return vs


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled by increasing original index."""
    vs = _check_set(g, s)
    pos = {v: i for i, v in enumerate(vs)}
    sel = mask_of(vs)
    rows = tuple(mask_of(pos[w] for w in bits(g.rows[v] & sel)) for v in vs)
    return Graph(len(vs), rows)


def open_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """N(X): the union of the neighborhoods of X, minus X itself."""
    sel = mask_of(_check_set(g, s))
    acc = 0
    for v in bits(sel):
        acc |= g.rows[v]
    return frozenset(bits(acc & ~sel))


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    sel = mask_of(_check_set(g, s))
    return frozenset(bits(sel)) | open_neighborhood(g, bits(sel))


def _reach(g: Graph, source: int, allowed: int) -> int:
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return _reach(g, 0, g.vertex_mask) == g.vertex_mask


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by least vertex."""
    left = g.vertex_mask
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = _reach(g, v, left)
        out.append(list(bits(comp)))
        left &= ~comp
    return out


def bfs_layers(g: Graph, source: int, allowed: int | None = None) -> list[frozenset[int]]:
    """Distance layers from ``source``; unreachable vertices are omitted.

    ``allowed`` restricts the search to the subgraph induced by a vertex mask.
    """
    g._check(source)
    if allowed is None:
        allowed = g.vertex_mask
    seen = frontier = 1 << source
    layers = []
    while frontier:
        layers.append(frozenset(bits(frontier)))
        nxt = 0
        for v in bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return layers


def distances_from(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    for d, layer in enumerate(bfs_layers(g, source)):
        for v in layer:
            dist[v] = d
    return dist


def diameter(g: Graph) -> float:
    """Largest eccentricity; ``inf`` for a disconnected graph, 0 for n <= 1."""
    best = 0
    for v in range(g.n):
        layers = bfs_layers(g, v)
        if sum(len(layer) for layer in layers) < g.n:
            return float("inf")
        best = max(best, len(layers) - 1)
    return best


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    sel = mask_of(s)
    return all((g.rows[v] | 1 << v) & sel == sel for v in bits(sel))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    sel = mask_of(s)
    return all(g.rows[v] & sel == 0 for v in bits(sel))


def complete_join(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> bool:
    """True iff every vertex of ``xs`` is adjacent to every vertex of ``ys``."""
    ym = mask_of(ys)
    return all(g.rows[x] & ym == ym for x in xs)


# -- small named graphs -----------------------------------------------------

def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def claw_graph() -> Graph:
    return complete_bipartite(1, 3)


def bull_graph() -> Graph:
    """Triangle 0,1,2 with pendant 3 on vertex 0 and pendant 4 on vertex 1."""
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)
