"""Expansions of graphs, true-twin quotients, and path/cycle recognition.

An expansion replaces every skeleton vertex by a non-empty clique (its bag)
and joins two bags completely exactly when their skeleton vertices are
adjacent. In an expansion of a path on at least three vertices or a cycle
on at least four, the bags are precisely the true-twin classes, so
recognition reduces to checking that the twin quotient is literally a path
or a cycle.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import Disconnected, InvalidPartition, SizeMismatch, ZeroBag
from .graph import Graph, bits, is_connected, mask_of

__all__ = [
    "ExpansionCert",
    "TwinPartition",
    "expand",
    "true_twin_partition",
    "quotient",
    "recognize_path_expansion",
    "recognize_cycle_expansion",
    "verify_expansion_cert",
    "MIN_PATH_BAGS",
    "MIN_CYCLE_BAGS",
]

# Path length counts edges: length >= 4 means at least 5 bags.
MIN_PATH_BAGS = 5
MIN_CYCLE_BAGS = 6


@dataclass(frozen=True)
class ExpansionCert:
    kind: str  # "path" or "cycle"
    bags: tuple[tuple[int, ...], ...]

    @property
    def skeleton_length(self) -> int:
        """Number of skeleton edges."""
        k = len(self.bags)
        return k - 1 if self.kind == "path" else k

    def to_record(self) -> dict:
        return {"kind": self.kind, "bags": [list(b) for b in self.bags]}

    @classmethod
    def from_record(cls, rec: dict) -> ExpansionCert:
        kind = rec.get("kind")
        if kind not in ("path", "cycle"):
            raise ValueError(f"unknown expansion kind {kind!r}")
        bags = rec.get("bags")
        if not isinstance(bags, list) or not all(isinstance(b, list) for b in bags):
            raise ValueError("bags must be a list of lists")
        return cls(kind, tuple(tuple(int(v) for v in b) for b in bags))


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]


def expand(skeleton: Graph, bag_sizes: Sequence[int]) -> tuple[Graph, tuple[tuple[int, ...], ...]]:
    """Substitute skeleton vertex ``i`` by a clique of ``bag_sizes[i]`` vertices.

    Bags receive consecutive vertex numbers in skeleton order. Returns the
    expanded graph and its bags.
    """
    if len(bag_sizes) != skeleton.n:
        raise SizeMismatch(f"{len(bag_sizes)} bag sizes for a {skeleton.n}-vertex skeleton")
    if any(s < 1 for s in bag_sizes):
        raise ZeroBag("every bag must hold at least one vertex")
    bags = []
    start = 0
    for s in bag_sizes:
        bags.append(tuple(range(start, start + s)))
        start += s
    bag_masks = [mask_of(b) for b in bags]
    rows = [0] * start
    for i, bag in enumerate(bags):
        row = bag_masks[i]
        for j in bits(skeleton.rows[i]):
            row |= bag_masks[j]
        for v in bag:
            rows[v] = row & ~(1 << v)
    return Graph(start, tuple(rows)), tuple(bags)


def true_twin_partition(g: Graph) -> TwinPartition:
    """Classes of vertices with equal closed neighborhoods, ordered by least member."""
    groups: dict[int, list[int]] = {}
    for v, r in enumerate(g.rows):
        groups.setdefault(r | 1 << v, []).append(v)
    classes = tuple(sorted(tuple(c) for c in groups.values()))
    class_of = [0] * g.n
    for i, c in enumerate(classes):
        for v in c:
            class_of[v] = i
    return TwinPartition(classes, tuple(class_of))


def _check_partition(g: Graph, p: TwinPartition) -> None:
    seen = 0
    for i, c in enumerate(p.classes):
        if not c:
            raise InvalidPartition(f"class {i} is empty")
        m = mask_of(c)
        if m & seen or len(set(c)) != len(c):
            raise InvalidPartition(f"class {i} overlaps another class")
        if any(not 0 <= v < g.n for v in c):
            raise InvalidPartition(f"class {i} has a vertex outside the graph")
        seen |= m
        for v in c:
            if p.class_of[v] != i:
                raise InvalidPartition(f"class_of[{v}] disagrees with class {i}")
    if seen != g.vertex_mask or len(p.class_of) != g.n:
        raise InvalidPartition("classes do not cover the vertex set")
    closed = {}
    for i, c in enumerate(p.classes):
        for v in c:
            key = g.rows[v] | 1 << v
            if closed.setdefault(key, i) != i:
                raise InvalidPartition(f"vertex {v} has a true twin in another class")
        if len({g.rows[v] | 1 << v for v in c}) != 1:
            raise InvalidPartition(f"class {i} contains vertices that are not true twins")


def quotient(g: Graph, p: TwinPartition) -> tuple[Graph, tuple[int, ...]]:
    """Graph on the twin classes; returns it with the vertex -> class map."""
    _check_partition(g, p)
    rows = []
    for i, c in enumerate(p.classes):
        rep = c[0]
        row = 0
        for v in bits(g.rows[rep]):
            j = p.class_of[v]
            if j != i:
                row |= 1 << j
        rows.append(row)
    return Graph(len(p.classes), tuple(rows)), p.class_of


def _twin_quotient(g: Graph) -> tuple[Graph, TwinPartition]:
    if not is_connected(g):
        raise Disconnected("recognition requires a connected graph")
    p = true_twin_partition(g)
    # p is a twin partition by construction; skip re-validation
    rows = []
    for i, c in enumerate(p.classes):
        row = 0
        for v in bits(g.rows[c[0]]):
            row |= 1 << p.class_of[v]
        rows.append(row & ~(1 << i))
    return Graph(len(rows), tuple(rows)), p


def recognize_path_expansion(g: Graph) -> ExpansionCert | None:
    """Bags in path order if ``g`` expands a path of length >= 4, else ``None``.

    The end bag with the smaller least vertex comes first.
    """
    q, p = _twin_quotient(g)
    k = q.n
    if k < MIN_PATH_BAGS or q.num_edges() != k - 1:
        return None
    degs = [r.bit_count() for r in q.rows]
    ends = [v for v in range(k) if degs[v] == 1]
    if len(ends) != 2 or any(d not in (1, 2) for d in degs):
        return None
    # connected with k-1 edges and max degree 2: a path
    order = [ends[0]]
    prev = -1
    while len(order) < k:
        cur = order[-1]
        nxt = [w for w in bits(q.rows[cur]) if w != prev]
        prev = cur
        order.append(nxt[0])
    return ExpansionCert("path", tuple(p.classes[i] for i in order))


def recognize_cycle_expansion(g: Graph) -> ExpansionCert | None:
    """Bags in cycle order if ``g`` expands a cycle on >= 6 vertices, else ``None``.

    The order starts at the bag of vertex 0 and heads toward the neighbouring
    bag with the smaller least vertex.
    """
    q, p = _twin_quotient(g)
    k = q.n
    if k < MIN_CYCLE_BAGS or any(r.bit_count() != 2 for r in q.rows):
        return None
    # connected and 2-regular: a single cycle; classes are ordered by least
    # member so class 0 holds vertex 0 and smaller index means smaller least
    a, _ = bits(q.rows[0])
    order = [0, a]
    while len(order) < k:
        cur, prev = order[-1], order[-2]
        (nxt,) = [w for w in bits(q.rows[cur]) if w != prev]
        order.append(nxt)
    return ExpansionCert("cycle", tuple(p.classes[i] for i in order))


def verify_expansion_cert(g: Graph, cert: ExpansionCert) -> bool:
    """Check every bag invariant of ``cert`` against ``g`` from scratch."""
    k = len(cert.bags)
    if cert.kind == "path":
        if k < MIN_PATH_BAGS:
            return False
    elif cert.kind == "cycle":
        if k < MIN_CYCLE_BAGS:
            return False
    else:
        return False
    masks = []
    seen = 0
    for bag in cert.bags:
        if not bag or any(not 0 <= v < g.n for v in bag) or len(set(bag)) != len(bag):
            return False
        m = mask_of(bag)
        if m & seen:
            return False
        seen |= m
        masks.append(m)
    if seen != g.vertex_mask:
        return False
    for i in range(k):
        for j in range(i, k):
            consecutive = j == i + 1 or (cert.kind == "cycle" and i == 0 and j == k - 1)
            for v in bits(masks[i]):
                row = g.rows[v]
                if i == j:
                    if row & masks[i] != masks[i] & ~(1 << v):
                        return False
                elif consecutive:
                    if row & masks[j] != masks[j]:
                        return False
                elif row & masks[j]:
                    return False
    return True
