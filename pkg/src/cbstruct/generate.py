"""Seeded random generators for each structural class and for plain G(n, p).

All randomness comes from NumPy's PCG64 bit generator
(``numpy.random.Generator(numpy.random.PCG64(seed))``), so a given
:class:`GenConfig` always yields the same graph.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import BadConfig, GaveUp
from .expansion import ExpansionCert, expand
from .graph import Graph, complement, cycle_graph, is_connected, path_graph

__all__ = [
    "GenConfig",
    "derive_seed",
    "gen_path_expansion",
    "gen_cycle_expansion",
    "gen_co_triangle_free",
    "gen_gnp",
    "relabel",
]

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class GenConfig:
    seed: int
    size: int
    max_bag: int = 1
    edge_prob: float = 0.5
    shuffle: bool = False
    """Apply a random vertex relabelling to expansion outputs."""

    def validate(self) -> None:
        if not 0 <= self.seed <= _MASK64:
            raise BadConfig(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.max_bag < 1:
            raise BadConfig(f"max_bag must be >= 1, got {self.max_bag}")
        if not 0 <= self.edge_prob <= 1:
            raise BadConfig(f"edge_prob must lie in [0, 1], got {self.edge_prob}")

    def rng(self) -> np.random.Generator:
        self.validate()
        return np.random.Generator(np.random.PCG64(self.seed))


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Per-item seed for batch generation: ``seed XOR splitmix64(index)``."""
    return (seed ^ _splitmix64(index)) & _MASK64


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Rename vertex ``v`` to ``perm[v]``."""
    rows = [0] * g.n
    for v, r in enumerate(g.rows):
        new = 0
        while r:
            low = r & -r
            new |= 1 << perm[low.bit_length() - 1]
            r ^= low
        rows[perm[v]] = new
    return Graph(g.n, tuple(rows))


def _expansion(cfg: GenConfig, skeleton: Graph, kind: str) -> tuple[Graph, ExpansionCert]:
    rng = cfg.rng()
    sizes = rng.integers(1, cfg.max_bag + 1, size=skeleton.n).tolist()
    g, bags = expand(skeleton, sizes)
    if cfg.shuffle:
        perm = rng.permutation(g.n).tolist()
        g = relabel(g, perm)
        bags = tuple(tuple(sorted(perm[v] for v in bag)) for bag in bags)
    return g, ExpansionCert(kind, bags)


def gen_path_expansion(cfg: GenConfig) -> tuple[Graph, ExpansionCert]:
    """Expansion of a path with ``cfg.size`` edges (at least 4), bag sizes
    drawn uniformly from ``1..max_bag``."""
    if cfg.size < 4:
        raise BadConfig(f"path skeleton needs length >= 4, got {cfg.size}")
    return _expansion(cfg, path_graph(cfg.size + 1), "path")


def gen_cycle_expansion(cfg: GenConfig) -> tuple[Graph, ExpansionCert]:
    """Expansion of a cycle on ``cfg.size`` vertices (at least 6)."""
    if cfg.size < 6:
        raise BadConfig(f"cycle skeleton needs >= 6 vertices, got {cfg.size}")
    return _expansion(cfg, cycle_graph(cfg.size), "cycle")


def gen_co_triangle_free(cfg: GenConfig, max_retries: int | None = None) -> Graph:
    """Complement of a random triangle-free graph, resampled until connected.

    Candidate pairs are visited in random order; each is kept with
    probability ``edge_prob`` if it closes no triangle. The distribution is
    not uniform over triangle-free graphs.
    """
    if cfg.size < 1:
        raise BadConfig(f"need at least one vertex, got {cfg.size}")
    if max_retries is None:
        max_retries = int(os.environ.get("CBSTRUCT_MAX_RETRIES", 64))
    rng = cfg.rng()
    n = cfg.size
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for _ in range(max_retries):
        rows = [0] * n
        for k in rng.permutation(len(pairs)).tolist():
            i, j = pairs[k]
            keep = rng.random() < cfg.edge_prob
            if keep and not rows[i] & rows[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        g = complement(Graph(n, tuple(rows)))
        if is_connected(g):
            return g
    raise GaveUp(f"no connected sample in {max_retries} attempts")


def gen_gnp(cfg: GenConfig) -> Graph:
    """Erdos-Renyi G(n, p): pairs visited in graph6 column order."""
    if cfg.size < 1:
        raise BadConfig(f"need at least one vertex, got {cfg.size}")
    rng = cfg.rng()
    n = cfg.size
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < cfg.edge_prob:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))
