"""Brute-force reference computations, deliberately independent of the
optimized detectors and recognizers they are used to cross-check.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .errors import TooLarge
from .forbidden import BullWitness, ClawWitness, Witness
from .graph import Graph, bits, bull_graph, claw_graph, complement

__all__ = [
    "InducedCycle",
    "brute_force_cb_free",
    "independence_number",
    "induced_cycles",
    "induced_paths",
    "longest_induced_cycle",
    "cb_flags",
    "pattern_code",
    "pair_order",
    "is_cb_free",
    "alpha_cap",
    "cycle_cap",
]


def alpha_cap() -> int:
    return int(os.environ.get("CBSTRUCT_ALPHA_CAP", 20))


def cycle_cap() -> int:
    return int(os.environ.get("CBSTRUCT_CYCLE_CAP", 16))


# -- induced claw / bull by permutation matching ----------------------------

def pair_order(k: int) -> list[tuple[int, int]]:
    """Vertex pairs of a k-set in graph6 column order."""
    return [(i, j) for j in range(1, k) for i in range(j)]


def pattern_code(g: Graph, vertices: tuple[int, ...]) -> int:
    """Bit code of the subgraph induced on ``vertices`` (in the given order)."""
    code = 0
    for b, (i, j) in enumerate(pair_order(len(vertices))):
        if g.rows[vertices[i]] >> vertices[j] & 1:
            code |= 1 << b
    return code


@lru_cache(maxsize=None)
def _match(pattern: str, k: int, code: int) -> tuple[int, ...] | None:
    """A bijection ``perm`` such that pattern vertex ``i`` sits at position
    ``perm[i]`` of a k-set with induced code ``code``, or ``None``.

    Every one of the k! bijections is tried against the pattern's adjacency.
    """
    pat = claw_graph() if pattern == "claw" else bull_graph()
    pairs = pair_order(k)
    present = {p for b, p in enumerate(pairs) if code >> b & 1}
    for perm in permutations(range(k)):
        ok = True
        for i, j in combinations(range(k), 2):
            a, b = sorted((perm[i], perm[j]))
            if bool(pat.rows[i] >> j & 1) != ((a, b) in present):
                ok = False
                break
        if ok:
            return perm
    return None


def brute_force_cb_free(g: Graph) -> Witness | None:
    """First induced claw (over 4-subsets) or bull (over 5-subsets) in
    lexicographic subset order, or ``None`` if ``g`` is (claw, bull)-free."""
    for s in combinations(range(g.n), 4):
        perm = _match("claw", 4, pattern_code(g, s))
        if perm is not None:
            return ClawWitness(s[perm[0]], tuple(sorted(s[perm[i]] for i in (1, 2, 3))))
    for s in combinations(range(g.n), 5):
        perm = _match("bull", 5, pattern_code(g, s))
        if perm is not None:
            w = BullWitness(tuple(s[perm[i]] for i in (0, 1, 2)), (s[perm[3]], s[perm[4]]))
            return w.normalized()
    return None


@lru_cache(maxsize=16384)
def is_cb_free(g: Graph) -> bool:
    """Cached oracle verdict, used by the lemma checkers' precondition tests."""
    return brute_force_cb_free(g) is None


@lru_cache(maxsize=None)
def _code_table(pattern: str, k: int) -> np.ndarray:
    return np.array([_match(pattern, k, c) is not None for c in range(1 << (k * (k - 1) // 2))])


def cb_flags(n: int, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized oracle over many graphs of order ``n`` given as edge
    bitmasks (bit ``b`` = ``b``-th pair in graph6 column order).

    Returns boolean arrays ``(has_claw, has_bull)``. Uses the same
    permutation-matching tables as :func:`brute_force_cb_free`.
    """
    masks = np.asarray(masks, dtype=np.int64)
    index = {p: b for b, p in enumerate(pair_order(n))}
    out = []
    for pattern, k in (("claw", 4), ("bull", 5)):
        table = _code_table(pattern, k)
        found = np.zeros(masks.shape, dtype=bool)
        for s in combinations(range(n), k):
            code = np.zeros(masks.shape, dtype=np.int64)
            for b, (i, j) in enumerate(pair_order(k)):
                code |= ((masks >> index[(s[i], s[j])]) & 1) << b
            found |= table[code]
        out.append(found)
    return out[0], out[1]


# -- independence number -----------------------------------------------------

def independence_number(g: Graph, cap: int | None = None) -> int:
    """Exact alpha(g): maximum clique of the complement by branch and bound."""
    cap = alpha_cap() if cap is None else cap
    if g.n > cap:
        raise TooLarge(f"independence_number capped at n <= {cap}, got n = {g.n}")
    comp = complement(g).rows
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            grow(size + 1, cand & comp[v])

    grow(0, g.vertex_mask)
    return best


# -- induced cycles and paths -------------------------------------------------

@dataclass(frozen=True)
class InducedCycle:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_valid(self, g: Graph) -> bool:
        vs = self.vertices
        k = len(vs)
        if k < 3 or len(set(vs)) != k or any(not 0 <= v < g.n for v in vs):
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if bool(g.rows[vs[i]] >> vs[j] & 1) != consecutive:
                    return False
        return True


def induced_cycles(g: Graph, min_length: int = 3):
    """Yield every induced cycle of ``g`` once.

    Each cycle starts at its least vertex and its second vertex is smaller
    than its last.
    """
    rows = g.rows
    for s in range(g.n):
        above = g.vertex_mask & ~((2 << s) - 1)
        ns = rows[s]
        # (path, union of rows of the interior vertices, used vertices)
        stack = [((s, v1), 0, 1 << s | 1 << v1) for v1 in bits(ns & above)]
        while stack:
            path, interior, used = stack.pop()
            last = path[-1]
            for w in bits(rows[last] & above & ~interior & ~used):
                if ns >> w & 1:
                    if path[1] < w and len(path) + 1 >= min_length:
                        yield InducedCycle(path + (w,))
                else:
                    stack.append((path + (w,), interior | rows[last], used | 1 << w))


def longest_induced_cycle(g: Graph, cap: int | None = None) -> InducedCycle | None:
    """An induced cycle of maximum length, or ``None`` for a forest."""
    cap = cycle_cap() if cap is None else cap
    if g.n > cap:
        raise TooLarge(f"longest_induced_cycle capped at n <= {cap}, got n = {g.n}")
    best = None
    for c in induced_cycles(g):
        if best is None or c.length > best.length:
            best = c
    return best


def induced_paths(g: Graph, min_vertices: int = 2):
    """Yield every induced path with at least ``min_vertices`` vertices once,
    oriented so that the first vertex is smaller than the last."""
    rows = g.rows
    for s in range(g.n):
        # (path, union of rows of all path vertices but the last, used)
        stack = [((s,), 0, 1 << s)]
        while stack:
            path, before, used = stack.pop()
            if len(path) >= min_vertices and path[0] < path[-1]:
                yield path
            last = path[-1]
            for w in bits(rows[last] & ~used & ~before):
                stack.append((path + (w,), before | rows[last], used | 1 << w))
