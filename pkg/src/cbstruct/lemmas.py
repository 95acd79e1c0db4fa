"""Executable structural lemmas about (claw, bull)-free graphs.

Each checker first verifies its hypotheses with the brute-force oracles and
raises :class:`PreconditionFailed` when one does not hold, so a vacuous
instance is never counted as a verified one. Otherwise it evaluates the
conclusion and returns a :class:`LemmaReport`; a failing report carries the
substructure that breaks the claim.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .errors import Disconnected, InvalidCycle, NotAnEdge, PreconditionFailed
from .expansion import recognize_cycle_expansion, recognize_path_expansion
from .graph import (
    Graph,
    bfs_layers,
    bits,
    complete_join,
    diameter,
    is_clique,
    is_connected,
    mask_of,
)
from .oracles import InducedCycle, independence_number, is_cb_free, longest_induced_cycle

__all__ = [
    "LemmaReport",
    "LEMMA_IDS",
    "check_lemma_layers",
    "check_lemma_cycle_neighbors",
    "check_lemma_dominating",
    "check_lemma_long",
    "check_lemma_mid",
    "check_lemma_diam2",
    "check_prop_chord_forcing",
    "check_lemma_short",
    "cycle_length_of",
]

LEMMA_IDS = (
    "bfs_layers_path",
    "cycle_neighbors_consecutive",
    "cycle_dominating",
    "long_cycle_expansion",
    "mid_cycle_alpha",
    "diam2_long_cycle",
    "chord_forcing",
    "short_cycle_path_expansion",
)


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    holds: bool
    violation: dict[str, Any] | None = None

    def __post_init__(self):
        if not self.holds and self.violation is None:
            raise ValueError("a failing report must describe its violation")


@lru_cache(maxsize=16384)
def cycle_length_of(g: Graph) -> int:
    """Length of a longest induced cycle, 0 when there is none."""
    c = longest_induced_cycle(g)
    return 0 if c is None else c.length


@lru_cache(maxsize=16384)
def _alpha(g: Graph) -> int:
    return independence_number(g)


def _require_cb_free(g: Graph) -> None:
    if not is_cb_free(g):
        raise PreconditionFailed("(claw, bull)-free", "the oracle found an induced claw or bull")


def _require_cycle(g: Graph, c: InducedCycle) -> None:
    if not isinstance(c, InducedCycle):
        c = InducedCycle(tuple(c))
    if not c.is_valid(g):
        raise InvalidCycle(f"{list(c.vertices)} is not an induced cycle of the graph")
    if c.length < 4:
        raise InvalidCycle(f"cycle length {c.length} < 4")


def check_lemma_layers(g: Graph, u0: int, u1: int) -> LemmaReport:
    """Remove N(u0) minus u1; the distance layers of u0 in its remaining
    component must be cliques, each completely joined to the previous one."""
    lid = "bfs_layers_path"
    if not (0 <= u0 < g.n and 0 <= u1 < g.n) or not g.rows[u0] >> u1 & 1:
        raise NotAnEdge(f"({u0}, {u1}) is not an edge")
    _require_cb_free(g)
    removed = g.rows[u0] & ~(1 << u1)
    layers = bfs_layers(g, u0, allowed=g.vertex_mask & ~removed)
    for i, layer in enumerate(layers):
        if not is_clique(g, layer):
            return LemmaReport(lid, False, {"layer": i, "reason": "not a clique", "vertices": sorted(layer)})
        if i and not complete_join(g, layers[i - 1], layer):
            return LemmaReport(lid, False, {
                "layer": i, "reason": "not joined to previous layer",
                "vertices": sorted(layer), "previous": sorted(layers[i - 1]),
            })
    return LemmaReport(lid, True)


def _cycle_hits(g: Graph, cycle: Sequence[int], x: int) -> list[bool]:
    return [bool(g.rows[x] >> v & 1) for v in cycle]


def _max_consecutive(hits: list[bool]) -> int:
    k = len(hits)
    if all(hits):
        return k
    best = run = 0
    for h in hits + hits:
        run = run + 1 if h else 0
        best = max(best, run)
    return min(best, k)


def check_lemma_cycle_neighbors(g: Graph, c: InducedCycle) -> LemmaReport:
    """Every vertex with a neighbor on an induced cycle of length >= 4 sees
    two consecutive cycle vertices, and three when the length is >= 5."""
    lid = "cycle_neighbors_consecutive"
    _require_cycle(g, c)
    _require_cb_free(g)
    vs = tuple(c.vertices)
    need = 3 if len(vs) >= 5 else 2
    cm = mask_of(vs)
    attached = 0
    for v in vs:
        attached |= g.rows[v]
    for x in bits(attached & ~cm):
        hits = _cycle_hits(g, vs, x)
        if _max_consecutive(hits) < need:
            return LemmaReport(lid, False, {
                "vertex": x, "cycle": list(vs),
                "cycle_neighbors": [v for v, h in zip(vs, hits) if h],
                "required_consecutive": need,
            })
    return LemmaReport(lid, True)


def check_lemma_dominating(g: Graph, c: InducedCycle) -> LemmaReport:
    """In a connected (claw, bull)-free graph every induced cycle of length
    >= 4 dominates the graph."""
    lid = "cycle_dominating"
    _require_cycle(g, c)
    if not is_connected(g):
        raise Disconnected("cycle domination needs a connected graph")
    _require_cb_free(g)
    closed = mask_of(c.vertices)
    for v in c.vertices:
        closed |= g.rows[v]
    missing = g.vertex_mask & ~closed
    if missing:
        return LemmaReport(lid, False, {"cycle": list(c.vertices), "undominated": list(bits(missing))})
    return LemmaReport(lid, True)


def check_lemma_long(g: Graph) -> LemmaReport:
    lid = "long_cycle_expansion"
    if not is_connected(g):
        raise PreconditionFailed("connected")
    _require_cb_free(g)
    ell = cycle_length_of(g)
    if ell < 6:
        raise PreconditionFailed("longest induced cycle >= 6", f"it is {ell or 'absent'}")
    cert = recognize_cycle_expansion(g)
    if cert is None:
        return LemmaReport(lid, False, {"reason": "not a cycle expansion", "ell": ell})
    if len(cert.bags) != ell:
        return LemmaReport(lid, False, {"reason": "skeleton length differs", "ell": ell, "bags": len(cert.bags)})
    return LemmaReport(lid, True)


def check_lemma_mid(g: Graph) -> LemmaReport:
    """Longest induced cycle of length 4 or 5 forces independence number <= 2.

    Connectivity is not part of the hypothesis; see the tests for what that
    means on disconnected inputs.
    """
    lid = "mid_cycle_alpha"
    _require_cb_free(g)
    ell = cycle_length_of(g)
    if ell not in (4, 5):
        raise PreconditionFailed("longest induced cycle in {4, 5}", f"it is {ell or 'absent'}")
    alpha = _alpha(g)
    if alpha > 2:
        return LemmaReport(lid, False, {"alpha": alpha, "ell": ell})
    return LemmaReport(lid, True)


def check_lemma_diam2(g: Graph) -> LemmaReport:
    lid = "diam2_long_cycle"
    _require_cb_free(g)
    alpha = _alpha(g)
    if alpha < 3:
        raise PreconditionFailed("independence number >= 3", f"it is {alpha}")
    d = diameter(g)
    if d != 2:
        raise PreconditionFailed("diameter exactly 2", f"it is {d}")
    ell = cycle_length_of(g)
    if ell < 6:
        return LemmaReport(lid, False, {"ell": ell})
    return LemmaReport(lid, True)


def check_prop_chord_forcing(g: Graph, u: int, path: Sequence[int]) -> LemmaReport:
    """With no induced cycle longer than 3, a vertex adjacent to both ends of
    an induced path is adjacent to all of it."""
    lid = "chord_forcing"
    path = tuple(path)
    ell = cycle_length_of(g)
    if ell > 3:
        raise PreconditionFailed("longest induced cycle <= 3", f"it is {ell}")
    k = len(path)
    if k < 2 or len(set(path)) != k or any(not 0 <= v < g.n for v in path):
        raise PreconditionFailed("induced path", "need at least 2 distinct vertices of the graph")
    for i in range(k):
        for j in range(i + 1, k):
            if bool(g.rows[path[i]] >> path[j] & 1) != (j == i + 1):
                raise PreconditionFailed("induced path", f"pair ({path[i]}, {path[j]}) breaks it")
    if not 0 <= u < g.n or u in path:
        raise PreconditionFailed("u off the path", f"u = {u}")
    if not (g.rows[u] >> path[0] & 1 and g.rows[u] >> path[-1] & 1):
        raise PreconditionFailed("u adjacent to both path ends")
    missing = [v for v in path if not g.rows[u] >> v & 1]
    if missing:
        return LemmaReport(lid, False, {"u": u, "path": list(path), "non_neighbors": missing})
    return LemmaReport(lid, True)


def check_lemma_short(g: Graph) -> LemmaReport:
    lid = "short_cycle_path_expansion"
    if not is_connected(g):
        raise PreconditionFailed("connected")
    _require_cb_free(g)
    ell = cycle_length_of(g)
    if ell > 3:
        raise PreconditionFailed("longest induced cycle <= 3", f"it is {ell}")
    alpha = _alpha(g)
    if alpha < 3:
        raise PreconditionFailed("independence number >= 3", f"it is {alpha}")
    d = diameter(g)
    if d < 4:
        return LemmaReport(lid, False, {"reason": "diameter below 4", "diameter": d})
    if recognize_path_expansion(g) is None:
        return LemmaReport(lid, False, {"reason": "not a path expansion", "diameter": d})
    return LemmaReport(lid, True)
