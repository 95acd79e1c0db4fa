"""Exhaustive labeled-graph enumeration and the sweeps built on it.

Graph number ``m`` of order ``n`` has edge ``(i, j)`` iff bit ``b`` of ``m``
is set, where ``b`` indexes pairs in graph6 column order
``(0,1), (0,2), (1,2), (0,3), ...``. Enumeration runs ``m`` upward from 0.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from . import expansion as ex
from .classifier import (
    CoTriangleFree,
    NotCBFree,
    alpha_at_most_two,
    classify,
    corollary_check,
    has_triangle,
    verify_certificate,
)
from .errors import PreconditionFailed, TheoremViolation, TooLarge
from .graph import Graph, is_connected
from .lemmas import (
    LEMMA_IDS,
    check_lemma_cycle_neighbors,
    check_lemma_diam2,
    check_lemma_dominating,
    check_lemma_layers,
    check_lemma_long,
    check_lemma_mid,
    check_lemma_short,
    check_prop_chord_forcing,
    cycle_length_of,
)
from .oracles import pair_order, brute_force_cb_free, cb_flags, induced_cycles, induced_paths

__all__ = [
    "MAX_ENUM_N",
    "enumerate_graphs",
    "graph_from_mask",
    "connected_masks",
    "ExhaustiveSummary",
    "verify_order",
    "LemmaTally",
    "run_lemma_suite",
    "corollary_sweep",
]

MAX_ENUM_N = 8
_CHUNK = 1 << 18


def _check_n(n: int, cap: int = MAX_ENUM_N) -> None:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > cap:
        raise TooLarge(f"exhaustive enumeration is capped at n <= {cap}, got {n}")


def graph_from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    for b, (i, j) in enumerate(pair_order(n)):
        if mask >> b & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def _row_arrays(n: int, masks: np.ndarray) -> np.ndarray:
    rows = np.zeros((len(masks), n), dtype=np.int64)
    for b, (i, j) in enumerate(pair_order(n)):
        bit = (masks >> b) & 1
        rows[:, i] |= bit << j
        rows[:, j] |= bit << i
    return rows


def _connected_flags(n: int, rows: np.ndarray) -> np.ndarray:
    if n <= 1:
        return np.ones(len(rows), dtype=bool)
    full = (1 << n) - 1
    seen = np.ones(len(rows), dtype=np.int64)
    for _ in range(n - 1):
        nxt = seen.copy()
        for v in range(n):
            nxt |= np.where((seen >> v) & 1 == 1, rows[:, v], 0)
        seen = nxt
    return seen == full


def _chunks(n: int) -> Iterator[np.ndarray]:
    total = 1 << (n * (n - 1) // 2)
    for start in range(0, total, _CHUNK):
        yield np.arange(start, min(total, start + _CHUNK), dtype=np.int64)


def connected_masks(n: int) -> Iterator[np.ndarray]:
    """Chunks of edge masks of the connected labeled graphs of order ``n``."""
    _check_n(n)
    for masks in _chunks(n):
        yield masks[_connected_flags(n, _row_arrays(n, masks))]


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All ``2**(n(n-1)/2)`` labeled graphs on ``n`` vertices in edge-mask
    order, optionally only the connected ones."""
    _check_n(n)
    if n == 0:
        yield Graph(0, ())
        return
    for masks in _chunks(n):
        rows = _row_arrays(n, masks)
        if connected_only:
            rows = rows[_connected_flags(n, rows)]
        for r in rows.tolist():
            yield Graph(n, tuple(r))


# -- classification sweep ------------------------------------------------------

@dataclass
class ExhaustiveSummary:
    """Outcome of classifying every connected labeled graph of one order."""

    n: int
    total: int = 0
    class_counts: Counter = field(default_factory=Counter)
    agreements: int = 0
    disagreements: list[str] = field(default_factory=list)
    theorem_violations: list[str] = field(default_factory=list)
    overlaps: list[str] = field(default_factory=list)
    certificate_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.disagreements or self.theorem_violations or self.overlaps or self.certificate_failures)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "class_counts": dict(sorted(self.class_counts.items())),
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "theorem_violations": self.theorem_violations,
            "overlaps": self.overlaps,
            "certificate_failures": self.certificate_failures,
        }


def verify_order(n: int, check_overlaps: bool = True, check_certificates: bool = True) -> ExhaustiveSummary:
    """Classify every connected labeled graph on ``n`` vertices and compare
    with the brute-force oracle.

    Also runs all three class recognizers on each graph to detect overlaps,
    and re-verifies every returned certificate.
    """
    _check_n(n)
    summary = ExhaustiveSummary(n)
    if n == 0:
        return summary
    for masks in connected_masks(n):
        has_claw, has_bull = cb_flags(n, masks)
        oracle_bad = (has_claw | has_bull).tolist()
        for m, r, bad in zip(masks.tolist(), _row_arrays(n, masks).tolist(), oracle_bad):
            g = Graph(n, tuple(r))
            summary.total += 1
            try:
                c = classify(g)
            except TheoremViolation as exc:
                summary.theorem_violations.append(f"mask {m}: {exc}")
                continue
            summary.class_counts[c.label] += 1
            if isinstance(c, NotCBFree) == bad:
                summary.agreements += 1
            else:
                summary.disagreements.append(f"mask {m}: classify={c.label} oracle_found_witness={bad}")
            if check_overlaps and not isinstance(c, NotCBFree):
                accepted = [
                    alpha_at_most_two(g),
                    ex.recognize_path_expansion(g) is not None,
                    ex.recognize_cycle_expansion(g) is not None,
                ]
                if sum(accepted) > 1:
                    summary.overlaps.append(f"mask {m}: accepted by {accepted}")
            if check_certificates and not verify_certificate(g, c):
                summary.certificate_failures.append(f"mask {m}: {c.label}")
    return summary


# -- lemma suite ---------------------------------------------------------------

@dataclass
class LemmaTally:
    lemma_id: str
    instances: int = 0
    holds: int = 0
    violations: list[dict] = field(default_factory=list)

    def add(self, report, context: dict) -> None:
        self.instances += 1
        if report.holds:
            self.holds += 1
        else:
            self.violations.append({**context, **report.violation})

    def to_record(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "instances": self.instances,
            "holds": self.holds,
            "violations": self.violations,
        }


def _attempt(tally: LemmaTally, context: dict, fn, *args) -> None:
    try:
        report = fn(*args)
    except PreconditionFailed:
        return
    tally.add(report, context)


def cb_free_connected(n: int) -> Iterator[tuple[int, Graph]]:
    """``(mask, graph)`` for every connected (claw, bull)-free labeled graph."""
    if n == 0:
        return
    for masks in connected_masks(n):
        has_claw, has_bull = cb_flags(n, masks)
        keep = ~(has_claw | has_bull)
        masks = masks[keep]
        for m, r in zip(masks.tolist(), _row_arrays(n, masks).tolist()):
            yield m, Graph(n, tuple(r))


def run_lemma_suite(n_max: int, cap: int = 7) -> dict[str, LemmaTally]:
    """Run every lemma checker on each connected (claw, bull)-free graph of
    order ``1..n_max`` for every instance that meets its hypotheses.

    Per graph, the instances are: each ordered edge (layers); each induced
    cycle of length >= 4 (cycle neighbors, domination); the graph itself
    (long, mid, short, diameter-2); and, when no induced cycle is longer than
    3, each vertex outside an induced path of >= 3 vertices that is adjacent
    to both of its ends (chord forcing). Two-vertex paths are skipped there
    since their conclusion is the hypothesis.
    """
    _check_n(n_max, cap)
    tallies = {lid: LemmaTally(lid) for lid in LEMMA_IDS}
    for n in range(1, n_max + 1):
        for m, g in cb_free_connected(n):
            ctx = {"n": n, "mask": m}
            for u0 in range(n):
                for u1 in range(n):
                    if g.rows[u0] >> u1 & 1:
                        _attempt(tallies["bfs_layers_path"], {**ctx, "edge": [u0, u1]}, check_lemma_layers, g, u0, u1)
            for c in induced_cycles(g, min_length=4):
                cctx = {**ctx, "cycle": list(c.vertices)}
                _attempt(tallies["cycle_neighbors_consecutive"], cctx, check_lemma_cycle_neighbors, g, c)
                _attempt(tallies["cycle_dominating"], cctx, check_lemma_dominating, g, c)
            _attempt(tallies["long_cycle_expansion"], ctx, check_lemma_long, g)
            _attempt(tallies["mid_cycle_alpha"], ctx, check_lemma_mid, g)
            _attempt(tallies["diam2_long_cycle"], ctx, check_lemma_diam2, g)
            _attempt(tallies["short_cycle_path_expansion"], ctx, check_lemma_short, g)
            if cycle_length_of(g) <= 3:
                for path in induced_paths(g, min_vertices=3):
                    ends = g.rows[path[0]] & g.rows[path[-1]]
                    for u in range(n):
                        if ends >> u & 1 and u not in path:
                            _attempt(
                                tallies["chord_forcing"], {**ctx, "u": u, "path": list(path)},
                                check_prop_chord_forcing, g, u, path,
                            )
    return tallies


# -- corollary sweep -------------------------------------------------------------

def corollary_sweep(n_max: int) -> dict[str, int | list]:
    """Run :func:`corollary_check` on every triangle-free labeled graph with
    ``1..n_max`` vertices."""
    _check_n(n_max, 7)
    out = {"checked": 0, "complete_bipartite": 0, "co_triangle_free_complement": 0, "counterexamples": []}
    for n in range(1, n_max + 1):
        for m, g in enumerate(enumerate_graphs(n)):
            if has_triangle(g):
                continue
            res = corollary_check(g)
            out["checked"] += 1
            if res.is_complete_bipartite:
                out["complete_bipartite"] += 1
            elif isinstance(res.complement_class, CoTriangleFree):
                out["co_triangle_free_complement"] += 1
            if res.counterexample:
                out["counterexamples"].append({"n": n, "mask": m, "violations": list(res.violations)})
    return out


def oracle_agrees(g: Graph) -> bool:
    """Per-graph check used for spot tests: classify vs the scalar oracle."""
    if g.n == 0 or not is_connected(g):
        raise ValueError("needs a connected graph with at least one vertex")
    return isinstance(classify(g), NotCBFree) == (brute_force_cb_free(g) is not None)
