"""Structural classification of connected (claw, bull)-free graphs.

A connected graph is (claw, bull)-free exactly when it is an expansion of a
path with at least 5 vertices, an expansion of a cycle with at least 6
vertices, or has independence number at most 2. :func:`classify` places a
graph in one of these classes, or returns an induced claw or bull.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import expansion as ex
from .errors import Disconnected, EmptyGraph, NotTriangleFree, TheoremViolation
from .forbidden import (
    Witness,
    find_induced_bull,
    find_induced_claw,
    find_witness,
    verify_witness,
    witness_from_record,
    witness_to_record,
)
from .graph import Graph, bits, complement, is_connected

__all__ = [
    "Classification",
    "PathExpansion",
    "CycleExpansion",
    "CoTriangleFree",
    "NotCBFree",
    "CorollaryResult",
    "alpha_at_most_two",
    "has_triangle",
    "is_complete_bipartite",
    "classify",
    "verify_certificate",
    "corollary_check",
    "classification_to_record",
    "classification_from_record",
]


class Classification:
    """Base of the four outcomes; ``label`` is the serialized class name."""

    label: str = ""

    def certificate_record(self) -> dict:
        return {}


@dataclass(frozen=True)
class PathExpansion(Classification):
    cert: ex.ExpansionCert
    label = "path_expansion"

    def certificate_record(self) -> dict:
        return self.cert.to_record()


@dataclass(frozen=True)
class CycleExpansion(Classification):
    cert: ex.ExpansionCert
    label = "cycle_expansion"

    def certificate_record(self) -> dict:
        return self.cert.to_record()


@dataclass(frozen=True)
class CoTriangleFree(Classification):
    label = "co_triangle_free"

    def certificate_record(self) -> dict:
        return {"kind": "alpha_le_2"}


@dataclass(frozen=True)
class NotCBFree(Classification):
    witness: Witness
    label = "not_cb_free"

    def certificate_record(self) -> dict:
        return witness_to_record(self.witness)


def has_triangle(g: Graph) -> bool:
    rows = g.rows
    for u in range(g.n):
        higher = rows[u] >> (u + 1) << (u + 1)
        for v in bits(higher):
            if rows[u] & rows[v]:
                return True
    return False


def alpha_at_most_two(g: Graph) -> bool:
    """True iff the complement of ``g`` is triangle-free."""
    return not has_triangle(complement(g))


def is_complete_bipartite(g: Graph) -> bool:
    """``K_{a,b}`` with ``a, b >= 1``."""
    if g.n < 2 or not is_connected(g):
        return False
    side = g.rows[0]
    other = g.vertex_mask & ~side
    for v in range(g.n):
        want = side if other >> v & 1 else other
        if g.rows[v] != want:
            return False
    return True


def _check_input(g: Graph) -> None:
    if g.n == 0:
        raise EmptyGraph("cannot classify the empty graph")
    if not is_connected(g):
        raise Disconnected("classification is defined for connected graphs only")


def classify(g: Graph) -> Classification:
    _check_input(g)
    if alpha_at_most_two(g):
        return CoTriangleFree()
    cert = ex.recognize_path_expansion(g)
    if cert is not None:
        return PathExpansion(cert)
    cert = ex.recognize_cycle_expansion(g)
    if cert is not None:
        return CycleExpansion(cert)
    w = find_witness(g)
    if w is None:
        raise TheoremViolation(f"no class and no claw/bull witness for {g!r}")
    return NotCBFree(w)


def _alpha_le_2_by_triples(g: Graph) -> bool:
    rows = g.rows
    for x, y, z in combinations(range(g.n), 3):
        if not (rows[x] >> y & 1 or rows[x] >> z & 1 or rows[y] >> z & 1):
            return False
    return True


def verify_certificate(g: Graph, c: Classification) -> bool:
    """Re-check a classification against ``g`` without trusting its origin."""
    if isinstance(c, PathExpansion):
        return c.cert.kind == "path" and ex.verify_expansion_cert(g, c.cert)
    if isinstance(c, CycleExpansion):
        return c.cert.kind == "cycle" and ex.verify_expansion_cert(g, c.cert)
    if isinstance(c, CoTriangleFree):
        return g.n >= 1 and is_connected(g) and _alpha_le_2_by_triples(g)
    if isinstance(c, NotCBFree):
        try:
            return verify_witness(g, c.witness)
        except ValueError:
            return False
    return False


def classification_to_record(c: Classification) -> dict:
    return {"class": c.label, "certificate": c.certificate_record()}


def classification_from_record(rec: dict) -> Classification:
    """Inverse of :func:`classification_to_record`; ``ValueError`` on bad shape."""
    label = rec.get("class")
    cert = rec.get("certificate")
    if not isinstance(cert, dict):
        raise ValueError("certificate must be an object")
    try:
        if label == "path_expansion":
            return PathExpansion(ex.ExpansionCert.from_record(cert))
        if label == "cycle_expansion":
            return CycleExpansion(ex.ExpansionCert.from_record(cert))
        if label == "co_triangle_free":
            return CoTriangleFree()
        if label == "not_cb_free":
            return NotCBFree(witness_from_record(cert))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed certificate: {exc}") from exc
    raise ValueError(f"unknown class {label!r}")


@dataclass(frozen=True)
class CorollaryResult:
    input_is_triangle_free: bool
    is_complete_bipartite: bool
    complement_class: Classification | None = None
    violations: tuple[str, ...] = field(default=())

    @property
    def counterexample(self) -> bool:
        return bool(self.violations)


def corollary_check(t: Graph) -> CorollaryResult:
    """Check that a triangle-free graph is complete bipartite or the
    complement of a connected (claw, bull)-free graph that expands neither a
    long path nor a long cycle.

    Violations are collected in ``violations`` rather than raised.
    """
    if has_triangle(t):
        raise NotTriangleFree("corollary_check needs a triangle-free graph")
    if is_complete_bipartite(t):
        return CorollaryResult(True, True)
    if t.n == 0:
        return CorollaryResult(True, False)
    h = complement(t)
    problems = []
    if not is_connected(h):
        problems.append("complement is disconnected")
        return CorollaryResult(True, False, None, tuple(problems))
    if find_induced_claw(h) is not None:
        problems.append("complement contains an induced claw")
    if find_induced_bull(h) is not None:
        problems.append("complement contains an induced bull")
    for label, recognizer in (
        ("path expansion", ex.recognize_path_expansion),
        ("cycle expansion", ex.recognize_cycle_expansion),
    ):
        if recognizer(h) is not None:
            problems.append(f"complement is a {label}")
    try:
        cls = classify(h)
    except TheoremViolation as exc:
        problems.append(str(exc))
        cls = None
    else:
        if not isinstance(cls, CoTriangleFree):
            problems.append(f"complement classified as {cls.label}")
    return CorollaryResult(True, False, cls, tuple(problems))
