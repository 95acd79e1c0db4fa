"""Induced claw and bull detection with checkable witnesses.

When several witnesses exist, the one whose sorted vertex tuple is
lexicographically least is returned. A claw's roles are determined by its
vertex set; a bull's are determined up to swapping the two pendant
branches, which is fixed by requiring ``triangle[0] < triangle[1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import IndexOutOfRange
from .graph import Graph, bits

__all__ = [
    "ClawWitness",
    "BullWitness",
    "Witness",
    "find_induced_claw",
    "find_induced_bull",
    "find_witness",
    "verify_witness",
    "witness_to_record",
    "witness_from_record",
]


@dataclass(frozen=True)
class ClawWitness:
    center: int
    leaves: tuple[int, int, int]

    kind = "claw"

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.center, *self.leaves)))


@dataclass(frozen=True)
class BullWitness:
    """``triangle = (a, b, c)``; pendant ``p`` hangs off ``a`` and ``q`` off ``b``."""

    triangle: tuple[int, int, int]
    pendants: tuple[int, int]

    kind = "bull"

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((*self.triangle, *self.pendants)))

    def normalized(self) -> BullWitness:
        (a, b, c), (p, q) = self.triangle, self.pendants
        if a > b:
            a, b, p, q = b, a, q, p
        return BullWitness((a, b, c), (p, q))


Witness = Union[ClawWitness, BullWitness]


def _claw_at(g: Graph, c: int) -> tuple[int, int, int] | None:
    """Lexicographically least independent triple in N(c)."""
    rows = g.rows
    nb = rows[c]
    for x in bits(nb):
        rx = nb & ~rows[x] & ~((2 << x) - 1)
        for y in bits(rx):
            rz = rx & ~rows[y] & ~((2 << y) - 1)
            if rz:
                return x, y, (rz & -rz).bit_length() - 1
    return None


def find_induced_claw(g: Graph) -> ClawWitness | None:
    best: ClawWitness | None = None
    for c in range(g.n):
        if g.rows[c].bit_count() < 3:
            continue
        leaves = _claw_at(g, c)
        if leaves is not None:
            w = ClawWitness(c, leaves)
            # Adding the same centre to two equal-size leaf sets preserves
            # their lexicographic order, so the per-centre minimum suffices.
            if best is None or w.vertices < best.vertices:
                best = w
    return best


def find_induced_bull(g: Graph) -> BullWitness | None:
    rows = g.rows
    best: BullWitness | None = None
    best_key: tuple[int, ...] | None = None
    for a in range(g.n):
        for b in bits(rows[a] & ~((2 << a) - 1)):
            common = rows[a] & rows[b]
            for c in bits(common):
                tri = 1 << a | 1 << b | 1 << c
                # Each ordered choice of the pendant-free apex c and the
                # unordered pair {a, b} carrying the pendants.
                p_cands = rows[a] & ~rows[b] & ~rows[c] & ~tri
                if not p_cands:
                    continue
                q_cands = rows[b] & ~rows[a] & ~rows[c] & ~tri
                for p in bits(p_cands):
                    for q in bits(q_cands & ~rows[p]):
                        w = BullWitness((a, b, c), (p, q))
                        key = w.vertices
                        if best_key is None or key < best_key:
                            best, best_key = w, key
    return best


def find_witness(g: Graph) -> Witness | None:
    """A claw if there is one, otherwise a bull, otherwise ``None``."""
    return find_induced_claw(g) or find_induced_bull(g)


def verify_witness(g: Graph, w: Witness) -> bool:
    """Check a witness against ``g`` from scratch."""
    if isinstance(w, ClawWitness):
        vs = (w.center, *w.leaves)
    elif isinstance(w, BullWitness):
        vs = (*w.triangle, *w.pendants)
    else:
        raise TypeError(f"not a witness: {w!r}")
    for v in vs:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"witness vertex {v} not in 0..{g.n - 1}")
    if len(set(vs)) != len(vs):
        return False

    def e(u: int, v: int) -> bool:
        return bool(g.rows[u] >> v & 1)

    if isinstance(w, ClawWitness):
        x, y, z = w.leaves
        c = w.center
        return e(c, x) and e(c, y) and e(c, z) and not (e(x, y) or e(x, z) or e(y, z))
    (a, b, c), (p, q) = w.triangle, w.pendants
    return (
        e(a, b) and e(a, c) and e(b, c) and e(p, a) and e(q, b)
        and not (e(p, b) or e(p, c) or e(q, a) or e(q, c) or e(p, q))
    )


def witness_to_record(w: Witness) -> dict:
    if isinstance(w, ClawWitness):
        return {"kind": "claw", "center": w.center, "leaves": list(w.leaves)}
    return {"kind": "bull", "triangle": list(w.triangle), "pendants": list(w.pendants)}


def witness_from_record(rec: dict) -> Witness:
    """Inverse of :func:`witness_to_record`; raises ``ValueError`` on bad shape."""
    kind = rec.get("kind")
    if kind == "claw":
        center, leaves = rec["center"], rec["leaves"]
        if not isinstance(center, int) or len(leaves) != 3:
            raise ValueError("claw record needs an int center and 3 leaves")
        return ClawWitness(center, tuple(int(v) for v in leaves))
    if kind == "bull":
        tri, pend = rec["triangle"], rec["pendants"]
        if len(tri) != 3 or len(pend) != 2:
            raise ValueError("bull record needs a 3-vertex triangle and 2 pendants")
        return BullWitness(tuple(int(v) for v in tri), tuple(int(v) for v in pend))
    raise ValueError(f"unknown witness kind {kind!r}")
