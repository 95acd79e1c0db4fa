"""Text formats: graph6 lines and the plain edge-list format.

graph6 layout: a size prefix followed by the upper adjacency triangle read
column by column (``x(0,1), x(0,2), x(1,2), x(0,3), ...``), packed big-endian
into 6-bit groups, each stored as ``value + 63``. The final group is padded
with zero bits.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import InvalidInput, MalformedGraph6
from .graph import Graph, from_edge_list

__all__ = [
    "graph6_decode",
    "graph6_encode",
    "parse_edgelist",
    "read_graphs",
    "detect_format",
    "SourceGraph",
]

HEADER = b">>graph6<<"
_MAX_N = (1 << 36) - 1


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    if n <= _MAX_N:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n={n}")


def graph6_encode(g: Graph) -> bytes:
    out = bytearray(_encode_n(g.n))
    acc = 0
    k = 0
    rows = g.rows
    for j in range(1, g.n):
        col = rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            k += 1
            if k == 6:
                out.append(acc + 63)
                acc = k = 0
    if k:
        out.append((acc << (6 - k)) + 63)
    return bytes(out)


def graph6_decode(text: bytes | str) -> Graph:
    """Decode one graph6 line; a leading ``>>graph6<<`` and trailing
    whitespace are tolerated."""
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n\t ")
    pos = len(HEADER) if data.startswith(HEADER) else 0

    def take(count: int) -> list[int]:
        nonlocal pos
        chunk = data[pos:pos + count]
        for i, b in enumerate(chunk):
            if not 63 <= b <= 126:
                raise MalformedGraph6(f"byte {b!r} outside the graph6 range", pos + i)
        if len(chunk) < count:
            raise MalformedGraph6("line truncated", len(data))
        pos += count
        return [b - 63 for b in chunk]

    (first,) = take(1)
    if first < 63:
        n = first
    else:
        (second,) = take(1)
        if second < 63:
            pos -= 1
            parts = take(3)
        else:
            parts = take(6)
        n = 0
        for p in parts:
            n = n << 6 | p
    nbits = n * (n - 1) // 2
    body = take((nbits + 5) // 6)
    if pos != len(data):
        raise MalformedGraph6("trailing bytes after graph body", pos)
    rows = [0] * n
    idx = 0
    i, j = 0, 1
    for byte_no, val in enumerate(body):
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if idx >= nbits:
                if bit:
                    raise MalformedGraph6("non-zero padding bits", pos - len(body) + byte_no)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


_HEADER_RE = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def detect_format(first_line: str) -> str:
    """``"edgelist"`` if the line looks like an ``n m`` header, else ``"graph6"``."""
    return "edgelist" if _HEADER_RE.match(_strip_comment(first_line)) else "graph6"


@dataclass(frozen=True)
class SourceGraph:
    """A graph read from a stream, with the 1-based line it started on."""

    line: int
    graph: Graph


def parse_edgelist(lines: Iterable[str], start_line: int = 1) -> Iterator[SourceGraph]:
    """Parse a stream of edge-list blocks: ``n m`` then ``m`` lines ``u v``."""
    it = iter(enumerate(lines, start_line))
    for lineno, raw in it:
        line = _strip_comment(raw)
        if not line:
            continue
        m = _HEADER_RE.match(line)
        if not m:
            raise InvalidInput(f"line {lineno}: expected 'n m' header, got {raw.strip()!r}")
        n, count = int(m.group(1)), int(m.group(2))
        edges = []
        while len(edges) < count:
            try:
                eline, eraw = next(it)
            except StopIteration:
                raise InvalidInput(f"line {lineno}: expected {count} edges, got {len(edges)}") from None
            body = _strip_comment(eraw)
            if not body:
                continue
            toks = body.split()
            if len(toks) != 2 or not all(t.isdigit() for t in toks):
                raise InvalidInput(f"line {eline}: expected 'u v', got {eraw.strip()!r}")
            edges.append((int(toks[0]), int(toks[1])))
        try:
            g = from_edge_list(n, edges)
        except InvalidInput as exc:
            raise InvalidInput(f"line {lineno}: {exc}") from exc
        yield SourceGraph(lineno, g)


def read_graphs(lines: Iterable[str], fmt: str | None = None) -> Iterator[SourceGraph]:
    """Read graphs from text lines, auto-detecting the format from the first
    non-blank, non-comment line unless ``fmt`` is given.

    Errors are raised as :class:`InvalidInput` carrying the line number.
    """
    buffered = []
    it = iter(lines)
    for raw in it:
        buffered.append(raw)
        if _strip_comment(raw):
            break
    if not buffered:
        return
    if fmt is None:
        fmt = detect_format(buffered[-1])

    def all_lines() -> Iterator[str]:
        yield from buffered
        yield from it

    if fmt == "edgelist":
        yield from parse_edgelist(all_lines())
    elif fmt == "graph6":
        for lineno, raw in enumerate(all_lines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                yield SourceGraph(lineno, graph6_decode(line))
            except MalformedGraph6 as exc:
                raise InvalidInput(f"line {lineno}: {exc}") from exc
    else:
        raise ValueError(f"unknown format {fmt!r}")
