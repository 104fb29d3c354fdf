"""graph6 encoding for graphs with at most 62 vertices.

Only the single-byte header form is supported. Bits of the upper triangle
are taken column by column, ``x(0,1), x(0,2), x(1,2), x(0,3), ...``, packed
six per byte with offset 63 and zero padding.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError

MAX_ORDER = 62
_HEADER = ">>graph6<<"


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"character {ch!r} outside the graph6 range 63..126")
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise GraphError("graph6 headers for n > 62 are not supported")
    if n < 1:
        raise GraphError("graph6 string encodes a graph with no vertices")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise GraphError(
            f"graph6 body for n={n} needs {nbytes} byte(s), got {len(body)}"
        )
    value = 0
    for ch in body:
        value = (value << 6) | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if value & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits at the end of graph6 string")
    value >>= pad
    rows = [0] * n
    for k, (i, j) in enumerate(_pairs(n)):
        if (value >> (nbits - 1 - k)) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise GraphError(f"graph6 short header supports n <= 62, got n={n}")
    out = [chr(n + 63)]
    acc = 0
    filled = 0
    for i, j in _pairs(n):
        acc = (acc << 1) | ((g.rows[i] >> j) & 1)
        filled += 1
        if filled == 6:
            out.append(chr(acc + 63))
            acc = filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one graph per nonblank line, reporting line numbers on failure."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line.strip())
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None


def write_graph6_lines(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(to_graph6(g) + "\n")
