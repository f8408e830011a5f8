"""graph6 and plain edge-list codecs."""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_N = 258047  # largest n expressible with the 4-byte size prefix


class ParseError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= MAX_GRAPH6_N:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    raise ValueError(f"graph6 size prefix supports n <= {MAX_GRAPH6_N}")


def to_graph6(g: Graph) -> str:
    n = g.n
    out = bytearray(_encode_n(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record; the ``>>graph6<<`` header is optional."""
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("non-ASCII character", exc.start) from None
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    pos = 0
    if data.startswith(GRAPH6_HEADER.encode()):
        pos = len(GRAPH6_HEADER)
    for off in range(pos, len(data)):
        if not 63 <= data[off] <= 126:
            raise ParseError(f"byte {data[off]!r} outside the printable graph6 range 63..126", off)
    if pos >= len(data):
        raise ParseError("empty graph6 record", pos)

    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        if pos + 8 > len(data):
            raise ParseError("truncated 8-byte size prefix", pos)
        n = 0
        for b in data[pos + 2 : pos + 8]:
            n = (n << 6) | (b - 63)
        if n <= MAX_GRAPH6_N:
            raise ParseError("non-minimal 8-byte size prefix", pos)
        raise ParseError(f"n={n} exceeds the supported cap {MAX_GRAPH6_N}", pos)
    else:
        if pos + 4 > len(data):
            raise ParseError("truncated 4-byte size prefix", pos)
        n = 0
        for b in data[pos + 1 : pos + 4]:
            n = (n << 6) | (b - 63)
        if n <= 62:
            raise ParseError("non-minimal 4-byte size prefix", pos)
        pos += 4
    if n < 1:
        raise ParseError("graph6 record encodes zero vertices", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"expected {nbytes} edge bytes, found {len(body)}", len(data))
    if len(body) > nbytes:
        raise ParseError("trailing garbage after edge bytes", pos + nbytes)

    rows = [0] * n
    i, j = 0, 1
    k = 0
    for b_off, b in enumerate(body):
        val = b - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (val >> shift) & 1:
                    raise ParseError("nonzero padding bits", pos + b_off)
                continue
            if (val >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph._unchecked(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Yield every graph in a graph6 stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; duplicate edges collapse."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ParseError("edge list must start with a 'n m' header line")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
    except ValueError:
        raise ParseError("non-integer header in edge list") from None
    if n < 1:
        raise ParseError("edge list declares fewer than one vertex")
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} edges, found {len(lines) - 1}")
    rows = [0] * n
    for lineno, parts in enumerate(lines[1:], start=2):
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._unchecked(n, tuple(rows))


def emit_edge_list(g: Graph) -> str:
    edges = list(g.edges())
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines)
