"""graph6 reader and writer (n <= 62, single-byte length field only)."""

from __future__ import annotations

from .graph import Graph, GraphError

HEADER = b">>graph6<<"
MAX_IO_VERTICES = 62


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _as_bytes(text) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    return bytes(text)


def parse_graph6(text) -> Graph:
    data = _as_bytes(text)
    start = len(HEADER) if data.startswith(HEADER) else 0
    end = len(data)
    while end > start and data[end - 1] in b" \t\r\n":
        end -= 1
    if end == start:
        raise Graph6Error("missing length byte", start)
    first = data[start]
    if first == 126:
        raise Graph6Error(f"multi-byte length field: graphs above {MAX_IO_VERTICES} vertices are not supported", start)
    if not 63 <= first <= 125:
        raise Graph6Error(f"malformed length byte {first!r}", start)
    n = first - 63
    body_start = start + 1
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[body_start:end]
    for i, b in enumerate(body):
        if not 63 <= b <= 126:
            raise Graph6Error(f"non-printable body byte {b!r}", body_start + i)
    if len(body) < need:
        raise Graph6Error(f"truncated bit field: need {need} bytes, got {len(body)}", body_start + len(body))
    if len(body) > need:
        raise Graph6Error(f"{len(body) - need} trailing byte(s) after bit field", body_start + need)
    value = 0
    for b in body:
        value = (value << 6) | (b - 63)
    pad = need * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", end - 1)
    value >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def upper_triangle_code(g: Graph) -> int:
    """Adjacency bits in graph6 column order, first bit most significant."""
    value = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            value = (value << 1) | (row >> i & 1)
    return value


def encode(n: int, value: int) -> bytes:
    if n > MAX_IO_VERTICES:
        raise GraphError(f"graph6 output supports at most {MAX_IO_VERTICES} vertices, got {n}")
    nbits = n * (n - 1) // 2
    groups = (nbits + 5) // 6
    value <<= groups * 6 - nbits
    out = bytearray([n + 63])
    for k in range(groups - 1, -1, -1):
        out.append((value >> (6 * k) & 63) + 63)
    return bytes(out)


def write_graph6(g: Graph) -> bytes:
    return encode(g.n, upper_triangle_code(g))


def read_graph6_lines(lines) -> list[Graph]:
    """Parse a corpus with one record per line; blank lines are skipped."""
    out = []
    for line in lines:
        if isinstance(line, str):
            line = line.encode("ascii")
        if line.strip():
            out.append(parse_graph6(line))
    return out
