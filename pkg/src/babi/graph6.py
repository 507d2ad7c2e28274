"""graph6 encoding (the format used by nauty and the House of Graphs)."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return b"~" + bytes(63 + ((n >> s) & 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return b"~~" + bytes(63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: {n}")


def graph6_encode(G: Graph) -> bytes:
    """Header-less graph6 bytes, without a trailing newline."""
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return _encode_n(G.n) + body


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    base = 0
    if data.startswith(HEADER):
        base = len(HEADER)
    data = data[base:].rstrip(b"\r\n")
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"invalid graph6 byte {byte!r}", base + i)
    if not data:
        raise Graph6Error("empty input", base)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated vertex count", base + len(data))
        n, pos = 0, 8
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated vertex count", base + len(data))
        n, pos = 0, 4
        for byte in data[1:4]:
            n = (n << 6) | (byte - 63)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"expected {need} adjacency bytes, got {len(body)}", base + len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency data", base + pos + need)

    adj: list[set[int]] = [set() for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                adj[i].add(j)
                adj[j].add(i)
            k += 1
    if nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("non-zero padding bits", base + pos + need - 1)
    return Graph(n, adj)


def read_graph6(path: str | Path) -> Graph:
    lines = [ln for ln in Path(path).read_bytes().splitlines() if ln.strip()]
    if len(lines) != 1:
        raise Graph6Error(f"expected exactly one graph, found {len(lines)}", 0)
    return graph6_decode(lines[0])


def write_graph6(G: Graph, path: str | Path) -> None:
    Path(path).write_bytes(graph6_encode(G) + b"\n")
