"""Text formats: graph6 and whitespace edge lists."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, TextIO

from geodetic_lab.errors import FormatError
from geodetic_lab.graph import Graph, from_edge_list

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise FormatError("negative vertex count")
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + ((n >> s) & 63) for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise FormatError(f"vertex count {n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        chunk, offset = data[2:8], 2
    else:
        chunk, offset = data[1:4], 1
    if len(chunk) * 6 not in (18, 36):
        raise FormatError("truncated graph6 size field")
    n = 0
    for b in chunk:
        n = (n << 6) | (b - 63)
    return n, offset + len(chunk)


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[p:p + 6])), 2) for p in range(0, len(bits), 6)
    )
    return (_encode_n(g.n) + body).decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(_HEADER.encode()):
        data = data[len(_HEADER):]
    if any(b < 63 or b > 126 for b in data):
        raise FormatError("graph6 bytes must lie in 63..126")
    n, offset = _decode_n(data)
    body = data[offset:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    # padding must be zero for the encoding to be canonical
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("nonzero graph6 padding bits")
    return from_edge_list(edges, n)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[str]:
    """Yield non-empty, non-comment graph6 records."""
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """One ``u v`` pair per line, ``#`` comments allowed, vertices 0-based.

    A line ``# n <count>`` fixes the vertex count (needed for isolated
    vertices); otherwise it is one more than the largest label seen.
    """
    edges = []
    declared = n
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if declared is None and len(parts) == 2 and parts[0] == "n" and parts[1].isdigit():
                declared = int(parts[1])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if declared is None:
        declared = 1 + max((max(e) for e in edges), default=-1)
    return from_edge_list(edges, declared)


def format_edge_list(g: Graph) -> str:
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(source: str | Path) -> Graph:
    """Read a graph file: ``.g6``/``.graph6`` as graph6, anything else as an edge list."""
    p = Path(source)
    text = p.read_text()
    if p.suffix in (".g6", ".graph6"):
        records = list(read_graph6_lines(text.splitlines()))
        if len(records) != 1:
            raise FormatError(f"{p}: expected one graph6 record, found {len(records)}")
        return from_graph6(records[0])
    return parse_edge_list(text)


def write_lines(fh: TextIO, records: Iterable[str]) -> None:
    for r in records:
        fh.write(r + "\n")
