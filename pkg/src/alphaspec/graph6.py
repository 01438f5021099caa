"""graph6 encoding and decoding.

Only the one-byte size header (n <= 62) and the four-byte extended header
(n <= 258047) are supported.  Upper-triangle bits are taken column by
column, ``(0,1), (0,2), (1,2), (0,3), ...``, packed six per byte, and each
byte is stored as its value plus 63.
"""

from __future__ import annotations

from pathlib import Path
from typing import IO, Iterator

import numpy as np

from .graph import Graph

HEADER = b">>graph6<<"
MAX_ORDER = 258047


class Graph6Error(ValueError):
    pass


def _upper_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row/column indices of the upper triangle in graph6 (column-major) order."""
    cols, rows = np.triu_indices(n, 1)[::-1]
    order = np.lexsort((rows, cols))
    return rows[order], cols[order]


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if data.endswith(b"\n"):
        data = data[:-1]
    if not data:
        raise Graph6Error("empty graph6 record")
    raw = np.frombuffer(data, dtype=np.uint8)
    bad = np.flatnonzero((raw < 63) | (raw > 126))
    if bad.size:
        raise Graph6Error(f"byte {data[bad[0]]!r} at offset {bad[0]} outside printable range 63..126")
    values = raw.astype(np.int64) - 63

    if values[0] < 63:
        n, body = int(values[0]), values[1:]
    elif len(values) >= 2 and values[1] == 63:
        raise Graph6Error("8-byte size header (n > 258047) is not supported")
    else:
        if len(values) < 4:
            raise Graph6Error("truncated extended size header")
        n = (int(values[1]) << 12) | (int(values[2]) << 6) | int(values[3])
        body = values[4:]
        if n < 63:
            raise Graph6Error(f"extended header used for small order {n}")

    if n == 0:
        raise Graph6Error("graphs with zero vertices are not supported")
    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(body) < expected:
        raise Graph6Error(f"truncated payload: expected {expected} bytes for n={n}, got {len(body)}")
    if len(body) > expected:
        raise Graph6Error(f"trailing data after {expected} payload bytes for n={n}")

    bits = ((body[:, None] >> np.arange(5, -1, -1)) & 1).ravel()
    if bits[nbits:].any():
        raise Graph6Error("non-zero padding bits")
    adj = np.zeros((n, n), dtype=bool)
    rows, cols = _upper_indices(n)
    adj[rows, cols] = bits[:nbits].astype(bool)
    return Graph(adj | adj.T)


def write_graph6(g: Graph, header: bool = False) -> bytes:
    n = g.n
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    if n <= 62:
        size = [n]
    else:
        size = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    rows, cols = _upper_indices(n)
    bits = g.adjacency[rows, cols].astype(np.int64)
    bits = np.concatenate([bits, np.zeros(-len(bits) % 6, dtype=np.int64)])
    groups = bits.reshape(-1, 6) @ (1 << np.arange(5, -1, -1))
    out = bytes(v + 63 for v in [*size, *groups.tolist()])
    return HEADER + out if header else out


def read_graph6(source: str | Path | IO[bytes]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line of a graph6 file.

    Errors are re-raised with the 1-based line number prefixed.
    """
    if isinstance(source, (str, Path)):
        with open(source, "rb") as fh:
            yield from read_graph6(fh)
        return
    for lineno, line in enumerate(source, start=1):
        if isinstance(line, str):
            line = line.encode("ascii")
        line = line.rstrip(b"\r\n")
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
