"""graph6 encoding and corpus files.

Format: a size header N(n) followed by the upper triangle of the adjacency
matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
bits per byte, big-endian within a byte, each byte offset by 63.
"""

from __future__ import annotations

import gzip
import lzma
from collections.abc import Iterable, Iterator
from pathlib import Path

from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 68719476735


class Graph6Error(ValueError):
    pass


def _size_bytes(n: int) -> bytes:
    if n < 0 or n > MAX_N:
        raise Graph6Error(f"n={n} not representable in graph6")
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + ((n >> s) & 63) for s in (12, 6, 0)])
    return bytes([126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)])


def encode_bytes(g: Graph) -> bytes:
    out = bytearray(_size_bytes(g.n))
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def encode(g: Graph) -> str:
    return encode_bytes(g).decode("ascii")


def decode(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the printable graph6 range")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        body = data[8:]
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size header")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        body = data[4:]

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise Graph6Error(f"graph6 body has {len(body)} bytes, need {need} for n={n}")
    if len(body) > need:
        raise Graph6Error(f"trailing garbage after graph6 body for n={n}")
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits")

    adj = [0] * n
    byte_idx = 0
    cur = 0
    left = 0
    for j in range(1, n):
        for i in range(j):
            if not left:
                cur = body[byte_idx] - 63
                byte_idx += 1
                left = 6
            left -= 1
            if cur >> left & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph._trusted(n, tuple(adj))


def _open_text(path: Path, mode: str):
    suffix = path.suffix
    if suffix == ".gz":
        return gzip.open(path, mode + "t", encoding="ascii", newline="\n")
    if suffix == ".xz":
        return lzma.open(path, mode + "t", encoding="ascii", newline="\n")
    return open(path, mode, encoding="ascii", newline="\n")


def iter_graph6_lines(path: str | Path) -> Iterator[str]:
    """Yield stripped graph6 lines of a corpus file (``.gz``/``.xz`` are decompressed)."""
    with _open_text(Path(path), "r") as fh:
        for line in fh:
            line = line.strip()
            if line.startswith(HEADER):
                line = line[len(HEADER):]
            if line:
                yield line


def read_graph6(path: str | Path) -> Iterator[Graph]:
    for line in iter_graph6_lines(path):
        yield decode(line)


def write_graph6(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with _open_text(Path(path), "w") as fh:
        for g in graphs:
            fh.write(encode(g) + "\n")
            count += 1
    return count
