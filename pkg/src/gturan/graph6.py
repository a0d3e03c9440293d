"""graph6 encoding for graphs on at most 62 vertices.

Format: one size byte ``n + 63``, then the upper triangle read column by
column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte,
most significant bit first, each byte offset by 63. Unused trailing bits
are zero.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import Graph6Error
from .graph import Graph

MAX_SHORT_N = 62


def encode_graph6(G: Graph) -> str:
    if G.n > MAX_SHORT_N:
        raise Graph6Error(f"short graph6 form holds at most {MAX_SHORT_N} vertices")
    mask = G.edge_mask()
    nbits = G.n * (G.n - 1) // 2
    out = [chr(G.n + 63)]
    for start in range(0, nbits, 6):
        chunk = 0
        for offset in range(6):
            chunk <<= 1
            pos = start + offset
            if pos < nbits:
                chunk |= mask >> pos & 1
        out.append(chr(chunk + 63))
    return "".join(out)


def decode_graph6(text: str, *, line: int | None = None) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 string", line)
    codes = [ord(c) for c in text]
    bad = [c for c in codes if not 63 <= c <= 126]
    if bad:
        raise Graph6Error(f"byte {bad[0]} outside the graph6 range 63..126", line)
    n = codes[0] - 63
    if n > MAX_SHORT_N:
        raise Graph6Error("long graph6 size prefix is not supported", line)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = codes[1:]
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: {len(payload)} of {need} bytes", line)
    if len(payload) > need:
        raise Graph6Error(f"{len(payload) - need} trailing bytes after payload", line)
    mask = 0
    for idx, code in enumerate(payload):
        chunk = code - 63
        for offset in range(6):
            pos = idx * 6 + offset
            bit = chunk >> (5 - offset) & 1
            if pos >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits", line)
            elif bit:
                mask |= 1 << pos
    return Graph.from_edge_mask(n, mask)


def read_graph6(lines: Iterable[str] | TextIO) -> Iterator[Graph]:
    """Decode one graph per non-blank line, reporting 1-based line numbers."""
    for number, raw in enumerate(lines, start=1):
        if raw.strip():
            yield decode_graph6(raw, line=number)
