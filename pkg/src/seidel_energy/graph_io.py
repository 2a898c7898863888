"""Edge-list and graph6 text formats.

Edge-list format (canonical)::

    # optional comment lines
    n 4
    0 1
    1 2

graph6 follows the usual printable 6-bit encoding of the upper triangle,
read column by column; a leading ``>>graph6<<`` header is skipped.
"""

from __future__ import annotations

import os
import re
from pathlib import Path

from .errors import GraphParseError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
_EDGE_LIST_HEADER = re.compile(r"^n\s+\S+$")


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphParseError(f"expected header 'n <count>', got {raw!r}", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 1:
                raise GraphParseError(f"vertex count must be positive, got {n}", lineno)
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected 'i j', got {raw!r}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {raw!r}", lineno) from None
        if not (0 <= i < n and 0 <= j < n):
            raise GraphParseError(f"vertex index out of range 0..{n - 1} in {raw!r}", lineno)
        if i == j:
            raise GraphParseError(f"self-loop at vertex {i}", lineno)
        e = (min(i, j), max(i, j))
        if e in edges:
            raise GraphParseError(f"duplicate edge {e[0]} {e[1]}", lineno)
        edges.add(e)
    if n is None:
        raise GraphParseError("missing header 'n <count>'")
    return Graph(n, frozenset(edges))


def write_edge_list(g: Graph, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend("# " + h if h else "#" for h in header.splitlines())
    lines.append(f"n {g.n}")
    lines.extend(f"{i} {j}" for i, j in g.sorted_edges())
    return "\n".join(lines) + "\n"


def _decode_size(data: str) -> tuple[int, int]:
    vals = [ord(c) - 63 for c in data]
    if not vals:
        raise GraphParseError("empty graph6 string")
    if vals[0] != 63:
        return vals[0], 1
    if len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphParseError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        return n, 8
    if len(vals) < 4:
        raise GraphParseError("truncated graph6 size field")
    n = 0
    for v in vals[1:4]:
        n = (n << 6) | v
    return n, 4


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if any(not 63 <= ord(c) <= 126 for c in data):
        raise GraphParseError(f"invalid graph6 character in {data!r}")
    n, offset = _decode_size(data)
    if n < 1:
        raise GraphParseError("graph6 string encodes zero vertices")
    nbits = n * (n - 1) // 2
    body = data[offset:]
    if len(body) != (nbits + 5) // 6:
        raise GraphParseError(f"graph6 body has {len(body)} chars, expected {(nbits + 5) // 6} for n={n}")
    bits = []
    for c in body:
        v = ord(c) - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, frozenset(edges))


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        out = ["~~"] + [chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def parse_graph(text: str) -> Graph:
    """Parse either format, sniffing on the first meaningful line."""
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if _EDGE_LIST_HEADER.match(s):
            return parse_edge_list(text)
        return parse_graph6(s)
    raise GraphParseError("no graph data found")


def read_graphs(path: str | os.PathLike) -> list[tuple[str, Graph]]:
    """Read one edge-list file or a graph6 file holding one graph per line."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines = [(k, s.strip()) for k, s in enumerate(text.splitlines(), start=1)]
    lines = [(k, s) for k, s in lines if s and not s.startswith("#")]
    if not lines:
        raise GraphParseError(f"{path}: no graph data found")
    if _EDGE_LIST_HEADER.match(lines[0][1]):
        return [(str(path), parse_edge_list(text))]
    out = []
    for k, s in lines:
        try:
            out.append((f"{path}:{k}", parse_graph6(s)))
        except GraphParseError as exc:
            raise GraphParseError(str(exc), k) from None
    return out
