"""graph6 and edge-list readers/writers.

graph6 follows the nauty definition: a size header, then the upper triangle
of the adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),... packed
six bits per byte, big-endian, each byte offset by 63.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import Graph

_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} too large for graph6")


def write_graph6(g: Graph) -> str:
    n = g.n
    out = [_encode_size(n)]
    acc = nbits = 0
    for j in range(1, n):
        col = g.mask(j)
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def _decode_size(text: str) -> tuple[int, int]:
    """Return (n, index of first data byte)."""

    def digits(start: int, count: int) -> int:
        if len(text) < start + count:
            raise GraphFormatError("truncated size header", len(text))
        val = 0
        for k in range(start, start + count):
            c = ord(text[k])
            if not 63 <= c <= 126:
                raise GraphFormatError(f"byte {c} outside 63..126 in size header", k)
            val = (val << 6) | (c - 63)
        return val

    if not text:
        raise GraphFormatError("empty graph6 string", 0)
    if text[0] != "~":
        return digits(0, 1), 1
    if len(text) > 1 and text[1] == "~":
        n = digits(2, 6)
        if n <= 258047:
            raise GraphFormatError("non-canonical 8-byte size header", 0)
        return n, 8
    n = digits(1, 3)
    if n <= 62:
        raise GraphFormatError("non-canonical 4-byte size header", 0)
    return n, 4


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    if s.startswith(":") or s.startswith(";"):
        raise GraphFormatError("sparse6/incremental encodings are not supported", base)
    n, start = _decode_size(s)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    data = s[start:]
    if len(data) != need:
        raise GraphFormatError(
            f"expected {need} data bytes for n={n}, found {len(data)}", base + start + min(len(data), need)
        )
    masks = [0] * n
    i, j = 0, 1
    for k, ch in enumerate(data):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"byte {c} outside 63..126", base + start + k)
        c -= 63
        for shift in range(5, -1, -1):
            bit = c >> shift & 1
            if j >= n:
                if bit:
                    raise GraphFormatError("nonzero padding bits", base + start + k)
                continue
            if bit:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_masks(masks)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by one ``u v`` pair per line; duplicate edges are allowed."""
    lines = text.splitlines()
    tokens: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.append((lineno, line.split()))
    if not tokens:
        raise GraphFormatError("empty edge list", 1)
    lineno, first = tokens[0]
    if len(first) != 1:
        raise GraphFormatError("first line must hold the vertex count alone", lineno)
    n = _int_token(first[0], lineno)
    if n < 0:
        raise GraphFormatError("negative vertex count", lineno)
    edges = []
    for lineno, parts in tokens[1:]:
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {' '.join(parts)!r}", lineno)
        u, v = (_int_token(p, lineno) for p in parts)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at {u}", lineno)
        edges.append((u, v))
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"non-integer token {tok!r}", lineno) from None


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse either format; ``auto`` picks edge-list when the input starts with a digit."""
    if fmt == "auto":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise GraphFormatError("empty input", 0)
        fmt = "edges" if lines[0][0].isdigit() or lines[0][0] == "-" else "g6"
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}", 0)
        return parse_graph6(lines[0])
    if fmt == "edges":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")
