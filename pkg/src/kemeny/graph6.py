"""graph6 codec for graphs on 1..62 vertices (short form only).

Byte layout: chr(n + 63), then the upper triangle of the adjacency matrix
in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into
6-bit groups, each offset by 63.  An optional '>>graph6<<' prefix is
tolerated on input.
"""

from __future__ import annotations

from .graph import Graph

__all__ = ["CodecError", "parse_graph6", "emit_graph6", "iter_graph6_lines"]

_PREFIX = ">>graph6<<"


class CodecError(ValueError):
    """Input is not valid short-form graph6."""


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one short-form graph6 string (n <= 62)."""
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    s = line.strip()
    if s.startswith(_PREFIX):
        s = s[len(_PREFIX):]
    if not s:
        raise CodecError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise CodecError("long-form graph6 (n > 62) is not supported")
    n = head - 63
    if not (1 <= n <= 62):
        raise CodecError(f"bad order byte {s[0]!r}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise CodecError(
            f"need {nbytes} payload bytes for n={n}, got {len(body)}"
        )
    bits = 0
    for ch in body:
        v = ord(ch) - 63
        if not (0 <= v < 64):
            raise CodecError(f"byte {ch!r} out of graph6 range")
        bits = (bits << 6) | v
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise CodecError("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    # bits now holds x(0,1) in the most significant position
    pos = nbits - 1
    for col in range(1, n):
        for row in range(col):
            if (bits >> pos) & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            pos -= 1
    return Graph._raw(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode a graph on <= 62 vertices; inverse of parse_graph6."""
    n = g.n
    if n > 62:
        raise CodecError(f"short-form graph6 tops out at n=62, got {n}")
    bits = 0
    nbits = n * (n - 1) // 2
    pos = nbits - 1
    for col in range(1, n):
        rcol = g.rows[col]
        for row in range(col):
            if (rcol >> row) & 1:
                bits |= 1 << pos
            pos -= 1
    nbytes = (nbits + 5) // 6
    bits <<= 6 * nbytes - nbits
    out = [chr(n + 63)]
    for k in range(nbytes - 1, -1, -1):
        out.append(chr(((bits >> (6 * k)) & 63) + 63))
    return "".join(out)


def iter_graph6_lines(lines) -> "list[tuple[int, str]]":
    """(line_number, payload) for nonempty lines, header lines skipped."""
    out = []
    for i, raw in enumerate(lines, start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("ascii", errors="replace")
        s = raw.strip()
        if s.startswith(_PREFIX):
            s = s[len(_PREFIX):]
        if s:
            out.append((i, s))
    return out
