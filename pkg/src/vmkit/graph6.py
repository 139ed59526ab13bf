"""graph6 text encoding (short form, up to 62 vertices).

Upper-triangle adjacency bits in column order, six bits per printable
character offset by 63.  Parsed graphs get labels 1..n; writing uses the
stored vertex order, so write(parse(s)) == s.
"""

from __future__ import annotations

from vmkit.errors import Graph6Error
from vmkit.graphs import Graph

_MAX_SHORT = 62


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 string (optional trailing newline)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.rstrip("\n")
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 input", 0)
    for off, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 alphabet", off)
    n = ord(text[0]) - 63
    if n > _MAX_SHORT:
        raise Graph6Error("only short-form graph6 (n <= 62) is supported", 0)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(text) - 1 != nchars:
        raise Graph6Error(
            f"expected {nchars} data characters for n={n}, got {len(text) - 1}",
            min(len(text), 1 + nchars),
        )
    bits = []
    for off, ch in enumerate(text[1:], start=1):
        v = ord(ch) - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    for extra in range(nbits, len(bits)):
        if bits[extra]:
            raise Graph6Error("nonzero padding bits", 1 + extra // 6)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph(range(1, n + 1), edges)


def write_graph6(graph: Graph) -> str:
    """Encode in short form using the graph's stored vertex order."""
    n = graph.n
    if n > _MAX_SHORT:
        raise Graph6Error("only short-form graph6 (n <= 62) is supported", 0)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(graph.rows[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for pos in range(0, len(bits), 6):
        v = 0
        for b in bits[pos:pos + 6]:
            v = v << 1 | b
        chars.append(chr(v + 63))
    return "".join(chars)
