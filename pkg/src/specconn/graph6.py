"""graph6 codec (short form only, so n <= 62)."""

from __future__ import annotations

from .errors import Graph6Error
from .graph import MAX_ORDER, Graph, pair_order


def encode(g: Graph) -> str:
    n = g.n
    adj = g.adj
    bitstring = [adj[i] >> j & 1 for i, j in pair_order(n)]
    bitstring += [0] * (-len(bitstring) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bitstring), 6):
        value = 0
        for b in bitstring[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    text = text.strip()
    if not text:
        raise Graph6Error("empty graph6 string")
    if text.startswith(">>graph6<<"):
        text = text[10:]
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"graph6 byte outside 63..126 in {text!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error(f"orders above {MAX_ORDER} are not supported")
    if n == 0:
        raise Graph6Error("graph6 order 0 is not a valid graph here")
    pairs = pair_order(n)
    nbytes = -(-len(pairs) // 6)
    if len(codes) - 1 != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(codes) - 1}")
    bitstring = []
    for c in codes[1:]:
        bitstring.extend(c >> s & 1 for s in range(5, -1, -1))
    if any(bitstring[len(pairs):]):
        raise Graph6Error("nonzero padding bits")
    return Graph.from_edges(n, (p for p, b in zip(pairs, bitstring) if b))
