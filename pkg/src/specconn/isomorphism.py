"""Exact isomorphism test for small graphs.

Vertices are first coloured by iterated degree refinement (computed on both
graphs at once so colour names agree), then a backtracking search maps
vertices of g1 onto same-coloured vertices of g2, trying the lowest-index
candidate first.
"""

from __future__ import annotations

from .graph import Graph, bits


def refine_colours(graphs: list[Graph]) -> list[list[int]]:
    colours = [[g.degree(v) for v in range(g.n)] for g in graphs]
    n_classes = len({c for cs in colours for c in cs})
    while True:
        signatures = [
            [(cs[v], tuple(sorted(cs[u] for u in bits(g.adj[v])))) for v in range(g.n)]
            for g, cs in zip(graphs, colours)
        ]
        palette = {sig: i for i, sig in enumerate(sorted({s for sig in signatures for s in sig}))}
        colours = [[palette[s] for s in sig] for sig in signatures]
        if len(palette) == n_classes:
            return colours
        n_classes = len(palette)


def find_isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """Return a vertex map ``phi`` with ``phi[v]`` in g2 for v in g1, or None."""
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    c1, c2 = refine_colours([g1, g2])
    if sorted(c1) != sorted(c2):
        return None

    n = g1.n
    class_size = {c: c1.count(c) for c in c1}
    order = sorted(range(n), key=lambda v: (class_size[c1[v]], v))
    candidates = {c: [u for u in range(n) if c2[u] == c] for c in class_size}
    phi = [-1] * n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        for u in candidates[c1[v]]:
            if used >> u & 1:
                continue
            ok = True
            for w in order[:depth]:
                if g1.has_edge(v, w) != g2.has_edge(u, phi[w]):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = u
            used |= 1 << u
            if extend(depth + 1):
                return True
            used &= ~(1 << u)
            phi[v] = -1
        return False

    return phi if extend(0) else None


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
