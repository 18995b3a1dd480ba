"""Immutable simple graphs on at most 62 vertices.

Each vertex's neighbourhood is stored as an int bitset, so a graph is just
``(n, adj)`` with ``adj[v]`` having bit ``u`` set iff ``uv`` is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphError

MAX_ORDER = 62


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, adj: Iterable[int]):
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside supported range [1, {MAX_ORDER}]")
        adj = tuple(int(a) for a in adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} neighbour sets, got {len(adj)}")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full or a < 0:
                raise GraphError(f"vertex {v} has neighbours outside 0..{n - 1}")
            if a >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(a):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._adj = adj
        self._m = sum(a.bit_count() for a in adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside supported range [1, {MAX_ORDER}]")
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"invalid edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> Graph:
        """Build from an integer whose bit ``e`` flags the e-th pair of `pair_order`."""
        return cls.from_edges(n, (p for e, p in enumerate(pair_order(n)) if mask >> e & 1))

    @property
    def order(self) -> int:
        return self._n

    n = order

    @property
    def size(self) -> int:
        return self._m

    m = size

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u]) if u < v]

    def edge_mask(self) -> int:
        return sum(1 << e for e, (i, j) in enumerate(pair_order(self._n)) if self._adj[i] >> j & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    delta: int


# constructors ---------------------------------------------------------------

def empty(n: int) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        _bad_order(n)
    return Graph(n, [0] * n)


def complete(n: int) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        _bad_order(n)
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with side A = 0..a-1 and side B = a..a+b-1."""
    if a < 1 or b < 1:
        raise GraphError("both sides of K_{a,b} need at least one vertex")
    return join(empty(a), empty(b))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def _bad_order(n: int):
    raise GraphError(f"order {n} outside supported range [1, {MAX_ORDER}]")


# combinators ----------------------------------------------------------------

def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 keeps its labels; g2's vertices are shifted to follow them."""
    n1 = g1.n
    if n1 + g2.n > MAX_ORDER:
        _bad_order(n1 + g2.n)
    return Graph(n1 + g2.n, g1.adj + tuple(a << n1 for a in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_ORDER:
        _bad_order(n1 + n2)
    side1 = (1 << n1) - 1
    side2 = ((1 << n2) - 1) << n1
    adj = [a | side2 for a in g1.adj] + [(a << n1) | side1 for a in g2.adj]
    return Graph(n1 + n2, adj)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)])


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n) or g.has_edge(u, v):
        raise GraphError(f"cannot add ({u}, {v})")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, adj)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    return Graph.from_edges(
        len(vs), ((index[u], index[v]) for u, v in g.edges() if u in index and v in index)
    )


# queries --------------------------------------------------------------------

def min_degree(g: Graph) -> DegreeProfile:
    degs = tuple(g.degrees())
    return DegreeProfile(degs, min(degs))


def component_masks(adj: tuple[int, ...], allowed: int) -> list[int]:
    """Connected components of the subgraph induced on the bitset `allowed`."""
    out = []
    left = allowed
    while left:
        seen = frontier = left & -left
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & allowed & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, smallest first (ties by lowest vertex)."""
    parts = [tuple(bits(c)) for c in component_masks(g.adj, g.vertex_mask)]
    return sorted(parts, key=lambda c: (len(c), c))


def is_connected(g: Graph) -> bool:
    return len(component_masks(g.adj, g.vertex_mask)) == 1


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    return all(not (adj[u] & adj[v]) for u, v in g.edges())
