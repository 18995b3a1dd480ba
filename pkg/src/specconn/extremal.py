"""Constructors and recognizers for the extremal exception graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import graph as gc
from .connectivity import minimum_cuts, vertex_connectivity
from .errors import CapabilityError, GraphError
from .graph import Graph, bits
from .isomorphism import are_isomorphic

MAX_SIDE_CANDIDATES = 10**6


@dataclass(frozen=True)
class FamilyParams:
    """(n, delta, k) for K_{k-1} v (K_a u K_b), a = delta-k+2, b = n-delta-1."""

    n: int
    delta: int
    k: int

    def __post_init__(self):
        n, d, k = self.n, self.delta, self.k
        if not 2 <= k <= d <= n - 3:
            raise GraphError(f"need 2 <= k <= delta <= n-3, got n={n}, delta={d}, k={k}")
        if n > gc.MAX_ORDER:
            raise GraphError(f"order {n} too large")

    @classmethod
    def maybe(cls, n: int, delta: int, k: int) -> FamilyParams | None:
        try:
            return cls(n, delta, k)
        except GraphError:
            return None

    @property
    def a(self) -> int:
        return self.delta - self.k + 2

    @property
    def b(self) -> int:
        return self.n - self.delta - 1

    @property
    def cut(self) -> int:
        return self.k - 1

    @property
    def edges(self) -> int:
        return self.n * (self.n - 1) // 2 - self.a * self.b


@dataclass(frozen=True)
class TfExtremalSpec:
    """Triangle-free block structure X | S | Y with |S| = k-1 independent.

    G[X u S] = K_{delta,delta} and G[Y u S] = K_{ceil(t/2), floor(t/2)}
    with t = n - 2*delta + k - 1, S inside one side of each block.
    """

    n: int
    delta: int
    k: int

    def __post_init__(self):
        n, d, k = self.n, self.delta, self.k
        if not 2 <= k <= d:
            raise GraphError(f"need 2 <= k <= delta, got delta={d}, k={k}")
        if self.y_size < 1:
            raise GraphError(f"|Y| = n - 2*delta = {self.y_size} must be positive")
        big, small = self.y_block
        if small < 1 or big < self.s_size:
            raise GraphError(f"block K_({big},{small}) cannot hold S of size {self.s_size} on one side")
        if n > gc.MAX_ORDER:
            raise GraphError(f"order {n} too large")

    @classmethod
    def maybe(cls, n: int, delta: int, k: int) -> TfExtremalSpec | None:
        try:
            return cls(n, delta, k)
        except GraphError:
            return None

    @property
    def x_size(self) -> int:
        return 2 * self.delta - self.k + 1

    @property
    def s_size(self) -> int:
        return self.k - 1

    @property
    def y_size(self) -> int:
        return self.n - 2 * self.delta

    @property
    def y_block(self) -> tuple[int, int]:
        t = self.n - 2 * self.delta + self.k - 1
        return (t + 1) // 2, t // 2

    @property
    def edges(self) -> int:
        big, small = self.y_block
        return self.delta**2 + big * small


# builders -------------------------------------------------------------------

def build_join_split(p: FamilyParams) -> Graph:
    """K_{k-1} v (K_a u K_b): cut vertices first, then the K_a part, then K_b."""
    return gc.join(gc.complete(p.cut), gc.disjoint_union(gc.complete(p.a), gc.complete(p.b)))


def build_super_exception(n: int, delta: int) -> Graph:
    """(K_delta v (K_2 u K_{n-delta-2})) minus the edge from vertex delta (in
    the K_2 part) to vertex 0 (a join vertex)."""
    if n < 5 or not 1 <= delta <= n - 3:
        raise GraphError(f"need n >= 5 and 1 <= delta <= n-3, got n={n}, delta={delta}")
    host = gc.join(gc.complete(delta), gc.disjoint_union(gc.complete(2), gc.complete(n - delta - 2)))
    return gc.delete_edge(host, delta, 0)


def build_tf_exception(spec: TfExtremalSpec) -> Graph:
    # labels: S = 0..k-2, X = next 2*delta-k+1, Y = the rest
    s_n, x_n = spec.s_size, spec.x_size
    S = list(range(s_n))
    X = list(range(s_n, s_n + x_n))
    Y = list(range(s_n + x_n, spec.n))
    x_with_s = X[: spec.delta - s_n]
    x_other = X[spec.delta - s_n:]
    big, _ = spec.y_block
    y_with_s = Y[: big - s_n]
    y_other = Y[big - s_n:]
    edges = [(u, v) for u in S + x_with_s for v in x_other]
    edges += [(u, v) for u in S + y_with_s for v in y_other]
    return Graph.from_edges(spec.n, edges)


def build_tf_sharpness(delta: int) -> Graph:
    """Order 3*delta+3 graph with G[X u S] = K_{delta,delta+1},
    G[Y u S] = K_{delta+1,delta+1} and G - S = K_{1,delta} u K_{1,delta+1}."""
    if delta < 2:
        raise GraphError("sharpness construction needs delta >= 2")
    n = 3 * delta + 3
    S = list(range(delta))
    x_centre = delta
    x_leaves = list(range(delta + 1, 2 * delta + 1))
    y_centre = 2 * delta + 1
    y_leaves = list(range(2 * delta + 2, n))
    edges = [(u, v) for u in S + [x_centre] for v in x_leaves]
    edges += [(u, v) for u in S + [y_centre] for v in y_leaves]
    return Graph.from_edges(n, edges)


# recognizers ----------------------------------------------------------------

def _check_order(g: Graph, n: int) -> None:
    if g.n != n:
        raise GraphError(f"graph has order {g.n}, parameters expect {n}")


def matches_join_split(g: Graph, p: FamilyParams) -> bool:
    _check_order(g, p.n)
    return g.m == p.edges and are_isomorphic(g, build_join_split(p))


def spanning_join_split_side(g: Graph, p: FamilyParams) -> tuple[int, ...] | None:
    """A vertex set A, |A| = a, whose outside neighbourhood has at most k-1
    vertices; such an A exists iff g is a spanning subgraph of the host."""
    _check_order(g, p.n)
    if comb(g.n, p.a) > MAX_SIDE_CANDIDATES:
        raise CapabilityError(f"C({g.n}, {p.a}) candidate sides exceeds {MAX_SIDE_CANDIDATES}")
    adj = g.adj
    for side in combinations(range(g.n), p.a):
        a_mask = sum(1 << v for v in side)
        reach = 0
        for v in side:
            reach |= adj[v]
        if (reach & ~a_mask).bit_count() <= p.cut:
            return side
    return None


def is_spanning_subgraph_of_join_split(g: Graph, p: FamilyParams) -> bool:
    return spanning_join_split_side(g, p) is not None


def _complete_bipartite_sides(g: Graph, vertices: int) -> tuple[int, int] | None:
    """Colour classes (as bitsets) if g[vertices] is a complete bipartite graph."""
    adj = g.adj
    start = (vertices & -vertices).bit_length() - 1
    colour = {start: 0}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in bits(adj[v] & vertices):
            if u not in colour:
                colour[u] = 1 - colour[v]
                stack.append(u)
            elif colour[u] == colour[v]:
                return None
    if len(colour) != vertices.bit_count():
        return None
    left = sum(1 << v for v, c in colour.items() if c == 0)
    right = vertices & ~left
    if any((adj[v] & vertices) != right for v in bits(left)):
        return None
    return left, right


def _block_matches(g: Graph, vertices: int, s_mask: int, sizes: tuple[int, int]) -> bool:
    sides = _complete_bipartite_sides(g, vertices)
    if sides is None:
        return False
    left, right = sides
    if sorted((left.bit_count(), right.bit_count())) != sorted(sizes):
        return False
    return (s_mask & ~left) == 0 or (s_mask & ~right) == 0


def matches_tf_exception(g: Graph, n: int, delta: int, k: int) -> bool:
    """Whether g has the X | S | Y block structure for (n, delta, k)."""
    _check_order(g, n)
    if not gc.is_triangle_free(g):
        raise GraphError("recognizer expects a triangle-free graph")
    spec = TfExtremalSpec.maybe(n, delta, k)
    if spec is None or g.m != spec.edges:
        return False
    if g.m == n * (n - 1) // 2 or vertex_connectivity(g) != k - 1:
        return False
    for cert in minimum_cuts(g, k - 1):
        s_mask = sum(1 << v for v in cert.cut)
        if any(g.adj[v] & s_mask for v in cert.cut):
            continue
        everything = g.vertex_mask
        for part in cert.parts:
            if len(part) != spec.x_size:
                continue
            x_mask = sum(1 << v for v in part)
            y_mask = everything & ~x_mask & ~s_mask
            if y_mask.bit_count() != spec.y_size:
                continue
            if (_block_matches(g, x_mask | s_mask, s_mask, (delta, delta))
                    and _block_matches(g, y_mask | s_mask, s_mask, spec.y_block)):
                return True
    return False
