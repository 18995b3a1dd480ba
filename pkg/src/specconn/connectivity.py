"""Vertex connectivity, minimum vertex cuts and the super-connectivity test."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import CapabilityError, DisconnectedGraphError, GraphError
from .graph import Graph, bits, component_masks

MAX_CUT_CANDIDATES = 10**7


@dataclass(frozen=True)
class CutCertificate:
    """A vertex cut together with the components it leaves behind.

    ``parts`` are sorted by size (then lexicographically), so ``parts[0]`` is
    the smallest side X_0 and `rest` is everything else.
    """

    cut: tuple[int, ...]
    kappa: int
    parts: tuple[tuple[int, ...], ...]

    @property
    def p(self) -> int:
        return len(self.parts)

    @property
    def smallest(self) -> tuple[int, ...]:
        return self.parts[0]

    @property
    def rest(self) -> tuple[int, ...]:
        return tuple(sorted(v for part in self.parts[1:] for v in part))


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    min_cuts: tuple[CutCertificate, ...]
    is_maximally_connected: bool
    is_super_kappa: bool


def _require_connected(g: Graph) -> None:
    if len(component_masks(g.adj, g.vertex_mask)) != 1:
        raise DisconnectedGraphError("graph is disconnected (vertex connectivity 0)")


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def local_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t nonadjacent).

    Unit-capacity max-flow on the split graph: vertex v becomes v_in=2v and
    v_out=2v+1 joined by a capacity-1 arc.  Stops early once `limit` paths
    are found.
    """
    if g.has_edge(s, t):
        raise GraphError("local connectivity is only defined for nonadjacent pairs")
    n = g.n
    big = n
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while limit is None or flow < limit:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    _require_connected(g)
    n = g.n
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                best = min(best, local_connectivity(g, s, t, limit=best))
    return best


def _cut_certificate(g: Graph, cut: tuple[int, ...]) -> CutCertificate | None:
    removed = sum(1 << v for v in cut)
    masks = component_masks(g.adj, g.vertex_mask & ~removed)
    if len(masks) < 2:
        return None
    parts = sorted((tuple(bits(c)) for c in masks), key=lambda c: (len(c), c))
    return CutCertificate(cut, len(cut), tuple(parts))


def minimum_cuts(g: Graph, kappa: int | None = None) -> list[CutCertificate]:
    """All minimum vertex cuts in lexicographic order of the cut set."""
    _require_connected(g)
    if _is_complete(g):
        raise GraphError("complete graphs have no vertex cut")
    if kappa is None:
        kappa = vertex_connectivity(g)
    if comb(g.n, kappa) > MAX_CUT_CANDIDATES:
        raise CapabilityError(f"C({g.n}, {kappa}) candidate cuts exceeds {MAX_CUT_CANDIDATES}")
    out = []
    for cut in combinations(range(g.n), kappa):
        cert = _cut_certificate(g, cut)
        if cert is not None:
            out.append(cert)
    return out


def is_k_connected(g: Graph, k: int) -> bool:
    return vertex_connectivity(g) >= k


def is_maximally_connected(g: Graph) -> bool:
    return vertex_connectivity(g) == min(g.degrees())


def _cuts_isolate_min_degree(g: Graph, cuts: list[CutCertificate]) -> bool:
    delta = min(g.degrees())
    return all(
        any(len(part) == 1 and g.degree(part[0]) == delta for part in cert.parts)
        for cert in cuts
    )


def is_super_kappa(g: Graph) -> bool:
    _require_connected(g)
    if _is_complete(g):
        return True
    return _cuts_isolate_min_degree(g, minimum_cuts(g))


def connectivity_report(g: Graph) -> ConnectivityReport:
    _require_connected(g)
    kappa = vertex_connectivity(g)
    delta = min(g.degrees())
    if _is_complete(g):
        return ConnectivityReport(kappa, (), True, True)
    cuts = minimum_cuts(g, kappa)
    return ConnectivityReport(kappa, tuple(cuts), kappa == delta, _cuts_isolate_min_degree(g, cuts))
