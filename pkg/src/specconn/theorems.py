"""Per-theorem consistency checkers.

Every theorem has the shape "if <side conditions> and <hypothesis> then
<conclusion>, unless <exception>".  A verdict records each leg and is
consistent when the implication holds.  Hypothesis and conclusion predicates
only touch attributes of a facts object (``m``, ``kappa``, ``rho``, ...), so
the same code evaluates one graph (`GraphFacts`) or a numpy batch of graphs.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import cached_property, lru_cache
from typing import Callable

import numpy as np

from . import extremal
from .connectivity import is_super_kappa, vertex_connectivity
from .errors import DisconnectedGraphError
from .extremal import FamilyParams
from .graph import Graph, complement, complete_bipartite, is_connected, is_triangle_free
from .isomorphism import are_isomorphic
from .spectral import QuotientCubic, cubic_largest_root, spectral_radius

SLACK = 1e-7
MARGINAL = 10 * SLACK

THEOREM_IDS = (
    "T2.1a", "T2.1b", "T2.2", "T2.3", "T2.5", "T2.6",
    "T3.1a", "T3.1b", "T3.2", "T3.3", "T3.4", "T3.6",
    "T4.1", "T4.2", "T4.3", "T4.4",
    "T5.1", "T5.2", "T5.3", "T5.4",
)
TRIANGLE_FREE_IDS = ("T5.1", "T5.2", "T5.3", "T5.4")


class GraphFacts:
    """Invariants of one connected graph, computed on first use."""

    def __init__(self, g: Graph):
        self.graph = g
        self.n = g.n
        self.m = g.m
        self.delta = min(g.degrees())

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.graph)

    @cached_property
    def super_kappa(self) -> bool:
        return is_super_kappa(self.graph)

    @cached_property
    def rho(self) -> float:
        return spectral_radius(self.graph).rho

    @cached_property
    def rho_complement(self) -> float:
        return spectral_radius(complement(self.graph)).rho

    @cached_property
    def triangle_free(self) -> bool:
        return is_triangle_free(self.graph)


@dataclass(frozen=True)
class TheoremVerdict:
    id: str
    k: int
    applicable: bool
    hypothesis: bool
    conclusion: bool
    exception: bool
    consistent: bool
    witness: str

    def to_dict(self) -> dict:
        d = asdict(self)
        d["theorem"] = d.pop("id")
        return {key: d[key] for key in
                ("theorem", "k", "applicable", "hypothesis", "conclusion", "exception", "consistent", "witness")}


# thresholds -----------------------------------------------------------------

@lru_cache(maxsize=None)
def join_family_radius(n: int, a: int, b: int, kappa: int) -> float:
    """rho(K_kappa v (K_a u K_b)); with an empty part the graph is K_n."""
    if min(a, b) == 0:
        return float(n - 1)
    return cubic_largest_root(QuotientCubic(n, a, b, kappa))


def _c2(x: int) -> int:
    return x * (x - 1) // 2


def _hong_threshold(n: int, d: int, extra: int) -> float:
    return (d - 1) / 2 + math.sqrt(extra + (n - d - 1) * (n - 4) + (d + 1) ** 2 / 4)


# exception recognizers --------------------------------------------------------

def _join_split_exc(g: Graph, n: int, d: int, k: int) -> bool:
    p = FamilyParams.maybe(n, d, k)
    return p is not None and extremal.matches_join_split(g, p)


def _join_split_sub_exc(g: Graph, n: int, d: int, k: int) -> bool:
    p = FamilyParams.maybe(n, d, k)
    return p is not None and extremal.is_spanning_subgraph_of_join_split(g, p)


def _name_join_split(n: int, d: int, k: int) -> str:
    return f"K_{k - 1} v (K_{d - k + 2} u K_{n - d - 1})"


def _super_exc(g: Graph, n: int, d: int, k: int) -> bool:
    if n < 5 or not 1 <= d <= n - 3:
        return False
    return are_isomorphic(g, extremal.build_super_exception(n, d))


def _balanced_bipartite_exc(g: Graph, n: int, d: int, k: int) -> bool:
    return n >= 2 and are_isomorphic(g, complete_bipartite(n // 2, n - n // 2))


def _tf_exc(g: Graph, n: int, d: int, k: int) -> bool:
    return extremal.matches_tf_exception(g, n, d, k)


# theorem table ----------------------------------------------------------------

@dataclass(frozen=True)
class Theorem:
    id: str
    uses_k: bool
    side: Callable[[int, int, int], bool]
    side_text: str
    bound: Callable[[int, int, int], float]
    hypothesis_kind: str      # "m>=", "rho>=", "rho_c<=", "spanning", "always"
    conclusion_kind: str      # "kappa>=k", "kappa=delta", "super", "m<bound", "rho<bound"
    exception: Callable[[Graph, int, int, int], bool] | None = None
    exception_name: Callable[[int, int, int], str] | None = None
    triangle_free: bool = False

    @property
    def structural(self) -> bool:
        return self.hypothesis_kind == "spanning"

    @property
    def needs(self) -> set[str]:
        need = set()
        if self.hypothesis_kind in ("rho>=",) or self.conclusion_kind == "rho<bound":
            need.add("rho")
        if self.hypothesis_kind == "rho_c<=":
            need.add("rho_complement")
        if self.conclusion_kind in ("kappa>=k", "kappa=delta"):
            need.add("kappa")
        if self.conclusion_kind == "super":
            need.add("super_kappa")
        return need

    def applies(self, n: int, d: int, k: int) -> bool:
        return bool(self.side(n, d, k))

    def hypothesis(self, f, n: int, d: int, k: int, bound: float):
        kind = self.hypothesis_kind
        if kind == "m>=":
            return f.m >= bound
        if kind == "rho>=":
            return f.rho >= bound - SLACK
        if kind == "rho_c<=":
            return f.rho_complement <= bound + SLACK
        if kind == "always":
            return np.ones_like(f.m, dtype=bool) if isinstance(f.m, np.ndarray) else True
        if kind == "spanning":
            return _join_split_sub_exc(f.graph, n, d, k)
        raise AssertionError(kind)

    def conclusion(self, f, n: int, d: int, k: int, bound: float):
        kind = self.conclusion_kind
        if kind == "kappa>=k":
            return f.kappa >= k
        if kind == "kappa=delta":
            return f.kappa == d
        if kind == "super":
            return f.super_kappa
        if kind == "m<bound":
            return f.m < bound
        if kind == "rho<bound":
            return f.rho < bound - SLACK
        raise AssertionError(kind)

    def statistic(self, f):
        """(label, value) of the quantity compared against the bound."""
        if self.hypothesis_kind in ("m>=", "always"):
            return "m", f.m
        if self.hypothesis_kind == "rho_c<=":
            return "rho(complement)", f.rho_complement
        return "rho", f.rho

    def margin(self, f, bound: float):
        """Signed distance from the bound, positive on the satisfied side of
        the hypothesis (for T5.1 and T2.3, of the stated inequality)."""
        _, value = self.statistic(f)
        if self.hypothesis_kind in ("m>=", "rho>="):
            return value - bound
        return bound - value


def _k_side(extra: Callable[[int, int, int], bool] = lambda n, d, k: True):
    return lambda n, d, k: 2 <= k <= d and extra(n, d, k)


_T = [
    Theorem("T2.1a", True, _k_side(lambda n, d, k: n >= 5), "n >= 5, 2 <= k <= delta",
            lambda n, d, k: n * (n - 1) / 2 - (d - k + 2) * (n - d - 1),
            "m>=", "kappa>=k", _join_split_exc, _name_join_split),
    Theorem("T2.1b", True,
            _k_side(lambda n, d, k: n >= 5 and 2 * n >= (k + 1) * (d - k + 2) + 2 * (d + 2)),
            "n >= 5, 2 <= k <= delta, n >= (k+1)(delta-k+2)/2 + delta + 2",
            lambda n, d, k: n * (n - 1) / 2 - (d - k + 2) * (2 * n - 2 * d + k - 3) / 2,
            "m>=", "kappa>=k", _join_split_sub_exc,
            lambda n, d, k: "spanning subgraph of " + _name_join_split(n, d, k)),
    Theorem("T2.2", True, _k_side(), "2 <= k <= delta",
            lambda n, d, k: join_family_radius(n, d - k + 2, n - d - 1, k - 1),
            "rho>=", "kappa>=k", _join_split_exc, _name_join_split),
    Theorem("T2.3", True,
            lambda n, d, k: 3 <= k <= d <= n - 3 and 2 * n >= (d - k + 2) * (k * k - 2 * k + 7),
            "3 <= k <= delta <= n-3, n >= (delta-k+2)(k^2-2k+7)/2",
            lambda n, d, k: n - d + k - 3,
            "spanning", "rho<bound", _join_split_exc, _name_join_split),
    Theorem("T2.5", True,
            lambda n, d, k: 3 <= k <= d and 2 * n >= (d - k + 2) * (k * k - 2 * k + 7),
            "3 <= k <= delta, n >= (delta-k+2)(k^2-2k+7)/2",
            lambda n, d, k: n - d + k - 3,
            "rho>=", "kappa>=k", _join_split_exc, _name_join_split),
    Theorem("T2.6", True, _k_side(lambda n, d, k: n >= 5), "n >= 5, 2 <= k <= delta",
            lambda n, d, k: math.sqrt((d - k + 2) * (n - d - 1)),
            "rho_c<=", "kappa>=k", _join_split_exc, _name_join_split),
    Theorem("T3.1a", False, lambda n, d, k: n >= 5 and d >= 2, "n >= 5, delta >= 2",
            lambda n, d, k: _c2(n - 2) + 2 * d - 1,
            "m>=", "kappa=delta", lambda g, n, d, k: _join_split_exc(g, n, d, d),
            lambda n, d, k: _name_join_split(n, d, d)),
    Theorem("T3.1b", False, lambda n, d, k: n >= 5 and d >= 2 and n >= 2 * d + 3,
            "n >= 2*delta + 3, delta >= 2",
            lambda n, d, k: _c2(n - 2) + d,
            "m>=", "kappa=delta", lambda g, n, d, k: _join_split_sub_exc(g, n, d, d),
            lambda n, d, k: "spanning subgraph of " + _name_join_split(n, d, d)),
    Theorem("T3.2", False, lambda n, d, k: n >= 5 and d >= 2, "n >= 5, delta >= 2",
            lambda n, d, k: _hong_threshold(n, d, 0),
            "rho>=", "kappa=delta", lambda g, n, d, k: _join_split_exc(g, n, n - 3, n - 3),
            lambda n, d, k: f"K_{n - 4} v (K_2 u K_2)"),
    Theorem("T3.3", False, lambda n, d, k: n >= 5 and d >= 2, "n >= 5, delta >= 2",
            lambda n, d, k: join_family_radius(n, 2, n - d - 1, d - 1),
            "rho>=", "kappa=delta", lambda g, n, d, k: _join_split_exc(g, n, d, d),
            lambda n, d, k: _name_join_split(n, d, d)),
    Theorem("T3.4", False, lambda n, d, k: d >= 2 and n >= d * d - 2 * d + 7,
            "delta >= 2, n >= delta^2 - 2*delta + 7",
            lambda n, d, k: n - 3,
            "rho>=", "kappa=delta", lambda g, n, d, k: _join_split_exc(g, n, d, d),
            lambda n, d, k: _name_join_split(n, d, d)),
    Theorem("T3.6", False, lambda n, d, k: n >= 5 and d >= 2, "n >= 5, delta >= 2",
            lambda n, d, k: math.sqrt(2 * (n - d - 1)),
            "rho_c<=", "kappa=delta", lambda g, n, d, k: _join_split_exc(g, n, d, d),
            lambda n, d, k: _name_join_split(n, d, d)),
    Theorem("T4.1", False, lambda n, d, k: n >= 5, "n >= 5",
            lambda n, d, k: _c2(n - 2) + 2 * d,
            "m>=", "super", _super_exc,
            lambda n, d, k: f"(K_{d} v (K_2 u K_{n - d - 2})) - e"),
    Theorem("T4.2", False, lambda n, d, k: n >= 5, "n >= 5",
            lambda n, d, k: _hong_threshold(n, d, 2),
            "rho>=", "super"),
    Theorem("T4.3", False, lambda n, d, k: n >= 5 and d <= n - 2, "n >= 5, delta <= n-2",
            lambda n, d, k: join_family_radius(n, 2, n - d - 2, d),
            "rho>=", "super"),
    Theorem("T4.4", False, lambda n, d, k: n >= 5 and d <= n - 2, "n >= 5, delta <= n-2",
            lambda n, d, k: math.sqrt(2 * (n - d - 2)),
            "rho_c<=", "super"),
    Theorem("T5.1", False, lambda n, d, k: True, "triangle-free",
            lambda n, d, k: n * n // 4,
            "always", "m<bound", _balanced_bipartite_exc,
            lambda n, d, k: f"K_{{{n // 2},{n - n // 2}}}", triangle_free=True),
    Theorem("T5.2", True, _k_side(), "triangle-free, 2 <= k <= delta",
            lambda n, d, k: d * d + (n - 2 * d + k - 1) ** 2 // 4,
            "m>=", "kappa>=k", _tf_exc,
            lambda n, d, k: f"X|S|Y blocks for (n={n}, delta={d}, k={k})", triangle_free=True),
    Theorem("T5.3", False, lambda n, d, k: d >= 2, "triangle-free, delta >= 2",
            lambda n, d, k: d * d + (n - d - 1) ** 2 // 4,
            "m>=", "kappa=delta", lambda g, n, d, k: _tf_exc(g, n, d, d),
            lambda n, d, k: f"X|S|Y blocks for (n={n}, delta={d}, k={d})", triangle_free=True),
    Theorem("T5.4", False, lambda n, d, k: d >= 2, "triangle-free, delta >= 2",
            lambda n, d, k: d * d + (n - d) ** 2 // 4,
            "m>=", "super", triangle_free=True),
]
THEOREMS: dict[str, Theorem] = {t.id: t for t in _T}
assert tuple(THEOREMS) == THEOREM_IDS


def get_theorem(theorem_id: str) -> Theorem:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise ValueError(f"unknown theorem id {theorem_id!r}") from None


def _fmt(x) -> str:
    return f"{x:.12g}" if isinstance(x, float) else str(x)


def _witness(t: Theorem, f: GraphFacts, k: int, bound: float,
             hyp: bool, concl: bool, exc: bool) -> str:
    n, d = f.n, f.delta
    parts = []
    if t.hypothesis_kind == "spanning":
        parts.append(("" if hyp else "not a ") + "spanning subgraph of " + _name_join_split(n, d, k))
    elif t.hypothesis_kind != "always":
        label, value = t.statistic(f)
        sense = "<=" if t.hypothesis_kind == "rho_c<=" else ">="
        ok = sense if hyp else {"<=": ">", ">=": "<"}[sense]
        parts.append(f"{label}={_fmt(value)} {ok} {_fmt(bound)}")
    kind = t.conclusion_kind
    if kind == "kappa>=k":
        parts.append(f"kappa={f.kappa} {'>=' if concl else '<'} k={k}")
    elif kind == "kappa=delta":
        parts.append(f"kappa={f.kappa} {'=' if concl else '<'} delta={d}")
    elif kind == "super":
        parts.append("super-kappa" if concl else "not super-kappa")
    elif kind == "m<bound":
        rel = "<" if concl else ("=" if f.m == bound else ">")
        parts.append(f"m={f.m} {rel} {_fmt(bound)}" + ("" if concl else " (equality)" if rel == "=" else ""))
    elif kind == "rho<bound":
        parts.append(f"rho={_fmt(f.rho)} {'<' if concl else '>='} {_fmt(bound)}")
    if t.exception is not None and exc:
        parts.append("exception matched: " + t.exception_name(n, d, k))
    if t.hypothesis_kind in ("rho>=", "rho_c<=") or kind == "rho<bound":
        _, value = t.statistic(f) if kind != "rho<bound" else ("rho", f.rho)
        if abs(value - bound) <= MARGINAL:
            parts.append("marginal")
    return "; ".join(parts)


def evaluate(t: Theorem, f: GraphFacts, k: int) -> TheoremVerdict:
    n, d = f.n, f.delta
    if not t.applies(n, d, k) or (t.triangle_free and not f.triangle_free):
        return TheoremVerdict(t.id, k, False, False, False, False, True,
                              "side conditions not met: " + t.side_text)
    bound = t.bound(n, d, k)
    hyp = bool(t.hypothesis(f, n, d, k, bound))
    concl = bool(t.conclusion(f, n, d, k, bound))
    exc = bool(t.exception(f.graph, n, d, k)) if t.exception is not None else False
    consistent = (not hyp) or concl or exc
    return TheoremVerdict(t.id, k, True, hyp, concl, exc, consistent,
                          _witness(t, f, k, bound, hyp, concl, exc))


def _facts_for(g: Graph | GraphFacts) -> GraphFacts:
    if isinstance(g, GraphFacts):
        return g
    if not is_connected(g):
        raise DisconnectedGraphError("theorem checks require a connected graph")
    return GraphFacts(g)


def check(theorem_id: str, g: Graph | GraphFacts, k: int | None = None) -> TheoremVerdict:
    """Check one theorem on one connected graph.

    `k` defaults to the minimum degree and is ignored by theorems that fix
    k = delta or have no k.
    """
    t = get_theorem(theorem_id)
    f = _facts_for(g)
    if not t.uses_k or k is None:
        k = f.delta
    elif k > f.delta:
        raise ValueError(f"k={k} exceeds the minimum degree {f.delta}")
    return evaluate(t, f, k)


def k_values(t: Theorem, delta: int, k_policy: str = "all") -> list[int]:
    if not t.uses_k:
        return [delta]
    if k_policy == "all":
        return list(range(2, delta + 1))
    if k_policy == "delta":
        return [delta] if delta >= 2 else []
    raise ValueError(f"unknown k policy {k_policy!r}")


def check_all(g: Graph | GraphFacts, k_range: list[int] | None = None,
              ids: tuple[str, ...] = THEOREM_IDS, k_policy: str = "all") -> list[TheoremVerdict]:
    """Verdicts for every id, in table order, and every k in range.

    With an explicit `k_range`, values above delta are skipped.
    """
    f = _facts_for(g)
    out = []
    for theorem_id in ids:
        t = get_theorem(theorem_id)
        if t.uses_k and k_range is not None:
            ks = [k for k in k_range if k <= f.delta]
        else:
            ks = k_values(t, f.delta, k_policy)
        out.extend(evaluate(t, f, k) for k in ks)
    return out
