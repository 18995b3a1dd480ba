"""Exhaustive sweeps of the theorem checkers over small connected graphs.

Graphs are labeled edge subsets of K_n: bit e of a mask is the e-th pair of
`pair_order(n)`, the same order graph6 uses.  A batch of masks is turned into
numpy arrays of invariants (m, delta, kappa, super-kappa, rho, rho of the
complement, triangle-freeness) and every theorem is evaluated on whole groups
of graphs sharing delta and k.  Only rows whose hypothesis holds while the
conclusion fails are re-checked one at a time with `theorems.check`, which
decides the exception leg; every other verdict is consistent regardless of
the exception, so the report matches a graph-by-graph evaluation.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from types import SimpleNamespace
from typing import Callable, Iterator

import numpy as np

from . import graph6
from .connectivity import is_super_kappa, vertex_connectivity
from .extremal import FamilyParams, build_join_split, build_tf_sharpness
from .graph import Graph, delete_edge, pair_order
from .spectral import DEFAULT_TOL, spectral_radii, spectral_radius
from .theorems import (
    THEOREM_IDS,
    THEOREMS,
    TRIANGLE_FREE_IDS,
    GraphFacts,
    TheoremVerdict,
    evaluate,
    k_values,
)

MAX_SWEEP_ORDER = 7
OVERRIDE_ORDER = 8
BATCH_SIZE = 1 << 16
DEDUP_MAX_ORDER = 7


class SweepRangeError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 5
    n_max: int = 7
    require_triangle_free: bool = False
    theorem_ids: tuple[str, ...] = THEOREM_IDS
    k_policy: str = "all"
    worker_count: int = 1
    dedup: str = "none"
    allow_n8: bool = False
    tol: float = DEFAULT_TOL

    def validate(self) -> None:
        if self.n_min < 1 or self.n_max < self.n_min:
            raise SweepRangeError(f"bad order range {self.n_min}..{self.n_max}")
        limit = OVERRIDE_ORDER if self.allow_n8 else MAX_SWEEP_ORDER
        if self.n_max > limit:
            hint = "" if self.n_max > OVERRIDE_ORDER else " (order 8 needs the override)"
            raise SweepRangeError(f"n_max={self.n_max} exceeds {limit}{hint}")
        unknown = [t for t in self.theorem_ids if t not in THEOREMS]
        if unknown:
            raise SweepRangeError(f"unknown theorem ids {unknown}")
        if self.k_policy not in ("all", "delta"):
            raise SweepRangeError(f"unknown k policy {self.k_policy!r}")
        if self.dedup not in ("none", "isomorphism"):
            raise SweepRangeError(f"unknown dedup mode {self.dedup!r}")
        if self.dedup == "isomorphism" and self.n_max > DEDUP_MAX_ORDER:
            raise SweepRangeError("isomorphism dedup is limited to n <= 7")
        if self.worker_count < 1:
            raise SweepRangeError("worker_count must be positive")


@dataclass(frozen=True, order=True)
class SharpnessHit:
    graph6: str
    theorem: str
    k: int
    margin: float

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "theorem": self.theorem, "k": self.k,
                "margin": _round(self.margin)}


@dataclass
class SweepReport:
    graphs_checked: int = 0
    verdicts_checked: int = 0
    inconsistencies: list[tuple[str, TheoremVerdict]] = field(default_factory=list)
    sharpness_hits: list[SharpnessHit] = field(default_factory=list)
    per_theorem: dict[str, dict[str, int]] = field(default_factory=dict)
    per_order: dict[int, int] = field(default_factory=dict)
    wall_time: float = 0.0
    config: SweepConfig | None = None

    @property
    def certified(self) -> bool:
        return not self.inconsistencies

    def merge(self, other: SweepReport) -> None:
        self.graphs_checked += other.graphs_checked
        self.verdicts_checked += other.verdicts_checked
        self.inconsistencies.extend(other.inconsistencies)
        self.sharpness_hits.extend(other.sharpness_hits)
        for tid, counts in other.per_theorem.items():
            mine = self.per_theorem.setdefault(tid, _zero_counts())
            for key, value in counts.items():
                mine[key] += value
        for n, count in other.per_order.items():
            self.per_order[n] = self.per_order.get(n, 0) + count

    def finalize(self) -> None:
        order = {tid: i for i, tid in enumerate(THEOREM_IDS)}
        self.inconsistencies.sort(key=lambda item: (order[item[1].id], item[1].k, item[0]))
        self.sharpness_hits.sort(key=lambda h: (order[h.theorem], h.k, h.graph6))
        self.per_theorem = {tid: self.per_theorem[tid]
                            for tid in sorted(self.per_theorem, key=order.__getitem__)}
        self.per_order = dict(sorted(self.per_order.items()))

    def to_dict(self) -> dict:
        """JSON-ready form.  wall_time is left out so that reports from
        different runs and worker counts compare byte for byte."""
        cfg = self.config
        return {
            "config": None if cfg is None else {
                "n_min": cfg.n_min, "n_max": cfg.n_max,
                "triangle_free": cfg.require_triangle_free,
                "theorems": list(cfg.theorem_ids), "k_policy": cfg.k_policy,
                "dedup": cfg.dedup,
            },
            "graphs_checked": self.graphs_checked,
            "verdicts_checked": self.verdicts_checked,
            "per_order": {str(n): c for n, c in self.per_order.items()},
            "per_theorem": self.per_theorem,
            "inconsistencies": [{"graph6": g6, "verdict": v.to_dict()} for g6, v in self.inconsistencies],
            "sharpness_hits": [h.to_dict() for h in self.sharpness_hits],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1) + "\n"

    def summary_tsv(self) -> str:
        cols = ("theorem", "applicable", "hypothesis", "exception_hits", "inconsistencies")
        lines = ["\t".join(cols)]
        for tid, c in self.per_theorem.items():
            lines.append("\t".join([tid] + [str(c[key]) for key in cols[1:]]))
        return "\n".join(lines) + "\n"


def _zero_counts() -> dict[str, int]:
    return {"applicable": 0, "hypothesis": 0, "exception_hits": 0, "inconsistencies": 0}


def _round(x: float) -> float:
    return float(f"{x:.12g}")


# vectorized invariants ----------------------------------------------------------

def _pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = pair_order(n)
    return (np.array([p[0] for p in pairs], dtype=np.int64),
            np.array([p[1] for p in pairs], dtype=np.int64))


def adjacency_rows(n: int, masks: np.ndarray) -> np.ndarray:
    """Neighbour bitsets, shape (B, n), from edge masks."""
    rows = np.zeros((masks.size, n), dtype=np.int64)
    for e, (i, j) in enumerate(pair_order(n)):
        bit = (masks >> e) & 1
        rows[:, i] |= bit << j
        rows[:, j] |= bit << i
    return rows


def _reach(rows: np.ndarray, allowed: int, start: int) -> np.ndarray:
    """Bitset of vertices reachable from `start` inside `allowed`."""
    n = rows.shape[1]
    reach = np.full(rows.shape[0], 1 << start, dtype=np.int64)
    members = [v for v in range(n) if allowed >> v & 1]
    for _ in range(len(members) - 1):
        grown = reach.copy()
        for v in members:
            grown |= np.where((reach >> v) & 1 == 1, rows[:, v], 0)
        grown &= allowed
        if np.array_equal(grown, reach):
            break
        reach = grown
    return reach


def connected_rows(rows: np.ndarray) -> np.ndarray:
    n = rows.shape[1]
    full = (1 << n) - 1
    return _reach(rows, full, 0) == full


def triangle_free_rows(n: int, masks: np.ndarray, rows: np.ndarray) -> np.ndarray:
    ok = np.ones(masks.size, dtype=bool)
    for e, (i, j) in enumerate(pair_order(n)):
        edge = ((masks >> e) & 1) == 1
        ok &= ~(edge & ((rows[:, i] & rows[:, j]) != 0))
    return ok


def kappa_rows(rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(kappa, super-kappa) for connected graphs by enumerating separators
    in increasing size; complete graphs keep kappa = n-1 and count as super."""
    count, n = rows.shape
    full = (1 << n) - 1
    kappa = np.full(count, n - 1, dtype=np.int64)
    super_ = np.ones(count, dtype=bool)
    pending = np.arange(count)
    for size in range(1, n - 1):
        if pending.size == 0:
            break
        sub = rows[pending]
        separated = np.zeros(pending.size, dtype=bool)
        all_isolate = np.ones(pending.size, dtype=bool)
        for cut in itertools.combinations(range(n), size):
            cut_mask = sum(1 << v for v in cut)
            allowed = full & ~cut_mask
            start = (allowed & -allowed).bit_length() - 1
            split = _reach(sub, allowed, start) != allowed
            isolated = np.zeros(pending.size, dtype=bool)
            for v in range(n):
                if allowed >> v & 1:
                    isolated |= (sub[:, v] & allowed) == 0
            separated |= split
            all_isolate &= ~split | isolated
        kappa[pending[separated]] = size
        super_[pending[separated]] = all_isolate[separated]
        pending = pending[~separated]
    return kappa, super_


def popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).astype(np.int64)


def adjacency_stack(rows: np.ndarray, complement: bool = False) -> np.ndarray:
    n = rows.shape[1]
    shifts = np.arange(n, dtype=np.int64)
    a = ((rows[:, :, None] >> shifts[None, None, :]) & 1).astype(np.float64)
    if complement:
        a = 1.0 - a
        a[:, shifts, shifts] = 0.0
    return a


def batch_facts(n: int, masks: np.ndarray, need: set[str], tol: float = DEFAULT_TOL) -> SimpleNamespace:
    """Invariants of connected graphs given by `masks` (already filtered)."""
    rows = adjacency_rows(n, masks)
    deg = popcount(rows)
    f = SimpleNamespace(n=n, masks=masks, m=popcount(masks), delta=deg.min(axis=1),
                        triangle_free=triangle_free_rows(n, masks, rows))
    if need & {"kappa", "super_kappa"}:
        f.kappa, f.super_kappa = kappa_rows(rows)
    if "rho" in need:
        f.rho = spectral_radii(adjacency_stack(rows), tol)[0]
    if "rho_complement" in need:
        f.rho_complement = spectral_radii(adjacency_stack(rows, complement=True), tol)[0]
    return f


def _subset(f: SimpleNamespace, idx: np.ndarray) -> SimpleNamespace:
    out = SimpleNamespace(n=f.n)
    for key, value in vars(f).items():
        if isinstance(value, np.ndarray):
            setattr(out, key, value[idx])
    return out


# enumeration --------------------------------------------------------------------

def _check_order(n: int, allow_n8: bool) -> None:
    if n < 1:
        raise SweepRangeError("order must be positive")
    if n > OVERRIDE_ORDER or (n == OVERRIDE_ORDER and not allow_n8):
        raise SweepRangeError(f"enumeration of order {n} refused")


def _reverse_bits(x: np.ndarray, width: int) -> np.ndarray:
    out = np.zeros_like(x)
    for e in range(width):
        out |= ((x >> e) & 1) << (width - 1 - e)
    return out


def canonical_masks(n: int) -> np.ndarray:
    """One mask per isomorphism class: the member with the smallest graph6
    string.  graph6 writes pair 0 as its most significant bit, so string
    order is the order of bit-reversed masks."""
    if n > DEDUP_MAX_ORDER:
        raise SweepRangeError("isomorphism dedup is limited to n <= 7")
    width = n * (n - 1) // 2
    if width == 0:
        return np.zeros(1, dtype=np.int64)
    pairs = pair_order(n)
    index = {p: e for e, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    image = np.array([[index[tuple(sorted((p[i], p[j])))] for i, j in pairs] for p in perms],
                     dtype=np.int64)
    visited = np.zeros(1 << width, dtype=bool)
    reps = []
    pos = 0
    chunk = 4096
    while pos < visited.size:
        free = np.flatnonzero(~visited[pos:pos + chunk])
        if free.size == 0:
            pos += chunk
            continue
        key = pos + int(free[0])
        mask = int(_reverse_bits(np.array([key], dtype=np.int64), width)[0])
        reps.append(mask)
        es = [e for e in range(width) if mask >> e & 1]
        if es:
            images = np.bitwise_or.reduce(np.left_shift(1, image[:, es]), axis=1)
        else:
            images = np.zeros(1, dtype=np.int64)
        visited[_reverse_bits(images, width)] = True
        pos = key
    return np.array(reps, dtype=np.int64)


def _mask_batches(n: int, dedup: bool) -> list[tuple[int, np.ndarray | tuple[int, int]]]:
    total = 1 << (n * (n - 1) // 2)
    if dedup:
        reps = canonical_masks(n)
        return [(n, reps[i:i + BATCH_SIZE]) for i in range(0, reps.size, BATCH_SIZE)]
    return [(n, (lo, min(lo + BATCH_SIZE, total))) for lo in range(0, total, BATCH_SIZE)]


def _batch_masks(spec: np.ndarray | tuple[int, int]) -> np.ndarray:
    if isinstance(spec, tuple):
        return np.arange(spec[0], spec[1], dtype=np.int64)
    return spec


def _filter(n: int, masks: np.ndarray, triangle_free: bool) -> np.ndarray:
    rows = adjacency_rows(n, masks)
    keep = connected_rows(rows)
    if triangle_free:
        keep &= triangle_free_rows(n, masks, rows)
    return masks[keep]


def enumerate_connected(n: int, triangle_free: bool = False, dedup: bool = False,
                        allow_n8: bool = False) -> Iterator[Graph]:
    """Connected graphs on n labeled vertices, in increasing mask order; with
    `dedup` one graph per isomorphism class."""
    _check_order(n, allow_n8)
    for _, spec in _mask_batches(n, dedup):
        for mask in _filter(n, _batch_masks(spec), triangle_free).tolist():
            yield Graph.from_edge_mask(n, mask)


# sweep ----------------------------------------------------------------------------

def _sweep_batch(task: tuple[SweepConfig, int, np.ndarray | tuple[int, int]]) -> SweepReport:
    cfg, n, spec = task
    report = SweepReport()
    masks = _filter(n, _batch_masks(spec), cfg.require_triangle_free)
    report.graphs_checked = int(masks.size)
    report.per_order[n] = int(masks.size)
    theorems = [THEOREMS[t] for t in cfg.theorem_ids]
    for t in theorems:
        report.per_theorem[t.id] = _zero_counts()
    if masks.size == 0 or not theorems:
        return report
    need = set().union(*(t.needs for t in theorems))
    f = batch_facts(n, masks, need, cfg.tol)
    scalar_facts: dict[int, GraphFacts] = {}

    def facts_of(row: int) -> GraphFacts:
        if row not in scalar_facts:
            scalar_facts[row] = GraphFacts(Graph.from_edge_mask(n, int(masks[row])))
        return scalar_facts[row]

    for delta in np.unique(f.delta).tolist():
        in_group = np.flatnonzero(f.delta == delta)
        g = _subset(f, in_group)
        for t in theorems:
            counts = report.per_theorem[t.id]
            for k in k_values(t, delta, cfg.k_policy):
                if not t.applies(n, delta, k):
                    continue
                app = g.triangle_free if t.triangle_free else np.ones(in_group.size, dtype=bool)
                counts["applicable"] += int(app.sum())
                report.verdicts_checked += int(app.sum())
                if t.structural:
                    rows = in_group[app]
                    hyp_rows = []
                    for row in rows.tolist():
                        v = evaluate(t, facts_of(row), k)
                        if v.hypothesis:
                            hyp_rows.append(row)
                            _record(report, t, facts_of(row), v, counts)
                    counts["hypothesis"] += len(hyp_rows)
                    continue
                bound = t.bound(n, delta, k)
                hyp = app & t.hypothesis(g, n, delta, k, bound)
                concl = t.conclusion(g, n, delta, k, bound)
                counts["hypothesis"] += int(hyp.sum())
                for row in in_group[hyp & ~concl].tolist():
                    _record(report, t, facts_of(row), evaluate(t, facts_of(row), k), counts)
    return report


def _record(report: SweepReport, t, facts: GraphFacts, v: TheoremVerdict, counts: dict) -> None:
    """Book-keeping for a verdict whose hypothesis held."""
    if not v.applicable or not v.hypothesis or v.conclusion:
        return
    code = graph6.encode(facts.graph)
    if not v.consistent:
        counts["inconsistencies"] += 1
        report.inconsistencies.append((code, v))
    elif v.exception:
        counts["exception_hits"] += 1
        margin = t.margin(facts, t.bound(facts.n, facts.delta, v.k))
        report.sharpness_hits.append(SharpnessHit(code, t.id, v.k, float(margin)))


def run_sweep(cfg: SweepConfig, progress: Callable[[int, int], None] | None = None) -> SweepReport:
    """Evaluate the configured theorems on every connected graph in range.

    The result does not depend on `worker_count`: batches are fixed by mask
    range, merged by summation and sorted.  wall_time is measured but kept
    out of the serialized report.
    """
    import time

    cfg.validate()
    start = time.perf_counter()
    tasks = [(cfg, n, spec) for n in range(cfg.n_min, cfg.n_max + 1)
             for _, spec in _mask_batches(n, cfg.dedup == "isomorphism")]
    report = SweepReport(config=cfg)
    for tid in cfg.theorem_ids:
        report.per_theorem[tid] = _zero_counts()
    if cfg.worker_count == 1:
        results: Iterator[SweepReport] = map(_sweep_batch, tasks)
        for done, part in enumerate(results, 1):
            report.merge(part)
            if progress:
                progress(done, len(tasks))
    else:
        with ProcessPoolExecutor(max_workers=cfg.worker_count) as pool:
            for done, part in enumerate(pool.map(_sweep_batch, tasks), 1):
                report.merge(part)
                if progress:
                    progress(done, len(tasks))
    report.finalize()
    report.wall_time = time.perf_counter() - start
    return report


# sharpness ------------------------------------------------------------------------

SHARPNESS_COLUMNS = ("id", "n", "delta", "k", "bound", "observed", "margin", "conclusion")


@dataclass(frozen=True)
class SharpnessRow:
    id: str
    n: int
    delta: int
    k: int
    bound: float
    observed: float
    margin: float
    conclusion: bool
    graph6: str

    def tsv(self) -> str:
        vals = (self.id, self.n, self.delta, self.k, self.bound, self.observed, self.margin,
                str(self.conclusion).lower())
        return "\t".join(f"{v:.12g}" if isinstance(v, float) else str(v) for v in vals)


def t34_boundary_graph(delta: int) -> Graph:
    """H - e at n = delta^2 - 2*delta + 6, where H = K_{delta-1} v (K_2 u K_{n-delta-1})
    and e joins two vertices of the large clique."""
    n = delta * delta - 2 * delta + 6
    h = build_join_split(FamilyParams(n, delta, delta))
    first = delta - 1 + 2
    return delete_edge(h, first, first + 1)


def sharpness_scan(theorem_id: str, deltas: range | list[int], tol: float = DEFAULT_TOL) -> list[SharpnessRow]:
    """Boundary constructions showing a theorem's condition cannot be relaxed.

    T3.4: at n = delta^2 - 2*delta + 6 the graph H - e (H the join-split host
    with k = delta) has rho > n - 3 yet kappa = delta - 1.
    T5.4: the triangle-free sharpness graph has m one below the bound and is
    not super-kappa.
    """
    out = []
    for delta in deltas:
        if theorem_id == "T3.4":
            if delta < 3:
                raise ValueError("the T3.4 boundary needs delta >= 3")
            g = t34_boundary_graph(delta)
            n = g.n
            bound = float(n - 3)
            observed = spectral_radius(g, tol).rho
            conclusion = vertex_connectivity(g) == delta
        elif theorem_id == "T5.4":
            g = build_tf_sharpness(delta)
            n = g.n
            bound = float(THEOREMS["T5.4"].bound(n, delta, delta))
            observed = float(g.m)
            conclusion = is_super_kappa(g)
        else:
            raise ValueError(f"no sharpness construction for {theorem_id!r}")
        out.append(SharpnessRow(theorem_id, n, delta, delta, bound, observed,
                                observed - bound, conclusion, graph6.encode(g)))
    return out


def sharpness_tsv(rows: list[SharpnessRow]) -> str:
    return "\n".join(["\t".join(SHARPNESS_COLUMNS)] + [r.tsv() for r in rows]) + "\n"
