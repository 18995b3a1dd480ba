"""Acceptance criteria, one recorded PASS/FAIL line each (see the terminal
summary at the end of a pytest run)."""

import math
from collections import Counter

import pytest

from specconn import graph6
from specconn.connectivity import (
    is_maximally_connected,
    is_super_kappa,
    minimum_cuts,
    vertex_connectivity,
)
from specconn.extremal import FamilyParams, build_join_split, build_super_exception
from specconn.graph import (
    complement,
    complete,
    complete_bipartite,
    delete_edge,
    disjoint_union,
    empty,
    join,
    min_degree,
)
from specconn.harness import SweepConfig, enumerate_connected, run_sweep, sharpness_scan
from specconn.isomorphism import are_isomorphic
from specconn.spectral import (
    QuotientCubic,
    SuperQuartic,
    cubic_largest_root,
    hong_bound,
    largest_real_root,
    quartic_largest_root,
    spectral_radius,
)

import oracles

FULL = dict(n_min=5, n_max=7, theorem_ids=tuple(
    "T2.1a T2.1b T2.2 T2.3 T2.5 T2.6 T3.1a T3.1b T3.2 T3.3 T3.4 T3.6 "
    "T4.1 T4.2 T4.3 T4.4 T5.1 T5.2 T5.3 T5.4".split()), k_policy="all")


@pytest.fixture(scope="module")
def sweep_one_worker():
    return run_sweep(SweepConfig(**FULL, worker_count=1))


def _is_complement_equality_case(code: str, verdict) -> bool:
    """kappa = k-1, rho(complement) equals sqrt(ab) exactly, and some
    minimum cut leaves the cliques K_a, K_b while the cut itself is not a
    clique."""
    g = graph6.decode(code)
    n, d, k = g.n, min(g.degrees()), verdict.k
    a, b = d - k + 2, n - d - 1
    if vertex_connectivity(g) != k - 1:
        return False
    if abs(oracles.rho_complement(g) - math.sqrt(a * b)) > 1e-12:
        return False
    for cert in minimum_cuts(g):
        sizes = sorted(len(p) for p in cert.parts)
        cliques = all(g.has_edge(x, y) for p in cert.parts for x in p for y in p if x < y)
        cut_clique = all(g.has_edge(x, y) for x in cert.cut for y in cert.cut if x < y)
        if sizes == sorted([a, b]) and cliques and not cut_clique:
            return True
    return False


def test_c1_exhaustive_soundness(sweep_one_worker, criterion):
    r = sweep_one_worker
    counts = Counter(v.id for _, v in r.inconsistencies)
    orders_ok = all(r.per_order[n] == oracles.connected_count(n) for n in (5, 6, 7))
    detail = (f"graphs={r.graphs_checked} verdicts={r.verdicts_checked} "
              f"inconsistencies={len(r.inconsistencies)} {dict(counts)} wall={r.wall_time:.0f}s")
    criterion("C1 exhaustive soundness n=5..7, zero inconsistencies", orders_ok and not r.inconsistencies, detail)
    assert orders_ok
    assert r.wall_time < 600
    assert r.inconsistencies == [], detail


def test_c1_inconsistencies_are_complement_equality_cases(sweep_one_worker, criterion):
    bad = [(c, v) for c, v in sweep_one_worker.inconsistencies
           if v.id not in ("T2.6", "T3.6") or not _is_complement_equality_case(c, v)]
    criterion("C1 residue: every inconsistency is a T2.6/T3.6 equality case outside the named family",
              not bad, f"unexplained={len(bad)}")
    assert not bad


def test_c2_triangle_free_soundness(criterion):
    r = run_sweep(SweepConfig(n_min=5, n_max=7, require_triangle_free=True,
                              theorem_ids=("T5.1", "T5.2", "T5.3", "T5.4")))
    mantel = True
    for n in (5, 6, 7):
        gs = list(enumerate_connected(n, triangle_free=True, dedup=True))
        top = max(g.m for g in gs)
        at_top = [g for g in gs if g.m == top]
        mantel &= top == n * n // 4 and len(at_top) == 1 and \
            are_isomorphic(at_top[0], complete_bipartite(n // 2, n - n // 2))
    ok = r.certified and mantel
    criterion("C2 triangle-free soundness and Mantel equality", ok,
              f"inconsistencies={len(r.inconsistencies)} mantel={mantel}")
    assert ok


def _params():
    return [(n, d, k) for n in range(5, 11) for d in range(2, n - 2) for k in range(2, d + 1)]


def test_c3a_join_split_size_and_kappa(criterion):
    bad = []
    for n, d, k in _params():
        g = build_join_split(FamilyParams(n, d, k))
        if g.m != n * (n - 1) // 2 - (d - k + 2) * (n - d - 1) or vertex_connectivity(g) != k - 1:
            bad.append((n, d, k))
    criterion("C3 join-split m and kappa = k-1", not bad, f"{len(_params())} triples, failures={bad}")
    assert not bad


def test_c3b_join_split_min_degree(criterion):
    bad = [(n, d, k) for n, d, k in _params()
           if min_degree(build_join_split(FamilyParams(n, d, k))).delta != d]
    criterion("C3 join-split delta(G) = delta", not bad,
              f"{len(bad)}/{len(_params())} triples have delta(G) = n-delta+k-3 < delta, e.g. {bad[:3]}")
    assert not bad


def test_c3c_super_exception_size_and_max_connectivity(criterion):
    bad = []
    for n in range(5, 11):
        for d in range(2, n - 2):
            g = build_super_exception(n, d)
            if g.m != math.comb(n - 2, 2) + 2 * d or not is_maximally_connected(g):
                bad.append((n, d))
    criterion("C3 super exception m and maximally connected", not bad, f"failures={bad}")
    assert not bad


def test_c3d_super_exception_not_super(criterion):
    bad = [(n, d) for n in range(5, 11) for d in range(2, n - 2)
           if is_super_kappa(build_super_exception(n, d))]
    criterion("C3 super exception not super-kappa", not bad,
              f"super at {bad} (all have delta = n-3, where K_(n-delta-2) = K_1)")
    assert not bad


def test_c4_cubic_cross_validation(criterion):
    worst = 0.0
    count = 0
    for n in range(3, 13):
        for kappa in range(1, n - 1):
            for a in range(1, n - kappa):
                b = n - kappa - a
                if b < a:
                    continue
                g = join(complete(kappa), disjoint_union(complete(a), complete(b)))
                root = cubic_largest_root(QuotientCubic(n, a, b, kappa))
                worst = max(worst, abs(root - spectral_radius(g, method="power").rho))
                count += 1
    bowtie = join(empty(1), disjoint_union(complete(2), complete(2)))
    bow = abs(spectral_radius(bowtie, method="power").rho - (1 + math.sqrt(17)) / 2)
    bow_root = abs(cubic_largest_root(QuotientCubic(5, 2, 2, 1)) - (1 + math.sqrt(17)) / 2)
    printed = (1, -2, 4 - 10 + 3, 2 * 1 * 2 - 5 + 1)
    root_printed = largest_real_root(printed, 0.0, 4.0, 1e-12)[0]
    rho = spectral_radius(bowtie, method="power").rho
    ok = worst <= 1e-8 and bow <= 1e-10 and bow_root <= 1e-10 and \
        abs(root_printed - 3) < 1e-10 and abs(root_printed - rho) > 0.4
    criterion("C4 cubic vs power iteration, bowtie, printed-constant discrepancy", ok,
              f"{count} quadruples max|diff|={worst:.2e} bowtie={bow:.1e} printed root={root_printed:.4f} rho={rho:.4f}")
    assert ok


def test_c5_quartic_localization(criterion):
    worst = 0.0
    bad = []
    triples = [(n, d, k) for n in range(6, 15) for d in range(3, n - 2) for k in range(3, d + 1)
               if 2 * n >= (d - k + 2) * (k * k - 2 * k + 7)]
    assert (10, 3, 3) in triples
    for n, d, k in triples:
        p = FamilyParams(n, d, k)
        h = build_join_split(p)
        first = p.cut + p.a
        he = delete_edge(h, first, first + 1)
        rho = spectral_radius(he, method="power").rho
        root = quartic_largest_root(SuperQuartic(n, d, k))
        worst = max(worst, abs(rho - root))
        top = n - d + k - 3
        if not (top - 1 < rho < top) or abs(rho - root) > 1e-7:
            bad.append((n, d, k))
    ok = not bad
    criterion("C5 quartic root = rho(H-e) inside (n-delta+k-4, n-delta+k-3)", ok,
              f"{len(triples)} triples max|diff|={worst:.2e} failures={bad}")
    assert ok


def test_c6_hong_bound(criterion):
    over = []
    wrong_equality = []
    count = 0
    for n in range(1, 8):
        for g in enumerate_connected(n, dedup=True):
            count += 1
            d = min(g.degrees())
            rho = spectral_radius(g).rho
            bound = hong_bound(n, g.m, d)
            if rho > bound + 1e-9:
                over.append(graph6.encode(g))
            equal = abs(rho - bound) <= 1e-6
            degs = set(g.degrees())
            shape = len(degs) == 1 or degs == {d, n - 1}
            if equal != shape:
                wrong_equality.append(graph6.encode(g))
    ok = not over and not wrong_equality
    criterion("C6 Hong bound and its equality cases", ok,
              f"{count} unlabeled graphs, violations={len(over)} equality mismatches={len(wrong_equality)}")
    assert ok


def test_c7_complement_equality(criterion):
    worst = 0.0
    for n in range(5, 13):
        for d in range(2, n - 2):
            for k in range(2, d + 1):
                g = complement(build_join_split(FamilyParams(n, d, k)))
                target = math.sqrt((d - k + 2) * (n - d - 1))
                worst = max(worst, abs(spectral_radius(g, method="power").rho - target),
                            abs(spectral_radius(g).rho - target))
    ok = worst <= 1e-8
    criterion("C7 rho(complement of join-split) = sqrt(ab)", ok, f"max|diff|={worst:.2e}")
    assert ok


def test_c8_sharpness(criterion):
    rows34 = sharpness_scan("T3.4", [3, 4, 5])
    hosts = []
    for d in (3, 4, 5):
        n = d * d - 2 * d + 6
        hosts.append(spectral_radius(build_join_split(FamilyParams(n, d, d))).rho - (n - 3))
    ok34 = all(h > 0 for h in hosts) and all(r.margin > 0 and not r.conclusion for r in rows34)
    rows54 = sharpness_scan("T5.4", [2, 3, 4])
    ok54 = all(r.margin == -1 and not r.conclusion for r in rows54)
    criterion("C8 sharpness T3.4 (delta 3..5) and T5.4 (delta 2..4)", ok34 and ok54,
              "T3.4 host excess " + ", ".join(f"{h:.4f}" for h in hosts)
              + "; H-e excess " + ", ".join(f"{r.margin:.4f}" for r in rows34)
              + "; T5.4 margins " + ", ".join(str(int(r.margin)) for r in rows54))
    assert ok34 and ok54


def test_c9_determinism(sweep_one_worker, criterion):
    other = run_sweep(SweepConfig(**FULL, worker_count=2))
    a, b = sweep_one_worker.to_json(), other.to_json()
    criterion("C9 byte-identical reports for 1 and 2 workers", a == b,
              f"{len(a)} bytes, wall {sweep_one_worker.wall_time:.0f}s vs {other.wall_time:.0f}s")
    assert a == b
