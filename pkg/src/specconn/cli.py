"""Command-line interface: construct, check, kappa, spectral, polyroot,
verify and sharpness.

Exit codes: 0 success, 1 an inconsistent verdict was found, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import graph6
from .connectivity import connectivity_report
from .errors import CapabilityError, ConvergenceError, GraphError
from .extremal import (
    FamilyParams,
    TfExtremalSpec,
    build_join_split,
    build_super_exception,
    build_tf_exception,
    build_tf_sharpness,
)
from .graph import complement
from .harness import SweepConfig, SweepRangeError, run_sweep, sharpness_scan, sharpness_tsv
from .spectral import (
    DEFAULT_TOL,
    QuotientCubic,
    SuperQuartic,
    cubic_root_bracketed,
    quartic_root_bracketed,
    spectral_radius,
)
from .theorems import THEOREM_IDS, check, check_all

FAMILIES = ("join-split", "super-exception", "tf-exception", "tf-sharpness")


class UsageError(Exception):
    pass


def _num(x: float) -> float:
    return float(f"{x:.12g}")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _default_tol() -> float:
    raw = os.environ.get("SPECCONN_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"SPECCONN_TOL is not a number: {raw!r}") from None
    if not tol > 0:
        raise UsageError("SPECCONN_TOL must be positive")
    return tol


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} needs {' '.join(missing)}")


def _graphs(args):
    """Graphs from --g6, or one per non-blank line of standard input."""
    if args.g6 is not None:
        lines = [args.g6]
    else:
        lines = [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
    if not lines:
        raise UsageError("no graph given (use --g6 or standard input)")
    return [graph6.decode(ln) for ln in lines]


def cmd_construct(args) -> int:
    fam = args.family
    if fam == "join-split":
        _need(args, "n", "delta", "k")
        g = build_join_split(FamilyParams(args.n, args.delta, args.k))
    elif fam == "super-exception":
        _need(args, "n", "delta")
        g = build_super_exception(args.n, args.delta)
    elif fam == "tf-exception":
        _need(args, "n", "delta", "k")
        g = build_tf_exception(TfExtremalSpec(args.n, args.delta, args.k))
    else:
        _need(args, "delta")
        g = build_tf_sharpness(args.delta)
    print(graph6.encode(g))
    return 0


def _parse_k(raw: str) -> int | None:
    if raw == "auto":
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"--k must be an integer or 'auto', got {raw!r}") from None


def cmd_check(args) -> int:
    if args.theorem != "all" and args.theorem not in THEOREM_IDS:
        raise UsageError(f"unknown theorem id {args.theorem!r}")
    k = _parse_k(args.k)
    graphs = _graphs(args)
    ok = True
    for g in graphs:
        if args.theorem == "all":
            verdicts = check_all(g, None if k is None else [k], k_policy="delta")
        else:
            verdicts = [check(args.theorem, g, k)]
        for v in verdicts:
            ok &= v.consistent
            _emit(v.to_dict())
    return 0 if ok else 1


def cmd_kappa(args) -> int:
    for g in _graphs(args):
        r = connectivity_report(g)
        _emit({"kappa": r.kappa, "min_cut_count": len(r.min_cuts),
               "maximally_connected": r.is_maximally_connected, "super_kappa": r.is_super_kappa})
    return 0


def cmd_spectral(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    for g in _graphs(args):
        est = spectral_radius(complement(g) if args.complement else g, tol, args.method)
        _emit({"rho": _num(est.rho), "method": est.method, "error_bound": _num(est.error_bound)})
    return 0


def cmd_polyroot(args) -> int:
    if args.poly == "quotient-cubic":
        missing = [f"--{f}" for f in ("n", "a", "b", "kappa") if getattr(args, f) is None]
        if missing:
            raise UsageError("quotient-cubic needs " + " ".join(missing))
        root, bracket = cubic_root_bracketed(QuotientCubic(args.n, args.a, args.b, args.kappa))
    else:
        missing = [f"--{f}" for f in ("n", "delta", "k") if getattr(args, f) is None]
        if missing:
            raise UsageError("super-quartic needs " + " ".join(missing))
        root, bracket = quartic_root_bracketed(SuperQuartic(args.n, args.delta, args.k))
    _emit({"root": _num(root), "bracket": [_num(bracket[0]), _num(bracket[1])]})
    return 0


def _theorem_list(raw: str) -> tuple[str, ...]:
    if raw == "all":
        return THEOREM_IDS
    ids = tuple(t.strip() for t in raw.split(",") if t.strip())
    unknown = [t for t in ids if t not in THEOREM_IDS]
    if unknown:
        raise UsageError(f"unknown theorem ids {unknown}")
    return ids


def cmd_verify(args) -> int:
    cfg = SweepConfig(
        n_min=args.n_min, n_max=args.n_max, require_triangle_free=args.triangle_free,
        theorem_ids=_theorem_list(args.theorems), k_policy=args.k_policy,
        worker_count=args.workers, dedup=args.dedup, allow_n8=args.allow_n8,
        tol=_default_tol(),
    )
    cfg.validate()

    def progress(done: int, total: int) -> None:
        print(f"batch {done}/{total}", file=sys.stderr)

    report = run_sweep(cfg, progress if args.progress else None)
    text = report.to_json()
    if args.out is None:
        sys.stdout.write(text)
    else:
        out = Path(args.out)
        out.write_text(text)
        out.with_suffix(".tsv").write_text(report.summary_tsv())
    if args.plot:
        from .plotting import plot_sweep_summary
        plot_sweep_summary(report, args.plot)
    print(f"graphs: {report.graphs_checked}  verdicts: {report.verdicts_checked}  "
          f"inconsistencies: {len(report.inconsistencies)}  "
          f"sharpness hits: {len(report.sharpness_hits)}  wall time: {report.wall_time:.1f}s",
          file=sys.stderr)
    return 0 if report.certified else 1


def _delta_range(raw: str) -> range:
    lo, sep, hi = raw.partition("..")
    try:
        if not sep:
            return range(int(raw), int(raw) + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise UsageError(f"--delta-range expects LO..HI, got {raw!r}") from None


def cmd_sharpness(args) -> int:
    rows = sharpness_scan(args.theorem, _delta_range(args.delta_range), _default_tol())
    sys.stdout.write(sharpness_tsv(rows))
    if args.plot:
        from .plotting import plot_sharpness
        plot_sharpness(rows, args.plot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="specconn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an extremal family member as graph6")
    c.add_argument("--family", choices=FAMILIES, required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--delta", type=int)
    c.add_argument("--k", type=int)
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", help="theorem verdicts as JSON lines")
    c.add_argument("--theorem", default="all", help="theorem id or 'all'")
    c.add_argument("--k", default="auto", help="integer or 'auto' (minimum degree)")
    c.add_argument("--g6", help="graph6 string; otherwise read standard input")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("kappa", help="vertex connectivity summary")
    c.add_argument("--g6")
    c.set_defaults(func=cmd_kappa)

    c = sub.add_parser("spectral", help="adjacency spectral radius")
    c.add_argument("--g6")
    c.add_argument("--complement", action="store_true")
    c.add_argument("--tol", type=float)
    c.add_argument("--method", choices=("auto", "power"), default="auto")
    c.set_defaults(func=cmd_spectral)

    c = sub.add_parser("polyroot", help="largest root of a quotient polynomial")
    c.add_argument("--poly", choices=("quotient-cubic", "super-quartic"), required=True)
    for flag in ("n", "a", "b", "kappa", "delta", "k"):
        c.add_argument(f"--{flag}", type=int)
    c.set_defaults(func=cmd_polyroot)

    c = sub.add_parser("verify", help="exhaustive theorem sweep")
    c.add_argument("--n-min", type=int, default=5)
    c.add_argument("--n-max", type=int, default=7)
    c.add_argument("--triangle-free", action="store_true")
    c.add_argument("--theorems", default="all", help="comma separated ids or 'all'")
    c.add_argument("--k-policy", choices=("all", "delta"), default="all")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--dedup", choices=("none", "isomorphism"), default="none")
    c.add_argument("--allow-n8", action="store_true", help="permit order 8 (slow)")
    c.add_argument("--progress", action="store_true")
    c.add_argument("--out", help="report JSON path; a .tsv summary is written next to it")
    c.add_argument("--plot", help="write a summary figure to this path")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("sharpness", help="boundary constructions as TSV")
    c.add_argument("--theorem", choices=("T3.4", "T5.4"), required=True)
    c.add_argument("--delta-range", required=True, help="LO..HI")
    c.add_argument("--plot", help="write a figure to this path")
    c.set_defaults(func=cmd_sharpness)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, SweepRangeError, CapabilityError, ConvergenceError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
