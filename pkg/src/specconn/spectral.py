"""Adjacency spectral radius and the quotient polynomials of the join families.

Spectral radii come from shifted power iteration (``A + I`` so bipartite
components do not oscillate).  Largest polynomial roots are isolated by
bisection on the predicate "x lies above every real root", which for a
real-rooted polynomial holds exactly when all coefficients of p(x + y) are
positive.  Quotient matrices of equitable partitions are similar to
symmetric matrices, so every polynomial handled here is real-rooted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConvergenceError
from .graph import Graph, bits, component_masks

DEFAULT_TOL = 1e-10
ROOT_TOL = 1e-12
MAX_ITER = 10**6
SHIFT = 1.0
POWER = "power-iteration"
BIPARTITE = "closed-form-bipartite"
POLYNOMIAL = "polynomial-root"


@dataclass(frozen=True)
class SpectralEstimate:
    rho: float
    method: str
    error_bound: float


def start_vector(size: int) -> np.ndarray:
    return 1.0 + 1e-3 * np.arange(size)


def _power_iteration(a: np.ndarray, tol: float) -> tuple[float, float]:
    x = start_vector(a.shape[0])
    x /= np.linalg.norm(x)
    prev = math.inf
    for _ in range(MAX_ITER):
        ax = a @ x
        r = float(x @ ax)
        res = float(np.linalg.norm(ax - r * x))
        if res <= tol and abs(r - prev) <= tol:
            return r, res
        prev = r
        y = ax + SHIFT * x
        x = y / np.linalg.norm(y)
    raise ConvergenceError(f"power iteration did not reach residual {tol} in {MAX_ITER} steps")


def _bipartition_sizes(adj: tuple[int, ...], comp: int) -> tuple[int, int] | None:
    """Side sizes if the component is complete bipartite, else None."""
    start = (comp & -comp).bit_length() - 1
    side = {start: 0}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in bits(adj[v] & comp):
            if u not in side:
                side[u] = 1 - side[v]
                stack.append(u)
            elif side[u] == side[v]:
                return None
    p = sum(1 for s in side.values() if s == 0)
    q = len(side) - p
    edges = sum((adj[v] & comp).bit_count() for v in side) // 2
    return (p, q) if edges == p * q else None


def adjacency_matrix(g: Graph, vertices: Sequence[int] | None = None) -> np.ndarray:
    vs = list(range(g.n)) if vertices is None else list(vertices)
    index = {v: i for i, v in enumerate(vs)}
    a = np.zeros((len(vs), len(vs)))
    for v in vs:
        for u in bits(g.adj[v]):
            if u in index:
                a[index[v], index[u]] = 1.0
    return a


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, method: str = "auto") -> SpectralEstimate:
    """Largest adjacency eigenvalue, taken as the max over connected components.

    ``method="auto"`` uses sqrt(pq) for complete bipartite components and
    power iteration otherwise; ``method="power"`` always iterates.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if method not in ("auto", "power"):
        raise ValueError(f"unknown method {method!r}")
    best = SpectralEstimate(0.0, POWER, 0.0)
    for comp in component_masks(g.adj, g.vertex_mask):
        if comp.bit_count() == 1:
            continue
        sides = _bipartition_sizes(g.adj, comp) if method == "auto" else None
        if sides is not None:
            est = SpectralEstimate(math.sqrt(sides[0] * sides[1]), BIPARTITE, 0.0)
        else:
            rho, res = _power_iteration(adjacency_matrix(g, list(bits(comp))), tol)
            est = SpectralEstimate(rho, POWER, res)
        if est.rho > best.rho:
            best = est
    return best


def spectral_radii(matrices: np.ndarray, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Batched power iteration over a stack of adjacency matrices (B, n, n).

    One iteration over the whole matrix rather than per component: the
    positive start vector meets every component's Perron vector, so the
    iteration still converges to the largest component radius.
    """
    count, n, _ = matrices.shape
    x = np.broadcast_to(start_vector(n), (count, n)).copy()
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    rho = np.zeros(count)
    resid = np.zeros(count)
    prev = np.full(count, np.inf)
    active = np.arange(count)
    for _ in range(MAX_ITER):
        if active.size == 0:
            return rho, resid
        xa = x[active]
        ax = np.einsum("bij,bj->bi", matrices[active], xa)
        r = np.einsum("bi,bi->b", xa, ax)
        res = np.linalg.norm(ax - r[:, None] * xa, axis=1)
        done = (res <= tol) & (np.abs(r - prev[active]) <= tol)
        rho[active] = r
        resid[active] = res
        prev[active] = r
        y = ax + SHIFT * xa
        x[active] = y / np.linalg.norm(y, axis=1, keepdims=True)
        active = active[~done]
    raise ConvergenceError(f"{active.size} batched power iterations did not converge")


def hong_bound(n: int, m: int, delta: int) -> float:
    """Upper bound (delta-1)/2 + sqrt(2m - delta*n + (delta+1)^2/4) on rho."""
    if m < 0 or not 0 <= delta <= n - 1:
        raise ValueError(f"inconsistent parameters n={n}, m={m}, delta={delta}")
    radicand = 2 * m - delta * n + (delta + 1) ** 2 / 4
    if radicand < 0:
        raise ValueError(f"negative radicand for n={n}, m={m}, delta={delta}")
    return (delta - 1) / 2 + math.sqrt(radicand)


# polynomials ----------------------------------------------------------------

def poly_eval(coeffs: Sequence[float], x: float) -> float:
    value = 0.0
    for c in coeffs:
        value = value * x + c
    return value


def taylor_shift(coeffs: Sequence[float], x: float) -> list[float]:
    """Coefficients (highest first) of y -> p(x + y)."""
    c = [float(v) for v in coeffs]
    d = len(c) - 1
    for i in range(d):
        for j in range(1, d + 1 - i):
            c[j] += x * c[j - 1]
    return c


def above_all_roots(coeffs: Sequence[float], x: float) -> bool:
    return all(c > 0 for c in taylor_shift(coeffs, x))


def largest_real_root(
    coeffs: Sequence[float], lo: float, hi: float, tol: float = ROOT_TOL, max_steps: int = 10_000
) -> tuple[float, tuple[float, float]]:
    """Largest root of a monic real-rooted polynomial, with the bracket used.

    The starting bracket is widened in unit steps until `hi` lies above all
    roots and `lo` does not.
    """
    if coeffs[0] != 1:
        raise ValueError("polynomial must be monic")
    steps = 0
    while not above_all_roots(coeffs, hi):
        hi += 1.0
        steps += 1
        if steps > max_steps:
            raise ValueError("could not bracket the largest root from above")
    while above_all_roots(coeffs, lo):
        lo -= 1.0
        steps += 1
        if steps > max_steps:
            raise ValueError("could not bracket the largest root from below")
    bracket = (lo, hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if above_all_roots(coeffs, mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi), bracket


@dataclass(frozen=True)
class QuotientCubic:
    """Characteristic cubic of K_kappa v (K_a u K_b) from its 3-cell partition.

    a and b are stored with a <= b; the polynomial depends only on ab.
    """

    n: int
    a: int
    b: int
    kappa: int

    def __post_init__(self):
        a, b = sorted((self.a, self.b))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if a < 1 or self.kappa < 1:
            raise ValueError(f"need a, b, kappa >= 1, got a={a}, b={b}, kappa={self.kappa}")
        if a + b + self.kappa != self.n:
            raise ValueError(f"a + b + kappa = {a + b + self.kappa} != n = {self.n}")

    @property
    def coefficients(self) -> tuple[int, int, int, int]:
        n, ab, kappa = self.n, self.a * self.b, self.kappa
        return (1, -(n - 3), ab - 2 * n + 3, ab * (kappa + 1) - n + 1)

    @property
    def edges(self) -> int:
        a, b, kappa = self.a, self.b, self.kappa
        return math.comb(kappa, 2) + math.comb(a, 2) + math.comb(b, 2) + kappa * (a + b)

    def __call__(self, x: float) -> float:
        return poly_eval(self.coefficients, x)


def cubic_root_bracketed(q: QuotientCubic, tol: float = ROOT_TOL) -> tuple[float, tuple[float, float]]:
    return largest_real_root(q.coefficients, 2 * q.edges / q.n, q.n - 1.0, tol)


def cubic_largest_root(q: QuotientCubic, tol: float = ROOT_TOL) -> float:
    return cubic_root_bracketed(q, tol)[0]


@dataclass(frozen=True)
class SuperQuartic:
    """Quartic whose largest root is rho of the join family minus one edge
    inside its large clique, for parameters (n, delta, k)."""

    n: int
    delta: int
    k: int

    @property
    def coefficients(self) -> tuple[int, int, int, int, int]:
        n, d, k = self.n, self.delta, self.k
        return (
            1,
            -(n - 5),
            (n - d - 1) * (d - k - 2) - 4 * d + 7,
            (d * k + 2 * d + 2) * (n - d + k - 3) - (k * k + 3) * (n - 1) + 6,
            2 * ((d - k + 1) * (k * (n - d - 2) - 1) + (k - 1) * (n - d - 3)),
        )

    @property
    def interval(self) -> tuple[int, int]:
        top = self.n - self.delta + self.k - 3
        return top - 1, top

    @property
    def in_regime(self) -> bool:
        n, d, k = self.n, self.delta, self.k
        return 3 <= k <= d <= n - 3 and 2 * n >= (d - k + 2) * (k * k - 2 * k + 7)

    def __call__(self, x: float) -> float:
        return poly_eval(self.coefficients, x)


def quartic_root_bracketed(q: SuperQuartic, tol: float = ROOT_TOL) -> tuple[float, tuple[float, float]]:
    if not q.in_regime:
        raise ValueError(f"(n={q.n}, delta={q.delta}, k={q.k}) outside 3 <= k <= delta <= n-3, "
                         "n >= (delta-k+2)(k^2-2k+7)/2")
    lo, hi = q.interval
    if not (q(lo) < 0 < q(hi)):
        raise ValueError(f"sign conditions fail on [{lo}, {hi}]: f(lo)={q(lo)}, f(hi)={q(hi)}")
    return largest_real_root(q.coefficients, float(lo), float(hi), tol)


def quartic_largest_root(q: SuperQuartic, tol: float = ROOT_TOL) -> float:
    return quartic_root_bracketed(q, tol)[0]


def threshold_g(x: float, delta: int, k: int) -> float:
    """The quadratic g with g(n) = f(n - delta + k - 3) for the quartic f."""
    a = delta - k + 2
    return 2 * x * x - a * (k * k - 2 * k + 7) * x + a * ((a - 1) * (k * k - 2 * k + 5) - 2 * (k - 3))
