"""Sharp bounds on the A_alpha spectral radius of mixed trees, and an
exhaustive checker that sweeps every tree class against them."""

from __future__ import annotations

import io
import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from .errors import HasUndirectedEdge, NotATree, ParameterOutOfRange
from .enumeration import enumerate_mixed_trees
from .mixed_graph import MixedGraph, is_mixed_tree, path_graph
from .spectral import _check_alpha, a_alpha, spectral_radius

__all__ = [
    "BoundsRow",
    "BoundsReport",
    "upper_bound",
    "lower_bound",
    "lower_bound_k",
    "star_quadratic_root",
    "arc_tree_radius",
    "verify_bounds",
    "CSV_HEADER",
]

CSV_HEADER = "n,m,alpha,canonical_key,rho,lower,upper,lower_slack,upper_slack"


def _check_nm(n: int, m: int) -> None:
    if n < 1 or not n - 1 <= m <= 2 * n - 2:
        raise ParameterOutOfRange(f"need n >= 1 and n-1 <= m <= 2n-2, got n={n}, m={m}")


def upper_bound(n: int, m: int, alpha: float) -> float:
    """Largest root of ``x^2 - alpha*n*x + alpha^2 (n-1) - (1-alpha)^2 (m-n+1)``."""
    _check_nm(n, m)
    a = _check_alpha(alpha)
    disc = a * a * n * n - 4 * a * a * (n - 1) + 4 * (1 - a) ** 2 * (m - n + 1)
    return 0.5 * (a * n + math.sqrt(max(disc, 0.0)))


def lower_bound_k(n: int, m: int) -> int:
    """Order of the path giving the lower bound: ``ceil(n / (2n - m - 1))``."""
    _check_nm(n, m)
    return -(-n // (2 * n - m - 1))


@lru_cache(maxsize=None)
def _path_radius(k: int, alpha: float) -> float:
    if k == 1:
        return 0.0
    return spectral_radius(a_alpha(path_graph(k), alpha))


def lower_bound(n: int, m: int, alpha: float) -> float:
    """``rho_alpha`` of the all-undirected path on ``lower_bound_k(n, m)`` vertices."""
    k = lower_bound_k(n, m)
    return _path_radius(k, _check_alpha(alpha))


def star_quadratic_root(n: int, m: int, extra_out: int, alpha: float) -> float:
    """Larger root of ``(x - alpha)(x - alpha*d) - (1-alpha)^2 (m-n+1)`` where
    ``d = m - n + extra_out + 1`` is the centre's out-degree."""
    if n < 2:
        raise ParameterOutOfRange("star needs n >= 2")
    _check_nm(n, m)
    if not 0 <= extra_out <= 2 * n - m - 2:
        raise ParameterOutOfRange(f"extra_out must lie in [0, {2 * n - m - 2}], got {extra_out}")
    a = _check_alpha(alpha)
    d = m - n + extra_out + 1
    # x^2 - a(1 + d) x + a^2 d - (1-a)^2 (m-n+1)
    b = a * (1 + d)
    c = a * a * d - (1 - a) ** 2 * (m - n + 1)
    return 0.5 * (b + math.sqrt(max(b * b - 4 * c, 0.0)))


def arc_tree_radius(T: MixedGraph, alpha: float) -> float:
    """``alpha * max out-degree`` for a mixed tree without undirected edges."""
    if not is_mixed_tree(T):
        raise NotATree("arc_tree_radius needs a mixed tree")
    if T.undirected:
        raise HasUndirectedEdge("arc_tree_radius needs an arc-only tree")
    a = _check_alpha(alpha)
    return a * int(T.adjacency.sum(axis=1).max())


@dataclass(frozen=True)
class BoundsRow:
    n: int
    m: int
    alpha: float
    canonical_key: str
    rho: float
    lower: float
    upper: float

    @property
    def lower_slack(self) -> float:
        return self.rho - self.lower

    @property
    def upper_slack(self) -> float:
        return self.upper - self.rho


@dataclass
class BoundsReport:
    """Rows for every (class, alpha) plus per-(n, m, alpha) minima.

    ``summary[(n, m, alpha)]`` holds ``min_lower_slack``,
    ``min_upper_slack``, ``lower_attained`` and ``upper_attained`` (keys of
    classes whose slack is within ``tol`` of zero).
    """

    rows: list[BoundsRow]
    tol: float
    summary: dict = field(default_factory=dict)

    def __post_init__(self):
        groups = defaultdict(list)
        for r in self.rows:
            groups[(r.n, r.m, r.alpha)].append(r)
        self.summary = {
            g: {
                "min_lower_slack": min(r.lower_slack for r in rs),
                "min_upper_slack": min(r.upper_slack for r in rs),
                "lower_attained": sorted(r.canonical_key for r in rs if abs(r.lower_slack) <= self.tol),
                "upper_attained": sorted(r.canonical_key for r in rs if abs(r.upper_slack) <= self.tol),
            }
            for g, rs in sorted(groups.items())
        }

    @property
    def violations(self) -> list[BoundsRow]:
        return [r for r in self.rows if r.lower_slack < -self.tol or r.upper_slack < -self.tol]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(CSV_HEADER + "\n")
        for r in self.rows:
            vals = [r.rho, r.lower, r.upper, r.lower_slack, r.upper_slack]
            buf.write(f"{r.n},{r.m},{r.alpha:.12g},{r.canonical_key}," + ",".join(f"{v:.12e}" for v in vals) + "\n")
        buf.write(f"# status,{'ok' if self.ok else 'VIOLATION'},violations={len(self.violations)},tol={self.tol:.3g}\n")
        for (n, m, a), s in self.summary.items():
            buf.write(
                f"# summary,n={n},m={m},alpha={a:.12g},"
                f"min_lower_slack={s['min_lower_slack']:.12e},min_upper_slack={s['min_upper_slack']:.12e},"
                f"lower_attained={'|'.join(s['lower_attained'])},upper_attained={'|'.join(s['upper_attained'])}\n"
            )
        if any(n == 1 for n, _, _ in self.summary):
            buf.write("# note,n=1 upper bound equals alpha while rho is 0 (valid but not tight)\n")
        return buf.getvalue()


def verify_bounds(
    n_range: Iterable[int],
    m_selector: Callable[[int], Iterable[int]] | Iterable[int] | None = None,
    alpha_grid: Iterable[float] = (0.0, 0.25, 0.5, 0.75, 1.0),
    tol: float = 1e-8,
) -> BoundsReport:
    """Compare exact ``rho_alpha`` of every tree class with both bounds.

    ``m_selector`` is ``None`` for every valid size, a callable ``n -> sizes``
    or a fixed iterable of sizes (invalid ones are skipped).
    """
    alphas = sorted({_check_alpha(a) for a in alpha_grid})
    rows = []
    for n in n_range:
        valid = range(n - 1, 2 * n - 1)
        if m_selector is None:
            sizes = list(valid)
        elif callable(m_selector):
            sizes = [m for m in m_selector(n) if m in valid]
        else:
            sizes = [m for m in m_selector if m in valid]
        for m in sizes:
            classes = enumerate_mixed_trees(n, m)
            for alpha in alphas:
                lo, hi = lower_bound(n, m, alpha), upper_bound(n, m, alpha)
                for cf in classes:
                    rho = spectral_radius(a_alpha(cf.graph, alpha))
                    rows.append(BoundsRow(n, m, alpha, cf.key, rho, lo, hi))
    rows.sort(key=lambda r: (r.n, r.m, r.canonical_key, r.alpha))
    return BoundsReport(rows, tol)
