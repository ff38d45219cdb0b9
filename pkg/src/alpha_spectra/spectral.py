"""Dense nonnegative-matrix tools: A, D+, A_alpha, Perron roots,
characteristic polynomials and quotient matrices.

Matrices are plain ``numpy`` float arrays indexed from 0. Anything that
names vertices or matrix indices from the outside (partitions, components)
uses labels ``1..n`` to match :class:`~alpha_spectra.mixed_graph.MixedGraph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse.csgraph import connected_components

from .errors import (
    AlphaOutOfRange,
    BadPartition,
    NegativeEntry,
    NonConvergence,
    NotATree,
    NotEquitable,
    SizeLimitExceeded,
    ValidationError,
)
from .mixed_graph import MixedGraph, components, is_mixed_tree

__all__ = [
    "CharPoly",
    "Partition",
    "adjacency_matrix",
    "out_degree_matrix",
    "a_alpha",
    "spectral_radius",
    "char_poly",
    "quotient_matrix",
    "equitable_quotient",
    "char_poly_components",
    "rho_alpha",
    "DEFAULT_TOL",
    "CHAR_POLY_CAP",
    "EVAL_POINTS",
]

DEFAULT_TOL = 1e-10
CHAR_POLY_CAP = 12
MAX_ITER = 10**6
EQUITABLE_ATOL = 1e-12
# sample points for evaluation-based polynomial identities
EVAL_POINTS = (1.1, 1.7, 2.3, 3.1, 4.9, 6.7, 8.5, 10.3)


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise AlphaOutOfRange(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def adjacency_matrix(G: MixedGraph) -> np.ndarray:
    return G.adjacency.astype(float)


def out_degree_matrix(G: MixedGraph) -> np.ndarray:
    return np.diag(G.adjacency.sum(axis=1).astype(float))


def a_alpha(G: MixedGraph, alpha: float) -> np.ndarray:
    """``alpha * D+ + (1 - alpha) * A``."""
    alpha = _check_alpha(alpha)
    return alpha * out_degree_matrix(G) + (1.0 - alpha) * adjacency_matrix(G)


def _square(M) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise ValidationError(f"expected a nonempty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValidationError("matrix has non-finite entries")
    return M


def _perron_irreducible(B: np.ndarray, tol: float, max_iter: int) -> float:
    # B + I is primitive; Collatz-Wielandt min/max ratios bracket its Perron root.
    S = B + np.eye(B.shape[0])
    x = np.ones(B.shape[0])
    for _ in range(max_iter):
        y = S @ x
        r = y / x
        lo, hi = r.min(), r.max()
        if hi - lo <= tol:
            return 0.5 * (lo + hi) - 1.0
        x = y / y.max()
    raise NonConvergence(f"power iteration did not converge in {max_iter} steps (bracket {hi - lo:.3g})")


def spectral_radius(M, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> float:
    """Perron root of a nonnegative square matrix.

    The nonzero pattern is split into strongly connected components; the
    Perron root is the largest over the irreducible diagonal blocks. Each
    block is handled by power iteration on ``block + I`` started from the
    all-ones vector, stopping once the Collatz-Wielandt bracket is narrower
    than ``tol``.
    """
    M = _square(M)
    if tol <= 0:
        raise ValidationError("tol must be positive")
    if np.any(M < 0):
        raise NegativeEntry("spectral_radius needs a nonnegative matrix")
    n_comp, labels = connected_components(M != 0, directed=True, connection="strong")
    rho = 0.0
    for c in range(n_comp):
        idx = np.flatnonzero(labels == c)
        if len(idx) == 1:
            val = M[idx[0], idx[0]]
        else:
            val = _perron_irreducible(M[np.ix_(idx, idx)], tol, max_iter)
        rho = max(rho, val)
    return float(max(rho, 0.0))


def rho_alpha(G: MixedGraph, alpha: float, tol: float = DEFAULT_TOL) -> float:
    return spectral_radius(a_alpha(G, alpha), tol)


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial, coefficients stored constant term first."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        c = tuple(float(x) for x in self.coeffs)
        if not c or c[-1] != 1.0:
            raise ValidationError("characteristic polynomial must be monic")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, lam):
        return np.polynomial.polynomial.polyval(lam, self.coeffs)

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        return CharPoly(tuple(np.polynomial.polynomial.polymul(self.coeffs, other.coeffs)))

    @classmethod
    def product(cls, polys: Iterable["CharPoly"]) -> "CharPoly":
        out = cls((1.0,))
        for p in polys:
            out = out * p
        return out


def char_poly(M, cap: int = CHAR_POLY_CAP) -> CharPoly:
    """``det(lambda I - M)`` by the Faddeev-LeVerrier recurrence."""
    M = _square(M)
    n = M.shape[0]
    if n > cap:
        raise SizeLimitExceeded(f"char_poly limited to order <= {cap}, got {n}")
    c = np.zeros(n + 1)
    c[n] = 1.0
    Mk = np.zeros_like(M)
    eye = np.eye(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + c[n - k + 1] * eye
        c[n - k] = -np.trace(M @ Mk) / k
    return CharPoly(tuple(c))


@dataclass(frozen=True)
class Partition:
    """Ordered partition of ``1..order`` into nonempty cells."""

    cells: tuple[tuple[int, ...], ...]

    def __init__(self, cells: Iterable[Iterable[int]]):
        object.__setattr__(self, "cells", tuple(tuple(sorted(int(v) for v in c)) for c in cells))

    def validate(self, order: int) -> None:
        seen = []
        for c in self.cells:
            if not c:
                raise BadPartition("empty cell")
            seen.extend(c)
        if sorted(seen) != list(range(1, order + 1)):
            raise BadPartition(f"cells do not partition 1..{order} exactly once")


def quotient_matrix(M, P: Partition | Sequence[Sequence[int]]) -> np.ndarray:
    """Cell-averaged matrix: entry (a, b) is the block sum divided by ``|cell a|``."""
    M = _square(M)
    if not isinstance(P, Partition):
        P = Partition(P)
    P.validate(M.shape[0])
    idx = [np.asarray(c) - 1 for c in P.cells]
    Q = np.empty((len(idx), len(idx)))
    for a, ia in enumerate(idx):
        for b, ib in enumerate(idx):
            Q[a, b] = M[np.ix_(ia, ib)].sum() / len(ia)
    return Q


def equitable_quotient(M, P: Partition | Sequence[Sequence[int]], atol: float = EQUITABLE_ATOL) -> np.ndarray:
    """Quotient matrix after checking every row has constant block sums.

    Raises :class:`NotEquitable` with witness ``(i, b)`` (vertex label,
    0-based cell index) for the first row whose sum into cell ``b``
    differs from the quotient entry.
    """
    M = _square(M)
    if not isinstance(P, Partition):
        P = Partition(P)
    Q = quotient_matrix(M, P)
    idx = [np.asarray(c) - 1 for c in P.cells]
    for a, ia in enumerate(idx):
        for b, ib in enumerate(idx):
            sums = M[np.ix_(ia, ib)].sum(axis=1)
            bad = np.flatnonzero(np.abs(sums - Q[a, b]) > atol)
            if bad.size:
                i = int(ia[bad[0]]) + 1
                raise NotEquitable(f"row {i} sums to {sums[bad[0]]} over cell {b}, expected {Q[a, b]}", (i, b))
    return Q


def char_poly_components(T: MixedGraph, alpha: float) -> list[CharPoly]:
    """Characteristic polynomials of the principal submatrices of
    ``A_alpha(T)`` on each undirected component of a mixed tree.

    Note these are restrictions of the whole tree's matrix, so out-degrees
    still count the arcs leaving the component.
    """
    if not is_mixed_tree(T):
        raise NotATree("char_poly_components needs a mixed tree")
    M = a_alpha(T, alpha)
    out = []
    for cell in components(T):
        idx = np.asarray(cell) - 1
        out.append(char_poly(M[np.ix_(idx, idx)]))
    return out
