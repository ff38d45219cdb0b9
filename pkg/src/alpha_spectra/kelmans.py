"""Kelmans transformations of nonnegative matrices and of mixed graphs.

The transformation "from b to a" moves weight out of row/column ``b`` into
row/column ``a``. For a mixed graph the receiving vertex ``a`` ends up with
the union of both neighbourhoods and ``b`` with their intersection; the
relation between ``a`` and ``b`` themselves is untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import ArcBetweenAB, BoundViolation, LabelOutOfRange, NotATree, SymmetryViolation, ValidationError
from .mixed_graph import MixedGraph, from_adjacency, is_mixed_tree, out_neighbors, relabel
from .spectral import _check_alpha, _square, a_alpha

__all__ = [
    "KelmansParams",
    "TreeLegality",
    "PATTERNS",
    "matrix_kelmans",
    "random_admissible_params",
    "graph_kelmans_params",
    "graph_kelmans",
    "alpha_kelmans_params",
    "swap_isomorphism_check",
    "tree_kelmans_legal",
    "legal_pairs",
]

BOUND_ATOL = 1e-12


@dataclass(frozen=True)
class KelmansParams:
    """Shift data for a Kelmans transformation from ``b`` to ``a``.

    ``k`` moves diagonal weight from (b, b) to (a, a); ``t[i]`` moves
    weight from column b to column a in row ``i``; ``s[i]`` moves weight
    from row b to row a in column ``i``. Indices are 1-based.
    """

    a: int
    b: int
    k: float = 0.0
    t: Mapping[int, float] = field(default_factory=dict)
    s: Mapping[int, float] = field(default_factory=dict)

    def check(self, C: np.ndarray, atol: float = BOUND_ATOL) -> None:
        """Raise unless these parameters are admissible for ``C``."""
        n = C.shape[0]
        a, b = self.a, self.b
        if not (1 <= a <= n and 1 <= b <= n):
            raise LabelOutOfRange(f"indices a={a}, b={b} outside 1..{n}")
        if a == b:
            raise ValidationError("a and b must differ")
        ai, bi = a - 1, b - 1
        if abs(C[ai, bi] - C[bi, ai]) > atol:
            raise SymmetryViolation(f"c_ab = {C[ai, bi]} differs from c_ba = {C[bi, ai]}")
        others = [i for i in range(1, n + 1) if i not in (a, b)]
        extra = (set(self.t) | set(self.s)) - set(others)
        if extra:
            raise BoundViolation(f"shift given for excluded indices {sorted(extra)}", ("index", sorted(extra)))

        def within(name, value, lo, hi, witness):
            if value < lo - atol or value > hi + atol:
                raise BoundViolation(f"{name} = {value} outside [{lo}, {hi}]", witness)

        within("k", self.k, max(0.0, C[bi, bi] - C[ai, ai]), C[bi, bi], ("k",))
        for i in others:
            r = i - 1
            within(f"t[{i}]", self.t.get(i, 0.0), max(0.0, C[r, bi] - C[r, ai]), C[r, bi], ("t", i))
            within(f"s[{i}]", self.s.get(i, 0.0), max(0.0, C[bi, r] - C[ai, r]), C[bi, r], ("s", i))


def matrix_kelmans(C, p: KelmansParams, atol: float = BOUND_ATOL) -> np.ndarray:
    """Apply the Kelmans transformation of ``C`` from ``p.b`` to ``p.a``."""
    C = _square(C)
    if np.any(C < 0):
        raise ValidationError("matrix_kelmans needs a nonnegative matrix")
    p.check(C, atol)
    a, b = p.a - 1, p.b - 1
    out = C.copy()
    out[a, a] += p.k
    out[b, b] -= p.k
    for i, t in p.t.items():
        out[i - 1, a] += t
        out[i - 1, b] -= t
    for i, s in p.s.items():
        out[a, i - 1] += s
        out[b, i - 1] -= s
    # clamp rounding residue when a shift empties an entry exactly
    out[(out < 0) & (out > -atol)] = 0.0
    return out


def random_admissible_params(C, a: int, b: int, rng: np.random.Generator) -> KelmansParams:
    """Parameters drawn uniformly from each admissible interval."""
    C = _square(C)
    ai, bi = a - 1, b - 1
    n = C.shape[0]
    k = rng.uniform(max(0.0, C[bi, bi] - C[ai, ai]), C[bi, bi])
    t, s = {}, {}
    for i in range(1, n + 1):
        if i in (a, b):
            continue
        r = i - 1
        t[i] = rng.uniform(max(0.0, C[r, bi] - C[r, ai]), C[r, bi])
        s[i] = rng.uniform(max(0.0, C[bi, r] - C[ai, r]), C[bi, r])
    return KelmansParams(a, b, float(k), t, s)


def _check_pair(G: MixedGraph, a: int, b: int) -> None:
    for v in (a, b):
        if not 1 <= v <= G.n:
            raise LabelOutOfRange(f"vertex {v} outside 1..{G.n}")
    if a == b:
        raise ValidationError("a and b must be distinct")
    if G.relation(a, b) in ("out", "in"):
        raise ArcBetweenAB(f"vertices {a} and {b} are joined by an arc")


def graph_kelmans_params(G: MixedGraph, a: int, b: int) -> KelmansParams:
    _check_pair(G, a, b)
    C = G.adjacency
    t, s = {}, {}
    for i in range(1, G.n + 1):
        if i in (a, b):
            continue
        t[i] = float(max(0, C[i - 1, b - 1] - C[i - 1, a - 1]))
        s[i] = float(max(0, C[b - 1, i - 1] - C[a - 1, i - 1]))
    return KelmansParams(a, b, 0.0, t, s)


def graph_kelmans(G: MixedGraph, a: int, b: int) -> MixedGraph:
    """The mixed graph ``G`` transformed from ``b`` to ``a``."""
    C2 = matrix_kelmans(G.adjacency, graph_kelmans_params(G, a, b))
    return from_adjacency(np.rint(C2).astype(np.int64))


def alpha_kelmans_params(G: MixedGraph, a: int, b: int, alpha: float) -> KelmansParams:
    """Parameters under which the transformed ``A_alpha(G)`` equals
    ``A_alpha`` of the transformed graph.

    The diagonal shift counts out-neighbours of ``b`` that ``a`` lacks,
    not counting ``a`` itself.
    """
    alpha = _check_alpha(alpha)
    base = graph_kelmans_params(G, a, b)
    gained = out_neighbors(G, b) - out_neighbors(G, a) - {a}
    w = 1.0 - alpha
    return KelmansParams(
        a,
        b,
        alpha * len(gained),
        {i: w * v for i, v in base.t.items()},
        {i: w * v for i, v in base.s.items()},
    )


def swap_isomorphism_check(G: MixedGraph, a: int, b: int) -> bool:
    """Whether transposing ``a`` and ``b`` maps ``G`` transformed from b to a
    onto ``G`` transformed from a to b."""
    H1 = graph_kelmans(G, a, b)
    H2 = graph_kelmans(G, b, a)
    perm = {v: v for v in range(1, G.n + 1)}
    perm[a], perm[b] = b, a
    return relabel(H1, perm) == H2


PATTERNS = ("a-b", "a-x->b", "a-x<-b", "a<-x-b", "a->x-b", "a->x<-b", "a<-x->b", "none")


@dataclass(frozen=True)
class TreeLegality:
    legal: bool
    pattern: str
    x: int | None = None

    def __post_init__(self):
        if self.pattern not in PATTERNS:
            raise ValueError(f"unknown pattern {self.pattern!r}")
        if self.legal != (self.pattern != "none"):
            raise ValueError("pattern must be 'none' exactly when illegal")

    def __bool__(self):
        return self.legal


def tree_kelmans_legal(T: MixedGraph, a: int, b: int) -> TreeLegality:
    """Decide whether moving from ``b`` to ``a`` keeps ``T`` a mixed tree.

    Legal moves are: ``a``, ``b`` joined by an undirected edge, or ``a``,
    ``b`` at distance two through ``x`` with ``a - x`` undirected,
    ``x - b`` undirected, both arcs pointing into ``x``, or both arcs
    pointing out of ``x``. When both ``a - x`` and ``x - b`` are undirected
    the pattern is reported as ``a-x->b``.
    """
    if not is_mixed_tree(T):
        raise NotATree("tree_kelmans_legal needs a mixed tree")
    _check_pair(T, a, b)
    if T.relation(a, b) == "undirected":
        return TreeLegality(True, "a-b")
    middle = T.neighbors(a) & T.neighbors(b)
    if not middle:
        return TreeLegality(False, "none")
    if len(middle) > 1:
        raise NotATree(f"vertices {a} and {b} share several neighbours")
    (x,) = middle
    ax = T.relation(a, x)  # seen from a
    xb = T.relation(x, b)  # seen from x
    if ax == "undirected":
        return TreeLegality(True, "a-x<-b" if xb == "in" else "a-x->b", x)
    if xb == "undirected":
        return TreeLegality(True, "a->x-b" if ax == "out" else "a<-x-b", x)
    if ax == "out" and xb == "in":
        return TreeLegality(True, "a->x<-b", x)
    if ax == "in" and xb == "out":
        return TreeLegality(True, "a<-x->b", x)
    return TreeLegality(False, "none", x)


def legal_pairs(T: MixedGraph) -> list[tuple[int, int]]:
    """Ordered pairs ``(a, b)`` admitting a tree-preserving move."""
    out = []
    for a in range(1, T.n + 1):
        for b in range(1, T.n + 1):
            if a != b and T.relation(a, b) not in ("out", "in") and tree_kelmans_legal(T, a, b).legal:
                out.append((a, b))
    return out
