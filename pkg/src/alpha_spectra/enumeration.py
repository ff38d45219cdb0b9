"""Mixed trees up to isomorphism and the poset generated by tree-preserving
Kelmans moves.
"""

from __future__ import annotations

import hashlib
import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from graphlib import CycleError, TopologicalSorter

from .errors import NotATree, ParameterOutOfRange, SizeLimitExceeded, ValidationError
from .kelmans import graph_kelmans, legal_pairs
from .mixed_graph import (
    CanonicalForm,
    MixedGraph,
    canonical_form,
    compare_dict,
    degree_sequence,
    is_mixed_star,
    is_mixed_tree,
    new_mixed_graph,
)

__all__ = [
    "Poset",
    "enumerate_mixed_trees",
    "underlying_trees",
    "build_poset",
    "transitive_reduction",
    "is_maximal",
    "classify_maximal",
    "climb_to_maximal",
    "ENUM_CAP",
    "POSET_CAP",
]

ENUM_CAP = 8
POSET_CAP = 6


def _cap(default: int) -> int:
    env = os.environ.get("ALPHA_SPECTRA_MAX_N")
    return int(env) if env else default


def _check_nm(n: int, m: int, cap: int) -> None:
    if n < 1:
        raise ParameterOutOfRange(f"order must be >= 1, got {n}")
    if n > cap:
        raise SizeLimitExceeded(f"order {n} exceeds cap {cap} (set ALPHA_SPECTRA_MAX_N to raise it)")
    if not n - 1 <= m <= 2 * n - 2:
        raise ParameterOutOfRange(f"size must lie in [{n - 1}, {2 * n - 2}], got {m}")


@lru_cache(maxsize=None)
def underlying_trees(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Edge lists of the unlabeled trees of order ``n``, grown leaf by leaf
    from smaller trees and deduplicated by canonical form."""
    if n == 1:
        return ((),)
    found = {}
    for edges in underlying_trees(n - 1):
        for v in range(1, n):
            T = new_mixed_graph(n, undirected=list(edges) + [(v, n)])
            key = canonical_form(T, cap=max(n, 10)).key
            if key not in found:
                found[key] = tuple(T.undirected)
    return tuple(found[k] for k in sorted(found))


@lru_cache(maxsize=None)
def _trees(n: int, m: int) -> tuple[CanonicalForm, ...]:
    n_und = m - n + 1
    found: dict[str, CanonicalForm] = {}
    for edges in underlying_trees(n):
        for und in itertools.combinations(range(n - 1), n_und):
            rest = [i for i in range(n - 1) if i not in und]
            for flips in itertools.product((False, True), repeat=len(rest)):
                arcs = [edges[i][::-1] if f else edges[i] for i, f in zip(rest, flips)]
                G = new_mixed_graph(n, arcs, [edges[i] for i in und])
                cf = canonical_form(G, cap=max(n, 10))
                found.setdefault(cf.key, cf)
    return tuple(found[k] for k in sorted(found))


def enumerate_mixed_trees(n: int, m: int, cap: int | None = None) -> list[CanonicalForm]:
    """One canonical representative per isomorphism class of mixed trees of
    order ``n`` and size ``m``, sorted by canonical key."""
    _check_nm(n, m, _cap(ENUM_CAP) if cap is None else cap)
    return list(_trees(n, m))


def transitive_reduction(nodes, edges) -> set[tuple]:
    """Cover relation of a DAG given as node list and edge set."""
    succ = {v: set() for v in nodes}
    for u, v in edges:
        succ[u].add(v)
    reach = {}
    order = list(TopologicalSorter({v: succ[v] for v in nodes}).static_order())
    # static_order lists successors first, so reach[] of successors is ready
    for v in order:
        r = set()
        for w in succ[v]:
            r.add(w)
            r |= reach[w]
        reach[v] = r
    covers = set()
    for u, v in edges:
        if not any(v in reach[w] for w in succ[u] if w != v):
            covers.add((u, v))
    return covers


@dataclass
class Poset:
    """Classes of ``T(n, m)`` with the single-move relation and its covers.

    ``relations`` and ``covers`` hold ``(lower_key, upper_key)`` pairs.
    """

    n: int
    m: int
    nodes: list[CanonicalForm]
    relations: set[tuple[str, str]]
    covers: set[tuple[str, str]]

    def node(self, key: str) -> CanonicalForm:
        for cf in self.nodes:
            if cf.key == key:
                return cf
        raise KeyError(key)

    def maximal(self) -> list[CanonicalForm]:
        lower = {u for u, _ in self.relations}
        return [cf for cf in self.nodes if cf.key not in lower]

    def is_acyclic(self) -> bool:
        graph = {cf.key: set() for cf in self.nodes}
        for u, v in self.relations:
            graph[u].add(v)
        try:
            tuple(TopologicalSorter(graph).static_order())
        except CycleError:
            return False
        return True

    def to_dot(self) -> str:
        def node_id(key):
            return "n" + hashlib.sha1(key.encode()).hexdigest()[:10]

        lines = [f'digraph "T({self.n},{self.m})" {{', "  rankdir=BT;"]
        for cf in self.nodes:
            d = ",".join(str(x) for x in degree_sequence(cf.graph))
            lines.append(f'  {node_id(cf.key)} [label="{cf.key}\\n({d})"];')
        for u, v in sorted(self.covers):
            lines.append(f"  {node_id(u)} -> {node_id(v)};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_poset(n: int, m: int, cap: int | None = None) -> Poset:
    _check_nm(n, m, _cap(POSET_CAP) if cap is None else cap)
    nodes = enumerate_mixed_trees(n, m, cap=max(n, ENUM_CAP))
    relations = set()
    for cf in nodes:
        for a, b in legal_pairs(cf.graph):
            up = canonical_form(graph_kelmans(cf.graph, a, b)).key
            if up != cf.key:
                relations.add((cf.key, up))
    poset = Poset(n, m, nodes, relations, set())
    if not poset.is_acyclic():
        raise ValidationError(f"move relation on T({n},{m}) has a cycle")
    poset.covers = transitive_reduction([cf.key for cf in nodes], relations)
    return poset


def _require_tree(T: MixedGraph) -> None:
    if not is_mixed_tree(T):
        raise NotATree("expected a mixed tree")


def is_maximal(T: MixedGraph) -> bool:
    """No legal move leaves the isomorphism class of ``T``."""
    _require_tree(T)
    key = canonical_form(T).key
    return all(canonical_form(graph_kelmans(T, a, b)).key == key for a, b in legal_pairs(T))


def classify_maximal(T: MixedGraph) -> bool:
    """Structural test for maximality: ``T`` is a mixed star, or ``T`` has
    only arcs and in every ``a -> x <- b`` or ``a <- x -> b`` one of ``a``,
    ``b`` is a leaf."""
    _require_tree(T)
    if is_mixed_star(T):
        return True
    if T.undirected:
        return False
    leaf = {v for v in range(1, T.n + 1) if len(T.neighbors(v)) == 1}
    for x in range(1, T.n + 1):
        nbrs = sorted(T.neighbors(x))
        for a, b in itertools.combinations(nbrs, 2):
            same_way = T.relation(x, a) == T.relation(x, b)
            if same_way and a not in leaf and b not in leaf:
                return False
    return True


def climb_to_maximal(T: MixedGraph, max_steps: int = 10_000) -> list[MixedGraph]:
    """Chain of legal moves, each strictly raising the degree sequence,
    ending at a maximal tree.

    At every step the move giving the dictionary-greatest degree sequence
    wins; ties go to the smallest canonical key.
    """
    _require_tree(T)
    chain = [T]
    for _ in range(max_steps):
        cur = chain[-1]
        d0 = degree_sequence(cur)
        best = None
        for a, b in legal_pairs(cur):
            H = graph_kelmans(cur, a, b)
            d = degree_sequence(H)
            if compare_dict(d, d0) <= 0:
                continue
            rank = (tuple(-x for x in d), canonical_form(H).key)
            if best is None or rank < best[0]:
                best = (rank, H)
        if best is None:
            return chain
        chain.append(best[1])
    raise RuntimeError("climb_to_maximal exceeded its step budget")
