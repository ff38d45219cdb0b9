"""Mixed graphs: vertices 1..n, each adjacent pair joined by one arc or one
undirected edge.

A pair carrying arcs in both directions is not representable as two arcs;
it is the undirected edge. This keeps the adjacency matrix and the size
(arcs plus twice the undirected edges) in one-to-one correspondence.
"""

from __future__ import annotations

import enum
import json
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    Disconnected,
    DuplicateRelation,
    LabelOutOfRange,
    LengthMismatch,
    ParameterOutOfRange,
    SelfLoop,
    SizeLimitExceeded,
    ValidationError,
)

__all__ = [
    "Relation",
    "MixedGraph",
    "CanonicalForm",
    "new_mixed_graph",
    "from_adjacency",
    "out_neighbors",
    "in_neighbors",
    "degree_sequence",
    "compare_dict",
    "distance",
    "diameter",
    "components",
    "is_mixed_tree",
    "is_mixed_star",
    "path_graph",
    "mixed_star",
    "canonical_form",
    "is_isomorphic",
    "relabel",
    "graph_from_json",
    "graph_to_json",
    "DEFAULT_ISO_CAP",
]

DEFAULT_ISO_CAP = 10


class Relation(enum.Enum):
    """Relation stored for an unordered pair ``{u, v}`` with ``u < v``."""

    FORWARD = "forward"  # arc u -> v
    BACKWARD = "backward"  # arc v -> u
    UNDIRECTED = "undirected"


@dataclass(frozen=True)
class MixedGraph:
    """Immutable mixed graph on vertices ``1..n``.

    Use :func:`new_mixed_graph` to build one from arc and edge lists; the
    constructor expects an already-normalized relation map.
    """

    n: int
    relations: Mapping[tuple[int, int], Relation] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ParameterOutOfRange(f"vertex count must be a positive integer, got {self.n!r}")
        rel = {}
        for (u, v), r in self.relations.items():
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise LabelOutOfRange(f"pair ({u}, {v}) outside 1..{self.n}")
            if u > v:
                raise ValidationError(f"relation keys must satisfy u < v, got ({u}, {v})")
            rel[(int(u), int(v))] = Relation(r)
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "relations", dict(sorted(rel.items())))

    def __hash__(self):
        return hash((self.n, tuple(self.relations.items())))

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return self.n == other.n and self.relations == other.relations

    def __repr__(self):
        return f"MixedGraph(n={self.n}, arcs={self.arcs}, undirected={self.undirected})"

    @cached_property
    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for (u, v), r in self.relations.items():
            if r is Relation.FORWARD:
                out.append((u, v))
            elif r is Relation.BACKWARD:
                out.append((v, u))
        return sorted(out)

    @cached_property
    def undirected(self) -> list[tuple[int, int]]:
        return [p for p, r in self.relations.items() if r is Relation.UNDIRECTED]

    @property
    def size(self) -> int:
        return len(self.arcs) + 2 * len(self.undirected)

    @cached_property
    def adjacency(self) -> np.ndarray:
        """0/1 integer adjacency matrix, 0-indexed, read-only."""
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.arcs:
            A[u - 1, v - 1] = 1
        for u, v in self.undirected:
            A[u - 1, v - 1] = A[v - 1, u - 1] = 1
        A.setflags(write=False)
        return A

    @cached_property
    def _underlying(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n + 1)]
        for u, v in self.relations:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def relation(self, u: int, v: int) -> str | None:
        """Relation seen from ``u``: ``"out"``, ``"in"``, ``"undirected"`` or None."""
        _check_vertex(self, u)
        _check_vertex(self, v)
        a, b = self.adjacency[u - 1, v - 1], self.adjacency[v - 1, u - 1]
        if a and b:
            return "undirected"
        if a:
            return "out"
        if b:
            return "in"
        return None

    def neighbors(self, u: int) -> set[int]:
        """Neighbors in the underlying graph."""
        _check_vertex(self, u)
        return set(self._underlying[u])

    def out_degree(self, u: int) -> int:
        _check_vertex(self, u)
        return int(self.adjacency[u - 1].sum())


def _check_vertex(G: MixedGraph, u: int) -> None:
    if not (1 <= u <= G.n):
        raise LabelOutOfRange(f"vertex {u} outside 1..{G.n}")


def new_mixed_graph(n: int, arcs: Iterable[Sequence[int]] = (), undirected: Iterable[Sequence[int]] = ()) -> MixedGraph:
    """Validate arc and edge lists and build a :class:`MixedGraph`.

    Raises :class:`SelfLoop`, :class:`LabelOutOfRange` or
    :class:`DuplicateRelation` (a pair listed twice, in either list or in
    opposite directions).
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ParameterOutOfRange(f"vertex count must be a positive integer, got {n!r}")
    relations: dict[tuple[int, int], Relation] = {}

    def add(u, v, rel):
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        for x in (u, v):
            if not isinstance(x, (int, np.integer)) or isinstance(x, bool):
                raise ValidationError(f"vertex labels must be integers, got {x!r}")
            if not 1 <= x <= n:
                raise LabelOutOfRange(f"vertex {x} outside 1..{n}")
        key = (min(u, v), max(u, v))
        if key in relations:
            raise DuplicateRelation(f"pair {{{key[0]}, {key[1]}}} given more than one relation")
        relations[key] = rel

    for pair in arcs:
        u, v = (int(x) for x in pair) if len(pair) == 2 else _bad_pair(pair)
        add(u, v, Relation.FORWARD if u < v else Relation.BACKWARD)
    for pair in undirected:
        u, v = (int(x) for x in pair) if len(pair) == 2 else _bad_pair(pair)
        add(u, v, Relation.UNDIRECTED)
    return MixedGraph(int(n), relations)


def _bad_pair(pair):
    raise ValidationError(f"expected a pair of vertices, got {pair!r}")


def from_adjacency(A) -> MixedGraph:
    """Inverse of ``G.adjacency``; symmetric 1-pairs become undirected edges."""
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValidationError("adjacency matrix must be square")
    if not np.all((A == 0) | (A == 1)):
        raise ValidationError("adjacency matrix must be 0/1")
    if np.any(np.diag(A)):
        raise SelfLoop("adjacency matrix has a nonzero diagonal")
    n = A.shape[0]
    relations = {}
    for u in range(n):
        for v in range(u + 1, n):
            f, b = A[u, v], A[v, u]
            if f and b:
                relations[(u + 1, v + 1)] = Relation.UNDIRECTED
            elif f:
                relations[(u + 1, v + 1)] = Relation.FORWARD
            elif b:
                relations[(u + 1, v + 1)] = Relation.BACKWARD
    return MixedGraph(n, relations)


def out_neighbors(G: MixedGraph, u: int) -> set[int]:
    _check_vertex(G, u)
    return {int(v) + 1 for v in np.flatnonzero(G.adjacency[u - 1])}


def in_neighbors(G: MixedGraph, u: int) -> set[int]:
    _check_vertex(G, u)
    return {int(v) + 1 for v in np.flatnonzero(G.adjacency[:, u - 1])}


def degree_sequence(G: MixedGraph) -> tuple[int, ...]:
    """Descending sequence of ``|N+(u)| + |N-(u)|``."""
    A = G.adjacency
    d = A.sum(axis=1) + A.sum(axis=0)
    return tuple(sorted((int(x) for x in d), reverse=True))


def compare_dict(a: Sequence[int], b: Sequence[int]) -> int:
    """Dictionary-order comparison: -1, 0 or 1."""
    if len(a) != len(b):
        raise LengthMismatch(f"degree sequences of lengths {len(a)} and {len(b)}")
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


def _bfs(G: MixedGraph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in G._underlying[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(G: MixedGraph, a: int, b: int) -> int:
    """Shortest-path distance in the underlying undirected graph."""
    _check_vertex(G, a)
    _check_vertex(G, b)
    dist = _bfs(G, a)
    if b not in dist:
        raise Disconnected(f"vertices {a} and {b} are in different components")
    return dist[b]


def diameter(G: MixedGraph) -> int:
    best = 0
    for u in range(1, G.n + 1):
        dist = _bfs(G, u)
        if len(dist) != G.n:
            raise Disconnected("underlying graph is disconnected")
        best = max(best, max(dist.values()))
    return best


def components(G: MixedGraph) -> list[list[int]]:
    """Connected components after deleting every arc, each sorted, ordered by
    smallest vertex."""
    adj = [[] for _ in range(G.n + 1)]
    for u, v in G.undirected:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    cells = []
    for s in range(1, G.n + 1):
        if s in seen:
            continue
        stack, cell = [s], []
        seen.add(s)
        while stack:
            u = stack.pop()
            cell.append(u)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        cells.append(sorted(cell))
    return cells


def is_mixed_tree(G: MixedGraph) -> bool:
    return len(G.relations) == G.n - 1 and len(_bfs(G, 1)) == G.n


def is_mixed_star(G: MixedGraph) -> bool:
    return is_mixed_tree(G) and (G.n <= 2 or diameter(G) <= 2)


def path_graph(k: int) -> MixedGraph:
    """All-undirected path ``1 - 2 - ... - k`` (size ``2k - 2``)."""
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ParameterOutOfRange(f"path order must be >= 1, got {k!r}")
    return new_mixed_graph(k, undirected=[(i, i + 1) for i in range(1, k)])


def mixed_star(n: int, m: int, extra_out: int) -> MixedGraph:
    """Star centred at 1 with ``m - n + 1`` undirected edges, then
    ``extra_out`` arcs centre -> leaf, remaining leaves pointing at the centre.

    The centre has out-degree ``m - n + extra_out + 1``.
    """
    if n < 2 or not (n - 1 <= m <= 2 * n - 2):
        raise ParameterOutOfRange(f"need n >= 2 and n-1 <= m <= 2n-2, got n={n}, m={m}")
    if not 0 <= extra_out <= 2 * n - m - 2:
        raise ParameterOutOfRange(f"extra_out must lie in [0, {2 * n - m - 2}], got {extra_out}")
    n_und = m - n + 1
    leaves = list(range(2, n + 1))
    und = [(1, v) for v in leaves[:n_und]]
    out = [(1, v) for v in leaves[n_und:n_und + extra_out]]
    inn = [(v, 1) for v in leaves[n_und + extra_out:]]
    return new_mixed_graph(n, arcs=out + inn, undirected=und)


def relabel(G: MixedGraph, perm: Mapping[int, int] | Sequence[int]) -> MixedGraph:
    """Apply a vertex bijection. ``perm`` maps old label -> new label; a
    sequence is read as ``perm[old - 1]``."""
    if not isinstance(perm, Mapping):
        perm = {i + 1: int(p) for i, p in enumerate(perm)}
    if sorted(perm) != list(range(1, G.n + 1)) or sorted(perm.values()) != list(range(1, G.n + 1)):
        raise ValidationError("relabeling must be a permutation of 1..n")
    arcs = [(perm[u], perm[v]) for u, v in G.arcs]
    und = [(perm[u], perm[v]) for u, v in G.undirected]
    return new_mixed_graph(G.n, arcs, und)


# --- canonical labelling -------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-class representative.

    ``graph`` is the canonically relabeled graph, ``key`` the string
    encoding compared across graphs, and ``labeling[i]`` the original
    vertex placed at canonical position ``i + 1``.
    """

    graph: MixedGraph
    key: str
    labeling: tuple[int, ...]

    def __lt__(self, other):
        return self.key < other.key


def _max_iso_n() -> int:
    env = os.environ.get("ALPHA_SPECTRA_MAX_N")
    return max(DEFAULT_ISO_CAP, int(env)) if env else DEFAULT_ISO_CAP


def _codes(G: MixedGraph) -> list[list[int]]:
    # 0 none, 1 out-arc, 2 in-arc, 3 undirected, seen from the row vertex
    A = G.adjacency
    return (A + 2 * A.T).tolist()


def _refine(code, nbrs, cells):
    while True:
        pos = {}
        for i, cell in enumerate(cells):
            for v in cell:
                pos[v] = i
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(sorted((pos[w], code[v][w]) for w in nbrs[v])) for v in cell}
            for s in sorted(set(sig.values())):
                out.append([v for v in cell if sig[v] == s])
        if len(out) == len(cells):
            return out
        cells = out


def _twins(code, u, v) -> bool:
    # swapping u and v is an automorphism fixing every other vertex
    if code[u][v] not in (0, 3):
        return False
    ru, rv = code[u], code[v]
    return all(ru[w] == rv[w] for w in range(len(ru)) if w != u and w != v)


def canonical_form(G: MixedGraph, cap: int | None = None) -> CanonicalForm:
    """Canonical relabeling by individualization and refinement.

    Vertices are first split by (out-degree, in-degree, undirected degree),
    then refined by neighbour colours; the search branches over the members
    of the first non-singleton cell and keeps the lexicographically smallest
    adjacency encoding. Branches differing by a swap of twin vertices are
    skipped since they yield identical encodings.
    """
    cap = _max_iso_n() if cap is None else cap
    if G.n > cap:
        raise SizeLimitExceeded(f"canonical form limited to n <= {cap}, got n = {G.n}")
    n = G.n
    code = _codes(G)
    nbrs = [[w for w in range(n) if code[v][w]] for v in range(n)]
    triple = {
        v: (sum(c == 1 for c in code[v]), sum(c == 2 for c in code[v]), sum(c == 3 for c in code[v]))
        for v in range(n)
    }
    cells = [[v for v in range(n) if triple[v] == t] for t in sorted(set(triple.values()))]
    cells = _refine(code, nbrs, cells)

    best: list = [None, None]

    def search(cells):
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            enc = "".join(str(code[u][w] & 1) for u in order for w in order)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, order
            return
        tried = []
        for v in cell:
            if any(_twins(code, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(_refine(code, nbrs, cells[:i] + [[v], rest] + cells[i + 1:]))

    search(cells)
    enc, order = best
    labeling = tuple(v + 1 for v in order)
    inverse = {old: new + 1 for new, old in enumerate(labeling)}
    graph = relabel(G, inverse)
    return CanonicalForm(graph=graph, key=f"{n}:{enc}", labeling=labeling)


def is_isomorphic(G: MixedGraph, H: MixedGraph) -> bool:
    if G.n != H.n or G.size != H.size or len(G.relations) != len(H.relations):
        return False
    return canonical_form(G).key == canonical_form(H).key


# --- JSON ----------------------------------------------------------------

def graph_to_json(G: MixedGraph) -> str:
    return json.dumps({"n": G.n, "arcs": [list(a) for a in G.arcs], "undirected": [list(e) for e in G.undirected]})


def graph_from_json(text: str | Mapping) -> MixedGraph:
    """Parse the ``{"n", "arcs", "undirected"}`` format with strict checks."""
    if isinstance(text, Mapping):
        data = text
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"malformed JSON: {exc}") from None
    if not isinstance(data, Mapping):
        raise ValidationError("graph JSON must be an object")
    extra = set(data) - {"n", "arcs", "undirected"}
    if extra:
        raise ValidationError(f"unexpected keys {sorted(extra)}")
    if "n" not in data:
        raise ValidationError("missing key 'n'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValidationError("'n' must be an integer")
    arcs = data.get("arcs", [])
    und = data.get("undirected", [])
    for name, pairs in (("arcs", arcs), ("undirected", und)):
        if not isinstance(pairs, list):
            raise ValidationError(f"'{name}' must be a list")
        for p in pairs:
            if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in p)):
                raise ValidationError(f"bad entry in '{name}': {p!r}")
    for u, v in und:
        if u > v:
            raise ValidationError(f"undirected pair [{u}, {v}] must satisfy u < v")
    return new_mixed_graph(n, arcs, und)
