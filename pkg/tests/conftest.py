import itertools

import numpy as np
import pytest

from alpha_spectra import new_mixed_graph


def brute_key(G):
    """Smallest adjacency encoding over all n! relabelings."""
    A = G.adjacency
    best = None
    for p in itertools.permutations(range(G.n)):
        enc = A[np.ix_(p, p)].tobytes()
        if best is None or enc < best:
            best = enc
    return best


def brute_isomorphic(G, H):
    return G.n == H.n and brute_key(G) == brute_key(H)


def prufer_trees(n):
    """Edge lists of all labeled trees on 1..n via Pruefer decoding."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(1, 2)]
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        degree = [1] * (n + 1)
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(1, n + 1) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [w for w in range(1, n + 1) if degree[w] == 1]
        edges.append((u, v))
        yield edges


def brute_tree_classes(n, m):
    """Isomorphism classes of mixed trees, by Pruefer x orientations and
    all-permutation keys."""
    keys = set()
    for edges in prufer_trees(n):
        for orient in itertools.product(range(3), repeat=n - 1):
            arcs, und = [], []
            for (u, v), o in zip(edges, orient):
                if o == 0:
                    arcs.append((u, v))
                elif o == 1:
                    arcs.append((v, u))
                else:
                    und.append((min(u, v), max(u, v)))
            if len(arcs) + 2 * len(und) != m:
                continue
            keys.add(brute_key(new_mixed_graph(n, arcs, und)))
    return keys


def random_mixed_graph(rng, n, p_edge=0.5):
    arcs, und = [], []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p_edge:
                r = rng.integers(3)
                if r == 0:
                    arcs.append((u, v))
                elif r == 1:
                    arcs.append((v, u))
                else:
                    und.append((u, v))
    return new_mixed_graph(n, arcs, und)


def random_permutation(rng, n):
    return [int(x) + 1 for x in rng.permutation(n)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def p4():
    return new_mixed_graph(4, undirected=[(1, 2), (2, 3), (3, 4)])


@pytest.fixture
def k13():
    return new_mixed_graph(4, undirected=[(1, 2), (1, 3), (1, 4)])


def burnside_class_count(n):
    """Number of isomorphism classes of mixed graphs on n vertices.

    Each unordered pair takes one of four values (none, u->v, v->u,
    undirected). A permutation fixes a labelling iff it is constant on every
    orbit of pairs; on an orbit where some power of the permutation reverses
    a pair, only the two reversal-invariant values survive.
    """
    from math import factorial

    total = 0
    for p in itertools.permutations(range(n)):
        seen = set()
        fixed = 1
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in seen:
                    continue
                flipped = False
                a, b = u, v
                while True:
                    seen.add((min(a, b), max(a, b)))
                    a, b = p[a], p[b]
                    if (min(a, b), max(a, b)) == (u, v):
                        flipped = (a, b) == (v, u)
                        break
                fixed *= 2 if flipped else 4
        total += fixed
    return total // factorial(n)


_CRITERIA = {}


@pytest.fixture
def criterion():
    """Context manager recording a PASS/FAIL line for an acceptance criterion."""
    import contextlib

    @contextlib.contextmanager
    def record(number, label):
        try:
            yield
        except BaseException:
            _CRITERIA[number] = f"FAIL  criterion {number}: {label}"
            print(_CRITERIA[number])
            raise
        _CRITERIA[number] = f"PASS  criterion {number}: {label}"
        print(_CRITERIA[number])

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[number])
