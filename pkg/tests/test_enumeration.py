import pytest

from alpha_spectra import (
    a_alpha,
    build_poset,
    canonical_form,
    classify_maximal,
    climb_to_maximal,
    compare_dict,
    degree_sequence,
    enumerate_mixed_trees,
    graph_kelmans,
    is_maximal,
    is_mixed_star,
    is_mixed_tree,
    mixed_star,
    new_mixed_graph,
    path_graph,
    spectral_radius,
)
from alpha_spectra.enumeration import transitive_reduction, underlying_trees
from alpha_spectra.errors import NotATree, ParameterOutOfRange, SizeLimitExceeded
from alpha_spectra.kelmans import legal_pairs, tree_kelmans_legal

from conftest import brute_tree_classes

K13 = new_mixed_graph(4, undirected=[(1, 2), (1, 3), (1, 4)])
ARC_PATH = new_mixed_graph(4, arcs=[(1, 2), (2, 3), (3, 4)])


def test_enumeration_examples():
    classes = enumerate_mixed_trees(3, 2)
    assert len(classes) == 3
    assert all(not cf.graph.undirected for cf in classes)
    (only,) = enumerate_mixed_trees(3, 4)
    assert canonical_form(path_graph(3)).key == only.key
    assert len(enumerate_mixed_trees(2, 1)) == 1
    assert len(enumerate_mixed_trees(1, 0)) == 1


def test_enumeration_sorted_and_valid():
    for n in range(1, 7):
        for m in range(n - 1, 2 * n - 1):
            classes = enumerate_mixed_trees(n, m)
            keys = [cf.key for cf in classes]
            assert keys == sorted(keys) and len(set(keys)) == len(keys)
            for cf in classes:
                assert is_mixed_tree(cf.graph) and cf.graph.size == m and cf.graph.n == n
                assert canonical_form(cf.graph).key == cf.key


def test_enumeration_errors():
    with pytest.raises(ParameterOutOfRange):
        enumerate_mixed_trees(4, 7)
    with pytest.raises(ParameterOutOfRange):
        enumerate_mixed_trees(4, 2)
    with pytest.raises(SizeLimitExceeded):
        enumerate_mixed_trees(9, 8)
    with pytest.raises(SizeLimitExceeded):
        build_poset(7, 6)


def test_env_cap_override(monkeypatch):
    monkeypatch.setenv("ALPHA_SPECTRA_MAX_N", "3")
    with pytest.raises(SizeLimitExceeded):
        enumerate_mixed_trees(4, 3)
    monkeypatch.setenv("ALPHA_SPECTRA_MAX_N", "7")
    assert len(build_poset(7, 12).nodes) == 11


def test_underlying_tree_counts():
    # unlabeled trees of order 1..8
    assert [len(underlying_trees(n)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_match_prufer_oracle(n):
    for m in range(n - 1, 2 * n - 1):
        assert len(enumerate_mixed_trees(n, m)) == len(brute_tree_classes(n, m))


def test_poset_examples():
    P = build_poset(4, 6)
    p4, k13 = canonical_form(path_graph(4)).key, canonical_form(K13).key
    assert (p4, k13) in P.relations and (p4, k13) in P.covers
    assert build_poset(3, 2).relations == set()
    assert P.is_acyclic()


def test_poset_acyclic_and_covers():
    for n in range(1, 6):
        for m in range(n - 1, 2 * n - 1):
            P = build_poset(n, m)
            assert P.is_acyclic()
            assert P.covers <= P.relations
            # every relation is implied by a chain of covers
            succ = {}
            for u, v in P.covers:
                succ.setdefault(u, set()).add(v)
            for u, v in P.relations:
                stack, seen = [u], set()
                while stack:
                    w = stack.pop()
                    for x in succ.get(w, ()):
                        if x not in seen:
                            seen.add(x)
                            stack.append(x)
                assert v in seen


def test_transitive_reduction_small():
    edges = {(1, 2), (2, 3), (1, 3), (3, 4), (1, 4)}
    assert transitive_reduction([1, 2, 3, 4], edges) == {(1, 2), (2, 3), (3, 4)}


def test_poset_relations_raise_degree_sequence():
    for n in range(2, 6):
        for m in range(n - 1, 2 * n - 1):
            P = build_poset(n, m)
            for u, v in P.relations:
                assert compare_dict(degree_sequence(P.node(v).graph), degree_sequence(P.node(u).graph)) > 0


def test_top_of_all_undirected_poset_is_star():
    for n in range(3, 7):
        P = build_poset(n, 2 * n - 2)
        tops = P.maximal()
        assert len(tops) == 1 and is_mixed_star(tops[0].graph) and not tops[0].graph.arcs


def test_dot_export_stable():
    P = build_poset(4, 6)
    dot = P.to_dot()
    assert dot == build_poset(4, 6).to_dot()
    assert dot.startswith('digraph "T(4,6)"')
    assert dot.count("->") == len(P.covers)
    for cf in P.nodes:
        assert cf.key in dot


def test_maximal_examples():
    assert is_maximal(K13) and classify_maximal(K13)
    P4 = path_graph(4)
    assert not is_maximal(P4) and not classify_maximal(P4)
    assert tree_kelmans_legal(P4, 2, 3).legal
    assert is_maximal(ARC_PATH) and classify_maximal(ARC_PATH)
    T = new_mixed_graph(5, arcs=[(1, 2), (3, 2), (4, 1), (3, 5)])
    assert not classify_maximal(T) and not is_maximal(T)
    for n in range(2, 7):
        for m in range(n - 1, 2 * n - 1):
            for e in range(2 * n - m - 1):
                S = mixed_star(n, m, e)
                assert classify_maximal(S) and is_maximal(S)
    with pytest.raises(NotATree):
        is_maximal(new_mixed_graph(3, arcs=[(1, 2)]))
    with pytest.raises(NotATree):
        classify_maximal(new_mixed_graph(3, arcs=[(1, 2)]))


def test_classifier_equivalence_small():
    for n in range(1, 6):
        for m in range(n - 1, 2 * n - 1):
            for cf in enumerate_mixed_trees(n, m):
                assert classify_maximal(cf.graph) == is_maximal(cf.graph)


def test_maximal_matches_poset():
    for n in range(2, 6):
        for m in range(n - 1, 2 * n - 1):
            P = build_poset(n, m)
            tops = {cf.key for cf in P.maximal()}
            assert tops == {cf.key for cf in P.nodes if is_maximal(cf.graph)}


def test_climb_examples():
    chain = climb_to_maximal(path_graph(4))
    assert len(chain) == 2
    assert canonical_form(chain[-1]).key == canonical_form(K13).key
    assert climb_to_maximal(K13) == [K13]
    assert climb_to_maximal(ARC_PATH) == [ARC_PATH]


def test_climb_chains_monotone():
    for n in range(1, 7):
        for m in range(n - 1, 2 * n - 1):
            for cf in enumerate_mixed_trees(n, m):
                chain = climb_to_maximal(cf.graph)
                assert is_maximal(chain[-1])
                for G, H in zip(chain, chain[1:]):
                    assert compare_dict(degree_sequence(H), degree_sequence(G)) > 0
                    assert is_mixed_tree(H)
                    assert any(H == graph_kelmans(G, a, b) for a, b in legal_pairs(G))
                    for alpha in (0, 0.25, 0.5, 0.75, 1):
                        assert spectral_radius(a_alpha(G, alpha)) <= spectral_radius(a_alpha(H, alpha)) + 1e-9
