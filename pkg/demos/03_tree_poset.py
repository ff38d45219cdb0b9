# coding: utf-8

# # The poset of mixed trees
#
# Legal Kelmans moves keep a mixed tree a tree. Ordering the isomorphism
# classes of T(n, m) by these moves gives a poset; its maximal elements are
# the trees no move can improve.

from alpha_spectra import (
    a_alpha,
    build_poset,
    classify_maximal,
    climb_to_maximal,
    degree_sequence,
    enumerate_mixed_trees,
    new_mixed_graph,
    spectral_radius,
)

for n, m in [(3, 2), (4, 5), (5, 6)]:
    print(n, m, len(enumerate_mixed_trees(n, m)), "classes")


P = build_poset(5, 6)
print(len(P.nodes), "nodes", len(P.covers), "covers", "acyclic:", P.is_acyclic())
for cf in P.maximal():
    print("maximal", cf.key, degree_sequence(cf.graph), classify_maximal(cf.graph))


# Climbing from a long mixed path. Each step raises the degree sequence and
# the radius never drops.

T = new_mixed_graph(5, arcs=[(1, 2), (3, 4)], undirected=[(2, 3), (4, 5)])
for step in climb_to_maximal(T):
    print(degree_sequence(step), round(spectral_radius(a_alpha(step, 0.5)), 6))


# The Hasse diagram as Graphviz text.

print(build_poset(4, 5).to_dot())
