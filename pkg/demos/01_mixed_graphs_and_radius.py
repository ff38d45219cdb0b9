# coding: utf-8

# # Mixed graphs and the A_alpha matrix
#
# A mixed graph has arcs (one-way) and undirected edges (two-way). Its size
# counts an arc once and an undirected edge twice, which is exactly the number
# of ones in the adjacency matrix.

import numpy as np

from alpha_spectra import a_alpha, degree_sequence, new_mixed_graph, path_graph, spectral_radius

G = new_mixed_graph(4, arcs=[(1, 2), (4, 3)], undirected=[(2, 3)])
print("size", G.size)
print(G.adjacency)


# A_alpha mixes the out-degree diagonal with the adjacency matrix.

print(a_alpha(G, 0.5))


# The spectral radius is the Perron root of this nonnegative matrix. The
# power iteration result agrees with a dense eigensolver.

for alpha in (0.0, 0.5, 1.0):
    M = a_alpha(G, alpha)
    print(alpha, spectral_radius(M), np.max(np.linalg.eigvals(M).real))


# At alpha = 0 the path P_k has radius 2cos(pi/(k+1)).

for k in range(2, 7):
    print(k, spectral_radius(a_alpha(path_graph(k), 0)), 2 * np.cos(np.pi / (k + 1)))


# Degree sequences use d+ + d- per vertex and are sorted descending.

print(degree_sequence(G))
