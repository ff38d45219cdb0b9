# coding: utf-8

# # Factoring the characteristic polynomial
#
# Arcs of a mixed tree never close a cycle, so ordering the undirected
# components suitably makes A_alpha block triangular. The characteristic
# polynomial is the product over the diagonal blocks.

import numpy as np

from alpha_spectra import a_alpha, char_poly, char_poly_components, equitable_quotient, new_mixed_graph
from alpha_spectra.spectral import EVAL_POINTS, CharPoly

T = new_mixed_graph(6, arcs=[(2, 4), (5, 3)], undirected=[(1, 2), (3, 4), (5, 6)])
alpha = 0.3
parts = char_poly_components(T, alpha)
for p in parts:
    print(np.round(p.coeffs, 6))

x = np.asarray(EVAL_POINTS)
print(CharPoly.product(parts)(x))
print(char_poly(a_alpha(T, alpha))(x))


# With no undirected edge each component is a single vertex, so the
# eigenvalues are alpha times the out-degrees.

arcs_only = new_mixed_graph(5, arcs=[(1, 2), (2, 3), (4, 3), (4, 5)])
print(np.sort(np.linalg.eigvals(a_alpha(arcs_only, 0.5)).real))


# An equitable partition shrinks the matrix without losing the radius. For
# the undirected star K_1,3 take the centre and the leaves.

star = new_mixed_graph(4, undirected=[(1, 2), (1, 3), (1, 4)])
Q = equitable_quotient(a_alpha(star, 0.5), [[1], [2, 3, 4]])
print(Q)
print(np.max(np.linalg.eigvals(Q).real))
