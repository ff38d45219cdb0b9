# coding: utf-8

# # Kelmans transformation
#
# Moving the neighbours of b over to a (keeping only the common ones at b)
# never lowers the spectral radius. The matrix version works for any
# nonnegative matrix symmetric in the (a, b) entries.

import numpy as np

from alpha_spectra import (
    KelmansParams,
    a_alpha,
    alpha_kelmans_params,
    graph_kelmans,
    matrix_kelmans,
    path_graph,
    spectral_radius,
)
from alpha_spectra.kelmans import random_admissible_params

C = np.array([[0, 0, 1], [0, 0, 1], [1, 1, 0]], dtype=float)
C2 = matrix_kelmans(C, KelmansParams(1, 2, 0.0, {3: 1.0}, {3: 1.0}))
print(C2)
print(spectral_radius(C), "->", spectral_radius(C2))


# Random admissible parameters, a few hundred times.

rng = np.random.default_rng(0)
gains = []
for _ in range(300):
    n = int(rng.integers(2, 8))
    C = rng.random((n, n))
    C[1, 0] = C[0, 1]
    p = random_admissible_params(C, 1, 2, rng)
    gains.append(spectral_radius(matrix_kelmans(C, p)) - spectral_radius(C))
print("smallest gain", min(gains))


# On P_4, moving from 3 to 2 produces the star centred at 2.

P4 = path_graph(4)
H = graph_kelmans(P4, 2, 3)
print(sorted(H.undirected))


# The graph move on A_alpha is the matrix move with matching parameters.

for alpha in (0.0, 0.4, 1.0):
    lhs = matrix_kelmans(a_alpha(P4, alpha), alpha_kelmans_params(P4, 2, 3, alpha))
    print(alpha, np.abs(lhs - a_alpha(H, alpha)).max(), spectral_radius(a_alpha(H, alpha)))
