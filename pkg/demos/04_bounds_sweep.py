# coding: utf-8

# # Sharp bounds over T(n, m)
#
# Every mixed tree of order n and size m sits between two bounds. The upper
# one is reached by the mixed star whose centre points at every leaf; when
# all edges are undirected the lower one is reached by the path.

from alpha_spectra import (
    a_alpha,
    lower_bound,
    mixed_star,
    spectral_radius,
    star_quadratic_root,
    upper_bound,
    verify_bounds,
)

n = 6
for m in range(n - 1, 2 * n - 1):
    print(m, round(lower_bound(n, m, 0.5), 6), round(upper_bound(n, m, 0.5), 6))


report = verify_bounds([6], None, [0.0, 0.5, 1.0])
print("rows", len(report.rows), "violations", len(report.violations))
for (n_, m, alpha), s in sorted(report.summary.items()):
    if alpha == 0.5:
        print(m, "lower slack", round(s["min_lower_slack"], 9), "upper slack", round(s["min_upper_slack"], 9))


# The mixed stars form a chain: more out-arcs at the centre, larger radius.

m = 8
for e in range(2 * n - m - 1):
    S = mixed_star(n, m, e)
    print(e, star_quadratic_root(n, m, e, 0.5), spectral_radius(a_alpha(S, 0.5)))


# The CSV report keeps everything, with the summary as comment lines.

print(report.to_csv()[:400])
