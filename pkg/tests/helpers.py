"""Brute-force oracles shared across test modules.

These stay deliberately naive (double loops, definition-level sums) so the
fast implementations are checked against independent arithmetic.
"""
import math

import degcorr as dc


def brute_pearson(pairs):
    m = len(pairs)
    sx = sum(x for x, _ in pairs)
    sy = sum(y for _, y in pairs)
    sxy = sum(x * y for x, y in pairs)
    sxx = sum(x * x for x, _ in pairs)
    syy = sum(y * y for _, y in pairs)
    vx = m * sxx - sx * sx
    vy = m * syy - sy * sy
    return (m * sxy - sx * sy) / math.sqrt(vx * vy)


def brute_concordance(pairs):
    nc = nd = 0
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            s = (pairs[i][0] - pairs[j][0]) * (pairs[i][1] - pairs[j][1])
            if s > 0:
                nc += 1
            elif s < 0:
                nd += 1
    return nc, nd


def random_multigraph(rng, max_nodes=8, max_edges=24):
    n = int(rng.integers(2, max_nodes + 1))
    m = int(rng.integers(2, max_edges + 1))
    src = rng.integers(0, n, m)
    tgt = rng.integers(0, n, m)
    return dc.DirectedGraph(n, src, tgt)
