"""The four directed degree-degree dependency measures.

Every function takes a graph and a DependencyType and works on the per-edge
series (source-side degree, target-side degree). All numerators and variance
terms are accumulated in exact integer arithmetic; division happens once at
the end, so results are deterministic and reproduce closed forms to float
precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._exact import exact_dot, exact_power_sum
from .errors import DegenerateSizeError, EmptyGraphError, ZeroVarianceError
from .graph import DegreeTable, DependencyType, DirectedGraph, PairSeries, degrees, edge_degree_pairs, vertex_moment_sum
from .ranking import average_ranks_doubled, permutation_ranks

MEASURES = ("pearson", "spearman_uniform", "spearman_average", "kendall")


@dataclass(frozen=True)
class MeasureValue:
    """A single correlation value tagged with its measure and dependency type."""

    value: float
    measure: str
    dependency: DependencyType


def _edge_count(g: DirectedGraph) -> int:
    if g.edge_count == 0:
        raise EmptyGraphError("graph has no edges")
    return g.edge_count


def _weighted_moment(d: DegreeTable, weight: str, value: str, k: int) -> int:
    """Sum over nodes of D^weight * (D^value)^k, as vertex moment sums."""
    if weight == "out":
        return vertex_moment_sum(d, 1 + k, 0) if value == "out" else vertex_moment_sum(d, 1, k)
    return vertex_moment_sum(d, k, 1) if value == "out" else vertex_moment_sum(d, 0, 1 + k)


def variance_gap(d: DegreeTable, weight_kind: str, value_kind: str) -> int:
    """|E| * sum(D^w * (D^v)^2) - (sum(D^w * D^v))^2, an exact non-negative int.

    Zero exactly when every pair of nodes carrying positive D^weight shares
    the same D^value; this is the condition under which the corresponding
    edge-series variance vanishes and Pearson is undefined.
    """
    m = int(exact_power_sum(d.out_degree, 1))
    s1 = _weighted_moment(d, weight_kind, value_kind, 1)
    s2 = _weighted_moment(d, weight_kind, value_kind, 2)
    return m * s2 - s1 * s1


def pearson(g: DirectedGraph, t: DependencyType, d: DegreeTable | None = None) -> float:
    """Pearson correlation of the per-edge degree pairs, via vertex sums.

    The variance and mean terms reduce to degree-moment sums; only the cross
    term needs the edge list. Raises ZeroVarianceError when either side of
    the series is constant (e.g. any directed cycle).
    """
    m = _edge_count(g)
    if d is None:
        d = degrees(g)
    gap_src = variance_gap(d, "out", t.source_kind)
    gap_tgt = variance_gap(d, "in", t.target_kind)
    if gap_src == 0 or gap_tgt == 0:
        raise ZeroVarianceError(f"degenerate degree series for {t.wire_name}")
    x = d.kind(t.source_kind)[g.src]
    y = d.kind(t.target_kind)[g.tgt]
    sxy = exact_dot(x, y)
    s_src = _weighted_moment(d, "out", t.source_kind, 1)
    s_tgt = _weighted_moment(d, "in", t.target_kind, 1)
    num = m * sxy - s_src * s_tgt
    return num / math.sqrt(gap_src * gap_tgt)


def pearson_from_pairs(p: PairSeries) -> float:
    """Edge-form Pearson, computed directly from the joint series.

    Independent of the vertex-sum route in pearson(); the two must agree to
    float precision on every graph where both are defined.
    """
    m = len(p)
    if m == 0:
        raise EmptyGraphError("empty pair series")
    sx = exact_power_sum(p.x, 1)
    sy = exact_power_sum(p.y, 1)
    sxx = exact_power_sum(p.x, 2)
    syy = exact_power_sum(p.y, 2)
    sxy = exact_dot(p.x, p.y)
    vx = m * sxx - sx * sx
    vy = m * syy - sy * sy
    if vx == 0 or vy == 0:
        raise ZeroVarianceError("constant coordinate in pair series")
    return (m * sxy - sx * sy) / math.sqrt(vx * vy)


def _rho_from_permutation_ranks(rx: np.ndarray, ry: np.ndarray, m: int) -> float:
    s = exact_dot(rx, ry)
    num = 12 * s - 3 * m * (m + 1) ** 2
    den = m**3 - m
    return num / den


def spearman_uniform(g: DirectedGraph, t: DependencyType, seed: int) -> float:
    """Spearman's rho with ties broken uniformly at random, reproducibly.

    Two independent streams are derived from the seed: child 0 breaks ties on
    the source side, child 1 on the target side. That assignment is part of
    the reproducibility contract.
    """
    return _spearman_uniform_seeded(g, t, np.random.SeedSequence(seed))


def _spearman_uniform_seeded(g: DirectedGraph, t: DependencyType, ss: np.random.SeedSequence) -> float:
    m = _edge_count(g)
    if m <= 1:
        raise DegenerateSizeError("spearman needs at least 2 edges")
    p = edge_degree_pairs(g, t)
    src_ss, tgt_ss = ss.spawn(2)
    rx = permutation_ranks(p.x, "uniform_random", np.random.default_rng(src_ss))
    ry = permutation_ranks(p.y, "uniform_random", np.random.default_rng(tgt_ss))
    return _rho_from_permutation_ranks(rx, ry, m)


def spearman_ranked(
    g: DirectedGraph,
    t: DependencyType,
    source_policy: str = "by_index",
    target_policy: str = "by_index",
) -> float:
    """Spearman's rho with deterministic tie order (by_index / by_reverse_index).

    Exposes how strongly the value of rho under random tie breaking can
    depend on the particular ordering of tied entries.
    """
    m = _edge_count(g)
    if m <= 1:
        raise DegenerateSizeError("spearman needs at least 2 edges")
    p = edge_degree_pairs(g, t)
    rx = permutation_ranks(p.x, source_policy)
    ry = permutation_ranks(p.y, target_policy)
    return _rho_from_permutation_ranks(rx, ry, m)


def spearman_uniform_mean(
    g: DirectedGraph, t: DependencyType, repetitions: int, seed: int
) -> tuple[float, float]:
    """Sample mean and standard error of spearman_uniform over derived seeds."""
    if repetitions < 2:
        raise ValueError("need at least 2 repetitions")
    children = np.random.SeedSequence(seed).spawn(repetitions)
    vals = np.array([_spearman_uniform_seeded(g, t, ss) for ss in children])
    mean = float(vals.mean())
    stderr = float(vals.std(ddof=1) / math.sqrt(repetitions))
    return mean, stderr


def spearman_average(g: DirectedGraph, t: DependencyType) -> float:
    """Spearman's rho with average resolution of ties; deterministic.

    Works on doubled ranks so every sum is an exact integer; a single float
    division produces the result.
    """
    m = _edge_count(g)
    if m <= 1:
        raise DegenerateSizeError("spearman needs at least 2 edges")
    p = edge_degree_pairs(g, t)
    u = average_ranks_doubled(p.x)
    v = average_ranks_doubled(p.y)
    shift = m * (m + 1) ** 2
    sx2 = exact_power_sum(u, 2) - shift
    sy2 = exact_power_sum(v, 2) - shift
    if sx2 == 0 or sy2 == 0:
        raise ZeroVarianceError(f"all ranks tied on one side for {t.wire_name}")
    num = exact_dot(u, v) - shift
    return num / math.sqrt(sx2 * sy2)


def concordance_counts(p: PairSeries) -> tuple[int, int]:
    """Exact counts of strictly concordant and strictly discordant pairs.

    Sorts by (x, y) and counts strict y-inversions by merge sort (the
    discordant pairs), then recovers the concordant count from the tie
    structure: Nc = C(m,2) - xties - yties + jointties - Nd.
    """
    m = len(p)
    if m < 2:
        return 0, 0
    order = np.lexsort((p.y, p.x))
    ys = p.y[order]
    nd = _kernels.count_strict_inversions(ys)

    def tie_pairs(counts: np.ndarray) -> int:
        c = counts.astype(object)
        return int(sum(k * (k - 1) // 2 for k in c))

    _, cx = np.unique(p.x, return_counts=True)
    _, cy = np.unique(p.y, return_counts=True)
    xs = p.x[order]
    joint_breaks = (xs[1:] != xs[:-1]) | (ys[1:] != ys[:-1])
    run_ids = np.concatenate(([0], np.cumsum(joint_breaks)))
    cj = np.bincount(run_ids)
    total = m * (m - 1) // 2
    nc = total - tie_pairs(cx) - tie_pairs(cy) + tie_pairs(cj) - nd
    return int(nc), int(nd)


def kendall_tau(g: DirectedGraph, t: DependencyType) -> float:
    """Kendall's tau (tau-a): 2(Nc - Nd) / (|E| (|E|-1)).

    No tie correction in the denominator: with many tied degrees the value
    shrinks, which is part of what the measure reports.
    """
    m = _edge_count(g)
    if m <= 1:
        raise DegenerateSizeError("kendall needs at least 2 edges")
    nc, nd = concordance_counts(edge_degree_pairs(g, t))
    return 2 * (nc - nd) / (m * (m - 1))
