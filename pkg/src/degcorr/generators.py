"""Synthetic graph families: bridge graphs, their disconnected variant,
random bridge collections, and heavy-tailed i.i.d. degree sequences.

All generators are pure functions of (parameters, seed).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .graph import DirectedGraph


@dataclass(frozen=True)
class BridgeParams:
    """Fan-in size k and fan-out size m of a bridge graph."""

    k: int
    m: int

    def __post_init__(self):
        if self.k < 1 or self.m < 1:
            raise ValueError("bridge parameters must be >= 1")


@dataclass(frozen=True)
class PowerLawSpec:
    """Pareto tail: P(X > t) ~ (x_min / t)**gamma. Moments of order >= gamma diverge."""

    gamma: float
    x_min: int = 1

    def __post_init__(self):
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if self.x_min < 1:
            raise ValueError("x_min must be a positive integer")


def bridge_graph(p: BridgeParams) -> DirectedGraph:
    """k sources feeding hub v, bridge edge v->w, hub w feeding m sinks.

    Node ids: v=0, w=1, sources 2..k+1, sinks k+2..k+m+1. Edge order: the k
    fan-in edges, the m fan-out edges, then the bridge edge last. Degrees:
    D-(v)=k, D+(v)=1, D+(w)=m, D-(w)=1, every leaf at most 1.
    """
    k, m = p.k, p.m
    src = np.concatenate(
        [np.arange(2, k + 2), np.full(m, 1), np.array([0])]
    ).astype(np.int64)
    tgt = np.concatenate(
        [np.zeros(k), np.arange(k + 2, k + m + 2), np.array([1])]
    ).astype(np.int64)
    return DirectedGraph(k + m + 2, src, tgt)


def disconnected_bridge_graph(p: BridgeParams) -> DirectedGraph:
    """Bridge graph with the bridge edge split through a fresh middle node u.

    u takes id k+m+2; the edge (v, w) becomes (v, u), (u, w), appended after
    the fan edges. u has in- and out-degree 1, so no node carries both a
    large in- and a large out-degree.
    """
    k, m = p.k, p.m
    u = k + m + 2
    src = np.concatenate(
        [np.arange(2, k + 2), np.full(m, 1), np.array([0, u])]
    ).astype(np.int64)
    tgt = np.concatenate(
        [np.zeros(k), np.arange(k + 2, k + m + 2), np.array([u, 1])]
    ).astype(np.int64)
    return DirectedGraph(k + m + 3, src, tgt)


def sample_integer_power_law(
    spec: PowerLawSpec, seed_or_rng, count: int
) -> np.ndarray:
    """i.i.d. draws of floor(X), X ~ Pareto(x_min, gamma).

    Inverse transform: X = x_min * (1-U)**(-1/gamma) with U uniform on [0, 1),
    so 1-U is in (0, 1] and X >= x_min always. The floor keeps the exact tail
    index: P(floor(X) > t) = (x_min / (t+1))**gamma for integer t >= x_min.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = _as_rng(seed_or_rng)
    u = rng.random(count)
    x = spec.x_min * (1.0 - u) ** (-1.0 / spec.gamma)
    # values beyond int64 have probability ~ 2^-62 per draw for gamma >= 1
    return np.floor(np.minimum(x, 2.0**62)).astype(np.int64)


def iid_degree_sequence(
    n: int, spec_out: PowerLawSpec, spec_in: PowerLawSpec, seed: int
) -> np.ndarray:
    """n independent (out, in) degree pairs from two independent streams.

    Not balanced: sum(out) != sum(in) in general. Balancing for the
    configuration model is a separate step.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out_ss, in_ss = np.random.SeedSequence(seed).spawn(2)
    out = sample_integer_power_law(spec_out, np.random.default_rng(out_ss), n)
    inn = sample_integer_power_law(spec_in, np.random.default_rng(in_ss), n)
    return np.column_stack([out, inn])


def random_bridge_collection(
    n: int, a: float, spec: PowerLawSpec, seed: int
) -> DirectedGraph:
    """Disjoint union of n bridge graphs G(W_i, Z_i) with random sizes.

    W_i = X_i + Y_i and Z_i = floor(X_i + a*Y_i), where X, Y are independent
    integer power-law samples on separate streams. Component node-id blocks
    are contiguous, each laid out like bridge_graph.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if a <= 0:
        raise ValueError("a must be positive")
    if not (1.0 < spec.gamma < 2.0):
        warnings.warn(
            f"gamma={spec.gamma} outside (1, 2); the limit of the In/Out "
            "Pearson value is only non-degenerate for heavy tails",
            stacklevel=2,
        )
    x_ss, y_ss = np.random.SeedSequence(seed).spawn(2)
    xs = sample_integer_power_law(spec, np.random.default_rng(x_ss), n)
    ys = sample_integer_power_law(spec, np.random.default_rng(y_ss), n)
    ks = xs + ys
    ms = np.floor(xs + a * ys.astype(np.float64)).astype(np.int64)

    sizes = ks + ms + 2
    offsets = np.concatenate(([0], np.cumsum(sizes)))[:-1]
    src_parts = []
    tgt_parts = []
    for off, k, m in zip(offsets.tolist(), ks.tolist(), ms.tolist()):
        src_parts.append(np.arange(off + 2, off + k + 2))
        src_parts.append(np.full(m, off + 1))
        src_parts.append(np.array([off]))
        tgt_parts.append(np.full(k, off))
        tgt_parts.append(np.arange(off + k + 2, off + k + m + 2))
        tgt_parts.append(np.array([off + 1]))
    src = np.concatenate(src_parts).astype(np.int64)
    tgt = np.concatenate(tgt_parts).astype(np.int64)
    return DirectedGraph(int(sizes.sum()), src, tgt)


def _as_rng(seed_or_rng) -> np.random.Generator:
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)
