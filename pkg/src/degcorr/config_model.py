"""Erased directed configuration model and the randomized-baseline study.

Stub matching is a single uniform shuffle of the in-stub multiset zipped
against out-stubs in canonical node order, which is equivalent to drawing
the perfect matching uniformly. Erasure removes self-loops first, then
collapses parallel edges; the resulting graph is always simple.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import measures
from .errors import (
    BalanceFailedError,
    DegenerateSizeError,
    EmptyGraphError,
    UnbalancedStubsError,
    ZeroVarianceError,
)
from .generators import PowerLawSpec, sample_integer_power_law
from .graph import ALL_TYPES, DirectedGraph, degrees

_UNDEFINED = (ZeroVarianceError, EmptyGraphError, DegenerateSizeError)


@dataclass(frozen=True)
class RewireReport:
    """Erasure accounting for one configuration-model draw."""

    edges_before: int
    self_loops_removed: int
    multi_edges_collapsed: int
    edges_after: int

    def __post_init__(self):
        expected = self.edges_before - self.self_loops_removed - self.multi_edges_collapsed
        if self.edges_after != expected:
            raise ValueError("inconsistent rewire report")


@dataclass(frozen=True)
class CellStats:
    """Randomized baseline for one (dependency type, measure) cell."""

    mean: float | None
    sigma: float | None
    repetitions: int
    defined: int


@dataclass(frozen=True)
class RandomizationSummary:
    """Mean and sample sigma per (type, measure) over reconfigurations."""

    repetitions: int
    cells: dict[tuple[str, str], CellStats] = field(repr=False)

    def cell(self, type_wire: str, measure: str) -> CellStats:
        return self.cells[(type_wire, measure)]


def erased_configuration_model(
    degree_pairs: np.ndarray, seed_or_rng
) -> tuple[DirectedGraph, RewireReport]:
    """Uniform stub matching followed by erasure to a simple graph.

    degree_pairs is an (n, 2) array of prescribed (out, in) degrees with
    equal column sums. Node degrees in the output never exceed the
    prescription; they fall short exactly by the erased edges.
    """
    pairs = np.asarray(degree_pairs, dtype=np.int64)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise ValueError("degree_pairs must have shape (n, 2)")
    out, inn = pairs[:, 0], pairs[:, 1]
    if int(out.sum()) != int(inn.sum()):
        raise UnbalancedStubsError(
            f"sum(out)={int(out.sum())} != sum(in)={int(inn.sum())}"
        )
    rng = seed_or_rng if isinstance(seed_or_rng, np.random.Generator) else np.random.default_rng(seed_or_rng)
    n = pairs.shape[0]
    src = np.repeat(np.arange(n, dtype=np.int64), out)
    tgt = rng.permutation(np.repeat(np.arange(n, dtype=np.int64), inn))
    before = src.size

    keep = src != tgt
    loops = before - int(np.count_nonzero(keep))
    src, tgt = src[keep], tgt[keep]

    stacked = np.stack([src, tgt], axis=1)
    unique = np.unique(stacked, axis=0)
    collapsed = int(src.size) - unique.shape[0]
    graph = DirectedGraph(n, unique[:, 0].copy(), unique[:, 1].copy())
    report = RewireReport(before, loops, collapsed, graph.edge_count)
    return graph, report


def balance_iid_sequence(
    pairs: np.ndarray,
    spec_out: PowerLawSpec,
    spec_in: PowerLawSpec,
    seed: int,
    max_attempts: int = 100_000,
) -> tuple[np.ndarray, int]:
    """Resample a full i.i.d. (out, in) sequence until the sums match.

    Returns (balanced_pairs, resample_count). The initial sequence counts as
    attempt zero and is returned unchanged when already balanced. Raises
    BalanceFailedError when the budget runs out; the match probability per
    attempt is small but positive for non-degenerate specs, so the budget is
    a configuration knob rather than a correctness parameter.
    """
    if max_attempts < 1:
        raise ValueError("max_attempts must be >= 1")
    pairs = np.asarray(pairs, dtype=np.int64)
    if int(pairs[:, 0].sum()) == int(pairs[:, 1].sum()):
        return pairs, 0
    n = pairs.shape[0]
    out_rng, in_rng = (
        np.random.default_rng(ss) for ss in np.random.SeedSequence(seed).spawn(2)
    )
    batch = max(1, min(256, max_attempts, 2**22 // max(n, 1)))
    attempts = 0
    while attempts < max_attempts:
        take = min(batch, max_attempts - attempts)
        outs = sample_integer_power_law(spec_out, out_rng, n * take).reshape(take, n)
        inns = sample_integer_power_law(spec_in, in_rng, n * take).reshape(take, n)
        hits = np.flatnonzero(outs.sum(axis=1) == inns.sum(axis=1))
        if hits.size:
            i = int(hits[0])
            attempts += i + 1
            return np.column_stack([outs[i], inns[i]]), attempts
        attempts += take
    raise BalanceFailedError(attempts)


def randomization_study(
    g: DirectedGraph,
    repetitions: int,
    seed: int,
    rho_inner: int = 3,
) -> RandomizationSummary:
    """Reconfigure a graph's degree sequence repeatedly and measure each draw.

    Per repetition: redraw an erased configuration model on g's degree pairs
    and evaluate all four dependency types under all four measures, with
    spearman_uniform averaged over rho_inner tie-break instances. Cells that
    come out undefined (zero variance on a draw) are excluded from that
    cell's mean and counted in `defined`.
    """
    if repetitions < 2:
        raise ValueError("need at least 2 repetitions")
    if g.edge_count == 0:
        raise EmptyGraphError("cannot randomize an empty graph")
    d = degrees(g)
    pairs = np.column_stack([d.out_degree, d.in_degree])

    samples: dict[tuple[str, str], list[float]] = {
        (t.wire_name, m): [] for t in ALL_TYPES for m in measures.MEASURES
    }
    for rep_ss in np.random.SeedSequence(seed).spawn(repetitions):
        ecm_ss, rho_ss = rep_ss.spawn(2)
        drawn, _ = erased_configuration_model(pairs, np.random.default_rng(ecm_ss))
        for t in ALL_TYPES:
            for name, value in _measure_cells(drawn, t, rho_ss, rho_inner):
                if value is not None:
                    samples[(t.wire_name, name)].append(value)

    cells = {}
    for key, vals in samples.items():
        k = len(vals)
        if k == 0:
            cells[key] = CellStats(None, None, repetitions, 0)
        else:
            arr = np.asarray(vals)
            # sample sigma needs two defined draws
            sigma = float(arr.std(ddof=1)) if k >= 2 else None
            cells[key] = CellStats(float(arr.mean()), sigma, repetitions, k)
    return RandomizationSummary(repetitions, cells)


def _measure_cells(g, t, rho_ss: np.random.SeedSequence, rho_inner: int):
    try:
        yield "pearson", measures.pearson(g, t)
    except _UNDEFINED:
        yield "pearson", None
    try:
        vals = [
            measures._spearman_uniform_seeded(g, t, ss)
            for ss in rho_ss.spawn(rho_inner)
        ]
        yield "spearman_uniform", float(np.mean(vals))
    except _UNDEFINED:
        yield "spearman_uniform", None
    try:
        yield "spearman_average", measures.spearman_average(g, t)
    except _UNDEFINED:
        yield "spearman_average", None
    try:
        yield "kendall", measures.kendall_tau(g, t)
    except _UNDEFINED:
        yield "kendall", None
