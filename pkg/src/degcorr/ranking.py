"""Rank vectors with explicit tie handling.

Ranks follow the descending convention throughout: the largest value gets
rank 1. Most statistics libraries rank ascending; correlation values are
unchanged when both sides of a pair use the same convention, so results
line up with rank formulas stated descending.

Tie policies:

* ``average``           tied values share the mean of their rank range,
                        yielding exact half-integer ranks;
* ``uniform_random``    ties ordered by i.i.d. uniform draws (seeded);
* ``by_index``          ties keep their sequence order in the underlying
                        ascending sort (ranks then reflected to descending);
* ``by_reverse_index``  ties take reversed sequence order.

Every policy preserves the total rank sum n*(n+1)/2.
"""
from __future__ import annotations

import numpy as np

TiePolicy = str
POLICIES = ("average", "uniform_random", "by_index", "by_reverse_index")


def average_ranks_doubled(values: np.ndarray) -> np.ndarray:
    """Doubled average ranks (2*rank) as exact int64.

    2*rank(v) = 2 * |{u : u > v}| + |{u : u == v}| + 1.
    """
    values = np.asarray(values)
    _, inverse, counts = np.unique(values, return_inverse=True, return_counts=True)
    total = values.size
    greater = total - np.cumsum(counts)  # per unique value, ascending order
    doubled = 2 * greater + counts + 1
    return doubled[inverse].astype(np.int64)


def average_ranks(values: np.ndarray) -> np.ndarray:
    """Average-tie ranks as float64 (exact, all values are halves)."""
    return average_ranks_doubled(values) / 2.0


def _reflected_permutation_ranks(values: np.ndarray, tiebreak: np.ndarray) -> np.ndarray:
    """Descending ranks from a stable ascending sort with an explicit tiebreak."""
    values = np.asarray(values)
    m = values.size
    order = np.lexsort((tiebreak, values))
    asc = np.empty(m, dtype=np.int64)
    asc[order] = np.arange(1, m + 1)
    return m + 1 - asc


def permutation_ranks(
    values: np.ndarray,
    policy: TiePolicy,
    rng: np.random.Generator | None = None,
) -> np.ndarray:
    """Integer ranks 1..n (a permutation), ties resolved per policy."""
    values = np.asarray(values)
    m = values.size
    if policy == "by_index":
        tiebreak = np.arange(m)
    elif policy == "by_reverse_index":
        tiebreak = -np.arange(m)
    elif policy == "uniform_random":
        if rng is None:
            raise ValueError("uniform_random ranking needs an rng")
        tiebreak = rng.random(m)
    else:
        raise ValueError(f"unknown permutation tie policy {policy!r}")
    return _reflected_permutation_ranks(values, tiebreak)


def rank_with_ties(values, policy: TiePolicy, seed: int | None = None) -> np.ndarray:
    """Rank a sequence with the given tie policy (descending convention).

    ``uniform_random`` requires a seed and is reproducible for equal seeds.
    Average ranks come back as float64 halves; the other policies return an
    integer permutation of 1..n (as float64 for a uniform return type).
    """
    values = np.asarray(values)
    if values.size == 0:
        raise ValueError("cannot rank an empty sequence")
    if policy == "average":
        return average_ranks(values)
    if policy == "uniform_random":
        if seed is None:
            raise ValueError("uniform_random ranking needs a seed")
        rng = np.random.default_rng(np.random.SeedSequence(seed))
        return permutation_ranks(values, "uniform_random", rng).astype(np.float64)
    return permutation_ranks(values, policy).astype(np.float64)
