import numpy as np
import pytest
from hypothesis import HealthCheck, settings

import degcorr as dc

from helpers import random_multigraph

settings.register_profile(
    "default",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("default")


@pytest.fixture
def corpus():
    """Small graphs exercising ties, loops, duplicates and both families."""
    graphs = [
        dc.bridge_graph(dc.BridgeParams(1, 1)),
        dc.bridge_graph(dc.BridgeParams(2, 2)),
        dc.bridge_graph(dc.BridgeParams(2, 3)),
        dc.bridge_graph(dc.BridgeParams(5, 10)),
        dc.disconnected_bridge_graph(dc.BridgeParams(2, 2)),
        dc.disconnected_bridge_graph(dc.BridgeParams(4, 4)),
        dc.DirectedGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)]),  # 3-cycle
        dc.DirectedGraph.from_edges(3, [(0, 1), (1, 2)]),  # 2-path
        dc.DirectedGraph.from_edges(2, [(0, 0), (0, 1), (0, 1)]),  # loop + dup
    ]
    rng = np.random.default_rng(2024)
    graphs += [random_multigraph(rng) for _ in range(12)]
    ecm_pairs = np.column_stack([rng.integers(0, 4, 30), rng.integers(0, 4, 30)])
    diff = int(ecm_pairs[:, 1].sum() - ecm_pairs[:, 0].sum())
    ecm_pairs[0, 0] += diff
    if ecm_pairs[0, 0] >= 0:
        g, _ = dc.erased_configuration_model(ecm_pairs, 11)
        graphs.append(g)
    return graphs
