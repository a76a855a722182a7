"""Directed multigraph container, edge-list I/O, degrees and moment sums.

The graph is an immutable multiset of directed edges over dense node ids.
Self-loops and parallel edges are representable and counted by every
downstream formula; only the configuration model enforces simplicity.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import IO, Iterable, Sequence, Union

import numpy as np

from ._exact import exact_product_moment
from .errors import EdgeListFormatError

_MAX_EXTERNAL_ID = 2**63 - 1


class DependencyType(Enum):
    """Choice of degree kind at the source and target of an edge.

    Wire names put the source-side kind first: OUT_IN correlates the
    out-degree of each edge's source with the in-degree of its target.
    """

    OUT_IN = ("out", "in")
    OUT_OUT = ("out", "out")
    IN_IN = ("in", "in")
    IN_OUT = ("in", "out")

    @property
    def source_kind(self) -> str:
        return self.value[0]

    @property
    def target_kind(self) -> str:
        return self.value[1]

    @property
    def wire_name(self) -> str:
        return self.name.lower()

    @classmethod
    def from_wire(cls, name: str) -> "DependencyType":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown dependency type {name!r}") from None


ALL_TYPES = (
    DependencyType.OUT_IN,
    DependencyType.OUT_OUT,
    DependencyType.IN_IN,
    DependencyType.IN_OUT,
)


def _as_readonly(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


class DirectedGraph:
    """Immutable sequence of directed edges over node ids 0..node_count-1."""

    __slots__ = ("node_count", "src", "tgt")

    def __init__(self, node_count: int, src: np.ndarray, tgt: np.ndarray):
        src = _as_readonly(src)
        tgt = _as_readonly(tgt)
        if src.shape != tgt.shape or src.ndim != 1:
            raise ValueError("src and tgt must be 1-d arrays of equal length")
        if node_count < 0:
            raise ValueError("node_count must be non-negative")
        if src.size:
            lo = min(int(src.min()), int(tgt.min()))
            hi = max(int(src.max()), int(tgt.max()))
            if lo < 0 or hi >= node_count:
                raise ValueError("edge endpoint outside [0, node_count)")
        self.node_count = int(node_count)
        self.src = src
        self.tgt = tgt

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> "DirectedGraph":
        pairs = list(edges)
        src = np.fromiter((s for s, _ in pairs), dtype=np.int64, count=len(pairs))
        tgt = np.fromiter((t for _, t in pairs), dtype=np.int64, count=len(pairs))
        return cls(node_count, src, tgt)

    @property
    def edge_count(self) -> int:
        return int(self.src.size)

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edge sequence as a list of (source, target) tuples. O(m); for tests
        and small graphs, not for hot paths."""
        return list(zip(self.src.tolist(), self.tgt.tolist()))

    def self_loop_count(self) -> int:
        return int(np.count_nonzero(self.src == self.tgt))

    def duplicate_edge_count(self) -> int:
        """Number of edges beyond the first occurrence of each (src, tgt)."""
        if self.edge_count == 0:
            return 0
        order = np.lexsort((self.tgt, self.src))
        s, t = self.src[order], self.tgt[order]
        same = (s[1:] == s[:-1]) & (t[1:] == t[:-1])
        return int(np.count_nonzero(same))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and np.array_equal(self.src, other.src)
            and np.array_equal(self.tgt, other.tgt)
        )

    def __hash__(self):
        return hash((self.node_count, self.src.tobytes(), self.tgt.tobytes()))

    def __repr__(self):
        return f"DirectedGraph(nodes={self.node_count}, edges={self.edge_count})"


@dataclass(frozen=True)
class DegreeTable:
    """Per-node out/in degree arrays; sum of each side equals the edge count."""

    out_degree: np.ndarray
    in_degree: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "out_degree", _as_readonly(self.out_degree))
        object.__setattr__(self, "in_degree", _as_readonly(self.in_degree))
        if self.out_degree.shape != self.in_degree.shape:
            raise ValueError("degree arrays must have equal length")

    def kind(self, which: str) -> np.ndarray:
        if which == "out":
            return self.out_degree
        if which == "in":
            return self.in_degree
        raise ValueError(f"degree kind must be 'out' or 'in', got {which!r}")


@dataclass(frozen=True)
class PairSeries:
    """Per-edge joint observations (source-side degree, target-side degree)."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", _as_readonly(self.x))
        object.__setattr__(self, "y", _as_readonly(self.y))
        if self.x.shape != self.y.shape:
            raise ValueError("pair coordinate arrays must have equal length")

    def __len__(self) -> int:
        return int(self.x.size)

    def tuples(self) -> list[tuple[int, int]]:
        return list(zip(self.x.tolist(), self.y.tolist()))


@dataclass(frozen=True)
class LoadResult:
    """A parsed graph plus the external-id remap retained for reporting."""

    graph: DirectedGraph
    external_ids: np.ndarray = field(repr=False)

    def external_id(self, internal: int) -> int:
        return int(self.external_ids[internal])


Source = Union[str, Path, bytes, IO[bytes], IO[str]]


def load_edge_list(source: Source) -> LoadResult:
    """Parse whitespace-separated "src dst" lines into a graph.

    Lines starting with '#' and blank lines are ignored. External ids (any
    non-negative integers up to 2**63-1) are remapped to dense internal ids in
    first-appearance order. The edge multiset is preserved in file order;
    empty input yields a zero-edge graph.
    """
    if isinstance(source, (str, Path)):
        with open(source, "rb") as fh:
            data = fh.read()
    elif isinstance(source, bytes):
        data = source
    else:
        data = source.read()
        if isinstance(data, str):
            data = data.encode("utf-8")

    id_map: dict[int, int] = {}
    srcs: list[int] = []
    tgts: list[int] = []
    for line_no, raw in enumerate(data.decode("utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(line_no, f"expected two fields, got {len(parts)}")
        try:
            s_ext, t_ext = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(line_no, f"non-integer node id in {line!r}") from None
        if s_ext < 0 or t_ext < 0:
            raise EdgeListFormatError(line_no, "node ids must be non-negative")
        if s_ext > _MAX_EXTERNAL_ID or t_ext > _MAX_EXTERNAL_ID:
            raise EdgeListFormatError(line_no, "node id exceeds 2**63-1")
        s = id_map.setdefault(s_ext, len(id_map))
        t = id_map.setdefault(t_ext, len(id_map))
        srcs.append(s)
        tgts.append(t)

    graph = DirectedGraph(
        len(id_map),
        np.asarray(srcs, dtype=np.int64),
        np.asarray(tgts, dtype=np.int64),
    )
    external = np.fromiter(id_map.keys(), dtype=np.int64, count=len(id_map))
    return LoadResult(graph, external)


def write_edge_list(g: DirectedGraph, destination: Union[str, Path, IO[str]]) -> None:
    """Serialize as one "src dst" line per edge, in edge order.

    The format cannot represent isolated nodes; graphs produced by the
    generators never have any.
    """
    buf = io.StringIO()
    for s, t in zip(g.src.tolist(), g.tgt.tolist()):
        buf.write(f"{s} {t}\n")
    text = buf.getvalue()
    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        destination.write(text)


def degrees(g: DirectedGraph) -> DegreeTable:
    """Count out/in degrees of every node."""
    out = np.bincount(g.src, minlength=g.node_count).astype(np.int64)
    inn = np.bincount(g.tgt, minlength=g.node_count).astype(np.int64)
    return DegreeTable(out, inn)


def edge_degree_pairs(g: DirectedGraph, t: DependencyType, d: DegreeTable | None = None) -> PairSeries:
    """Per-edge (source-side degree, target-side degree) series for a type."""
    if d is None:
        d = degrees(g)
    x = d.kind(t.source_kind)[g.src]
    y = d.kind(t.target_kind)[g.tgt]
    return PairSeries(x, y)


def vertex_moment_sum(d: DegreeTable, p: float, q: float) -> float | int:
    """Sum over nodes of out_degree**p * in_degree**q, with 0**0 == 1.

    Integer p, q up to 3 are accumulated exactly in integer arithmetic (the
    Pearson identities are tested exactly); other exponents use float64.
    """
    p_int = float(p).is_integer() and 0 <= p <= 3
    q_int = float(q).is_integer() and 0 <= q <= 3
    if p_int and q_int:
        return exact_product_moment(d.out_degree, d.in_degree, int(p), int(q))
    out = d.out_degree.astype(np.float64)
    inn = d.in_degree.astype(np.float64)
    return float(np.sum(out**p * inn**q))
