"""Syndrome graphs: parity checks as vertices, error generators as edges.

An edge may dangle, i.e. have one endpoint on the virtual boundary; such an
endpoint contributes to no syndrome.  Graphs are append-only while being
built and immutable afterwards, so they can be shared freely between
workers.  Edge and check sets are plain numpy bool vectors indexed by the
dense edge / check ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

#: Sentinel endpoint for dangling edges.
VIRTUAL_BOUNDARY = -1

# Canonical set representations: bool vectors over edge ids / check ids.
EdgeSet = np.ndarray
CheckSet = np.ndarray


@dataclass(frozen=True)
class SyndromeGraph:
    n_checks: int
    edges_u: np.ndarray  # int32; first endpoint (check id or VIRTUAL_BOUNDARY)
    edges_v: np.ndarray  # int32; second endpoint (check id or VIRTUAL_BOUNDARY)
    adj_offsets: np.ndarray = field(repr=False)  # CSR: check -> incident edge ids
    adj_edges: np.ndarray = field(repr=False)

    @property
    def n_edges(self) -> int:
        return len(self.edges_u)

    def empty_edge_set(self) -> EdgeSet:
        return np.zeros(self.n_edges, dtype=bool)

    def empty_check_set(self) -> CheckSet:
        return np.zeros(self.n_checks, dtype=bool)

    def edge_set(self, edge_ids: Iterable[int]) -> EdgeSet:
        out = self.empty_edge_set()
        ids = list(edge_ids)
        if ids:
            out[np.asarray(ids, dtype=np.int64)] = True
        return out

    def incident_edges(self, check: int) -> np.ndarray:
        return self.adj_edges[self.adj_offsets[check]:self.adj_offsets[check + 1]]

    def degrees(self) -> np.ndarray:
        return np.diff(self.adj_offsets)


def build_graph(n_checks: int, edges: Sequence[tuple[int, int]]) -> SyndromeGraph:
    """Assemble an immutable graph from an edge list.

    Every edge needs at least one non-boundary endpoint; ids are dense and
    stable in the order given.
    """
    edges_u = np.empty(len(edges), dtype=np.int32)
    edges_v = np.empty(len(edges), dtype=np.int32)
    for i, (u, v) in enumerate(edges):
        if u == VIRTUAL_BOUNDARY and v == VIRTUAL_BOUNDARY:
            raise ValueError(f"edge {i} has two boundary endpoints")
        for c in (u, v):
            if c != VIRTUAL_BOUNDARY and not (0 <= c < n_checks):
                raise ValueError(f"edge {i}: check id {c} out of range")
        edges_u[i] = u
        edges_v[i] = v

    counts = np.zeros(n_checks + 1, dtype=np.int64)
    for arr in (edges_u, edges_v):
        real = arr[arr != VIRTUAL_BOUNDARY]
        np.add.at(counts, real + 1, 1)
    offsets = np.cumsum(counts)
    offsets = np.concatenate(([0], offsets[1:]))
    adj = np.empty(offsets[-1], dtype=np.int32)
    cursor = offsets[:-1].copy()
    for i in range(len(edges)):
        for c in (edges_u[i], edges_v[i]):
            if c != VIRTUAL_BOUNDARY:
                adj[cursor[c]] = i
                cursor[c] += 1
    full_offsets = np.concatenate((offsets[:-1], [offsets[-1]]))
    return SyndromeGraph(
        n_checks=n_checks,
        edges_u=edges_u,
        edges_v=edges_v,
        adj_offsets=np.concatenate((full_offsets, [offsets[-1]]))[: n_checks + 1]
        if len(full_offsets) != n_checks + 1
        else full_offsets,
        adj_edges=adj,
    )


def _require_edge_vector(graph: SyndromeGraph, vec: np.ndarray) -> None:
    if vec.shape != (graph.n_edges,):
        raise ValueError(
            f"edge vector of length {vec.shape} does not match graph with "
            f"{graph.n_edges} edges"
        )


def syndrome_of(graph: SyndromeGraph, error: EdgeSet) -> CheckSet:
    """Checks flipped by an error: odd incidence count, boundary absorbs."""
    _require_edge_vector(graph, error)
    ids = np.flatnonzero(error)
    counts = np.zeros(graph.n_checks, dtype=np.int64)
    for arr in (graph.edges_u, graph.edges_v):
        ends = arr[ids]
        real = ends[ends != VIRTUAL_BOUNDARY]
        np.add.at(counts, real, 1)
    return (counts & 1).astype(bool)


def connected_clusters(graph: SyndromeGraph, error: EdgeSet) -> list[EdgeSet]:
    """Partition an error into components joined by shared non-boundary checks."""
    _require_edge_vector(graph, error)
    ids = np.flatnonzero(error)
    if len(ids) == 0:
        return []
    # Union-find over the checks touched by the error; each edge joins its
    # two (non-boundary) endpoints, dangling edges only anchor at one.
    parent: dict[int, int] = {}

    def find(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    edge_anchor = {}
    for e in ids:
        u, v = int(graph.edges_u[e]), int(graph.edges_v[e])
        anchors = [c for c in (u, v) if c != VIRTUAL_BOUNDARY]
        for c in anchors:
            parent.setdefault(c, c)
        if len(anchors) == 2:
            ra, rb = find(anchors[0]), find(anchors[1])
            if ra != rb:
                parent[rb] = ra
        edge_anchor[e] = anchors[0]

    groups: dict[int, list[int]] = {}
    for e in ids:
        groups.setdefault(find(edge_anchor[e]), []).append(e)
    return [graph.edge_set(members) for members in groups.values()]


def grow_region(
    graph: SyndromeGraph,
    seed: EdgeSet,
    radius: int,
    excluded: EdgeSet,
) -> EdgeSet:
    """Edges within `radius` hops of `seed`, never entering `excluded`.

    Distance counts one per shared-check hop between edges.  Excluded edges
    are opaque: growth neither collects nor traverses them, so they act as a
    barrier.  The seed itself is not part of the result.
    """
    _require_edge_vector(graph, seed)
    _require_edge_vector(graph, excluded)
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if np.any(seed & excluded):
        raise ValueError("seed and excluded sets overlap")
    visited = seed | excluded
    out = graph.empty_edge_set()
    frontier = deque(np.flatnonzero(seed).tolist())
    for _ in range(radius):
        if not frontier:
            break
        next_frontier: deque[int] = deque()
        while frontier:
            e = frontier.popleft()
            for c in (graph.edges_u[e], graph.edges_v[e]):
                if c == VIRTUAL_BOUNDARY:
                    continue
                for nb in graph.incident_edges(int(c)):
                    if not visited[nb]:
                        visited[nb] = True
                        out[nb] = True
                        next_frontier.append(int(nb))
        frontier = next_frontier
    return out


def frontier_checks(graph: SyndromeGraph, inside: EdgeSet) -> tuple[CheckSet, CheckSet]:
    """Split checks by how their incident edges relate to `inside`.

    interior: every incident edge lies inside (degree-0 checks never qualify);
    straddling: incident edges both inside and outside.
    """
    _require_edge_vector(graph, inside)
    ids = np.flatnonzero(inside)
    counts = np.zeros(graph.n_checks, dtype=np.int64)
    for arr in (graph.edges_u, graph.edges_v):
        ends = arr[ids]
        real = ends[ends != VIRTUAL_BOUNDARY]
        np.add.at(counts, real, 1)
    degrees = graph.degrees()
    interior = (counts > 0) & (counts == degrees)
    straddling = (counts > 0) & (counts < degrees)
    return interior, straddling
