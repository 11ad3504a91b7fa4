"""Undirected simple graphs with hop-distance utilities.

Vertices are the integers ``0..n-1``. A :class:`Graph` never changes after
construction, so BFS results are cached on the instance.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

#: Distance reported for vertices in a different component than the source.
UNREACHABLE = math.inf


class GraphError(ValueError):
    """Raised on malformed graph input (self-loops, duplicates, bad ids)."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph."""


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Two graphs compare equal when they have the same vertex count and the
    same edge set.
    """

    __slots__ = ("_n", "_adj", "_dist_cache", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self._n = n
        self._m = m
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._dist_cache: dict[int, tuple[float, ...]] = {}

    @classmethod
    def from_labeled_edges(
        cls, edges: Iterable[tuple[Hashable, Hashable]], isolated: Iterable[Hashable] = ()
    ) -> tuple["Graph", list[Hashable]]:
        """Build a graph from arbitrary vertex labels.

        Labels are numbered in order of first appearance. Returns the graph
        and the label table (``labels[i]`` is the label of vertex ``i``).
        """
        index: dict[Hashable, int] = {}
        labels: list[Hashable] = []

        def idx(x: Hashable) -> int:
            if x not in index:
                index[x] = len(labels)
                labels.append(x)
            return index[x]

        pairs = [(idx(a), idx(b)) for a, b in edges]
        for x in isolated:
            idx(x)
        return cls(len(labels), pairs), labels

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._n) for v in self._adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def distances(self, source: int) -> tuple[float, ...]:
        """Hop distances from ``source`` (cached). Unreachable is ``UNREACHABLE``."""
        d = self._dist_cache.get(source)
        if d is None:
            self._check_vertex(source)
            d = _bfs(self._adj, source)
            self._dist_cache[source] = d
        return d

    def distance(self, u: int, v: int) -> float:
        return self.distances(u)[v]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self._n):
            raise GraphError(f"vertex {v} out of range for n={self._n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def _bfs(adj: Sequence[Sequence[int]], source: int) -> tuple[float, ...]:
    dist: list[float] = [UNREACHABLE] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return tuple(dist)


@dataclass(frozen=True)
class DistanceOracle:
    source: int
    dist: tuple[float, ...]

    def __getitem__(self, v: int) -> float:
        return self.dist[v]

    @property
    def spans_graph(self) -> bool:
        return all(d != UNREACHABLE for d in self.dist)


@dataclass(frozen=True)
class MetricSummary:
    eccentricities: tuple[int, ...]
    radius: int
    diameter: int
    min_degree: int
    center_vertex: int


def bfs(g: Graph, source: int) -> DistanceOracle:
    """Exact hop distances from ``source``."""
    return DistanceOracle(source, g.distances(source))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return all(d != UNREACHABLE for d in g.distances(0))


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def eccentricity(g: Graph, v: int) -> int:
    return int(max(g.distances(v)))


def metrics(g: Graph) -> MetricSummary:
    """Eccentricities, radius, diameter, minimum degree and a center vertex.

    The center is the lowest-id vertex of minimum eccentricity.
    """
    if g.n == 0:
        raise DisconnectedGraphError("metrics undefined for the empty graph")
    require_connected(g)
    ecc = tuple(int(max(g.distances(v))) for v in range(g.n))
    radius = min(ecc)
    return MetricSummary(
        eccentricities=ecc,
        radius=radius,
        diameter=max(ecc),
        min_degree=g.min_degree(),
        center_vertex=ecc.index(radius),
    )


def diameter(g: Graph) -> int:
    return metrics(g).diameter


def ball(g: Graph, v: int, r: int) -> frozenset[int]:
    """All vertices within hop distance ``r`` of ``v``."""
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    dist = g.distances(v)
    return frozenset(w for w, d in enumerate(dist) if d <= r)


def shortest_path(g: Graph, u: int, v: int) -> list[int]:
    """One shortest ``u``-``v`` path.

    BFS from ``u`` scanning neighbours in ascending order; each vertex keeps
    the first parent that discovers it, so the result is deterministic.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    parent = [-1] * g.n
    parent[u] = u
    queue = deque([u])
    while queue and parent[v] == -1:
        x = queue.popleft()
        for w in g.neighbors(x):
            if parent[w] == -1:
                parent[w] = x
                queue.append(w)
    if parent[v] == -1:
        raise DisconnectedGraphError(f"no path between {u} and {v}")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def induced_components(g: Graph, removed: Iterable[int]) -> list[int]:
    """Component label per vertex of ``g - removed``; removed vertices get -1."""
    label = [-1] * g.n
    gone = set(removed)
    comp = 0
    for s in range(g.n):
        if s in gone or label[s] != -1:
            continue
        label[s] = comp
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for w in g.neighbors(x):
                if w not in gone and label[w] == -1:
                    label[w] = comp
                    queue.append(w)
        comp += 1
    return label
