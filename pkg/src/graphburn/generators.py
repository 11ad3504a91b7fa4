"""Seeded graph families that come with a known-valid decomposition.

Randomness always flows through ``numpy.random.Generator(PCG64(seed))`` so a
``(family, params, seed)`` triple reproduces the same instance everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .decomposition import Decomposition
from .graph import Graph, metrics
from .pathlength import grid_decomposition


@dataclass(frozen=True)
class GeneratedInstance:
    graph: Graph
    decomposition: Decomposition | None
    family: str
    params: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None
    min_degree: int = 0
    diameter: int = 0

    @property
    def name(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params.items() if k != "intervals")
        tag = f"{self.family}({args})"
        return tag if self.seed is None else f"{tag}@{self.seed}"


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _instance(g: Graph, t: Decomposition | None, family: str, params: dict, seed=None):
    info = metrics(g)
    return GeneratedInstance(g, t, family, params, seed, info.min_degree, info.diameter)


def _tree_edge_decomposition(n: int, parent_of: list[int | None]) -> Decomposition:
    """Bag per tree edge; each edge bag hangs under the bag of its parent edge.

    ``parent_of[v]`` is the tree parent of ``v`` (``None`` for the root
    vertex 0). Vertices must be numbered so that parents precede children.
    """
    if n == 1:
        return Decomposition.path([{0}])
    bag_of: dict[int, int] = {}
    bags: list[set[int]] = []
    parent: list[int | None] = []
    for v in range(1, n):
        p = parent_of[v]
        bag_of[v] = len(bags)
        bags.append({p, v})
        if p in bag_of:
            parent.append(bag_of[p])
        else:
            # edges at the root vertex hang under the first such edge
            parent.append(None if v == 1 else 0)
    return Decomposition(tuple(frozenset(b) for b in bags), tuple(parent), 0)


def gen_path(n: int) -> GeneratedInstance:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    g = Graph(n, [(i, i + 1) for i in range(n - 1)])
    t = Decomposition.path([{i, i + 1} for i in range(n - 1)] or [{0}])
    return _instance(g, t, "path", {"n": n})


def gen_cycle(n: int) -> GeneratedInstance:
    """Cycle ``C_n`` with the path decomposition ``{0, i, i + 1}`` (length ``n // 2``)."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    g = Graph(n, [(i, (i + 1) % n) for i in range(n)])
    t = Decomposition.path([{0, i, i + 1} for i in range(1, n - 1)])
    return _instance(g, t, "cycle", {"n": n})


def gen_star(leaves: int) -> GeneratedInstance:
    """Star ``K_{1,leaves}`` centred at vertex 0."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    g = Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    t = _tree_edge_decomposition(leaves + 1, [None] + [0] * leaves)
    return _instance(g, t, "star", {"leaves": leaves})


def gen_spider(legs: int, length: int) -> GeneratedInstance:
    """``legs`` paths of ``length`` vertices joined at centre 0."""
    if legs < 1 or length < 1:
        raise ValueError("spider needs at least one leg of positive length")
    edges = []
    parent_of: list[int | None] = [None]
    for leg in range(legs):
        prev = 0
        for _ in range(length):
            v = len(parent_of)
            parent_of.append(prev)
            edges.append((prev, v))
            prev = v
    n = len(parent_of)
    g = Graph(n, edges)
    return _instance(g, _tree_edge_decomposition(n, parent_of), "spider",
                     {"legs": legs, "length": length})


def gen_grid(rows: int, cols: int) -> GeneratedInstance:
    g, t = grid_decomposition(rows, cols)
    return _instance(g, t, "grid", {"rows": rows, "cols": cols})


def gen_random_min_degree(n: int, delta: int, seed: int) -> GeneratedInstance:
    """Connected graph with minimum degree at least ``delta``.

    A random recursive spanning tree is built over a shuffled vertex order,
    then each deficient vertex (in id order) gains edges to uniformly chosen
    non-neighbours until its degree reaches ``delta``.
    """
    if not (0 <= delta < n):
        raise ValueError(f"need 0 <= delta < n, got n={n}, delta={delta}")
    rng = rng_for(seed)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    order = [int(v) for v in rng.permutation(n)]
    for i in range(1, n):
        u, p = order[i], order[int(rng.integers(i))]
        nbrs[u].add(p)
        nbrs[p].add(u)
    for v in range(n):
        while len(nbrs[v]) < delta:
            options = [w for w in range(n) if w != v and w not in nbrs[v]]
            w = options[int(rng.integers(len(options)))]
            nbrs[v].add(w)
            nbrs[w].add(v)
    g = Graph(n, [(u, w) for u in range(n) for w in sorted(nbrs[u]) if u < w])
    return _instance(g, None, "random_min_degree", {"n": n, "delta": delta}, seed)


def interval_instance(intervals: list[tuple[int, int]]) -> GeneratedInstance:
    """Intersection graph of closed intervals with its sweep path decomposition.

    Only the largest connected component is kept (the one holding the
    lowest interval index on ties); kept intervals are renumbered in input
    order. One bag per interval start, holding every interval alive at that
    point; consecutive duplicate bags are merged.
    """
    m = len(intervals)
    if m == 0:
        raise ValueError("need at least one interval")
    adj = [[j for j in range(m) if j != i and _overlap(intervals[i], intervals[j])]
           for i in range(m)]
    comp = [-1] * m
    sizes = []
    for s in range(m):
        if comp[s] != -1:
            continue
        comp[s] = len(sizes)
        stack, size = [s], 0
        while stack:
            x = stack.pop()
            size += 1
            for y in adj[x]:
                if comp[y] == -1:
                    comp[y] = comp[s]
                    stack.append(y)
        sizes.append(size)
    keep_comp = sizes.index(max(sizes))
    kept = [i for i in range(m) if comp[i] == keep_comp]
    ivs = [intervals[i] for i in kept]
    k = len(ivs)
    edges = [(a, b) for a in range(k) for b in range(a + 1, k) if _overlap(ivs[a], ivs[b])]
    g = Graph(k, edges)
    bags: list[frozenset[int]] = []
    for a in sorted(range(k), key=lambda i: (ivs[i][0], i)):
        x = ivs[a][0]
        bag = frozenset(i for i in range(k) if ivs[i][0] <= x <= ivs[i][1])
        if not bags or bags[-1] != bag:
            bags.append(bag)
    params = {"n": m, "intervals": [list(iv) for iv in ivs]}
    return _instance(g, Decomposition.path(bags), "interval", params)


def _overlap(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def gen_interval(n: int, max_coord: int, seed: int) -> GeneratedInstance:
    """Random closed intervals with integer endpoints in ``[0, max_coord]``.

    Left endpoints are uniform; lengths are uniform in ``[0, 4 * max_coord // n]``
    (at least 1) and clipped at ``max_coord``, so about two intervals cover
    a typical point and the graph stays path-like.
    """
    if n < 1 or max_coord < 0:
        raise ValueError("need n >= 1 and max_coord >= 0")
    rng = rng_for(seed)
    span = max(1, 4 * max_coord // n)
    starts = rng.integers(0, max_coord + 1, size=n)
    lengths = rng.integers(0, span + 1, size=n)
    intervals = [(int(a), int(min(a + l, max_coord))) for a, l in zip(starts, lengths)]
    inst = interval_instance(intervals)
    params = {"n": n, "max_coord": max_coord, "intervals": inst.params["intervals"]}
    return GeneratedInstance(inst.graph, inst.decomposition, "interval", params, seed,
                             inst.min_degree, inst.diameter)


def gen_ktree_chordal(n: int, k: int, seed: int) -> GeneratedInstance:
    """Random ``k``-tree on ``n`` vertices with its clique-tree decomposition.

    Starts from ``K_{k+1}``; vertex ``v`` picks a random existing bag, drops a
    random member to get a ``k``-clique, and joins it. The new bag is that
    clique plus ``v``, attached under the chosen bag.
    """
    if not (n > k >= 1):
        raise ValueError(f"need n > k >= 1, got n={n}, k={k}")
    rng = rng_for(seed)
    edges = [(a, b) for a in range(k + 1) for b in range(a + 1, k + 1)]
    bags: list[list[int]] = [list(range(k + 1))]
    parent: list[int | None] = [None]
    for v in range(k + 1, n):
        host = int(rng.integers(len(bags)))
        drop = int(rng.integers(k + 1))
        clique = [u for j, u in enumerate(bags[host]) if j != drop]
        edges.extend((u, v) for u in clique)
        bags.append(clique + [v])
        parent.append(host)
    g = Graph(n, edges)
    t = Decomposition(tuple(frozenset(b) for b in bags), tuple(parent), 0)
    return _instance(g, t, "ktree_chordal", {"n": n, "k": k}, seed)
