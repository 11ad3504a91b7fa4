"""Instance collections and independent oracles shared by the test modules."""

from __future__ import annotations

import itertools
from collections import deque

from graphburn.generators import (
    gen_cycle,
    gen_grid,
    gen_interval,
    gen_ktree_chordal,
    gen_path,
    gen_random_min_degree,
    gen_spider,
    gen_star,
)
from graphburn.graph import Graph

INF = float("inf")


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def small_corpus() -> list:
    """Every generated instance with at most 12 vertices used by oracle checks."""
    out = [gen_path(n) for n in range(1, 13)]
    out += [gen_star(k) for k in range(1, 12)]
    out += [gen_spider(a, b) for a in range(1, 4) for b in range(1, 4) if a * b + 1 <= 12]
    out += [gen_cycle(n) for n in range(3, 13)]
    out += [gen_grid(r, c) for r in range(1, 4) for c in range(max(r, 2), 7) if r * c <= 12]
    out += [gen_ktree_chordal(n, k, s) for n in range(3, 13) for k in (1, 2, 3) if n > k
            for s in range(3)]
    out += [gen_interval(n, 3 * n, s) for n in range(2, 13) for s in range(3)]
    return [inst for inst in out if inst.graph.n <= 12]


def dense_corpus() -> list:
    """Fifty seeded minimum-degree instances, n <= 200."""
    out = []
    sizes = [30, 60, 100, 150, 200]
    for i, (n, delta) in enumerate(itertools.product(sizes, (3, 5, 10, 23))):
        out.append(gen_random_min_degree(n, delta, seed=1000 + i))
    for i in range(30):
        n = 24 + 6 * i
        delta = (3, 5, 10, 23)[i % 4]
        out.append(gen_random_min_degree(n, delta, seed=2000 + i))
    return out


def floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def frontier_burn(g: Graph, schedule, max_rounds: int | None = None) -> list[float]:
    """Literal round-by-round burning: spread, then ignite the round's activator."""
    burned = [INF] * g.n
    rounds = max_rounds if max_rounds is not None else len(schedule) + g.n
    for rnd in range(1, rounds + 1):
        newly = [w for v in range(g.n) if burned[v] < rnd
                 for w in g.neighbors(v) if burned[w] == INF]
        for w in newly:
            burned[w] = rnd
        if rnd <= len(schedule) and burned[schedule[rnd - 1]] == INF:
            burned[schedule[rnd - 1]] = rnd
        if all(b != INF for b in burned) and rnd >= len(schedule):
            break
    return burned


def brute_force_burning_number(g: Graph) -> int:
    """Smallest k such that some k activators burn g by round k (plain product search)."""
    n = g.n
    dist = [bfs_dists(g, v) for v in range(n)]
    for k in range(1, n + 1):
        for sched in itertools.product(range(n), repeat=k):
            if all(any(dist[a][v] <= k - i for i, a in enumerate(sched, 1)) for v in range(n)):
                return k
    raise AssertionError("unreachable for connected graphs")


def bfs_dists(g: Graph, s: int) -> list[float]:
    d = [INF] * g.n
    d[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for w in g.neighbors(u):
            if d[w] == INF:
                d[w] = d[u] + 1
                q.append(w)
    return d
