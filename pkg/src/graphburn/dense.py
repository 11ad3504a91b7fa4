"""Burning graphs with a large minimum degree.

Activators are a greedy maximal set of vertices with pairwise distance
greater than ``2r``; every vertex is then within ``2r`` of one of them, so
the graph burns within ``|A| + 2r`` rounds. With ``r`` near
``sqrt(3n / (2(delta + 1)))`` this is at most ``ceil(sqrt(24n / (delta + 1)))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .burning import complete_schedule, simulate
from .graph import Graph, GraphError, metrics


@dataclass(frozen=True)
class DenseBurnPlan:
    r: int | None
    activator_set: tuple[int, ...]
    schedule: tuple[int, ...]
    bound: int
    used_radius_shortcut: bool
    completion_round: int


def greedy_separated_set(g: Graph, r: int) -> list[int]:
    """Maximal vertex set with pairwise distance ``> 2r``, picked in id order."""
    if r < 1:
        raise ValueError(f"separation radius must be positive, got {r}")
    removed = [False] * g.n
    picked = []
    for v in range(g.n):
        if removed[v]:
            continue
        picked.append(v)
        for w, d in enumerate(g.distances(v)):
            if d <= 2 * r:
                removed[w] = True
    return picked


def ball_lower_bound(r: int, delta: int) -> int:
    """Guaranteed size of a radius-``r`` ball when the minimum degree is ``delta``.

    Valid for ``1 <= r <= ecc(v)``.
    """
    if r < 1:
        raise ValueError(f"radius must be positive, got {r}")
    return ((r + 2) // 3) * (delta + 1)


def packing_bound(n: int, r: int, delta: int) -> float:
    """Upper bound ``3n / (r(delta + 1))`` on a ``2r``-separated set size."""
    return 3 * n / (r * (delta + 1))


def _ceil_sqrt_ratio(a: int, b: int) -> int:
    # least k with k*k*b >= a
    k = math.isqrt(a // b)
    while k * k * b < a:
        k += 1
    return k


def dense_bound(n: int, delta: int) -> int:
    """``ceil(sqrt(24n / (delta + 1)))``, computed without float rounding."""
    return _ceil_sqrt_ratio(24 * n, delta + 1)


def optimal_radius(n: int, delta: int) -> float:
    """Real minimiser ``sqrt(3n / (2(delta + 1)))`` of ``3n/(r(delta+1)) + 2r``."""
    return math.sqrt(3 * n / (2 * (delta + 1)))


def burn_dense(g: Graph) -> DenseBurnPlan:
    """Schedule burning ``g`` within ``ceil(sqrt(24n / (delta + 1)))`` rounds.

    When the radius is below the optimal separation radius, the center
    vertex alone (plus padding) is used. Otherwise both integer neighbours
    of the optimal radius are tried, and the one whose schedule completes
    first wins (ties go to the smaller radius).
    """
    if g.n == 0:
        raise GraphError("cannot burn the empty graph")
    if g.n == 1:
        return DenseBurnPlan(None, (0,), (0,), 1, True, 1)
    info = metrics(g)
    delta = info.min_degree
    bound = dense_bound(g.n, delta)
    # r* = sqrt(num / den); compare and round exactly
    num, den = 3 * g.n, 2 * (delta + 1)

    if info.radius * info.radius * den < num:
        schedule = complete_schedule(g, [info.center_vertex])
        return DenseBurnPlan(
            r=None,
            activator_set=(info.center_vertex,),
            schedule=tuple(schedule),
            bound=bound,
            used_radius_shortcut=True,
            completion_round=int(simulate(g, schedule).completion_round),
        )

    candidates = sorted(
        {
            min(max(r, 1), info.radius)
            for r in (math.isqrt(num // den), _ceil_sqrt_ratio(num, den))
        }
    )
    best: DenseBurnPlan | None = None
    for r in candidates:
        picked = greedy_separated_set(g, r)
        schedule = complete_schedule(g, picked)
        done = int(simulate(g, schedule).completion_round)
        if best is None or done < best.completion_round:
            best = DenseBurnPlan(r, tuple(picked), tuple(schedule), bound, False, done)
    assert best is not None
    return best
