"""Burning process semantics, schedule checks and the exhaustive solver.

A schedule is a sequence of vertex ids; entry ``i - 1`` is ignited in round
``i``. Fire spreads one hop per round, so vertex ``v`` burns in round
``min_i (i + d(a_i, v))``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .graph import UNREACHABLE, Graph, GraphError, require_connected


class BudgetExceeded(RuntimeError):
    """The exact solver hit its round budget before finding a schedule."""

    def __init__(self, budget: int):
        super().__init__(f"no burning schedule within the budget of {budget} rounds")
        self.budget = budget


@dataclass(frozen=True)
class BurnReport:
    burn_round: tuple[float, ...]
    completion_round: float
    complete: bool

    def burned_by(self, k: int) -> frozenset[int]:
        return frozenset(v for v, r in enumerate(self.burn_round) if r <= k)


def _check_schedule(g: Graph, schedule: Sequence[int]) -> None:
    if g.n > 0 and len(schedule) == 0:
        raise GraphError("empty schedule on a nonempty graph")
    for a in schedule:
        if not (0 <= a < g.n):
            raise GraphError(f"activator {a} out of range for n={g.n}")


def duplicate_activators(schedule: Sequence[int]) -> list[int]:
    """Vertices that appear more than once (legal, but wasted rounds)."""
    return sorted(v for v, c in Counter(schedule).items() if c > 1)


def simulate(g: Graph, schedule: Sequence[int]) -> BurnReport:
    """Run the burning process for ``schedule`` to completion."""
    _check_schedule(g, schedule)
    burn: list[float] = [UNREACHABLE] * g.n
    for i, a in enumerate(schedule, start=1):
        dist = g.distances(a)
        for v in range(g.n):
            t = i + dist[v]
            if t < burn[v]:
                burn[v] = t
    completion = max(burn, default=0)
    complete = completion != UNREACHABLE
    return BurnReport(
        burn_round=tuple(int(r) if r != UNREACHABLE else r for r in burn),
        completion_round=int(completion) if complete else UNREACHABLE,
        complete=complete,
    )


def verify(g: Graph, schedule: Sequence[int], k: int) -> bool:
    """True iff ``schedule`` has at most ``k`` activators and burns ``g`` by round ``k``."""
    report = simulate(g, schedule)
    return len(schedule) <= k and report.complete and report.completion_round <= k


def lower_bound_diameter(d: int) -> int:
    """Rounds needed to burn any graph of diameter ``d``: ``ceil(sqrt(d + 1))``."""
    if d < 0:
        raise ValueError(f"diameter must be nonnegative, got {d}")
    return ceil_sqrt(d + 1)


def ceil_sqrt(x: int) -> int:
    """Exact integer ``ceil(sqrt(x))`` for ``x >= 0``."""
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def complete_schedule(g: Graph, activators: Sequence[int]) -> list[int]:
    """Extend ``activators`` until every vertex burns, then drop useless rounds.

    Each padding round ignites the lowest-id vertex not yet burned in that
    round. Activators scheduled after the completion round are removed; they
    could only burn vertices after the graph is already on fire.
    """
    acts = list(activators)
    if g.n == 0:
        return acts
    burn: list[float] = [UNREACHABLE] * g.n
    for i, a in enumerate(acts, start=1):
        dist = g.distances(a)
        for v in range(g.n):
            if i + dist[v] < burn[v]:
                burn[v] = i + dist[v]
    while True:
        i = len(acts) + 1
        pending = [v for v in range(g.n) if burn[v] > i]
        if not pending:
            break
        a = pending[0]
        acts.append(a)
        dist = g.distances(a)
        for v in range(g.n):
            if i + dist[v] < burn[v]:
                burn[v] = i + dist[v]
    return acts[: int(max(burn))]


def _ball_masks(g: Graph, max_r: int) -> list[list[int]]:
    """``masks[v][r]`` is the bitmask of the radius-``r`` ball around ``v``."""
    masks = []
    for v in range(g.n):
        dist = g.distances(v)
        row = []
        for r in range(max_r + 1):
            m = 0
            for w, d in enumerate(dist):
                if d <= r:
                    m |= 1 << w
            row.append(m)
        masks.append(row)
    return masks


def _search_k(g: Graph, k: int, masks: list[list[int]]) -> list[int] | None:
    full = (1 << g.n) - 1
    # largest ball at each radius, for a cheap coverage-count prune
    best = [max(bin(masks[v][r]).count("1") for v in range(g.n)) for r in range(k)]
    # capacity[i]: most vertices activators i..k-1 (0-based) can still cover
    capacity = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        capacity[i] = capacity[i + 1] + best[k - 1 - i]
    chosen: list[int] = []

    def dfs(i: int, covered: int) -> bool:
        if covered == full:
            return True
        if i == k:
            return False
        if g.n - bin(covered).count("1") > capacity[i]:
            return False
        r = k - 1 - i
        for v in range(g.n):
            chosen.append(v)
            if dfs(i + 1, covered | masks[v][r]):
                return True
            chosen.pop()
        return False

    return chosen if dfs(0, 0) else None


def exact_burning_number(g: Graph, budget: int | None = None) -> tuple[int, list[int]]:
    """Burning number of ``g`` with a witness schedule, by exhaustive search.

    Tries ``k = 1, 2, ...`` and, for each ``k``, schedules of length ``k`` in
    lexicographic order; the first schedule that burns ``g`` within ``k``
    rounds is returned. Cost grows like ``n**k``, so keep ``n`` small.

    Raises :class:`BudgetExceeded` if no schedule of at most ``budget`` rounds
    exists.
    """
    if g.n == 0:
        raise GraphError("empty graph has no burning number")
    require_connected(g)
    limit = g.n if budget is None else budget
    masks = _ball_masks(g, max(limit - 1, 0))
    for k in range(1, limit + 1):
        witness = _search_k(g, k, masks)
        if witness is not None:
            return k, witness
    raise BudgetExceeded(limit)
