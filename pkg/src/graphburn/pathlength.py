"""Burning graphs that come with a path decomposition of small length.

Burn a spine (a shortest path joining the two end bags) with the optimal
path layout, then let the fire cross each bag: every bag meets the spine,
so ``ceil(sqrt(d - 1)) + pl`` rounds suffice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .burning import ceil_sqrt, complete_schedule, exact_burning_number, simulate
from .decomposition import Decomposition, length_of, validate
from .graph import Graph, GraphError, metrics, shortest_path


class PreconditionError(ValueError):
    """Input is well-formed but outside what the algorithm supports."""


@dataclass(frozen=True)
class PathBurnPlan:
    schedule: tuple[int, ...]
    bound: int
    completion_round: int
    diameter: int
    path_length: int
    decomposition: Decomposition
    x: int | None = None
    y: int | None = None
    spine: tuple[int, ...] = ()
    spine_schedule: tuple[int, ...] = ()
    used_exact_solver: bool = False


def path_burn_schedule(count: int) -> list[tuple[int, int]]:
    """Optimal burning layout for a path with ``count`` vertices.

    Returns ``(position, round)`` pairs for rounds ``1..k`` with
    ``k = ceil(sqrt(count))``. The activator of round ``i`` sits in the middle
    of a segment of ``2(k - i) + 1`` positions; segments are laid left to
    right and positions past the end are clamped to the last vertex.
    """
    if count < 1:
        raise ValueError(f"path needs at least one vertex, got {count}")
    k = ceil_sqrt(count)
    out = []
    start = 0
    for i in range(1, k + 1):
        out.append((min(start + (k - i), count - 1), i))
        start += 2 * (k - i) + 1
    return out


def normalize_path_decomposition(g: Graph, t: Decomposition) -> Decomposition:
    """Drop end bags contained in their neighbour until both ends own a vertex."""
    bags = list(t.bags)
    while len(bags) > 1:
        if bags[0] <= bags[1]:
            bags.pop(0)
        elif bags[-1] <= bags[-2]:
            bags.pop()
        else:
            break
    return Decomposition.path(bags)


def _as_path(t: Decomposition) -> Decomposition:
    if t.kind == "path":
        return t
    if t.is_path_shaped():
        return Decomposition.path(t.bags)
    raise PreconditionError("a path decomposition is required (bag i must hang under bag i-1)")


def pathlen_bound(diameter: int, pl: int) -> int:
    """``ceil(sqrt(d - 1)) + pl``."""
    return ceil_sqrt(diameter - 1) + pl


def burn_pathlen(g: Graph, t: Decomposition) -> PathBurnPlan:
    """Burn ``g`` in at most ``ceil(sqrt(d - 1)) + pl`` rounds using ``t``.

    Graphs of diameter below 2 are solved exactly instead; the bound is then
    the burning number itself.
    """
    if g.n == 0:
        raise GraphError("cannot burn the empty graph")
    t = _as_path(t)
    validate(g, t)
    info = metrics(g)
    d = info.diameter
    pl = length_of(g, t)

    if d < 2:
        rounds, witness = exact_burning_number(g)
        return PathBurnPlan(
            schedule=tuple(witness),
            bound=rounds,
            completion_round=int(simulate(g, witness).completion_round),
            diameter=d,
            path_length=pl,
            decomposition=t,
            used_exact_solver=True,
        )

    norm = normalize_path_decomposition(g, t)
    if norm.size == 1:
        schedule = complete_schedule(g, [min(norm.bags[0])])
        return PathBurnPlan(
            schedule=tuple(schedule),
            bound=min(1 + pl, pathlen_bound(d, pl)),
            completion_round=int(simulate(g, schedule).completion_round),
            diameter=d,
            path_length=pl,
            decomposition=norm,
        )

    first, last = norm.bags[0], norm.bags[-1]
    x = min(first - norm.bags[1])
    y = min(last - norm.bags[-2])
    xy = shortest_path(g, x, y)
    # x and y share no bag, so the path has at least three vertices
    spine = xy[1:-1]
    spine_schedule = [spine[pos] for pos, _ in path_burn_schedule(len(spine))]
    schedule = complete_schedule(g, spine_schedule)
    return PathBurnPlan(
        schedule=tuple(schedule),
        bound=pathlen_bound(d, pl),
        completion_round=int(simulate(g, schedule).completion_round),
        diameter=d,
        path_length=pl,
        decomposition=norm,
        x=x,
        y=y,
        spine=tuple(spine),
        spine_schedule=tuple(spine_schedule),
    )


def grid_graph(rows: int, cols: int) -> Graph:
    """``rows x cols`` grid; vertex ``r * cols + c`` sits at row ``r``, column ``c``."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def grid_decomposition(rows: int, cols: int) -> tuple[Graph, Decomposition]:
    """Grid plus the path decomposition whose bag ``i`` holds columns ``i`` and ``i + 1``."""
    if rows < 1 or cols < 2 or rows > cols:
        raise ValueError(f"need 1 <= rows <= cols and cols >= 2, got {rows}x{cols}")
    g = grid_graph(rows, cols)
    bags = [
        {r * cols + c for r in range(rows) for c in (i, i + 1)} for i in range(cols - 1)
    ]
    return g, Decomposition.path(bags)
