"""Guess-and-mark burning for graphs with a tree decomposition of small length.

``burn_guess(g)`` either proves that no schedule burns the graph in fewer
than ``g`` rounds, or returns a schedule finishing within ``2g + 4tl + 1``
rounds. Searching for the smallest successful guess gives an approximation
ratio of ``2 + (4tl + 1) / g*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .decomposition import Decomposition, length_of, validate
from .graph import Graph, GraphError, metrics, require_connected


@dataclass(frozen=True)
class GuessStep:
    """One marking iteration."""

    i: int
    terminal: int
    terminal_bag: int
    activator_bag: int
    activator: int
    mark_radius: int
    marked: int

    def to_line(self) -> str:
        return (
            f"iter {self.i}: terminal={self.terminal} bag={self.terminal_bag + 1} "
            f"top_bag={self.activator_bag + 1} activator={self.activator} "
            f"radius={self.mark_radius} marked={self.marked}"
        )


@dataclass(frozen=True)
class GuessOutcome:
    g: int
    tl: int
    schedule: tuple[int, ...] | None
    trace: tuple[GuessStep, ...]
    root: int
    origin: int

    @property
    def found(self) -> bool:
        return self.schedule is not None


@dataclass(frozen=True)
class TreelenResult:
    g_star: int
    schedule: tuple[int, ...]
    tl: int
    upper: int
    lower: int
    ratio_bound: Fraction
    outcome: GuessOutcome
    probes: tuple[int, ...]


def _resolve_tl(g_graph: Graph, t: Decomposition, tl: int | None) -> int:
    actual = length_of(g_graph, t)
    if tl is None:
        return actual
    if tl < actual:
        raise ValueError(f"claimed length {tl} is below the decomposition's length {actual}")
    return tl


def burn_guess(
    g_graph: Graph,
    t: Decomposition,
    g: int,
    tl: int | None = None,
    root: int = 0,
    *,
    check: bool = True,
) -> GuessOutcome:
    """Run one guess-and-mark pass with guess ``g``.

    The decomposition is re-rooted at bag ``root``; the origin is the
    lowest-id vertex of that bag. Iteration ``i`` picks the unmarked vertex
    farthest from the origin (lowest id on ties), climbs from its shallowest
    bag towards the root while the bag still holds a vertex within ``g - 1``
    of it, takes the lowest-id vertex of the bag reached as activator, and
    marks everything within ``(2g - i + 1) + 4tl`` of that activator.
    """
    if g < 1:
        raise ValueError(f"guess must be positive, got {g}")
    if g_graph.n == 0:
        raise GraphError("cannot burn the empty graph")
    if check:
        require_connected(g_graph)
        validate(g_graph, t)
    tl = _resolve_tl(g_graph, t, tl)
    t = t.rerooted(root)
    origin = min(t.bags[t.root])
    from_origin = g_graph.distances(origin)

    # shallowest bag per vertex, lowest index on ties
    home: dict[int, int] = {}
    for b in sorted(range(t.size), key=lambda b: (t.depth(b), b)):
        for v in t.bags[b]:
            home.setdefault(v, b)

    marked = [False] * g_graph.n
    n_marked = 0
    activators: list[int] = []
    trace: list[GuessStep] = []
    i = 0
    while i <= g and n_marked < g_graph.n:
        i += 1
        terminal = max(
            (v for v in range(g_graph.n) if not marked[v]),
            key=lambda v: (from_origin[v], -v),
        )
        near = g_graph.distances(terminal)
        start = bag = home[terminal]
        while bag != t.root and any(near[v] <= g - 1 for v in t.bags[bag]):
            bag = t.parent[bag]
        c = min(t.bags[bag])
        activators.append(c)
        radius = (2 * g - i + 1) + 4 * tl
        for v, dv in enumerate(g_graph.distances(c)):
            if dv <= radius and not marked[v]:
                marked[v] = True
                n_marked += 1
        trace.append(GuessStep(i, terminal, start, bag, c, radius, n_marked))

    schedule = tuple(activators) if n_marked == g_graph.n else None
    return GuessOutcome(g, tl, schedule, tuple(trace), t.root, origin)


def search_g_star(
    g_graph: Graph,
    t: Decomposition,
    tl: int | None = None,
    root: int = 0,
    binary: bool = False,
) -> TreelenResult:
    """Smallest guess for which :func:`burn_guess` returns a schedule.

    The default is a linear scan ``g = 1, 2, ..., d``. With ``binary=True``
    a bisection over ``[1, d]`` is tried first; its answer is kept only if
    the guess just below it fails, otherwise the linear scan is used.
    """
    require_connected(g_graph)
    validate(g_graph, t)
    tl = _resolve_tl(g_graph, t, tl)
    d = max(metrics(g_graph).diameter, 1)
    probes: list[int] = []
    cache: dict[int, GuessOutcome] = {}

    def probe(g: int) -> GuessOutcome:
        if g not in cache:
            probes.append(g)
            cache[g] = burn_guess(g_graph, t, g, tl, root, check=False)
        return cache[g]

    g_star = None
    if binary:
        lo, hi = 1, d
        while lo < hi:
            mid = (lo + hi) // 2
            if probe(mid).found:
                hi = mid
            else:
                lo = mid + 1
        if probe(lo).found and (lo == 1 or not probe(lo - 1).found):
            g_star = lo
    if g_star is None:
        g_star = next((g for g in range(1, d + 1) if probe(g).found), None)
    if g_star is None:
        raise AssertionError(f"no guess up to the diameter {d} produced a schedule")

    outcome = cache[g_star]
    upper = 2 * g_star + 4 * tl + 1
    return TreelenResult(
        g_star=g_star,
        schedule=outcome.schedule,
        tl=tl,
        upper=upper,
        lower=g_star,
        ratio_bound=Fraction(upper, g_star),
        outcome=outcome,
        probes=tuple(probes),
    )
