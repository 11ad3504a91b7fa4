"""Rooted tree and path decompositions.

Bags are indexed from 0 in the Python API (the text format uses 1-based
ids). A path decomposition is a rooted tree whose root is bag 0 and where
bag ``i`` has parent ``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from .graph import Graph, GraphError, induced_components, shortest_path

Kind = Literal["path", "tree"]


class DecompositionStructureError(ValueError):
    """The bag tree itself is malformed (cycle, several roots, bad ids)."""


class InvalidDecompositionError(ValueError):
    """A decomposition axiom fails for the given graph."""

    def __init__(self, violation: "Violation"):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True)
class Violation:
    axiom: str
    message: str
    witness: tuple = ()

    def __str__(self) -> str:
        return f"{self.axiom}: {self.message}"


@dataclass(frozen=True)
class Decomposition:
    bags: tuple[frozenset[int], ...]
    parent: tuple[int | None, ...]
    root: int
    kind: Kind = "tree"
    _children: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _depth: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        k = len(self.bags)
        if k == 0:
            raise DecompositionStructureError("decomposition has no bags")
        if len(self.parent) != k:
            raise DecompositionStructureError("parent table length differs from bag count")
        if not (0 <= self.root < k):
            raise DecompositionStructureError(f"root {self.root} is not a bag")
        roots = [b for b, p in enumerate(self.parent) if p is None]
        if roots != [self.root]:
            raise DecompositionStructureError(
                f"expected exactly one parentless bag (the root {self.root}), found {roots}"
            )
        children: list[list[int]] = [[] for _ in range(k)]
        for b, p in enumerate(self.parent):
            if p is None:
                continue
            if not (0 <= p < k) or p == b:
                raise DecompositionStructureError(f"bag {b} has invalid parent {p}")
            children[p].append(b)
        depth = [-1] * k
        depth[self.root] = 0
        stack = [self.root]
        while stack:
            b = stack.pop()
            for c in children[b]:
                depth[c] = depth[b] + 1
                stack.append(c)
        if -1 in depth:
            raise DecompositionStructureError(
                f"bag {depth.index(-1)} does not reach the root (cycle in parent links)"
            )
        if self.kind == "path":
            if self.root != 0 or any(self.parent[i] != i - 1 for i in range(1, k)):
                raise DecompositionStructureError(
                    "path decomposition must be rooted at bag 0 with bag i under bag i-1"
                )
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        object.__setattr__(self, "_children", tuple(tuple(c) for c in children))
        object.__setattr__(self, "_depth", tuple(depth))

    @classmethod
    def path(cls, bags: Iterable[Iterable[int]]) -> "Decomposition":
        bags = tuple(frozenset(b) for b in bags)
        parent = (None,) + tuple(range(len(bags) - 1))
        return cls(bags, parent, 0, "path")

    @classmethod
    def from_tree_edges(
        cls,
        bags: Iterable[Iterable[int]],
        tree_edges: Iterable[tuple[int, int]],
        root: int = 0,
    ) -> "Decomposition":
        """Build from undirected bag-tree edges, oriented away from ``root``."""
        bags = tuple(frozenset(b) for b in bags)
        k = len(bags)
        nbrs: list[list[int]] = [[] for _ in range(k)]
        count = 0
        for a, b in tree_edges:
            if not (0 <= a < k and 0 <= b < k) or a == b:
                raise DecompositionStructureError(f"bad tree edge ({a}, {b})")
            nbrs[a].append(b)
            nbrs[b].append(a)
            count += 1
        if count != k - 1:
            raise DecompositionStructureError(f"{k} bags need {k - 1} tree edges, got {count}")
        if not (0 <= root < k):
            raise DecompositionStructureError(f"root {root} is not a bag")
        parent: list[int | None] = [None] * k
        seen = {root}
        stack = [root]
        while stack:
            b = stack.pop()
            for c in nbrs[b]:
                if c not in seen:
                    seen.add(c)
                    parent[c] = b
                    stack.append(c)
        if len(seen) != k:
            raise DecompositionStructureError("bag tree is not connected")
        return cls(bags, tuple(parent), root, "tree")

    @property
    def size(self) -> int:
        return len(self.bags)

    def children(self, b: int) -> tuple[int, ...]:
        return self._children[b]

    def depth(self, b: int) -> int:
        return self._depth[b]

    def tree_edges(self) -> list[tuple[int, int]]:
        """``(child, parent)`` pairs in child order."""
        return [(b, p) for b, p in enumerate(self.parent) if p is not None]

    def subtree(self, b: int) -> list[int]:
        out, stack = [], [b]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(self._children[x])
        return sorted(out)

    def vertices_in(self, bag_ids: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for b in bag_ids:
            out |= self.bags[b]
        return out

    def bags_containing(self, v: int) -> list[int]:
        return [b for b, bag in enumerate(self.bags) if v in bag]

    def canonical_bag(self, v: int) -> int:
        """Lowest bag index containing ``v``."""
        for b, bag in enumerate(self.bags):
            if v in bag:
                return b
        raise KeyError(v)

    def tree_path(self, a: int, b: int) -> list[int]:
        """Bag ids on the tree path from ``a`` to ``b``, both ends included."""
        up_a, up_b = [a], [b]
        while self._depth[up_a[-1]] > self._depth[up_b[-1]]:
            up_a.append(self.parent[up_a[-1]])
        while self._depth[up_b[-1]] > self._depth[up_a[-1]]:
            up_b.append(self.parent[up_b[-1]])
        while up_a[-1] != up_b[-1]:
            up_a.append(self.parent[up_a[-1]])
            up_b.append(self.parent[up_b[-1]])
        return up_a + up_b[-2::-1]

    def rerooted(self, root: int) -> "Decomposition":
        if root == self.root:
            return self
        return Decomposition.from_tree_edges(self.bags, self.tree_edges(), root)

    def is_path_shaped(self) -> bool:
        return self.root == 0 and all(self.parent[i] == i - 1 for i in range(1, self.size))


def find_violation(g: Graph, t: Decomposition) -> Violation | None:
    """First failing decomposition axiom, or ``None`` when ``t`` is valid.

    Axioms are checked in order: every vertex is in a bag, every edge is in
    a bag, and the bags holding each vertex form a connected subtree.
    """
    for b, bag in enumerate(t.bags):
        for v in bag:
            if not (0 <= v < g.n):
                raise GraphError(f"bag {b} holds vertex {v}, out of range for n={g.n}")
    holders: list[list[int]] = [[] for _ in range(g.n)]
    for b, bag in enumerate(t.bags):
        for v in bag:
            holders[v].append(b)
    for v in range(g.n):
        if not holders[v]:
            return Violation("vertex-coverage", f"vertex {v} is in no bag", (v,))
    for u, v in g.edges():
        if not any(v in t.bags[b] for b in holders[u]):
            return Violation("edge-coverage", f"edge {{{u},{v}}} is in no bag", (u, v))
    for v in range(g.n):
        # connected iff exactly one holder has a parent that does not hold v
        tops = [b for b in holders[v] if t.parent[b] is None or v not in t.bags[t.parent[b]]]
        if len(tops) != 1:
            return Violation(
                "connectivity",
                f"bags holding vertex {v} are not connected: {holders[v]}",
                (v, tuple(holders[v])),
            )
    return None


def validate(g: Graph, t: Decomposition) -> None:
    """Raise :class:`InvalidDecompositionError` unless ``t`` decomposes ``g``."""
    violation = find_violation(g, t)
    if violation is not None:
        raise InvalidDecompositionError(violation)


def bag_diameter(g: Graph, bag: Iterable[int]) -> int:
    members = sorted(bag)
    best = 0
    for i, u in enumerate(members):
        dist = g.distances(u)
        for v in members[i + 1 :]:
            if dist[v] > best:
                best = dist[v]
    return int(best) if best != float("inf") else best


def length_of(g: Graph, t: Decomposition) -> int:
    """Largest graph distance between two vertices sharing a bag."""
    return max(bag_diameter(g, bag) for bag in t.bags)


def is_trimmed(t: Decomposition) -> bool:
    return _removable_subtree(t) is None


def _removable_subtree(t: Decomposition) -> int | None:
    for b in range(t.size):
        p = t.parent[b]
        if p is not None and t.vertices_in(t.subtree(b)) <= t.bags[p]:
            return b
    return None


def _drop_bags(t: Decomposition, drop: set[int]) -> Decomposition:
    keep = [b for b in range(t.size) if b not in drop]
    new_id = {b: i for i, b in enumerate(keep)}
    parent = tuple(None if t.parent[b] is None else new_id[t.parent[b]] for b in keep)
    return Decomposition(
        tuple(t.bags[b] for b in keep), parent, new_id[t.root], t.kind
    )


def trim(g: Graph, t: Decomposition) -> Decomposition:
    """Remove non-root subtrees whose vertices all lie in the parent bag.

    Repeats until every non-root subtree owns a vertex found nowhere else.
    Remaining bags keep their relative order.
    """
    while (b := _removable_subtree(t)) is not None:
        t = _drop_bags(t, set(t.subtree(b)))
    return t


def separator_check(g: Graph, t: Decomposition, j: int) -> bool:
    """Whether deleting bag ``j`` separates its subtree's vertices from the rest."""
    if j == t.root:
        raise ValueError("separator check needs a non-root bag")
    removed = t.bags[j]
    inside_bags = set(t.subtree(j))
    inside = t.vertices_in(inside_bags) - removed
    outside = t.vertices_in(b for b in range(t.size) if b not in inside_bags) - removed
    label = induced_components(g, removed)
    return not ({label[v] for v in inside} & {label[v] for v in outside})


def path_hits_bags(g: Graph, t: Decomposition, u: int, v: int) -> bool:
    """Whether a shortest ``u``-``v`` path meets every bag between their canonical bags."""
    path = set(shortest_path(g, u, v))
    return all(t.bags[b] & path for b in t.tree_path(t.canonical_bag(u), t.canonical_bag(v)))

