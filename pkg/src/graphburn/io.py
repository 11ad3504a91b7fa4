"""Text formats for graphs, decompositions, schedules and run reports.

Graph file::

    c optional comment
    p burn <n> <m>
    e <u> <v>          (m lines, 0-based vertex ids)

Decomposition file (1-based bag ids)::

    bag <id>: v1 v2 ...
    tedge <child> <parent>
    root <id>
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, TextIO

from .decomposition import Decomposition, DecompositionStructureError
from .graph import Graph


class FormatError(ValueError):
    """A file does not follow its format; message carries the line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise FormatError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "burn":
                raise FormatError("header must be 'p burn <n> <m>'", lineno)
            n, m = _int(parts[2], lineno), _int(parts[3], lineno)
            if n < 0 or m < 0:
                raise FormatError("negative count in header", lineno)
        elif parts[0] == "e":
            if n is None:
                raise FormatError("edge before header", lineno)
            if len(parts) != 3:
                raise FormatError("edge line must be 'e <u> <v>'", lineno)
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"vertex id out of range [0, {n})", lineno)
            if u == v:
                raise FormatError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise FormatError(f"duplicate edge {{{u},{v}}}", lineno)
            seen.add(key)
            edges.append((u, v))
        else:
            raise FormatError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise FormatError("missing 'p burn' header")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"p burn {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> Decomposition:
    """Parse the bag/tedge/root format.

    A decomposition whose tree is the chain ``1 <- 2 <- ... <- k`` rooted at
    bag 1 is returned as a path decomposition.
    """
    bags: dict[int, frozenset[int]] = {}
    tedges: list[tuple[int, int, int]] = []
    root = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        if line.startswith("bag"):
            head, sep, rest = line.partition(":")
            hp = head.split()
            if not sep or len(hp) != 2:
                raise FormatError("bag line must be 'bag <id>: v1 v2 ...'", lineno)
            bid = _int(hp[1], lineno)
            if bid in bags:
                raise FormatError(f"duplicate bag {bid}", lineno)
            if bid < 1:
                raise FormatError("bag ids start at 1", lineno)
            bags[bid] = frozenset(_int(tok, lineno) for tok in rest.split())
        elif line.startswith("tedge"):
            parts = line.split()
            if len(parts) != 3:
                raise FormatError("tree edge line must be 'tedge <child> <parent>'", lineno)
            tedges.append((_int(parts[1], lineno), _int(parts[2], lineno), lineno))
        elif line.startswith("root"):
            parts = line.split()
            if len(parts) != 2 or root is not None:
                raise FormatError("expected a single 'root <id>' line", lineno)
            root = _int(parts[1], lineno)
        else:
            raise FormatError(f"unknown line {line!r}", lineno)
    if not bags:
        raise FormatError("no bags")
    k = len(bags)
    if sorted(bags) != list(range(1, k + 1)):
        raise FormatError(f"bag ids must be 1..{k}")
    root = 1 if root is None else root
    if not (1 <= root <= k):
        raise FormatError(f"root {root} is not a bag")
    parent: list[int | None] = [None] * k
    for child, par, lineno in tedges:
        if not (1 <= child <= k and 1 <= par <= k):
            raise FormatError("tree edge names an unknown bag", lineno)
        if parent[child - 1] is not None:
            raise FormatError(f"bag {child} has two parents", lineno)
        parent[child - 1] = par - 1
    ordered = tuple(bags[i] for i in range(1, k + 1))
    try:
        t = Decomposition(ordered, tuple(parent), root - 1)
    except DecompositionStructureError as exc:
        raise FormatError(str(exc)) from None
    if t.is_path_shaped():
        return Decomposition.path(ordered)
    return t


def format_decomposition(t: Decomposition) -> str:
    lines = [f"bag {b + 1}: " + " ".join(map(str, sorted(bag))) for b, bag in enumerate(t.bags)]
    lines = [ln.rstrip() for ln in lines]
    lines.extend(f"tedge {c + 1} {p + 1}" for c, p in t.tree_edges())
    lines.append(f"root {t.root + 1}")
    return "\n".join(lines) + "\n"


def parse_schedule(text: str, n: int | None = None) -> list[int]:
    out = []
    for tok in text.split():
        try:
            v = int(tok)
        except ValueError:
            raise FormatError(f"schedule entry {tok!r} is not an integer") from None
        if v < 0 or (n is not None and v >= n):
            raise FormatError(f"schedule entry {v} out of range")
        out.append(v)
    return out


def format_schedule(schedule: Iterable[int]) -> str:
    return " ".join(map(str, schedule))


def read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def read_graph(path: str) -> Graph:
    return parse_graph(read_text(path))


def read_decomposition(path: str) -> Decomposition:
    return parse_decomposition(read_text(path))


@dataclass
class RunReport:
    """Outcome of one CLI run.

    JSON keys (sorted): ``algorithm``, ``bound``, ``complete``, ``completion``,
    ``lower``, ``n``, ``ratio``, ``schedule``, plus ``extra`` (algorithm
    specific) and ``wall_time`` only when timing was requested.
    """

    algorithm: str
    n: int
    schedule: list[int]
    completion: int
    complete: bool
    bound: int | None
    lower: int
    ratio: float | None
    extra: dict[str, Any] = field(default_factory=dict)
    wall_time: float | None = None

    def to_json(self) -> str:
        data = asdict(self)
        if data["wall_time"] is None:
            del data["wall_time"]
        return json.dumps(data, sort_keys=True, separators=(",", ":"))

    def to_text(self) -> str:
        lines = [
            f"algorithm: {self.algorithm}",
            f"n: {self.n}",
            f"schedule: {format_schedule(self.schedule)}",
            f"rounds: {self.completion}",
            f"complete: {'yes' if self.complete else 'no'}",
            f"bound: {self.bound if self.bound is not None else '-'}",
            f"lower: {self.lower}",
            f"ratio: {_fmt_ratio(self.ratio)}",
        ]
        lines.extend(f"{k}: {v}" for k, v in self.extra.items())
        if self.wall_time is not None:
            lines.append(f"wall_time: {self.wall_time:.6f}")
        return "\n".join(lines)

    def write(self, out: TextIO, as_json: bool) -> None:
        out.write((self.to_json() if as_json else self.to_text()) + "\n")


def _fmt_ratio(r: float | None) -> str:
    return "-" if r is None else f"{r:.4f}"
