"""Regenerate tests/data/generators.golden (only when formats change on purpose)."""

from pathlib import Path

from graphburn.generators import gen_interval, gen_ktree_chordal, gen_random_min_degree
from graphburn.io import format_decomposition, format_graph

GOLDEN = Path(__file__).parent / "data" / "generators.golden"

CASES = [
    ("mindeg 30 5 seed 1", lambda: gen_random_min_degree(30, 5, 1)),
    ("mindeg 40 23 seed 2", lambda: gen_random_min_degree(40, 23, 2)),
    ("interval 25 250 seed 3", lambda: gen_interval(25, 250, 3)),
    ("ktree 20 2 seed 3", lambda: gen_ktree_chordal(20, 2, 3)),
    ("ktree 15 1 seed 9", lambda: gen_ktree_chordal(15, 1, 9)),
]


def render() -> str:
    parts = []
    for label, build in CASES:
        inst = build()
        parts.append(f"== {label}\n" + format_graph(inst.graph))
        if inst.decomposition is not None:
            parts.append(format_decomposition(inst.decomposition))
    return "".join(parts)


if __name__ == "__main__":
    GOLDEN.write_text(render(), encoding="utf-8")
