import pytest

from corpus import small_corpus
from graphburn.decomposition import (
    Decomposition,
    DecompositionStructureError,
    InvalidDecompositionError,
    find_violation,
    is_trimmed,
    length_of,
    path_hits_bags,
    separator_check,
    trim,
    validate,
)
from graphburn.generators import gen_interval, gen_ktree_chordal, gen_spider, rng_for
from graphburn.graph import Graph
from graphburn.pathlength import grid_decomposition


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def corpus_with_decomp():
    out = [i for i in small_corpus() if i.decomposition is not None]
    out += [gen_ktree_chordal(30, k, s) for k in (1, 2, 3) for s in range(3)]
    out += [gen_interval(40, 200, s) for s in range(4)]
    out += [gen_spider(4, 5)]
    return out


class TestStructure:
    def test_two_roots(self):
        with pytest.raises(DecompositionStructureError):
            Decomposition((frozenset({0}), frozenset({1})), (None, None), 0)

    def test_cycle(self):
        with pytest.raises(DecompositionStructureError):
            Decomposition((frozenset({0}), frozenset({1}), frozenset({2})), (None, 2, 1), 0)

    def test_path_shape_enforced(self):
        with pytest.raises(DecompositionStructureError):
            Decomposition((frozenset({0}), frozenset({1}), frozenset({2})), (None, 0, 0), 0, "path")

    def test_tree_edges_orientation(self):
        t = Decomposition.from_tree_edges([{0}, {0, 1}, {0, 2}], [(0, 1), (2, 0)], root=1)
        assert t.parent == (1, None, 0)
        assert t.tree_path(2, 1) == [2, 0, 1]


class TestValidate:
    def test_p3_ok(self):
        assert find_violation(path(3), Decomposition.path([{0, 1}, {1, 2}])) is None

    def test_p3_uncovered_edge(self):
        v = find_violation(path(3), Decomposition.path([{0}, {2}]))
        # vertex 1 is in no bag; with it added the edge is the first failure
        assert v.axiom == "vertex-coverage"
        v = find_violation(path(3), Decomposition.path([{0}, {1, 2}]))
        assert v.axiom == "edge-coverage" and v.witness == (0, 1)

    def test_connectivity(self):
        g = Graph(4, [(0, 1), (0, 3)])
        g = Graph(4, [(0, 1), (0, 3), (1, 2)])
        t = Decomposition.path([{0, 1}, {1, 2}, {0, 3}])
        v = find_violation(g, t)
        assert v.axiom == "connectivity" and v.witness[0] == 0
        with pytest.raises(InvalidDecompositionError):
            validate(g, t)

    @pytest.mark.parametrize("inst", corpus_with_decomp(), ids=lambda i: i.name)
    def test_generated_valid(self, inst):
        validate(inst.graph, inst.decomposition)


class TestLength:
    def test_clique_bags(self):
        inst = gen_ktree_chordal(15, 3, seed=1)
        assert length_of(inst.graph, inst.decomposition) == 1

    def test_bag_at_distance_three(self):
        # one bag holding both ends of P_4
        assert length_of(path(4), Decomposition.path([{0, 1, 2, 3}])) == 3

    @pytest.mark.parametrize("rows,cols", [(1, 5), (2, 3), (3, 4), (4, 4), (3, 7)])
    def test_grid(self, rows, cols):
        g, t = grid_decomposition(rows, cols)
        assert length_of(g, t) == rows
        assert t.size == cols - 1


class TestTrim:
    def test_child_subset_removed(self):
        t = Decomposition.from_tree_edges([{0, 1, 2}, {0, 1}], [(1, 0)], root=0)
        out = trim(Graph(3, [(0, 1), (1, 2)]), t)
        assert out.bags == (frozenset({0, 1, 2}),)

    def test_idempotent_on_trimmed(self):
        g = path(5)
        t = Decomposition.path([{0, 1}, {1, 2}, {2, 3}, {3, 4}])
        assert is_trimmed(t)
        assert trim(g, t) == t

    def test_chain(self):
        g = Graph(3, [(0, 1), (1, 2)])
        t = Decomposition((frozenset({0, 1}), frozenset({0, 1}), frozenset({0, 1, 2})),
                          (1, 2, None), 2)
        out = trim(g, t)
        assert out.bags == (frozenset({0, 1, 2}),) and out.root == 0

    @pytest.mark.parametrize("inst", corpus_with_decomp(), ids=lambda i: i.name)
    def test_preserves_validity_and_length(self, inst):
        g, t = inst.graph, inst.decomposition
        before = length_of(g, t)
        out = trim(g, t)
        validate(g, out)
        assert is_trimmed(out)
        assert length_of(g, out) <= before

    def test_padded_decomposition(self):
        # add redundant leaves to a k-tree decomposition, trim removes exactly them
        inst = gen_ktree_chordal(20, 2, seed=4)
        t = inst.decomposition
        rng = rng_for(9)
        bags = list(t.bags)
        parent = list(t.parent)
        for _ in range(10):
            host = int(rng.integers(len(bags)))
            bags.append(frozenset(list(bags[host])[:2]))
            parent.append(host)
        padded = Decomposition(tuple(bags), tuple(parent), t.root)
        validate(inst.graph, padded)
        out = trim(inst.graph, padded)
        assert out.size == t.size
        assert length_of(inst.graph, out) == length_of(inst.graph, padded)


class TestSeparator:
    def test_p5_interior(self):
        t = Decomposition.path([{0, 1}, {1, 2}, {2, 3}, {3, 4}])
        assert separator_check(path(5), t, 1)

    def test_root_rejected(self):
        t = Decomposition.path([{0, 1}, {1, 2}])
        with pytest.raises(ValueError):
            separator_check(path(3), t, 0)

    def test_detects_non_separator(self):
        # a bag that is not a true separator of a cycle decomposition
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        t = Decomposition.path([{0, 1}, {1, 2}, {2, 3}])
        assert find_violation(g, t) is not None
        assert not separator_check(g, t, 1)

    def test_path_before_after_split(self):
        inst = gen_interval(40, 200, seed=2)
        g, t = inst.graph, trim(inst.graph, inst.decomposition)
        for j in range(1, t.size - 1):
            assert separator_check(g, t, j)

    @pytest.mark.parametrize("inst", corpus_with_decomp(), ids=lambda i: i.name)
    def test_every_non_root_bag(self, inst):
        g = inst.graph
        t = trim(g, inst.decomposition)
        for j in range(t.size):
            if j != t.root:
                assert separator_check(g, t, j)


class TestPathHitsBags:
    def test_same_bag(self):
        t = Decomposition.path([{0, 1}, {1, 2}])
        assert path_hits_bags(path(3), t, 0, 1)

    def test_p5_ends(self):
        t = Decomposition.path([{0, 1}, {1, 2}, {2, 3}, {3, 4}])
        assert path_hits_bags(path(5), t, 0, 4)

    def test_sampled_pairs(self):
        rng = rng_for(11)
        pool = corpus_with_decomp()
        for _ in range(50):
            inst = pool[int(rng.integers(len(pool)))]
            g = inst.graph
            t = trim(g, inst.decomposition)
            u, v = (int(x) for x in rng.integers(0, g.n, size=2))
            assert path_hits_bags(g, t, u, v)

    @pytest.mark.parametrize("inst", corpus_with_decomp()[:60], ids=lambda i: i.name)
    def test_all_pairs(self, inst):
        g = inst.graph
        t = trim(g, inst.decomposition)
        for u in range(g.n):
            for v in range(u, g.n):
                assert path_hits_bags(g, t, u, v)
