import pytest

from corpus import brute_force_burning_number, complete_graph, small_corpus
from graphburn.burning import ceil_sqrt, exact_burning_number, lower_bound_diameter, simulate
from graphburn.decomposition import Decomposition, length_of
from graphburn.generators import gen_cycle, gen_interval, gen_star, interval_instance
from graphburn.graph import Graph, metrics
from graphburn.pathlength import (
    PreconditionError,
    burn_pathlen,
    grid_decomposition,
    normalize_path_decomposition,
    path_burn_schedule,
    pathlen_bound,
)


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def path_instances():
    out = [i for i in small_corpus()
           if i.decomposition is not None and i.decomposition.is_path_shaped()]
    out += [gen_interval(n, 10 * n, s) for n in (20, 40, 60) for s in range(5)]
    out += [gen_cycle(n) for n in (5, 9, 16)]
    return [i for i in out if i.diameter >= 2]


class TestPathLayout:
    @pytest.mark.parametrize("count,offsets", [(9, [2, 6, 8]), (4, [1, 3]), (1, [0])])
    def test_offsets(self, count, offsets):
        assert [p for p, _ in path_burn_schedule(count)] == offsets
        assert [r for _, r in path_burn_schedule(count)] == list(range(1, len(offsets) + 1))

    def test_every_length_up_to_400(self):
        for n in range(1, 401):
            rep = simulate(path(n), [p for p, _ in path_burn_schedule(n)])
            assert rep.complete and rep.completion_round == ceil_sqrt(n), n

    def test_matches_exact_small(self):
        for n in range(1, 10):
            assert exact_burning_number(path(n))[0] == ceil_sqrt(n)
            assert brute_force_burning_number(path(n)) == ceil_sqrt(n)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            path_burn_schedule(0)


class TestNormalize:
    def test_first_bag_dropped(self):
        g = path(4)
        t = Decomposition.path([{0, 1}, {0, 1, 2}, {2, 3}])
        assert normalize_path_decomposition(g, t).bags == (frozenset({0, 1, 2}), frozenset({2, 3}))

    def test_already_normal(self):
        t = Decomposition.path([{0, 1}, {1, 2}, {2, 3}])
        assert normalize_path_decomposition(path(4), t) == t

    def test_all_equal(self):
        t = Decomposition.path([{0, 1, 2}] * 3)
        assert normalize_path_decomposition(complete_graph(3), t).size == 1


class TestBurnPathlen:
    def test_p10(self):
        g = path(10)
        t = Decomposition.path([{i, i + 1} for i in range(9)])
        plan = burn_pathlen(g, t)
        assert plan.bound == 4 and plan.completion_round <= 4
        assert exact_burning_number(g)[0] == 4

    def test_grid_3x4(self):
        g, t = grid_decomposition(3, 4)
        plan = burn_pathlen(g, t)
        assert plan.path_length == 3 and plan.diameter == 5
        assert plan.bound == 5
        assert simulate(g, plan.schedule).completion_round <= 5

    @pytest.mark.parametrize("seed", range(8))
    def test_interval_plus_one(self, seed):
        inst = gen_interval(50, 500, seed)
        g, t = inst.graph, inst.decomposition
        assert length_of(g, t) <= 1
        if inst.diameter >= 2:
            plan = burn_pathlen(g, t)
            assert plan.completion_round <= ceil_sqrt(inst.diameter - 1) + 1

    @pytest.mark.parametrize("rows,cols", [(1, 5), (2, 3), (3, 3), (4, 9), (5, 5)])
    def test_grid_bound(self, rows, cols):
        g, t = grid_decomposition(rows, cols)
        d = rows + cols - 2
        assert length_of(g, t) == rows
        plan = burn_pathlen(g, t)
        assert plan.completion_round <= ceil_sqrt(d - 1) + rows

    def test_grid_shapes(self):
        g, t = grid_decomposition(2, 3)
        assert all(len(b) == 4 for b in t.bags) and length_of(g, t) == 2
        g, t = grid_decomposition(1, 5)
        assert g == path(5)
        assert t.bags == tuple(frozenset({i, i + 1}) for i in range(4))

    def test_small_diameter_uses_exact(self):
        plan = burn_pathlen(complete_graph(2), Decomposition.path([{0, 1}]))
        assert plan.used_exact_solver and plan.bound == plan.completion_round == 2
        plan = burn_pathlen(Graph(1), Decomposition.path([{0}]))
        assert plan.completion_round == 1

    def test_single_bag_after_normalizing(self):
        g = path(3)
        plan = burn_pathlen(g, Decomposition.path([{0, 1, 2}, {1, 2}]))
        assert plan.bound == 1 + plan.path_length
        assert plan.completion_round <= plan.bound

    def test_tree_shaped_rejected(self):
        inst = gen_star(4)
        with pytest.raises(PreconditionError):
            burn_pathlen(inst.graph, inst.decomposition)

    @pytest.mark.parametrize("inst", path_instances(), ids=lambda i: i.name)
    def test_bound_and_witness(self, inst):
        g, t = inst.graph, inst.decomposition
        plan = burn_pathlen(g, t)
        rep = simulate(g, plan.schedule)
        assert rep.complete
        d, pl = inst.diameter, plan.path_length
        assert rep.completion_round <= pathlen_bound(d, pl)
        lower = lower_bound_diameter(d)
        assert rep.completion_round / lower <= 1 + pl / lower
        # spine meets every interior bag of the normalised decomposition
        norm = plan.decomposition
        if norm.size > 1:
            spine = set(plan.spine)
            for bag in norm.bags[1:-1]:
                assert bag & spine
            assert plan.x in norm.bags[0] and plan.y in norm.bags[-1]

    def test_interval_triangle(self):
        inst = interval_instance([(0, 2), (1, 3), (2, 4)])
        assert inst.graph == complete_graph(3)
        assert metrics(inst.graph).diameter == 1
