import math

import numpy as np
import pytest

from facbal import (
    Graph,
    bfs_distances,
    complete,
    cycle,
    dominating_set_reduction,
    empty,
    four_branch_tree,
    is_connected,
    path,
    sample_gnd,
    scores,
    star,
    unbalanced_expander,
)

import reference_impl as ref


class TestFamilies:
    def test_path_edges(self):
        assert list(path(4).edges()) == [(0, 1), (1, 2), (2, 3)]

    def test_star_shape(self):
        g = star(3)
        assert g.n == 4 and g.m == 3
        assert list(g.neighbors(0)) == [1, 2, 3]
        assert not g.has_edge(1, 2)

    def test_complete_edge_count(self):
        assert complete(4).m == 6

    def test_empty(self):
        g = empty(5)
        assert (g.n, g.m) == (5, 0)

    def test_cycle_degree(self):
        assert (cycle(5).degrees() == 2).all()

    def test_size_zero_rejected(self):
        for fn in (path, complete, empty, star):
            with pytest.raises(ValueError):
                fn(0)
        with pytest.raises(ValueError):
            cycle(2)


class TestGnd:
    def test_p_equal_one_gives_complete(self):
        assert sample_gnd(5, 4, seed=3) == complete(5)

    def test_vanishing_d_gives_empty(self):
        assert sample_gnd(50, 1e-9, seed=3).m == 0

    def test_seed_determinism(self):
        a = sample_gnd(100, 10, seed=42)
        b = sample_gnd(100, 10, seed=42)
        c = sample_gnd(100, 10, seed=43)
        assert a == b
        assert a != c

    def test_invalid_d(self):
        for d in (0, -1, 5):
            with pytest.raises(ValueError):
                sample_gnd(5, d, seed=1)

    def test_mean_degree_across_seeds(self):
        # Binomial(999, 50/999) mean over 100 fixed seeds lands within 50 +/- 2
        means = [2 * sample_gnd(1000, 50, seed=s).m / 1000 for s in range(100)]
        assert abs(float(np.mean(means)) - 50) < 2

    def test_edge_count_matches_binomial_moments(self):
        n, d, seeds = 60, 6, 200
        total = n * (n - 1) // 2
        p = d / (n - 1)
        counts = [sample_gnd(n, d, seed=s).m for s in range(seeds)]
        mu = total * p
        sigma_of_mean = math.sqrt(total * p * (1 - p) / seeds)
        assert abs(float(np.mean(counts)) - mu) <= 3 * sigma_of_mean


class TestUnbalancedExpander:
    def test_small_structure(self):
        inst = unbalanced_expander(4, seed=1)
        g = inst.graph
        assert g.n == 7
        assert inst.root == 6
        assert inst.new_vertices == (4, 5)
        assert list(g.neighbors(inst.root)) == [4, 5]
        assert set(g.neighbors(4)) >= {0, 1} and set(g.neighbors(5)) >= {2, 3}

    def test_blocks_partition_originals(self):
        inst = unbalanced_expander(49, seed=5)
        g = inst.graph
        seen = []
        for nv in inst.new_vertices:
            block = [int(u) for u in g.neighbors(nv) if u < 49]
            assert len(block) == 7
            seen.extend(block)
        assert sorted(seen) == list(range(49))

    def test_root_covers_everything_in_two_hops(self):
        inst = unbalanced_expander(64, seed=2)
        dist = bfs_distances(inst.graph, inst.root).dist
        assert int(dist.max()) <= 2

    def test_connected(self):
        inst = unbalanced_expander(36, seed=9)
        assert is_connected(inst.graph)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="perfect square"):
            unbalanced_expander(10, seed=1)


class TestFourBranchTree:
    def test_shape(self):
        g, labels = four_branch_tree()
        assert (g.n, g.m) == (12, 11)
        assert is_connected(g)  # 12 vertices, 11 edges, connected => tree
        assert g.degree(labels["c"]) == 4

    def test_center_eccentricity_is_longest_branch(self):
        g, labels = four_branch_tree()
        dist = bfs_distances(g, labels["c"]).dist
        assert int(dist.max()) == 5
        assert dist[labels["5/5"]] == 5

    def test_labels_cover_all_vertices(self):
        g, labels = four_branch_tree()
        assert sorted(labels.values()) == list(range(12))


class TestDominatingSetReduction:
    def figure_instance(self):
        # 4 originals in a path-like pattern: edges {v1,v2} and {v2,v3}
        return Graph(4, [(0, 1), (1, 2)])

    def test_figure_instance_wiring(self):
        g = self.figure_instance()
        red = dominating_set_reduction(g, h=2, bag_size=8)
        assert red.k == 3 and red.s == 4
        G = red.graph
        assert G.n == 4 + 4 * 8 + 1
        bags = [set(range(a, b)) for a, b in red.bag_ranges]
        # original 0 reaches bags {0, 1}; original 1 reaches {0, 1, 2};
        # original 2 reaches {1, 2}; original 3 only its own bag
        for i, expected in enumerate([{0, 1}, {0, 1, 2}, {1, 2}, {3}]):
            nbrs = set(int(x) for x in G.neighbors(i))
            touching = {j for j in range(4) if nbrs & bags[j]}
            assert touching == expected, i
            for j in touching:
                assert bags[j] <= nbrs  # all bag vertices, not just some
        # original edges survive
        assert G.has_edge(0, 1) and G.has_edge(1, 2) and not G.has_edge(0, 2)

    def test_bags_are_cliques(self):
        red = dominating_set_reduction(Graph(2, [(0, 1)]), h=1, bag_size=5)
        for a, b in red.bag_ranges:
            for u in range(a, b):
                assert set(range(a, b)) - {u} <= set(int(x) for x in red.graph.neighbors(u))

    def test_k2_instance_counts(self):
        red = dominating_set_reduction(Graph(2, [(0, 1)]), h=1, bag_size=8)
        assert red.graph.n == 2 + 16 + 1 == 19
        for i in (0, 1):
            nbrs = set(int(x) for x in red.graph.neighbors(i))
            assert set(range(2, 18)) <= nbrs  # both bags

    def test_root_degree_is_n(self):
        g = self.figure_instance()
        red = dominating_set_reduction(g, h=1, bag_size=3)
        assert red.graph.degree(red.root) == g.n
        assert set(int(x) for x in red.graph.neighbors(red.root)) == set(range(g.n))

    def test_default_bag_size_and_void_flag(self):
        g = Graph(3, [(0, 1)])
        assert not dominating_set_reduction(g, 1).guarantees_void
        assert dominating_set_reduction(g, 1, bag_size=5).guarantees_void

    def test_forward_direction_on_figure_instance(self):
        g = self.figure_instance()
        red = dominating_set_reduction(g, h=2)  # bag = 64
        ds = ref.brute_force_dominating_set(g, 2)
        assert ds is not None
        rep = scores(red.graph, [red.root, *ds])
        assert rep.scores[0] <= g.n + 1 - 2
        assert min(rep.scores) < red.s

    def test_non_dominating_set_keeps_root_score_high(self):
        g = self.figure_instance()
        red = dominating_set_reduction(g, h=2)
        bad = (0, 3)  # leaves v3 (id 2) undominated
        rep = scores(red.graph, [red.root, *bad])
        assert rep.scores[0] >= g.n**3 / red.k > red.s
