from __future__ import annotations

import random

import numpy as np
import pytest

from sphereroute import DisconnectedError, Graph, bfs_hops, dijkstra, hop_distance
from sphereroute.synth import path_graph, random_connected_graph

from conftest import brute_force_min_cost, small_random_graphs


class TestBfsHops:
    def test_unit_radius_on_path(self):
        g = path_graph(5)
        res = bfs_hops(g, 2, cap=1)
        assert res.distance(1) == 1
        assert res.distance(2) == 0
        assert res.distance(3) == 1
        assert res.distance(0) is None
        assert res.distance(4) is None

    def test_lens_distances(self, lens8):
        g, n = lens8
        res = bfs_hops(g, n["s"])
        assert res.distance(n["a"]) == 2
        assert res.distance(n["ap"]) == 2
        assert res.distance(n["u5"]) == 3
        assert res.distance(n["t"]) == 4

    def test_zero_cap(self):
        g = random_connected_graph(10, extra_edges=5, seed=1)
        res = bfs_hops(g, 4, cap=0)
        assert res.distance(4) == 0
        assert sum(1 for v in range(10) if res.distance(v) is not None) == 1

    def test_parent_tree_consistency(self):
        g = random_connected_graph(50, extra_edges=40, seed=2)
        res = bfs_hops(g, 0)
        for v in range(1, 50):
            p = int(res.parent[v])
            assert res.dist[v] == res.dist[p] + 1

    @pytest.mark.parametrize("cap", [0, 1, 2, 4])
    def test_cap_equals_filtered_full_bfs(self, cap):
        g = random_connected_graph(40, extra_edges=25, seed=3)
        full = bfs_hops(g, 7)
        capped = bfs_hops(g, 7, cap=cap)
        want = {v for v in range(40) if full.dist[v] >= 0 and full.dist[v] <= cap}
        got = {v for v in range(40) if capped.dist[v] >= 0}
        assert got == want

    def test_invalid_node(self):
        with pytest.raises(ValueError):
            bfs_hops(path_graph(3), 9)


class TestHopDistance:
    def test_same_node(self):
        assert hop_distance(path_graph(4), 2, 2) == 0

    def test_lens_pair(self, lens8):
        g, n = lens8
        assert hop_distance(g, n["s"], n["t"]) == 4

    def test_path_endpoints(self):
        assert hop_distance(path_graph(10), 0, 9) == 9

    def test_disconnected(self):
        g = Graph.from_edges(4, [(0, 1, 1.0), (2, 3, 1.0)])
        with pytest.raises(DisconnectedError):
            hop_distance(g, 0, 3)

    def test_matches_unidirectional_bfs_on_random_pairs(self):
        rng = random.Random(0)
        total = 0
        for seed in range(5):
            g = random_connected_graph(80, extra_edges=60, seed=seed)
            for _ in range(200):
                s = rng.randrange(80)
                t = rng.randrange(80)
                res = bfs_hops(g, s)
                assert hop_distance(g, s, t) == res.distance(t)
                total += 1
        assert total == 1000

    def test_triangle_inequality_sampled(self):
        g = random_connected_graph(60, extra_edges=50, seed=9)
        rng = random.Random(1)
        for _ in range(300):
            s, t, x = (rng.randrange(60) for _ in range(3))
            assert hop_distance(g, s, t) <= hop_distance(g, s, x) + hop_distance(g, x, t)


class TestDijkstra:
    def test_triangle(self):
        # enumeration oracle: direct 0-2 costs 3, via node 1 costs 2
        g = Graph.from_edges(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 3.0)])
        assert brute_force_min_cost(g, 0, 2) == 2.0
        p = dijkstra(g, 0, 2)
        assert p.nodes == [0, 1, 2]
        assert p.cost == 2.0

    def test_identity(self):
        p = dijkstra(path_graph(4), 2, 2)
        assert p.nodes == [2]
        assert p.cost == 0.0

    def test_unique_path(self):
        p = dijkstra(path_graph(3), 0, 2)
        assert p.nodes == [0, 1, 2]
        assert p.cost == 2.0

    def test_unreachable(self):
        g = Graph.from_edges(3, [(0, 1, 1.0)])
        with pytest.raises(DisconnectedError):
            dijkstra(g, 0, 2)

    def test_tie_break_prefers_lower_id(self):
        # two equal-cost routes through nodes 1 and 2; 1 wins the tie
        g = Graph.from_edges(4, [(0, 1, 1.0), (0, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)])
        assert dijkstra(g, 0, 3).nodes == [0, 1, 3]

    def test_oracle_equivalence_small_graphs(self):
        count = 0
        for g in small_random_graphs(20, seed=5):
            for u in range(g.node_count):
                for w in range(g.node_count):
                    want = brute_force_min_cost(g, u, w)
                    if want is None:
                        continue
                    assert dijkstra(g, u, w).cost == want
                    count += 1
        assert count > 100

    def test_path_cost_matches_edge_sum(self):
        g = random_connected_graph(60, extra_edges=50, seed=11)
        rng = random.Random(2)
        for _ in range(50):
            u, w = rng.randrange(60), rng.randrange(60)
            p = dijkstra(g, u, w)
            total = sum(g.edge_weight(a, b) for a, b in zip(p.nodes, p.nodes[1:]))
            assert p.cost == pytest.approx(total, rel=1e-9)
