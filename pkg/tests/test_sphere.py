from __future__ import annotations

import random

import numpy as np
import pytest

from sphereroute import (
    bfs_hops,
    hop_distance,
    induced_sphere,
    overlap,
    sphere,
    spherical_subgraph,
)
from sphereroute.synth import path_graph, random_connected_graph


def view_edges(view):
    return {
        tuple(sorted((int(view.to_parent[u]), int(view.to_parent[v]))))
        for u, v, _ in view.graph.edges()
    }


class TestSphere:
    def test_lens_radius_two(self, lens8):
        g, n = lens8
        got = set(sphere(g, n["s"], 2).members.tolist())
        assert got == {n["s"], n["u2"], n["u3"], n["a"], n["ap"]}

    def test_zero_radius(self):
        g = random_connected_graph(12, extra_edges=6, seed=1)
        ss = sphere(g, 5, 0)
        assert ss.members.tolist() == [5]
        assert ss.member_dist.tolist() == [0]

    def test_radius_beyond_eccentricity(self):
        g = path_graph(5)
        assert sphere(g, 2, 10).members.tolist() == [0, 1, 2, 3, 4]

    def test_monotone_nesting(self):
        g = random_connected_graph(40, extra_edges=25, seed=2)
        for r in range(5):
            a = set(sphere(g, 3, r).members.tolist())
            b = set(sphere(g, 3, r + 1).members.tolist())
            assert a <= b

    def test_errors(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            sphere(g, 99, 1)
        with pytest.raises(ValueError):
            sphere(g, 0, -1)


class TestSphericalSubgraph:
    def test_star_keeps_only_tree_edges(self, star5):
        view = spherical_subgraph(star5, 0, 1)
        assert view_edges(view) == {(0, 1), (0, 2), (0, 3)}

    def test_induced_star_keeps_chords(self, star5):
        view = induced_sphere(star5, 0, 1)
        assert view_edges(view) == {(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)}

    def test_zero_radius_single_node(self):
        g = random_connected_graph(10, extra_edges=4, seed=3)
        view = spherical_subgraph(g, 4, 0)
        assert view.graph.node_count == 1
        assert view.graph.edge_count == 0

    def test_tree_graph_views_coincide(self):
        g = path_graph(9)
        for v, r in ((4, 2), (0, 3), (8, 5)):
            assert view_edges(spherical_subgraph(g, v, r)) == view_edges(induced_sphere(g, v, r))

    @pytest.mark.parametrize("seed", range(6))
    def test_tree_edges_subset_of_induced(self, seed):
        g = random_connected_graph(35, extra_edges=20, seed=seed)
        v = seed % 35
        for r in (1, 2, 4):
            assert view_edges(spherical_subgraph(g, v, r)) <= view_edges(induced_sphere(g, v, r))

    @pytest.mark.parametrize("seed", range(6))
    def test_center_distances_preserved(self, seed):
        g = random_connected_graph(35, extra_edges=20, seed=100 + seed)
        v = (3 * seed) % 35
        for view in (spherical_subgraph(g, v, 3), induced_sphere(g, v, 3)):
            local_center = view.local_of(v)
            inside = bfs_hops(view.graph, local_center)
            outside = bfs_hops(g, v, cap=3)
            for local in range(view.graph.node_count):
                assert inside.dist[local] == outside.dist[int(view.to_parent[local])]


class TestInducedSphere:
    def test_lens_target_side(self, lens8):
        g, n = lens8
        view = induced_sphere(g, n["t"], 2)
        assert set(view.to_parent.tolist()) == {n["t"], n["u5"], n["u6"], n["a"], n["ap"]}
        assert view_edges(view) == {
            (n["u5"], n["t"]), (n["u6"], n["t"]), (n["u5"], n["u6"]),
            (n["a"], n["u5"]), (n["ap"], n["u5"]),
        }

    def test_whole_graph_at_diameter(self):
        g = random_connected_graph(20, extra_edges=10, seed=4)
        view = induced_sphere(g, 0, 50)
        assert view.graph == g


class TestOverlap:
    def test_lens_two_two(self, lens8):
        g, n = lens8
        assert overlap(g, n["s"], n["t"], 2, 2).tolist() == sorted([n["a"], n["ap"]])

    def test_lens_one_two_empty(self, lens8):
        g, n = lens8
        assert overlap(g, n["s"], n["t"], 1, 2).size == 0

    def test_same_node_nonempty(self):
        g = path_graph(6)
        assert 3 in overlap(g, 3, 3, 0, 0).tolist()

    @pytest.mark.parametrize("seed", range(5))
    def test_monotone_in_each_radius(self, seed):
        g = random_connected_graph(30, extra_edges=20, seed=seed)
        rng = random.Random(seed)
        s, t = rng.randrange(30), rng.randrange(30)
        for rs in range(3):
            for rt in range(3):
                base = set(overlap(g, s, t, rs, rt).tolist())
                assert base <= set(overlap(g, s, t, rs + 1, rt).tolist())
                assert base <= set(overlap(g, s, t, rs, rt + 1).tolist())

    @pytest.mark.parametrize("seed", range(8))
    def test_nonempty_when_radii_cover_distance(self, seed):
        g = random_connected_graph(40, extra_edges=15, seed=50 + seed)
        rng = random.Random(seed)
        s, t = rng.randrange(40), rng.randrange(40)
        d = hop_distance(g, s, t)
        rs = rng.randrange(d + 1)
        assert overlap(g, s, t, rs, d - rs).size > 0
