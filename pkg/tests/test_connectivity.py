import pytest
from hypothesis import given, settings

from srdkit.connectivity import (
    count_min_cuts,
    edge_connectivity,
    enumerate_min_cuts,
    is_edge_cut,
    local_edge_connectivity,
    min_edge_cut,
    separates,
    upper_edge_connectivity,
)
from srdkit.errors import GraphStructureError
from srdkit.graph import (
    Graph,
    complete_graph,
    contract,
    cycle_graph,
    grid_graph,
    grid_vertex,
    path_graph,
    petersen_graph,
    star_graph,
)

from conftest import small_graphs
from oracles import all_labeled_graphs, oracle_all_min_cuts, oracle_lambda


def k4_minus_edge():
    # drop (0,1); vertices 2,3 keep degree 3
    return Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


class TestLocalEdgeConnectivity:
    def test_complete_graph_pair(self):
        assert local_edge_connectivity(complete_graph(4), 0, 1) == 3
        assert local_edge_connectivity(complete_graph(4), 1, 3) == 3

    def test_grid_2x3_corners(self):
        g = grid_graph(2, 3)
        a = grid_vertex(2, 3, 0, 0)
        b = grid_vertex(2, 3, 1, 2)
        assert local_edge_connectivity(g, a, b) == 2

    def test_grid_2x3_middle_column(self):
        g = grid_graph(2, 3)
        top = grid_vertex(2, 3, 0, 1)
        bottom = grid_vertex(2, 3, 1, 1)
        assert local_edge_connectivity(g, top, bottom) == 3

    def test_parallel_edges_count(self):
        g = Graph(2, [(0, 1), (0, 1), (0, 1)])
        assert local_edge_connectivity(g, 0, 1) == 3

    def test_bad_pairs(self):
        g = path_graph(3)
        with pytest.raises(GraphStructureError):
            local_edge_connectivity(g, 1, 1)
        with pytest.raises(GraphStructureError):
            local_edge_connectivity(g, 0, 9)

    def test_matches_oracle_exhaustively_n4(self):
        for n, edges in all_labeled_graphs(4, connected_only=False):
            g = Graph(n, edges)
            for u in range(n):
                for v in range(u + 1, n):
                    assert local_edge_connectivity(g, u, v) == oracle_lambda(
                        n, edges, u, v
                    ), (edges, u, v)

    @settings(max_examples=60)
    @given(small_graphs(max_vertices=6))
    def test_matches_oracle_random(self, g):
        edges = list(g.edges)
        assert local_edge_connectivity(g, 0, g.vertex_count - 1) == oracle_lambda(
            g.vertex_count, edges, 0, g.vertex_count - 1
        )


class TestMinEdgeCut:
    @settings(max_examples=60)
    @given(small_graphs(max_vertices=6))
    def test_certificate_is_minimum_and_separates(self, g):
        u, v = 0, g.vertex_count - 1
        cert = min_edge_cut(g, u, v)
        assert cert.value == len(cert.cut)
        assert separates(g, cert.cut, u, v)
        assert cert.value == oracle_lambda(g.vertex_count, list(g.edges), u, v)


class TestEnumerateMinCuts:
    def test_triangle_pair_has_two(self):
        cuts = enumerate_min_cuts(cycle_graph(3), 0, 1)
        assert [sorted(c.cut) for c in cuts] == [[0, 1], [0, 2]]

    def test_c4_opposite_has_four(self):
        cuts = enumerate_min_cuts(cycle_graph(4), 0, 2)
        assert len(cuts) == 4

    def test_path_endpoints(self):
        cuts = enumerate_min_cuts(path_graph(4), 0, 3)
        assert [sorted(c.cut) for c in cuts] == [[0], [1], [2]]

    def test_sorted_lexicographically(self):
        cuts = enumerate_min_cuts(cycle_graph(4), 0, 2)
        keys = [tuple(sorted(c.cut)) for c in cuts]
        assert keys == sorted(keys)

    def test_limit_truncates_deterministically(self):
        a = enumerate_min_cuts(cycle_graph(4), 0, 2, limit=2)
        b = enumerate_min_cuts(cycle_graph(4), 0, 2, limit=2)
        assert len(a) == 2
        assert [c.cut for c in a] == [c.cut for c in b]

    def test_count_min_cuts_cap(self):
        assert count_min_cuts(cycle_graph(4), 0, 2, cap=10) == 4
        assert count_min_cuts(cycle_graph(4), 0, 2, cap=2) == 3  # means "> 2"

    def test_matches_oracle_exhaustively_n4(self):
        for n, edges in all_labeled_graphs(4):
            g = Graph(n, edges)
            for u in range(n):
                for v in range(u + 1, n):
                    lam, expect = oracle_all_min_cuts(n, edges, u, v)
                    got = enumerate_min_cuts(g, u, v)
                    assert [c.cut for c in got] == expect, (edges, u, v)
                    assert all(c.value == lam for c in got)

    @settings(max_examples=40)
    @given(small_graphs(max_vertices=5))
    def test_matches_oracle_random(self, g):
        n, edges = g.vertex_count, list(g.edges)
        for u in range(n):
            for v in range(u + 1, n):
                _, expect = oracle_all_min_cuts(n, edges, u, v)
                got = enumerate_min_cuts(g, u, v)
                assert [c.cut for c in got] == expect


class TestGlobalValues:
    def test_examples(self):
        assert edge_connectivity(k4_minus_edge()) == 2
        assert upper_edge_connectivity(k4_minus_edge()) == 3
        assert edge_connectivity(cycle_graph(5)) == 2
        assert upper_edge_connectivity(cycle_graph(5)) == 2
        assert edge_connectivity(star_graph(4)) == 1
        assert upper_edge_connectivity(star_graph(4)) == 1
        assert edge_connectivity(petersen_graph()) == 3
        assert upper_edge_connectivity(petersen_graph()) == 3

    def test_disconnected_lambda_zero(self):
        assert edge_connectivity(Graph(3, [(0, 1)])) == 0

    def test_upper_requires_two_vertices(self):
        with pytest.raises(GraphStructureError):
            upper_edge_connectivity(Graph(1, []))


class TestSeparatesAndCuts:
    def test_separates(self):
        g = path_graph(3)
        assert separates(g, {0}, 0, 2)
        assert not separates(g, {1}, 0, 1)

    def test_is_edge_cut(self):
        g = cycle_graph(4)
        assert not is_edge_cut(g, {0})
        assert is_edge_cut(g, {0, 2})


class TestContractionInteraction:
    def test_contraction_never_lowers_lambda_exhaustive(self):
        from itertools import combinations

        for n, edges in all_labeled_graphs(4):
            g = Graph(n, edges)
            for size in range(1, n - 1):
                for xs in combinations(range(n), size):
                    res = contract(g, xs)
                    kept = [v for v in range(n) if v not in xs]
                    for i, u in enumerate(kept):
                        for v in kept[i + 1:]:
                            lam_g = local_edge_connectivity(g, u, v)
                            lam_c = local_edge_connectivity(
                                res.graph, res.vertex_map[u], res.vertex_map[v]
                            )
                            assert lam_c >= lam_g, (edges, xs, u, v)

    def test_min_cut_side_contraction_preserves_lambda(self):
        # contracting the far side of a minimum x-y cut preserves
        # lambda(u, v) for u, v on the near side
        for n, edges in all_labeled_graphs(5):
            g = Graph(n, edges)
            for x in range(n):
                for y in range(x + 1, n):
                    for cert in enumerate_min_cuts(g, x, y):
                        side = _side_of(g, cert.cut, x)
                        far = frozenset(range(n)) - side
                        if len(side) < 2 or not far:
                            continue
                        res = contract(g, far)
                        pairs = sorted(side)
                        for i, u in enumerate(pairs):
                            for v in pairs[i + 1:]:
                                assert local_edge_connectivity(
                                    res.graph,
                                    res.vertex_map[u],
                                    res.vertex_map[v],
                                ) == local_edge_connectivity(g, u, v), (
                                    edges, (x, y), sorted(cert.cut), (u, v),
                                )


def _side_of(g, cut, start):
    from collections import deque

    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b, eid in g.adj[a]:
            if eid in cut or b in seen:
                continue
            seen.add(b)
            queue.append(b)
    return frozenset(seen)
