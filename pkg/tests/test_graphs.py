import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from utils.core.errors import InvalidParameterError
from utils.data.density import DensitySpec
from utils.data.points import PointSet, append_origin, generate
from utils.graphs import (
    WeightedDigraph, WeightedGraph, build_gabriel, build_graph, build_jth_nng, build_knng,
    build_knng_undirected, build_mdsf, build_ong, count_minimal_elements, count_reciprocal_pairs, total_weight
)
from utils.graphs import oracles
from utils.graphs.gabriel import direction_patches
from utils.limits.families import GraphFamily
from utils.spatial.cones import ConeOrder
from strategies import lattice_point_sets, point_sets


def _uniform(n, d, seed):
    return generate(n, d, DensitySpec.uniform(), seed)


def _same_edges(graph, expected):
    assert graph.directed == expected.directed
    assert graph.n == expected.n
    assert graph.src.tolist() == expected.src.tolist()
    assert graph.dst.tolist() == expected.dst.tolist()
    assert graph.length.tolist() == expected.length.tolist()


def _is_tree_towards(graph, root):
    # Todo vértice chega à raiz seguindo a única aresta de saída
    parent = np.full(graph.n, -1)
    parent[graph.src] = graph.dst
    for v in range(graph.n):
        seen = 0
        while v != root:
            v = parent[v]
            seen += 1
            if v < 0 or seen > graph.n:
                return False
    return True


class TestHandExamples:

    def test_first_nearest_neighbour_line(self, line_points):
        g = build_jth_nng(line_points, 1)
        assert g.edges() == [(0, 1, 1.0), (1, 0, 1.0), (2, 1, 2.0)]
        assert total_weight(g, 1.0) == 4.0

    def test_second_nearest_neighbour_line(self, line_points):
        g = build_jth_nng(line_points, 2)
        assert g.edges() == [(0, 2, 3.0), (1, 2, 2.0), (2, 0, 3.0)]
        assert total_weight(g, 1.0) == 8.0

    def test_knng_line(self, line_points):
        g = build_knng(line_points, 2)
        assert g.edge_count == 6
        assert total_weight(g, 1.0) == 12.0

    def test_undirected_line(self, line_points):
        g = build_knng_undirected(line_points, 1)
        assert not g.directed
        assert g.edges() == [(0, 1, 1.0), (1, 2, 2.0)]
        assert total_weight(g, 1.0) == 3.0

    def test_undirected_two_points(self):
        g = build_knng_undirected(PointSet([[0.1, 0.1], [0.4, 0.5]]), 1)
        assert g.edge_count == 1

    def test_online_line(self):
        g = build_ong(PointSet([0.1, 0.9, 0.5]))
        assert g.edge_set() == {(1, 0), (2, 0)}
        assert g.length.tolist() == pytest.approx([0.8, 0.4])
        assert total_weight(g, 1.0) == pytest.approx(1.2)

    def test_online_two_points(self):
        g = build_ong(PointSet([[0.3, 0.3], [0.6, 0.1]]))
        assert g.edges() == [(1, 0, pytest.approx(math.hypot(0.3, 0.2)))]

    def test_mdsf_star(self, star_points):
        g = build_mdsf(star_points, ConeOrder.star())
        assert g.edge_set() == {(1, 0), (2, 0)}
        assert dict(zip(g.src.tolist(), g.length.tolist())) == {
            1: pytest.approx(math.sqrt(0.125)), 2: pytest.approx(math.sqrt(0.2525))}
        assert star_points.n - g.edge_count == 1

    def test_mdsf_with_origin(self, star_points):
        g = build_graph(star_points, GraphFamily.mdsf(with_origin_sink=True))
        assert g.n == 4
        assert g.edge_set() == {(1, 0), (2, 1), (3, 1)}
        assert _is_tree_towards(g, 0)

    def test_mdsf_with_origin_already_appended(self, star_points):
        augmented = append_origin(star_points)
        g = build_graph(augmented, GraphFamily.mdsf(with_origin_sink=True))
        assert g.n == 4 and g.edge_count == 3

    def test_gabriel_triangle(self, triangle_points):
        g = build_gabriel(triangle_points)
        assert g.edge_set() == {(0, 1), (0, 2), (1, 2)}
        assert total_weight(g, 1.0) == pytest.approx(1.0 + 2.0 * math.sqrt(1.25), rel=1e-14)
        assert total_weight(g, 1.0) == pytest.approx(3.23607, abs=1e-5)

    def test_gabriel_blocked_edge(self):
        # (0.5, 0.1) está dentro da bola de diâmetro entre (0,0) e (1,0)
        g = build_gabriel(PointSet([[0.0, 0.0], [1.0, 0.0], [0.5, 0.1]]))
        assert g.edge_set() == {(0, 2), (1, 2)}

    def test_gabriel_two_points(self):
        g = build_gabriel(PointSet([[0.2, 0.7], [0.9, 0.1]]))
        assert g.edge_count == 1

    def test_counts(self, line_points, star_points):
        assert count_reciprocal_pairs(line_points) == 1
        assert count_reciprocal_pairs(PointSet([[0.0, 0.0], [1.0, 1.0]])) == 1
        assert count_minimal_elements(star_points, ConeOrder.star()) == 1
        assert count_minimal_elements(PointSet([[0.4, 0.4]]), ConeOrder.star()) == 1


class TestInvalidInputs:

    def test_rank_must_be_below_n(self, line_points):
        with pytest.raises(InvalidParameterError):
            build_jth_nng(line_points, 3)
        with pytest.raises(InvalidParameterError):
            build_knng(line_points, 3)

    def test_single_point(self):
        ps = PointSet([[0.5, 0.5]])
        for build in (build_ong, build_gabriel, lambda p: build_knng(p, 1)):
            with pytest.raises(InvalidParameterError):
                build(ps)
        assert build_mdsf(ps, ConeOrder.star()).edge_count == 0

    def test_mdsf_is_planar(self, line_points):
        with pytest.raises(InvalidParameterError):
            build_mdsf(line_points, ConeOrder.star())

    def test_graph_validation(self):
        with pytest.raises(InvalidParameterError):
            WeightedDigraph(2, [0], [0], [0.0])
        with pytest.raises(InvalidParameterError):
            WeightedDigraph(2, [0], [2], [1.0])
        with pytest.raises(InvalidParameterError):
            WeightedDigraph(2, [0, 1], [1], [1.0])

    def test_undirected_canonical_form(self):
        g = WeightedGraph(3, [2, 1, 0], [0, 0, 1], [2.0, 1.0, 1.0])
        assert g.edges() == [(0, 1, 1.0), (0, 2, 2.0)]
        assert g.degrees().tolist() == [2, 1, 1]


class TestOracleEquivalence:

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("j", [1, 2, 4])
    def test_jth_nng(self, d, j):
        ps = _uniform(150, d, 100 + d)
        _same_edges(build_jth_nng(ps, j), oracles.brute_jth_nng(ps, j))

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_knng(self, d):
        ps = _uniform(150, d, 200 + d)
        _same_edges(build_knng(ps, 4), oracles.brute_knng(ps, 4))

    @pytest.mark.parametrize("k", [1, 3])
    def test_knng_undirected(self, k):
        ps = _uniform(150, 2, 300 + k)
        _same_edges(build_knng_undirected(ps, k), oracles.brute_knng_undirected(ps, k))

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_ong(self, d):
        ps = _uniform(300, d, 400 + d)
        _same_edges(build_ong(ps), oracles.brute_ong(ps))

    @pytest.mark.parametrize("seed", [1, 2])
    def test_mdsf(self, seed):
        rng = np.random.default_rng(seed)
        order = ConeOrder(rng.uniform(0.0, 2.0 * math.pi), rng.uniform(0.1, math.pi))
        ps = _uniform(500, 2, 500 + seed)
        _same_edges(build_mdsf(ps, order), oracles.brute_mdsf(ps, order))

    def test_mdsf_star(self):
        ps = _uniform(500, 2, 77)
        _same_edges(build_mdsf(ps, ConeOrder.star()), oracles.brute_mdsf(ps, ConeOrder.star()))

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_gabriel(self, d):
        ps = _uniform(250, d, 600 + d)
        _same_edges(build_gabriel(ps), oracles.brute_gabriel(ps))

    def test_gabriel_through_fallback_scan(self, monkeypatch):
        import utils.graphs.gabriel as gabriel

        monkeypatch.setattr(gabriel, 'GABRIEL_NEIGHBOURS', {2: 2})
        monkeypatch.setattr(gabriel, 'GABRIEL_MAX_NEIGHBOURS', 4)
        ps = _uniform(200, 2, 650)
        _same_edges(build_gabriel(ps), oracles.brute_gabriel(ps))

    def test_gabriel_clustered_points(self):
        # Um aglomerado denso e poucos pontos isolados: listas de candidatos precisam crescer
        rng = np.random.default_rng(9)
        coords = np.vstack([0.5 + 0.01 * rng.random((200, 2)), rng.random((8, 2))])
        ps = PointSet(coords)
        _same_edges(build_gabriel(ps), oracles.brute_gabriel(ps))

    def test_counts(self):
        ps = _uniform(300, 2, 700)
        assert count_reciprocal_pairs(ps) == oracles.brute_reciprocal_pairs(ps)
        order = ConeOrder(2.0, 1.0)
        assert count_minimal_elements(ps, order) == oracles.brute_minimal_elements(ps, order)

    @given(ps=point_sets(max_points=40), k=st.integers(1, 3))
    @settings(max_examples=50, deadline=None)
    def test_random_instances(self, ps, k):
        k = min(k, ps.n - 1)
        _same_edges(build_jth_nng(ps, k), oracles.brute_jth_nng(ps, k))
        _same_edges(build_knng(ps, k), oracles.brute_knng(ps, k))
        _same_edges(build_knng_undirected(ps, k), oracles.brute_knng_undirected(ps, k))
        _same_edges(build_ong(ps), oracles.brute_ong(ps))
        _same_edges(build_gabriel(ps), oracles.brute_gabriel(ps))

    @given(ps=point_sets(max_points=60, dims=(2,)),
           theta=st.floats(0.0, 2.0 * math.pi), phi=st.floats(0.05, math.pi))
    @settings(max_examples=50, deadline=None)
    def test_random_cone_instances(self, ps, theta, phi):
        order = ConeOrder(theta, phi)
        _same_edges(build_mdsf(ps, order), oracles.brute_mdsf(ps, order))
        assert count_minimal_elements(ps, order) == oracles.brute_minimal_elements(ps, order)

    @given(ps=lattice_point_sets(min_points=2, max_points=30))
    @settings(max_examples=50, deadline=None)
    def test_lattice_instances(self, ps):
        _same_edges(build_jth_nng(ps, 1), oracles.brute_jth_nng(ps, 1))
        _same_edges(build_ong(ps), oracles.brute_ong(ps))
        _same_edges(build_mdsf(ps, ConeOrder.star()), oracles.brute_mdsf(ps, ConeOrder.star()))
        _same_edges(build_gabriel(ps), oracles.brute_gabriel(ps))


def _gabriel_by_balls(ps):
    # Definição direta: nenhum z != x, y com |z - m|^2 < r^2 na bola diametral
    coords = ps.coords
    edges = set()
    for x in range(ps.n):
        for y in range(x + 1, ps.n):
            mid = 0.5 * (coords[x] + coords[y])
            radius_sq = 0.25 * np.sum((coords[x] - coords[y]) ** 2)
            inside = np.sum((coords - mid) ** 2, axis=1) < radius_sq
            inside[[x, y]] = False
            if not inside.any():
                edges.add((x, y))
    return edges


class TestGabrielDefinition:

    @pytest.mark.parametrize("d", [2, 3])
    def test_builder_and_oracle_match_diametral_balls(self, d):
        ps = _uniform(200, d, 602)
        expected = _gabriel_by_balls(ps)
        assert build_gabriel(ps).edge_set() == expected
        assert oracles.brute_gabriel(ps).edge_set() == expected

    @pytest.mark.parametrize("d", [2, 3])
    def test_fallback_scan_keeps_every_edge(self, monkeypatch, d):
        import utils.graphs.gabriel as gabriel

        monkeypatch.setattr(gabriel, 'GABRIEL_NEIGHBOURS', {2: 2, 3: 2})
        monkeypatch.setattr(gabriel, 'GABRIEL_MAX_NEIGHBOURS', 4)
        ps = _uniform(200, d, 602)
        assert build_gabriel(ps).edge_set() == _gabriel_by_balls(ps)


class TestIdentities:

    @pytest.mark.parametrize("alpha", [0.0, 1.0, 2.5])
    def test_knng_weight_is_sum_of_ranks(self, alpha):
        ps = _uniform(400, 2, 800)
        whole = total_weight(build_knng(ps, 4), alpha)
        parts = sum(total_weight(build_jth_nng(ps, j), alpha) for j in range(1, 5))
        assert whole == pytest.approx(parts, rel=1e-12)

    def test_knng_rank_one_equals_first_neighbour(self):
        ps = _uniform(300, 3, 801)
        _same_edges(build_knng(ps, 1), build_jth_nng(ps, 1))

    def test_undirected_count_is_n_minus_reciprocal(self):
        ps = _uniform(1000, 2, 802)
        g = build_knng_undirected(ps, 1)
        assert g.edge_count == ps.n - count_reciprocal_pairs(ps)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_online_is_spanning_tree(self, d):
        ps = _uniform(1000, d, 803 + d)
        g = build_ong(ps)
        assert g.edge_count == ps.n - 1
        assert np.all(g.dst < g.src)
        assert _is_tree_towards(g, 0)

    def test_online_marks_reorder_arrivals(self):
        ps = _uniform(200, 2, 810)
        marks = np.random.default_rng(3).random(ps.n)
        arrival = np.argsort(marks)
        g = build_ong(ps, marks=marks)
        reordered = build_ong(PointSet(ps.coords[arrival]))
        assert g.edge_set() == {(int(arrival[a]), int(arrival[b])) for a, b in reordered.edge_set()}
        assert _is_tree_towards(g, int(arrival[0]))

    def test_mdsf_edges_equal_n_minus_sinks(self):
        ps = _uniform(1000, 2, 811)
        order = ConeOrder(0.3, 2.0)
        assert build_mdsf(ps, order).edge_count == ps.n - count_minimal_elements(ps, order)

    def test_mdst_with_origin_is_tree(self):
        ps = _uniform(500, 2, 812)
        g = build_graph(ps, GraphFamily.mdsf(with_origin_sink=True))
        assert g.edge_count == ps.n
        assert _is_tree_towards(g, 0)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_gabriel_contains_nearest_neighbour_graph(self, d):
        ps = _uniform(600, d, 820 + d)
        assert build_knng_undirected(ps, 1).edge_set() <= build_gabriel(ps).edge_set()

    @given(ps=point_sets(max_points=50, dims=(2,)), shift=st.floats(-5.0, 5.0))
    @settings(max_examples=30, deadline=None)
    def test_translation_invariance(self, ps, shift):
        moved = PointSet(ps.coords + shift)
        for family in (GraphFamily.knng(1), GraphFamily.ong(), GraphFamily.mdsf(), GraphFamily.gabriel()):
            a, b = build_graph(ps, family), build_graph(moved, family)
            assert a.edge_set() == b.edge_set()
            assert np.allclose(a.length, b.length, rtol=1e-9, atol=1e-12)

    @pytest.mark.parametrize("family", [
        GraphFamily.knng(2), GraphFamily.knng_undirected(1), GraphFamily.ong(),
        GraphFamily.mdsf(ConeOrder(1.0, 2.0)), GraphFamily.gabriel(),
    ], ids=lambda f: f.label)
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 1.7])
    def test_alpha_homogeneity(self, family, alpha):
        ps = _uniform(400, 2, 830)
        scale = 0.25
        base = total_weight(build_graph(ps, family), alpha)
        scaled = total_weight(build_graph(PointSet(ps.coords * scale), family), alpha)
        assert scaled == pytest.approx(scale ** alpha * base, rel=1e-9)


class TestDirectionPatches:

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_patches_cover_the_sphere(self, d):
        centers, radii = direction_patches(d)
        rng = np.random.default_rng(d)
        u = rng.normal(size=(5000, d))
        u /= np.linalg.norm(u, axis=1)[:, None]
        angles = np.arccos(np.clip(u @ centers.T, -1.0, 1.0))
        assert np.all(np.any(angles <= radii[None, :] + 1e-12, axis=1))
