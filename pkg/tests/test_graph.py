import json

import numpy as np
import pytest

from metdim.constructions import ck_q
from metdim.graph import (
    UNREACHABLE, Edge, GraphError, all_pairs_distances, bfs_distances, build_graph,
    distance_vector, edge_distance, edge_distance_vector, from_edgelist, graph_from_dict,
    graph_to_dict, load_graph, save_json, to_dot, to_edgelist,
)

from conftest import complete, path, star


def test_build_k2():
    g = build_graph(2, [(0, 1)])
    assert g.m == 1 and g.edges == (Edge(0, 1),)


def test_build_k3_degrees():
    assert complete(3).degrees() == [2, 2, 2]


def test_duplicate_edges_collapse():
    g = build_graph(4, [(0, 1), (0, 1), (1, 2), (2, 3)])
    assert g.m == 3
    assert g == path(4)


def test_reverse_duplicate_collapses():
    assert build_graph(2, [(0, 1), (1, 0)]).m == 1


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_build_rejects(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_zero_vertices_rejected():
    with pytest.raises(GraphError):
        build_graph(0, [])


def test_labels_must_be_lattice_adjacent():
    with pytest.raises(GraphError):
        build_graph(2, [(0, 1)], labels=[(0,), (2,)])
    with pytest.raises(GraphError):
        build_graph(2, [(0, 1)], labels=[(0,), (0,)])


def test_path_distances():
    dt = all_pairs_distances(path(4))
    assert dt.dist[0].tolist() == [0, 1, 2, 3]
    assert dt.diameter == 3


def test_c22_distance_equals_first_coordinate():
    g = ck_q(2, 2)
    dt = all_pairs_distances(g)
    assert dt.dist[g.index[(0, 2)], g.index[(2, 2)]] == 2


def test_isolated_vertices_unreachable():
    dt = all_pairs_distances(build_graph(2, []))
    assert dt.dist[0, 1] == UNREACHABLE and dt.dist[1, 0] == UNREACHABLE
    assert not dt.connected
    assert UNREACHABLE > 10**6


def test_distance_table_read_only():
    dt = all_pairs_distances(path(3))
    with pytest.raises(ValueError):
        dt.dist[0, 1] = 5


def test_edge_distance_examples():
    dt = all_pairs_distances(path(3))
    assert edge_distance(dt, (1, 2), 0) == 1
    assert edge_distance(dt, (1, 2), 1) == 0
    assert edge_distance(all_pairs_distances(complete(3)), (0, 1), 2) == 1


def test_edge_distance_rejects_non_edge():
    with pytest.raises(GraphError):
        edge_distance(all_pairs_distances(path(3)), (0, 2), 1)


def test_distance_vector():
    dt = all_pairs_distances(path(4))
    assert distance_vector(dt, 3, [0]) == (3,)
    assert distance_vector(dt, 2, [1, 2]) == (1, 0)


def test_distance_vector_on_c2q_is_coordinates():
    g = ck_q(2, 3)
    dt = all_pairs_distances(g)
    for v in range(g.n):
        assert distance_vector(dt, v, g.landmarks) == g.labels[v]


def test_edge_distance_vector_examples():
    dt = all_pairs_distances(path(3))
    assert edge_distance_vector(dt, (0, 1), [0]) == (0,)
    assert edge_distance_vector(dt, (1, 2), [0]) == (1,)
    dt = all_pairs_distances(complete(3))
    assert edge_distance_vector(dt, (1, 2), [0]) == (1,)
    assert edge_distance_vector(dt, (0, 1), [0]) == (0,)


def test_star_edges_confused_by_one_leaf():
    g = star(3)
    dt = all_pairs_distances(g)
    vecs = {e: edge_distance_vector(dt, e, [1]) for e in g.edges}
    assert vecs == {(0, 1): (0,), (0, 2): (1,), (0, 3): (1,)}


def test_apsp_matches_bfs_on_ck():
    g = ck_q(3, 2)
    dt = all_pairs_distances(g)
    for s in range(g.n):
        assert dt.dist[s].tolist() == bfs_distances(g, s)


def test_edge_matrix_rows_follow_edges():
    g = path(4)
    dt = all_pairs_distances(g)
    for i, e in enumerate(g.edges):
        assert dt.edge_matrix[i].tolist() == [edge_distance(dt, e, w) for w in range(g.n)]


def test_json_round_trip(tmp_path):
    g = ck_q(2, 2)
    save_json(g, tmp_path / "g.json")
    h = load_graph(tmp_path / "g.json")
    assert h == g and h.labels == g.labels and h.landmarks == g.landmarks
    assert graph_from_dict(json.loads(json.dumps(graph_to_dict(g)))) == g


def test_edgelist_round_trip(tmp_path):
    g = complete(4)
    text = to_edgelist(g)
    assert text.splitlines()[0] == "4 6"
    assert from_edgelist(text) == g
    (tmp_path / "g.txt").write_text(text)
    assert load_graph(tmp_path / "g.txt") == g


def test_edgelist_header_mismatch():
    with pytest.raises(GraphError):
        from_edgelist("3 2\n0 1\n")


def test_dot_export():
    dot = to_dot(ck_q(2, 1), highlight=[0])
    assert dot.startswith("graph G {") and "--" in dot and "fillcolor" in dot


def test_connectivity():
    assert path(5).is_connected()
    assert not build_graph(3, [(0, 1)]).is_connected()
    assert build_graph(1, []).is_connected()


def test_edge_of_orders():
    assert Edge.of(3, 1) == (1, 3)
    with pytest.raises(GraphError):
        Edge.of(2, 2)


def test_bfs_oracle_matches_numpy_path():
    g = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4)])
    dt = all_pairs_distances(g)
    for s in range(g.n):
        assert dt.dist[s].tolist() == bfs_distances(g, s)
    assert np.all(dt.dist[5, :5] == UNREACHABLE)
