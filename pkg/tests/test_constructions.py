import itertools

import pytest

from metdim import constructions as C
from metdim.graph import GraphError, all_pairs_distances, distance_vector, linf
from metdim.oracles import sidon_brute_force
from metdim.solver import is_edge_resolving, is_resolving, metric_dimension

from conftest import complete, path


def test_dk_window_k1_is_path():
    assert C.dk_window(1, 0, 3) == path(4).with_labels([(i,) for i in range(4)])


@pytest.mark.parametrize("k", [1, 2, 3])
def test_dk_window_centre_degree(k):
    g = C.dk_window(k, 0, 2)
    assert g.n == 3**k
    assert g.degree(g.index[(1,) * k]) == 3**k - 1


def test_dk_window_mixed_box():
    g = C.dk_window(2, [0, 1], [1, 3])
    assert g.n == 6 and min(p[1] for p in g.labels) == 1


@pytest.mark.parametrize("args", [(0, 0, 1), (2, 2, 1), (2, [0], [1, 1]), (2, -1, 1)])
def test_dk_window_rejects(args):
    with pytest.raises(GraphError):
        C.dk_window(*args)


def test_ck_2_1_points():
    g = C.ck_q(2, 1)
    assert sorted(g.labels) == [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]


def test_ck_2_2_square():
    g = C.ck_q(2, 2)
    corners = {(0, 2), (2, 0), (2, 4), (4, 2)}
    assert corners <= set(g.labels)
    assert all(sum(abs(c - 2) for c in p) <= 2 for p in g.labels)
    assert g.n == 13
    assert [g.labels[s] for s in g.landmarks] == [(0, 2), (2, 0)]


@pytest.mark.parametrize("k,q", [(2, 2), (2, 3), (3, 2), (3, 4)])
def test_ck_distance_vector_is_coordinates(k, q):
    g = C.ck_q(k, q)
    dt = all_pairs_distances(g)
    assert is_resolving(dt, g.landmarks)
    assert all(distance_vector(dt, v, g.landmarks) == g.labels[v] for v in range(g.n))


def test_ck_rejects_bad_q():
    with pytest.raises(GraphError):
        C.ck_q(2, 0)


def test_mk_order_and_hub():
    g = C.mk(2)
    assert g.n == 11
    hub = g.index[(2, 2)]
    assert g.degree(hub) == 8
    assert max(all_pairs_distances(g).dist[hub]) == 2
    assert [g.labels[s] for s in g.landmarks] == [(0, 2), (2, 0)]


def test_mk1():
    g = C.mk(1)
    assert g.n == 4 and g.m == 3 and g.has_edge(g.index[(0,)], g.index[(1,)])


def test_embed_path():
    g = C.embed_in_dk(path(3), [0])
    assert g.labels == ((0,), (1,), (2,))


def test_embed_triangle():
    g = C.embed_in_dk(complete(3), [0, 1])
    assert g.labels == ((0, 1), (1, 0), (1, 1))


def test_embed_ck_is_identity():
    g = C.ck_q(2, 2)
    assert C.embed_in_dk(g, g.landmarks).labels == g.labels


def test_embed_rejects_non_resolving():
    with pytest.raises(GraphError, match="1 and 2"):
        C.embed_in_dk(complete(3), [0])


def test_wheel_k2_verbatim():
    assert C.wheel_cycle(2) == [(0, 0), (0, 1), (0, 2), (1, 2), (2, 2), (2, 1), (2, 0), (1, 0)]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_wheel_invariants(k):
    cyc = C.wheel_cycle(k)
    assert len(cyc) == 3**k - 1
    assert C.check_hamiltonian_cycle(cyc, k) == []


def test_wheel_k3_structure():
    cyc = C.wheel_cycle(3)
    a = C.wheel_cycle(2)
    assert cyc[:8] == [(0,) + p for p in a]
    assert cyc[8] == (0, 1, 1)
    assert cyc[-1] == (1,) + a[0]


def test_wheel_rejects_small_k():
    with pytest.raises(GraphError):
        C.wheel_cycle(1)


def test_check_cycle_reports_problems():
    bad = C.wheel_cycle(2)
    bad[1], bad[4] = bad[4], bad[1]
    assert C.check_hamiltonian_cycle(bad, 2)
    assert C.check_hamiltonian_cycle(bad[:-1], 2)


def test_wheel_host_meta():
    g = C.wheel_host(2)
    assert g.meta["hub"] == g.index[(1, 1)]
    cyc = g.meta["cycle"]
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % 8]) for i in range(8))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_knn(k):
    g = C.knn_embedding(k)
    left, right = g.meta["parts"]
    assert len(left) == len(right) == 2 ** (k - 1)
    assert C.contains_complete_bipartite(g, left, right)


def test_knn_k2_parts():
    g = C.knn_embedding(2)
    assert [[g.labels[v] for v in part] for part in g.meta["parts"]] == [[(0, 0), (0, 1)], [(1, 0), (1, 1)]]


def test_host_in_ck_contains_wheel():
    h = C.wheel_host(2)
    host, image, q = C.host_in_ck(h)
    assert len(set(image)) == h.n
    for u, v in h.edges:
        assert host.has_edge(image[u], image[v])
    assert metric_dimension(host).value <= 2


def test_translate():
    g = C.translate(C.dk_window(2, 0, 1), (3, 1))
    assert min(g.labels) == (3, 1)


@pytest.mark.parametrize("n,d", [(3, 2), (2, 3), (5, 1), (4, 3)])
def test_grid_counts(n, d):
    g = C.grid(n, d)
    assert g.n == n**d and g.m == d * (n - 1) * n ** (d - 1)


def test_grid_3_2_diameter():
    assert all_pairs_distances(C.grid(3, 2)).diameter == 4


def test_grid_5_1_is_path():
    assert C.grid(5, 1) == path(5).with_labels([(i,) for i in range(5)])


def test_hypercube():
    assert C.hypercube(1).m == 1
    g = C.hypercube(3)
    assert (g.n, g.m, all_pairs_distances(g).diameter) == (8, 12, 3)
    for u, v in g.edges:
        assert sum(a != b for a, b in zip(g.labels[u], g.labels[v])) == 1


def test_sidon_examples():
    assert C.is_sidon(["00", "01", "10"])
    assert sidon_brute_force(["00", "01", "10"])
    assert not C.is_sidon(["00", "01", "10", "11"])
    assert C.sidon_collisions(["00", "01", "10", "11"]) == [(("00", "11"), ("01", "10"))]
    assert C.repair_sidon(["00", "01", "10", "11"]) == ["01", "10", "11"]
    assert C.is_sidon(["101"])


def test_pair_sum_has_no_carries():
    assert C.pair_sum("11", "01") == (1, 2)


def test_sidon_set_validates():
    with pytest.raises(GraphError):
        C.SidonSet(2, ("00", "01", "10", "11"))
    with pytest.raises(GraphError):
        C.SidonSet(2, ("0",))


def test_default_target():
    assert [C.default_sidon_target(k) for k in (2, 3, 4, 6)] == [1, 2, 3, 7]


def test_sidon_sample_deterministic():
    a = C.sidon_sample(3, seed=7)
    assert a == C.sidon_sample(3, seed=7)
    assert a.members == ("101", "110")
    assert sidon_brute_force(a.members)


def test_sidon_sample_rejects():
    with pytest.raises(GraphError):
        C.sidon_sample(2, 5)
    with pytest.raises(GraphError):
        C.sidon_sample(1, 1)


def test_gadget_k2():
    g = C.clique_gadget(2, ["00", "01", "10"])
    assert g.n == 7
    clique = g.meta["clique"]
    assert all(g.has_edge(u, v) for u, v in itertools.combinations(clique, 2))
    assert [g.meta["names"][s] for s in g.landmarks] == ["a1", "a2", "b1", "b2"]
    dt = all_pairs_distances(g)
    L = g.landmarks
    vecs = {tuple(min(dt.dist[u, s], dt.dist[v, s]) for s in L) for u, v in itertools.combinations(clique, 2)}
    assert len(vecs) == 3
    assert is_edge_resolving(dt, L)


def test_gadget_single_string():
    g = C.clique_gadget(2, ["00"])
    assert g.meta["clique"] == [0] and g.is_connected()
    assert is_edge_resolving(all_pairs_distances(g), g.landmarks)


def test_gadget_attachment_wiring():
    g = C.clique_gadget(3, ["101", "110"])
    names = g.meta["names"]
    a2 = names.index("a2")
    assert g.neighbors(a2) == [0]
    assert "a1" not in names
