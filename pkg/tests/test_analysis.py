import itertools

import numpy as np
import pytest

from conftest import complete
from oracles import connectivity_cut_brute, distances, k_independence_brute
from polyind import (
    ColoredGraph,
    Graph,
    UnsupportedSizeError,
    all_pairs_distances,
    base_graph,
    build_extremal,
    distance_shells,
    enumerate_polyhedra,
    graph_power,
    has_separating_quadrilateral,
    is_k_connected,
    is_maximal_planar,
    is_planar,
    is_polyhedral,
    is_quadrangulation,
    k4_necklace,
    k_independence_number,
    max_independent_set,
    radial_graph,
    verify_certificate,
)
from polyind.analysis import DisconnectedGraphError, embed

K33 = Graph(6, [(u, v) for u in range(3) for v in range(3, 6)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# planarity

def test_k5_not_planar():
    assert is_planar(complete(5)) == (False, None)


def test_k33_not_planar():
    assert is_planar(K33)[0] is False


def test_cube_planar_with_six_faces(cube_graph):
    ok, e = is_planar(cube_graph)
    assert ok and len(e.faces()) == 6


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_planar_embeddings_satisfy_euler(n):
    for g in enumerate_polyhedra(n):
        ok, e = is_planar(g)
        assert ok and g.p - g.q + len(e.faces()) == 2


# connectivity

def test_k4_three_connected(k4):
    assert is_k_connected(k4, 3) == (True, None)


def test_path_cut_is_middle():
    assert is_k_connected(Graph(3, [(0, 1), (1, 2)]), 2) == (False, [1])


def test_cube_minus_edge_has_two_cut(cube_graph):
    g = cube_graph.without_edges([(0, 1)])
    ok, cut = is_k_connected(g, 3)
    assert not ok and len(cut) == 2
    ref = connectivity_cut_brute(g.n, g.edges, 3)
    assert ref is not None and len(ref) == 2
    rest = Graph(g.n, g.edges)
    rest_nodes = [v for v in range(g.n) if v not in cut]
    sub = [(u, v) for u, v in rest.edges if u in rest_nodes and v in rest_nodes]
    d = distances(g.n, sub)
    assert any(d[rest_nodes[0]][v] < 0 for v in rest_nodes)


def test_connectivity_needs_enough_vertices(k4):
    with pytest.raises(ValueError):
        is_k_connected(Graph(3, [(0, 1), (1, 2), (0, 2)]), 3)


def test_disconnected_cut_is_empty():
    assert is_k_connected(Graph(4, [(0, 1), (2, 3)]), 1) == (False, [])


@pytest.mark.parametrize("n", [5, 6])
def test_connectivity_matches_brute_force(n):
    import random
    rng = random.Random(n)
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(60):
        edges = rng.sample(pairs, rng.randint(n, len(pairs)))
        g = Graph(n, edges)
        for t in (1, 2, 3):
            ok, cut = is_k_connected(g, t)
            ref = connectivity_cut_brute(n, edges, t)
            assert ok == (ref is None)
            if not ok:
                assert len(cut) == len(ref)


# polyhedrality

def test_tetrahedron_polyhedral(k4):
    assert is_polyhedral(k4).polyhedral


def test_k33_not_polyhedral():
    rep = is_polyhedral(K33)
    assert not rep.polyhedral and not rep.planar and rep.three_connected


def test_hexagon_not_polyhedral():
    rep = is_polyhedral(cycle(6))
    assert rep.planar and not rep.three_connected and len(rep.cut_witness) == 2


def test_small_graph_report():
    assert not is_polyhedral(Graph(3, [(0, 1), (1, 2), (0, 2)])).polyhedral


# distances, shells, powers

def test_k4_distances(k4):
    d = all_pairs_distances(k4)
    assert (d == 1 - np.eye(4, dtype=int)).all()


def test_cube_antipodes_at_three(cube_graph):
    d = all_pairs_distances(cube_graph)
    assert all(d[v, v ^ 7] == 3 for v in range(8))
    assert d.max() == 3


def test_necklace_two_red_distance():
    c = k4_necklace(2)
    assert all_pairs_distances(c.graph)[0, 4] == 3


def test_distances_match_networkx():
    for c in (base_graph("pdw10"), k4_necklace(3), build_extremal(3, 3).result):
        g = c.graph
        assert all_pairs_distances(g).tolist() == distances(g.n, g.edges)


def test_disconnected_distance_error():
    with pytest.raises(DisconnectedGraphError) as exc:
        all_pairs_distances(Graph(4, [(0, 1), (2, 3)]))
    assert exc.value.components == [[0, 1], [2, 3]]


def test_cube_shells(cube_graph):
    for v in range(8):
        assert distance_shells(cube_graph, v, 3).sizes() == [3, 3, 1]


def test_k4_shells(k4):
    assert distance_shells(k4, 2, 1).sizes() == [3]


def test_pdw_hub_shells(pdw):
    # hub u = 8; the opposite hub sits at distance 3
    s = distance_shells(pdw.graph, 8, 2)
    assert s.sizes() == [4, 4]
    assert s.remainder == [9]


def test_shells_partition(pdw):
    s = distance_shells(pdw.graph, 0, 2)
    parts = [{0}] + [set(x) for x in s.shells] + [set(s.remainder)]
    assert sum(map(len, parts)) == 10 and set().union(*parts) == set(range(10))


def test_power_one_is_identity(cube_graph):
    assert graph_power(cube_graph, 1) == cube_graph


def test_cube_cubed_is_k8(cube_graph):
    assert graph_power(cube_graph, 3) == complete(8)


def test_necklace_square_keeps_reds_apart():
    g2 = graph_power(k4_necklace(2).graph, 2)
    assert not g2.has_edge(0, 4)


def test_power_monotone_and_complete_at_diameter():
    g = build_extremal(2, 3).result.graph
    diam = int(all_pairs_distances(g).max())
    prev = set(g.edges)
    for k in range(2, diam + 1):
        cur = set(graph_power(g, k).edges)
        assert prev <= cur
        prev = cur
    assert graph_power(g, diam) == complete(g.n)


# independence

def test_mis_k4(k4):
    assert len(max_independent_set(k4)) == 1


def test_mis_cube(cube_graph):
    s = max_independent_set(cube_graph)
    assert len(s) == 4
    assert not any(cube_graph.has_edge(u, v) for u, v in itertools.combinations(s, 2))


def test_mis_pdw(pdw):
    assert len(max_independent_set(pdw.graph)) == 5


@pytest.mark.parametrize("k,expected", [(2, 2), (3, 1)])
def test_cube_k_independence(cube_graph, k, expected):
    assert k_independence_number(cube_graph, k) == expected
    assert k_independence_brute(8, cube_graph.edges, k) == expected


@pytest.mark.parametrize("a", [2, 3, 4])
def test_necklace_two_independence(a):
    assert k_independence_number(k4_necklace(a).graph, 2) == a


def test_mis_envelope():
    with pytest.raises(UnsupportedSizeError, match="unsupported size"):
        max_independent_set(cycle(65))


def test_mis_at_envelope_edge():
    assert len(max_independent_set(cycle(64))) == 32
    assert len(max_independent_set(cycle(63))) == 31


def test_mis_matches_enumeration_up_to_12():
    import random
    rng = random.Random(11)
    for n in range(1, 13):
        pairs = list(itertools.combinations(range(n), 2))
        for _ in range(6):
            edges = [e for e in pairs if rng.random() < 0.35]
            g = Graph(n, edges)
            assert len(max_independent_set(g)) == k_independence_brute(n, edges, 1)


def test_k1_equals_mis():
    for n in (6, 7):
        for g in enumerate_polyhedra(n):
            assert k_independence_number(g, 1) == len(max_independent_set(g))


# certificates

def test_cube_bipartition_certificate(cube):
    rep = verify_certificate(cube)
    assert rep.certificate_valid and rep.red_size == 4
    assert cube.certified


def test_adjacent_reds_rejected(cube_graph):
    c = ColoredGraph(cube_graph, frozenset({0, 1}), 1)
    rep = verify_certificate(c)
    assert not rep.certificate_valid and rep.close_pair == [0, 1]
    assert not c.certified


def test_built_certificate_valid():
    rep = verify_certificate(build_extremal(4, 3).result, measure=True)
    assert rep.certificate_valid and rep.order == rep.expected_order == 21
    assert rep.independence == 3


def test_report_invariant():
    for g in (K33, cycle(6), complete(5), complete(4)):
        rep = verify_certificate(ColoredGraph(g, frozenset({0}), 1))
        if rep.certificate_valid:
            assert rep.planar and rep.three_connected and rep.order >= 4


# face structure

def test_cube_no_separating_quadrilateral(cube):
    assert has_separating_quadrilateral(cube.embedding) == (False, None)


def test_k4_no_separating_quadrilateral(k4):
    assert has_separating_quadrilateral(embed(k4))[0] is False


def test_radial_octahedron_no_separating_quadrilateral(octahedron):
    rg = radial_graph(embed(octahedron))
    assert has_separating_quadrilateral(rg.embedding)[0] is False


def test_separating_quadrilateral_found():
    # two cubes glued along a face: the shared square separates
    g = Graph(12, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
              + [(u + 8, (u ^ 1) + 8) for u in range(4) if u < u ^ 1]
              + [(u + 8, (u ^ 2) + 8) for u in range(4) if u < u ^ 2]
              + [(u, u + 8) for u in range(4)])
    found, cyc = has_separating_quadrilateral(embed(g))
    assert found and sorted(cyc) == [0, 1, 2, 3]


def test_cube_quadrangulation(cube):
    assert is_quadrangulation(cube.embedding)
    assert cube.graph.q == 2 * 8 - 4


def test_tetrahedron_not_quadrangulation(k4):
    assert not is_quadrangulation(embed(k4))


def test_pdw_quadrangulation(pdw):
    assert is_quadrangulation(pdw.embedding) and pdw.graph.q == 16


def test_maximal_planar(k4, cube_graph, bipyramid):
    assert is_maximal_planar(k4)
    assert not is_maximal_planar(cube_graph)
    assert bipyramid.q == 9 and is_maximal_planar(bipyramid)


def test_polyhedral_equals_components():
    for n in (4, 5, 6, 7):
        for g in enumerate_polyhedra(n):
            rep = is_polyhedral(g)
            assert rep.polyhedral == (is_planar(g)[0] and is_k_connected(g, 3)[0] and g.n >= 4)
            for v in range(g.n):
                assert len(distance_shells(g, v, 1).shell(1)) >= 3
    for g in (K33, cycle(6), complete(5)):
        assert is_polyhedral(g).polyhedral == (is_planar(g)[0] and is_k_connected(g, 3)[0])
