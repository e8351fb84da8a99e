import pytest
from hypothesis import given, strategies as st

from flowpoly.errors import ContractError, InputError
from flowpoly.graphs import (
    DirectedMultigraph,
    Framing,
    all_framings,
    coherent,
    compare_into,
    compare_outof,
    complete_graph,
    enumerate_routes,
    graph_from_json,
    graph_to_json,
    id_order_framing,
    parallel_edges,
    path_graph,
    prune_inner_vertices,
    random_framing,
    require_pruned,
    route_flow_vector,
    route_vertices,
)


def test_edges_must_point_forward():
    with pytest.raises(InputError):
        DirectedMultigraph(3, ((2, 1),))
    with pytest.raises(InputError):
        DirectedMultigraph(3, ((1, 4),))
    with pytest.raises(InputError):
        DirectedMultigraph(2, ((1, 1),))


def test_dimension_formula():
    assert complete_graph(7).dimension() == 15
    assert path_graph(5).dimension() == 0
    assert parallel_edges(3).dimension() == 2


def test_route_count_complete_graph():
    # routes of K_n are subsets of inner vertices
    for n in range(3, 8):
        assert len(enumerate_routes(complete_graph(n))) == 2 ** (n - 2)


def test_route_vertices_and_flow_vector():
    g = complete_graph(4)
    routes = enumerate_routes(g)
    for r in routes:
        verts = route_vertices(g, r)
        assert verts[0] == 1 and verts[-1] == 4
        vec = route_flow_vector(g, r)
        assert sum(vec) == len(r)


def test_routes_are_lexicographic_by_edge_ids():
    g = complete_graph(4)
    routes = enumerate_routes(g)
    assert routes == sorted(routes)


def test_prune_removes_dead_inner_vertices():
    # vertex 2 has no out-edge, vertex 3 survives
    g = DirectedMultigraph(4, ((1, 2), (1, 3), (3, 4)))
    result = prune_inner_vertices(g)
    assert result.removed_vertices == (2,)
    assert result.graph.edges == ((1, 2), (2, 3))
    assert result.vertex_map == {1: 1, 3: 2, 4: 3}


def test_prune_degenerate_graph_raises():
    with pytest.raises(InputError, match="degenerate"):
        prune_inner_vertices(DirectedMultigraph(3, ((1, 2),)))


def test_require_pruned():
    require_pruned(complete_graph(4))
    with pytest.raises(ContractError):
        require_pruned(DirectedMultigraph(3, ((1, 2), (1, 3))))


def test_framing_validation():
    g = complete_graph(4)
    fr = id_order_framing(g)
    Framing.validate(g, fr)
    bad = Framing(dict(fr.in_orders), dict(fr.out_orders))
    first = bad.in_orders[3][0]
    bad.in_orders[3] = (first, first)
    with pytest.raises(InputError):
        Framing.validate(g, bad)


def test_all_framings_count():
    # K_4: 1!2! at vertex 2, 2!1! at vertex 3
    assert len(list(all_framings(complete_graph(4)))) == 4
    assert len(list(all_framings(complete_graph(5)))) == 144


@given(st.integers(0, 2 ** 30))
def test_random_framing_is_valid(seed):
    g = complete_graph(5)
    Framing.validate(g, random_framing(g, seed))


def test_compare_into_orders_prefixes():
    g = complete_graph(4)
    fr = id_order_framing(g)
    routes = enumerate_routes(g)
    # two routes through vertex 3: 1-2-3-4 and 1-3-4
    r1 = next(r for r in routes if route_vertices(g, r) == (1, 2, 3, 4))
    r2 = next(r for r in routes if route_vertices(g, r) == (1, 3, 4))
    cmp = compare_into(g, fr, 3, r1[:2], r2[:1])
    assert cmp == -compare_into(g, fr, 3, r2[:1], r1[:2])
    assert compare_into(g, fr, 3, r1[:2], r1[:2]) == 0
    assert compare_outof(g, fr, 3, r1[2:], r2[1:]) == 0


def test_compare_rejects_nested_prefixes():
    g = DirectedMultigraph(3, ((1, 2), (2, 3), (1, 3)))
    fr = id_order_framing(g)
    with pytest.raises(ContractError):
        compare_outof(g, fr, 1, (0, 1), (0,))


def test_coherence_is_symmetric():
    g = complete_graph(5)
    fr = random_framing(g, 3)
    routes = enumerate_routes(g)
    for p in routes:
        for q in routes:
            assert coherent(g, fr, p, q) == coherent(g, fr, q, p)


def test_routes_sharing_no_inner_vertex_are_coherent():
    g = parallel_edges(3)
    fr = id_order_framing(g)
    for p in enumerate_routes(g):
        for q in enumerate_routes(g):
            assert coherent(g, fr, p, q)


def test_graph_json_roundtrip():
    g = complete_graph(5)
    fr = random_framing(g, 11)
    g2, fr2 = graph_from_json(graph_to_json(g, fr))
    assert g2 == g
    assert fr2.in_orders == fr.in_orders and fr2.out_orders == fr.out_orders
    # framing defaults to id-order when absent
    g3, fr3 = graph_from_json({"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [1, 4]]})
    assert fr3.in_orders == id_order_framing(g3).in_orders


def test_graph_json_malformed():
    with pytest.raises(InputError):
        graph_from_json({"edges": [[1, 2]]})
