from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flowpoly.errors import ContractError, InputError
from flowpoly.graphs import DirectedMultigraph, complete_graph, parallel_edges, path_graph
from flowpoly.kostant import (
    compositions_colex,
    ehrhart_netflow,
    enumerate_integer_flows,
    flow_ehrhart_polynomial,
    flow_ehrhart_value,
    flow_polytope_volume,
    indegree_shift_netflow,
    kostant_value,
    lagrange_coefficients,
    polynomial_value,
    volume_from_ehrhart,
)

CATALAN_PRODUCTS = {4: 1, 5: 2, 6: 10, 7: 140}


def test_compositions_colex_order_and_count():
    comps = compositions_colex(3, 2)
    assert comps == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert len(compositions_colex(4, 3)) == 15


@pytest.mark.parametrize("n,expected", sorted(CATALAN_PRODUCTS.items()))
def test_complete_graph_volumes(n, expected):
    assert flow_polytope_volume(complete_graph(n)) == expected


def test_volume_requires_pruned_graph():
    with pytest.raises(ContractError):
        flow_polytope_volume(DirectedMultigraph(3, ((1, 2), (1, 3))))


def test_netflow_must_balance():
    g = complete_graph(4)
    with pytest.raises(InputError):
        kostant_value(g, (1, 0, 0, 0))
    with pytest.raises(InputError):
        kostant_value(g, (1, 0, -1))


def test_dp_agrees_with_bruteforce_enumeration():
    cases = [
        (complete_graph(4), (2, 0, 0, -2)),
        (complete_graph(5), indegree_shift_netflow(complete_graph(5))),
        (complete_graph(5), ehrhart_netflow(complete_graph(5), 2)),
        (parallel_edges(3), (3, -3)),
        (DirectedMultigraph(4, ((1, 2), (1, 2), (2, 3), (2, 4), (3, 4))), (2, 1, 0, -3)),
    ]
    for g, nf in cases:
        assert kostant_value(g, nf) == len(enumerate_integer_flows(g, nf))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 4), st.integers(0, 3))
def test_dp_agrees_on_random_netflows(a, b):
    g = complete_graph(4)
    nf = (a, b, 0, -a - b)
    assert kostant_value(g, nf) == len(enumerate_integer_flows(g, nf))


def test_integer_flows_conserve():
    g = complete_graph(4)
    nf = (2, 1, 0, -3)
    for fl in enumerate_integer_flows(g, nf):
        for v in range(1, 5):
            into = sum(fl.get(e, 0) for e in g.in_edge_ids(v))
            out = sum(fl.get(e, 0) for e in g.out_edge_ids(v))
            assert out - into == nf[v - 1]


def test_ehrhart_values_start_at_vertex_count():
    g = complete_graph(4)
    assert flow_ehrhart_value(g, 0) == 1
    assert flow_ehrhart_value(g, 1) == 4  # all vertices are lattice points


def test_ehrhart_of_parallel_edges_is_simplex():
    # t-dilate of the (m-1)-simplex
    g = parallel_edges(3)
    for t in range(5):
        assert flow_ehrhart_value(g, t) == (t + 1) * (t + 2) // 2


def test_path_graph_is_a_point():
    g = path_graph(4)
    assert flow_polytope_volume(g) == 1
    assert all(flow_ehrhart_value(g, t) == 1 for t in range(4))


def test_lagrange_interpolation_exact():
    coeffs = lagrange_coefficients([1, 4, 9, 16])
    assert coeffs == [Fraction(1), Fraction(2), Fraction(1), Fraction(0)]
    assert polynomial_value(coeffs, 7) == 64


@pytest.mark.parametrize("n", [4, 5, 6])
def test_volume_from_ehrhart_leading_coefficient(n):
    assert volume_from_ehrhart(complete_graph(n)) == CATALAN_PRODUCTS[n]


def test_ehrhart_polynomial_constant_term_one():
    for g in (complete_graph(4), complete_graph(5), parallel_edges(2)):
        coeffs = flow_ehrhart_polynomial(g)
        assert coeffs[0] == 1
