"""Built-in example corpus used by the verification commands and tests."""

from __future__ import annotations

from .graphs import DirectedMultigraph, Framing, complete_graph, parallel_edges, path_graph
from .planar import arc_diagram, poset_to_flow_graph
from .posets import all_staircase_partitions, antichain, chain, skew_star, zigzag

TRIANGLE = DirectedMultigraph(3, ((1, 2), (2, 3), (1, 3)))


def wedge_graph():
    """A 5-vertex planar graph with three nested arcs over a path.

    Drawn with everything above the line it has four bounded regions, so
    its region poset has four elements; used as the stand-in for the
    hand-drawn planar example.
    """
    edges = ((1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (3, 5), (1, 5), (1, 5))
    return DirectedMultigraph(5, edges)


def wedge_framing():
    return Framing(
        in_orders={2: (0,), 3: (4, 1), 4: (2,)},
        out_orders={2: (1,), 3: (5, 2), 4: (3,)},
    )


def graph_fixtures():
    """Framed graphs for the clique/reduction checks."""
    out = {}
    for n in (4, 5, 6, 7):
        out[f"k{n}"] = complete_graph(n)
    out["path4"] = path_graph(4)
    out["triangle"] = TRIANGLE
    out["parallel2"] = parallel_edges(2)
    out["parallel3"] = parallel_edges(3)
    out["wedge"] = wedge_graph()
    return out


def poset_fixtures():
    """(poset, embedding) pairs keyed by name."""
    out = {}
    for k in range(1, 7):
        out[f"chain{k}"] = chain(k)
    for k in range(1, 5):
        out[f"antichain{k}"] = antichain(k)
    for k in range(2, 7):
        out[f"zigzag{k}"] = zigzag(k)
    for n in range(2, 5):
        for lam in all_staircase_partitions(n):
            name = f"skew{n}-" + ("".join(map(str, lam)) or "0")
            out[name] = skew_star(n, lam)
    return out


def planar_fixtures():
    """PlanarGraphData corpus: drawn graphs plus duals of the poset corpus."""
    from .graphs import id_order_framing

    out = {
        "triangle": arc_diagram(TRIANGLE, id_order_framing(TRIANGLE)),
        "parallel2": arc_diagram(parallel_edges(2), id_order_framing(parallel_edges(2))),
        "parallel3": arc_diagram(parallel_edges(3), id_order_framing(parallel_edges(3))),
        "wedge": arc_diagram(wedge_graph(), wedge_framing()),
    }
    for name, (p, emb) in poset_fixtures().items():
        if name.startswith("skew") or name in ("chain3", "antichain3", "zigzag4"):
            out["gp-" + name] = poset_to_flow_graph(p, emb)
    return out
