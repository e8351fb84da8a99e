"""Three triangulation algorithms and the bijections between their index sets.

* canonical: one simplex of the order polytope per linear extension,
  vertices the indicator vectors of the extension's suffix filters;
* reduction ("ps"): repeatedly eliminate inner vertices, branching over
  noncrossing bipartite trees; leaves are parallel-edge graphs whose edge
  provenances are routes;
* clique ("dkk"): maximal sets of pairwise coherent routes.

The reduction also produces, per leaf, an integer flow with netflow
(0, d_2, ..., d_{n-1}, -sum d_i); matching a flow back to its leaf gives
the flow <-> clique bijection, and composing it across two framings gives
the framing-change bijection on cliques.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ContractError, InputError, InternalCheckError
from .graphs import (
    Framing,
    coherent,
    enumerate_routes,
    require_pruned,
    route_flow_vector,
)
from .kostant import compositions_colex
from .planar import BOTTOM, TOP
from .posets import linear_extensions


# ---------------------------------------------------------------------------
# canonical triangulation of the order polytope


@dataclass(frozen=True)
class CanonicalSimplex:
    extension: tuple
    vertices: tuple  # indicator vectors of the suffix filters, largest first

    def key(self):
        return tuple(sorted(self.vertices))


def canonical_triangulation(p):
    """One simplex per linear extension of p.

    The simplex of extension (s_1, ..., s_k) has the k+1 vertices
    1_{F_j}, F_j = {s_{j+1}, ..., s_k}, written in p.elements coordinates.
    """
    out = []
    for ext in linear_extensions(p):
        vertices = []
        for j in range(len(ext) + 1):
            filt = set(ext[j:])
            vertices.append(tuple(int(e in filt) for e in p.elements))
        out.append(CanonicalSimplex(ext, tuple(vertices)))
    return out


# ---------------------------------------------------------------------------
# noncrossing bipartite trees


@dataclass(frozen=True)
class NoncrossingTree:
    left: int
    right: int
    composition: tuple

    def __post_init__(self):
        if len(self.composition) != self.right or sum(self.composition) != self.left - 1:
            raise ContractError(
                f"composition {self.composition} does not encode a tree "
                f"on {self.left}+{self.right} vertices"
            )

    def edge_pairs(self):
        """(left index, right index) pairs; right j takes b_j + 1 lefts,
        consecutive rights sharing one left."""
        pairs = []
        p = 0
        for j, b in enumerate(self.composition):
            for li in range(p, p + b + 1):
                pairs.append((li, j))
            p += b
        return pairs


def noncrossing_trees(left, right):
    """All noncrossing spanning trees on (left, right), colex composition order."""
    if left < 1 or right < 1:
        raise InputError("both sides of a noncrossing tree must be nonempty")
    trees = [
        NoncrossingTree(left, right, c) for c in compositions_colex(left - 1, right)
    ]
    if len(trees) != comb(left + right - 2, left - 1):
        raise InternalCheckError("noncrossing tree count disagrees with the binomial")
    return trees


# ---------------------------------------------------------------------------
# the vertex-reduction subdivision


@dataclass
class FramedGraphState:
    """Mutable state while reducing a framed graph vertex by vertex.

    Current edges are (tail, head, provenance) triples keyed by a stable
    id; provenance is the ordered tuple of original edge ids an edge
    accumulated.  Original out-edges keep their original ids, so the
    original framing's out-orders stay valid at unreduced vertices.
    """

    edges: dict
    in_orders: dict
    out_orders: dict
    flow: dict
    trace: tuple
    next_id: int

    @classmethod
    def initial(cls, g, framing):
        require_pruned(g)
        Framing.validate(g, framing)
        edges = {e: (t, h, (e,)) for e, (t, h) in enumerate(g.edges)}
        return cls(
            edges=edges,
            in_orders={v: tuple(framing.in_orders[v]) for v in g.inner_vertices()},
            out_orders={v: tuple(framing.out_orders[v]) for v in g.inner_vertices()},
            flow={e: 0 for e in range(g.edge_count)},
            trace=(),
            next_id=g.edge_count,
        )

    def copy(self):
        return FramedGraphState(
            dict(self.edges),
            dict(self.in_orders),
            self.out_orders,
            dict(self.flow),
            self.trace,
            self.next_id,
        )

    def in_size(self, v):
        return len(self.in_orders[v])


def reduce_at_vertex(state, i, tree):
    """Eliminate inner vertex i using the given noncrossing tree.

    Each tree edge joins an in-edge e1 (top-to-bottom order) to an
    out-edge e2 and contributes the edge e1+e2 with concatenated
    provenance; the composition entry b_j is recorded as flow on the j-th
    out-edge (always an original edge).  In-orders at later vertices are
    rewritten by block substitution.  Returns a new state.
    """
    state = state.copy()
    ins = state.in_orders.pop(i)
    outs = state.out_orders[i]
    if tree.left != len(ins) or tree.right != len(outs):
        raise ContractError(
            f"tree shape ({tree.left},{tree.right}) does not match vertex {i} "
            f"with ({len(ins)},{len(outs)}) edges"
        )
    replacements = {e2: [] for e2 in outs}
    for li, rj in tree.edge_pairs():
        e1, e2 = ins[li], outs[rj]
        t1, _, prov1 = state.edges[e1]
        _, h2, prov2 = state.edges[e2]
        new_id = state.next_id
        state.next_id += 1
        state.edges[new_id] = (t1, h2, prov1 + prov2)
        replacements[e2].append(new_id)
    for j, e2 in enumerate(outs):
        state.flow[state.edges[e2][2][0]] += tree.composition[j]
    for e in ins:
        del state.edges[e]
    for e in outs:
        del state.edges[e]
    for v, order in state.in_orders.items():
        if any(m in replacements for m in order):
            new_order = []
            for m in order:
                new_order.extend(replacements.get(m, [m]))
            state.in_orders[v] = tuple(new_order)
    state.trace = state.trace + ((i, tree.composition),)
    return state


@dataclass(frozen=True)
class SubdivisionLeaf:
    routes: tuple  # sorted tuple of routes (edge-id tuples) of the original graph
    flow: tuple  # integer flow on the original edges, netflow (0, d_2, ..)
    trace: tuple


def _leaf_from_state(g, state):
    routes = []
    for e, (t, h, prov) in sorted(state.edges.items()):
        if (t, h) != (1, g.n):
            raise InternalCheckError("fully reduced graph is not a parallel-edge graph")
        routes.append(prov)
    if len(routes) != g.edge_count - g.n + 2:
        raise InternalCheckError("leaf does not have #E - #V + 2 routes")
    return SubdivisionLeaf(
        routes=tuple(sorted(routes)),
        flow=tuple(state.flow[e] for e in range(g.edge_count)),
        trace=state.trace,
    )


def ps_triangulation(g, framing):
    """All leaves of the vertex-reduction subdivision, depth first.

    Tree choices at each vertex run in colex composition order, so the
    output order is the lexicographic order of the traces.
    """
    leaves = []

    def descend(state, v):
        if v == g.n:
            leaves.append(_leaf_from_state(g, state))
            return
        for tree in noncrossing_trees(state.in_size(v), len(state.out_orders[v])):
            descend(reduce_at_vertex(state, v, tree), v + 1)

    state = FramedGraphState.initial(g, framing)
    if g.n == 2:
        leaves.append(_leaf_from_state(g, state))
    else:
        descend(state, 2)
    return leaves


def flow_to_clique(g, framing, flow):
    """Leaf routes of the reduction replayed along a given integer flow.

    At each vertex the unique tree whose composition equals the flow on
    that vertex's out-edges is chosen.
    """
    if len(flow) != g.edge_count or any(int(x) != x or x < 0 for x in flow):
        raise InputError("flow must be a nonnegative integer vector over the edges")
    state = FramedGraphState.initial(g, framing)
    for v in range(2, g.n):
        outs = state.out_orders[v]
        composition = tuple(int(flow[state.edges[e][2][0]]) for e in outs)
        if sum(composition) != state.in_size(v) - 1:
            raise InputError(f"flow not realizable: bad total at vertex {v}")
        tree = NoncrossingTree(sum(composition) + 1, len(outs), composition)
        state = reduce_at_vertex(state, v, tree)
    leaf = _leaf_from_state(g, state)
    if leaf.flow != tuple(int(x) for x in flow):
        raise InternalCheckError("replayed reduction did not reproduce the input flow")
    return leaf.routes


def clique_to_flow(g, framing, clique):
    """Inverse of flow_to_clique, by lookup over the reduction's leaves."""
    target = tuple(sorted(clique))
    for leaf in ps_triangulation(g, framing):
        if leaf.routes == target:
            return leaf.flow
    raise InputError("route set is not a leaf of the reduction for this framing")


def framing_change_bijection(g, f1, f2):
    """Map each f1-clique to the f2-clique with the same reduction flow."""
    mapping = {}
    for leaf in ps_triangulation(g, f1):
        mapping[leaf.routes] = flow_to_clique(g, f2, leaf.flow)
    if len(set(mapping.values())) != len(mapping):
        raise InternalCheckError("framing change map is not injective")
    return mapping


# ---------------------------------------------------------------------------
# coherent-route cliques


def dkk_maximal_cliques(g, framing):
    """Maximal sets of pairwise coherent routes, each of size #E - #V + 2.

    Bron-Kerbosch with pivoting on the coherence graph; the uniform clique
    size is asserted rather than trusted.
    """
    require_pruned(g)
    Framing.validate(g, framing)
    routes = enumerate_routes(g)
    k = len(routes)
    adj = [set() for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            if coherent(g, framing, routes[a], routes[b]):
                adj[a].add(b)
                adj[b].add(a)
    cliques = []

    def expand(r, p, x):
        if not p and not x:
            cliques.append(sorted(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(k)), set())
    expected = g.edge_count - g.n + 2
    for c in cliques:
        if len(c) != expected:
            raise InternalCheckError(
                "coherence relation violates top-dimensionality: clique of size "
                f"{len(c)}, expected {expected}"
            )
    result = [tuple(routes[i] for i in c) for c in cliques]
    result.sort()
    return result


def dkk_triangulation(g, framing):
    """Cliques realized as simplices of unit route flows."""
    return [
        tuple(sorted(route_flow_vector(g, r) for r in clique))
        for clique in dkk_maximal_cliques(g, framing)
    ]


# ---------------------------------------------------------------------------
# linear extensions -> cliques on planar graphs


def linext_to_clique(pg, ext):
    """Routes read off the upper boundaries of the growing region unions.

    For each prefix of the extension (an order ideal of the region poset)
    the edges with the ideal (or BOTTOM) below and everything else above
    form a route; the #regions + 1 routes are returned sorted.
    """
    g = pg.graph
    routes = []
    for j in range(len(ext) + 1):
        ideal = set(ext[:j]) | {BOTTOM}
        edge_set = {
            e
            for e, (below, above) in enumerate(pg.edge_sides)
            if below in ideal and above not in ideal
        }
        # the upper boundary must chain into a single 1 -> n path
        route = []
        v = 1
        while v != g.n:
            step = [e for e in edge_set if g.edges[e][0] == v]
            if len(step) != 1:
                raise InternalCheckError(
                    f"upper boundary of {sorted(ideal - {BOTTOM})!r} is not a route"
                )
            route.append(step[0])
            v = g.edges[step[0]][1]
        if len(route) != len(edge_set):
            raise InternalCheckError("upper boundary contains stray edges")
        routes.append(tuple(route))
    if len(set(routes)) != len(routes):
        raise InternalCheckError("extension produced a repeated route")
    return tuple(sorted(routes))


# ---------------------------------------------------------------------------
# comparison


@dataclass
class TriangulationComparison:
    equal: bool
    only_in_a: list
    only_in_b: list

    def to_json(self):
        return {
            "equal": self.equal,
            "only_in_a": [[list(v) for v in s] for s in self.only_in_a],
            "only_in_b": [[list(v) for v in s] for s in self.only_in_b],
        }


def simplex_key(vertices):
    """Canonical coordinate-based key: sorted tuple of vertex tuples."""
    return tuple(sorted(tuple(x) for x in vertices))


def compare_triangulations(a, b):
    """Set comparison of two simplex lists under the canonical keys."""
    ka = {simplex_key(s) for s in a}
    kb = {simplex_key(s) for s in b}
    return TriangulationComparison(
        equal=ka == kb,
        only_in_a=sorted(ka - kb),
        only_in_b=sorted(kb - ka),
    )


def triangulation_to_json(method, framing, simplices, graph=None):
    data = {
        "method": method,
        "framing": None,
        "simplices": [[list(v) for v in sorted(s)] for s in simplices],
    }
    if framing is not None and graph is not None:
        data["framing"] = {
            str(v): {
                "in": list(framing.in_orders[v]),
                "out": list(framing.out_orders[v]),
            }
            for v in graph.inner_vertices()
        }
    return data
