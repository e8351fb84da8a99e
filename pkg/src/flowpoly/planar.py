"""Planar line drawings, truncated duals, and the order/flow polytope maps.

Graphs are drawn with vertices 1..n on a horizontal line and all arcs in
the upper half-plane; the drawing is described combinatorially by the
top-to-bottom in/out arc orders at each vertex.  Faces come from rotation
systems: darts are (edge id, direction) pairs and the successor of a dart
is the counterclockwise predecessor of its reverse at the head vertex, so
every face is traced counterclockwise with its interior on the left.

The bounded regions of a drawing, ordered "lower to higher" across each
arc, form a poset; conversely a poset with an upward-planar Hasse drawing
yields a flow graph as the truncated dual of the augmented Hasse diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractError, InputError, InternalCheckError, NotPlanarError
from .graphs import DirectedMultigraph, Framing, require_pruned
from .posets import HasseEmbedding, Poset

BOTTOM = "BOTTOM"
TOP = "TOP"


@dataclass
class PlanarGraphData:
    """A graph together with its drawing's bounded regions.

    regions maps a region label to the tuple of edge ids on its boundary;
    edge_sides[e] = (below, above) holds the labels of the regions on the
    two sides of edge e, using BOTTOM/TOP for the unbounded region
    approached from below respectively above the drawing.
    """

    graph: DirectedMultigraph
    regions: dict
    edge_sides: tuple
    framing: Framing

    def __post_init__(self):
        g = self.graph
        if len(self.regions) != g.edge_count - g.n + 1:
            raise InternalCheckError(
                f"{len(self.regions)} regions, expected {g.edge_count - g.n + 1}"
            )
        if len(self.edge_sides) != g.edge_count:
            raise InternalCheckError("edge_sides must cover every edge")
        for e, (below, above) in enumerate(self.edge_sides):
            if below == above:
                raise InternalCheckError(f"edge {e} has the same label on both sides")
            for label in (below, above):
                if label not in self.regions and label not in (BOTTOM, TOP):
                    raise InternalCheckError(f"edge {e} borders unknown label {label!r}")

    def to_json(self):
        def lab(x):
            return str(x) if not isinstance(x, (int, str)) else x

        return {
            "regions": {str(lab(r)): list(es) for r, es in self.regions.items()},
            "edge_sides": [[lab(a), lab(b)] for a, b in self.edge_sides],
        }


# ---------------------------------------------------------------------------
# rotation systems and face tracing

_FWD, _REV = 1, -1


def _trace_faces(rotations):
    """Orbit decomposition of darts under next = CCW-predecessor of reverse.

    rotations: vertex -> CCW-ordered list of darts (edge id, direction)
    based at that vertex.  Returns the list of faces, each a tuple of darts.
    """
    at_vertex = {}
    position = {}
    for v, darts in rotations.items():
        for i, d in enumerate(darts):
            if d in position:
                raise InternalCheckError(f"dart {d} appears at two vertices")
            position[d] = (v, i)
        at_vertex[v] = darts
    faces = []
    seen = set()
    for start in position:
        if start in seen:
            continue
        face = []
        d = start
        while True:
            face.append(d)
            seen.add(d)
            rev = (d[0], -d[1])
            if rev not in position:
                raise InputError(f"rotation system lacks the reverse of dart {d}")
            v, i = position[rev]
            d = at_vertex[v][(i - 1) % len(at_vertex[v])]
            if d == start:
                break
            if d in seen:
                raise InputError("face tracing failed to close; embedding inconsistent")
        faces.append(tuple(face))
    return faces


# ---------------------------------------------------------------------------
# arc diagrams


def _full_orders(g, framing):
    """Top-to-bottom arc orders at every vertex, defaulting the endpoints.

    Inner-vertex orders come from the framing.  At vertices 1 and n (and
    at any vertex the framing omits) arcs are ordered with the farther
    endpoint on top, parallel arcs following their order at the other end.
    """
    in_orders, out_orders = {}, {}
    for v in range(1, g.n + 1):
        ins, outs = g.in_edge_ids(v), g.out_edge_ids(v)
        in_orders[v] = framing.in_orders.get(v)
        out_orders[v] = framing.out_orders.get(v)
        if in_orders[v] is not None and sorted(in_orders[v]) != sorted(ins):
            raise InputError(f"in-order at vertex {v} does not match its edges")
        if out_orders[v] is not None and sorted(out_orders[v]) != sorted(outs):
            raise InputError(f"out-order at vertex {v} does not match its edges")
    for v in range(1, g.n + 1):
        if out_orders[v] is None:
            ref = {}
            for e in g.out_edge_ids(v):
                head = g.edges[e][1]
                other = in_orders.get(head)
                ref[e] = other.index(e) if other is not None else e
            out_orders[v] = tuple(
                sorted(g.out_edge_ids(v), key=lambda e: (-g.edges[e][1], ref[e]))
            )
        if in_orders[v] is None:
            ref = {}
            for e in g.in_edge_ids(v):
                tail = g.edges[e][0]
                other = out_orders.get(tail)
                ref[e] = other.index(e) if other is not None else e
            in_orders[v] = tuple(
                sorted(g.in_edge_ids(v), key=lambda e: (g.edges[e][0], ref[e]))
            )
    return in_orders, out_orders


def _crossing_pair(g, in_orders, out_orders):
    """First pair of arcs that must cross under the given orders, or None."""
    m = g.edge_count
    for e in range(m):
        for f in range(e + 1, m):
            (u1, v1), (u2, v2) = g.edges[e], g.edges[f]
            if u1 < u2 < v1 < v2 or u2 < u1 < v2 < v1:
                return (e, f)
            if (u1, v1) == (u2, v2):
                # parallel arcs must nest the same way at both endpoints
                order_tail = out_orders[u1].index(e) < out_orders[u1].index(f)
                order_head = in_orders[v1].index(e) < in_orders[v1].index(f)
                if order_tail != order_head:
                    return (e, f)
            elif u1 == u2:
                # shared tail: the arc reaching farther must be on top
                top_first = out_orders[u1].index(e) < out_orders[u1].index(f)
                if top_first != (v1 > v2):
                    return (e, f)
            elif v1 == v2:
                # shared head: the arc from farther left must be on top
                top_first = in_orders[v1].index(e) < in_orders[v1].index(f)
                if top_first != (u1 < u2):
                    return (e, f)
    return None


def arc_diagram(g, framing):
    """Regions and edge sides of the upper-half-plane drawing of g.

    The framing gives top-to-bottom arc orders; orders at vertices 1 and n
    may be omitted and are then chosen canonically.  Raises NotPlanarError
    when two arcs are forced to cross.
    """
    require_pruned(g)
    if g.n < 2:
        raise InputError("arc diagrams need at least two vertices")
    in_orders, out_orders = _full_orders(g, framing)
    pair = _crossing_pair(g, in_orders, out_orders)
    if pair is not None:
        raise NotPlanarError(f"not planar in this arc order: edges {pair}", edge_pair=pair)

    m = g.edge_count
    # helper edges along the horizontal line, id m+a-1 for the segment (a, a+1)
    line = {a: m + a - 1 for a in range(1, g.n)}
    rotations = {}
    for v in range(1, g.n + 1):
        darts = []
        if v < g.n:
            darts.append((line[v], _FWD))
        darts.extend((e, _FWD) for e in reversed(out_orders[v]))
        darts.extend((e, _REV) for e in in_orders[v])
        if v > 1:
            darts.append((line[v - 1], _REV))
        rotations[v] = darts

    faces = _trace_faces(rotations)
    if len(faces) != m + 1:
        raise NotPlanarError("not planar in this arc order: face count mismatch")
    face_of = {}
    for i, face in enumerate(faces):
        for d in face:
            face_of[d] = i
    outer = face_of[(line[1], _REV)]
    if any(face_of[(line[a], _REV)] != outer for a in line):
        raise NotPlanarError("not planar in this arc order: line is not on the outer face")

    has_line_dart = [any(d[0] >= m for d in face) for face in faces]
    region_faces = [i for i in range(len(faces)) if not has_line_dart[i]]
    if len(region_faces) != m - g.n + 1:
        raise InternalCheckError("bounded region count disagrees with the Euler count")
    region_index = {f: r for r, f in enumerate(region_faces)}
    regions = {
        region_index[f]: tuple(sorted({d[0] for d in faces[f]}))
        for f in region_faces
    }

    edge_sides = []
    for e in range(m):
        above_face = face_of[(e, _FWD)]
        below_face = face_of[(e, _REV)]
        if above_face in region_index:
            above = region_index[above_face]
        elif above_face == outer:
            above = TOP
        else:
            raise InternalCheckError(f"edge {e} has a line-touching region above it")
        below = region_index.get(below_face, BOTTOM)
        edge_sides.append((below, above))

    planar_framing = Framing(
        in_orders={v: in_orders[v] for v in g.inner_vertices()},
        out_orders={v: out_orders[v] for v in g.inner_vertices()},
    )
    return PlanarGraphData(g, regions, tuple(edge_sides), planar_framing)


# ---------------------------------------------------------------------------
# truncated dual poset


@dataclass
class DualPoset:
    poset: Poset
    cover_edges: dict  # (lower label, upper label) -> tuple of separating edge ids


def dual_poset(pg):
    """Poset on the bounded regions, ordered lower-to-higher across arcs."""
    relations = []
    cover_edges = {}
    for e, (below, above) in enumerate(pg.edge_sides):
        cover_edges.setdefault((below, above), []).append(e)
        if below not in (BOTTOM, TOP) and above not in (BOTTOM, TOP):
            relations.append((below, above))
    poset = Poset.from_relations(tuple(pg.regions), relations)
    for (below, above) in cover_edges:
        if below in (BOTTOM, TOP) or above in (BOTTOM, TOP):
            continue
        if (below, above) not in poset.covers:
            raise InternalCheckError(
                f"regions {below} < {above} are edge-adjacent but not a cover"
            )
    return DualPoset(poset, {k: tuple(v) for k, v in cover_edges.items()})


# ---------------------------------------------------------------------------
# poset -> flow graph (truncated dual of the augmented Hasse diagram)

_BOT, _TOPHAT = ("__0hat__",), ("__1hat__",)  # private sentinels, not valid labels


def poset_to_flow_graph(p, emb=None):
    """Flow graph G_P: the truncated dual of Hasse(P + bottom + top).

    The Hasse diagram of the augmented poset is drawn upward-planar using
    the supplied embedding, two extra bottom-to-top edges are added at the
    far left and far right, and the faces of that drawing become the
    vertices of G_P (numbered source-to-sink).  Every G_P edge crosses one
    Hasse edge x -> y; its sides are labeled (x, y), so the regions of the
    returned PlanarGraphData are exactly the elements of P.
    """
    if emb is None:
        emb = _default_embedding(p)
    elements = p.elements
    if _BOT in elements or _TOPHAT in elements:
        raise InputError("poset uses a reserved internal label")

    hasse = []  # (x, y) pairs in hat(P), parallel to edge ids of the dual
    for a, b in p.covers:
        hasse.append((a, b))
    for mmin in emb.bottom:
        hasse.append((_BOT, mmin))
    for mmax in emb.top:
        hasse.append((mmax, _TOPHAT))
    if not elements:
        hasse.append((_BOT, _TOPHAT))
    left = len(hasse)
    right = left + 1

    up = {x: [] for x in elements}
    down = {x: [] for x in elements}
    for eid, (x, y) in enumerate(hasse):
        if x in down:  # covers and element->tophat edges, keyed at x
            up[x].append(eid)
        if y in up:
            down[y].append(eid)
    # sort per-element dart lists left-to-right following the embedding
    for x in elements:
        up_rank = {y: i for i, y in enumerate(emb.up.get(x, ()))}
        down_rank = {y: i for i, y in enumerate(emb.down.get(x, ()))}
        up[x].sort(
            key=lambda eid: up_rank.get(hasse[eid][1], len(up_rank))
        )
        down[x].sort(
            key=lambda eid: down_rank.get(hasse[eid][0], len(down_rank))
        )

    rotations = {}
    for x in elements:
        rotations[x] = [(e, _FWD) for e in reversed(up[x])] + [
            (e, _REV) for e in down[x]
        ]
    bottom_links = [eid for eid, (x, _) in enumerate(hasse) if x == _BOT]
    top_links = [eid for eid, (_, y) in enumerate(hasse) if y == _TOPHAT]
    rotations[_BOT] = (
        [(right, _FWD)]
        + [(e, _FWD) for e in reversed(bottom_links)]
        + [(left, _FWD)]
    )
    rotations[_TOPHAT] = (
        [(left, _REV)] + [(e, _REV) for e in top_links] + [(right, _REV)]
    )

    faces = _trace_faces(rotations)
    expected_faces = (len(hasse) + 2) - (len(elements) + 2) + 2
    if len(faces) != expected_faces:
        raise InputError("embedding inconsistent: wrong face count for a planar drawing")
    face_of = {}
    for i, face in enumerate(faces):
        for d in face:
            face_of[d] = i
    outer = face_of[(left, _FWD)]
    source = face_of[(left, _REV)]
    sink = face_of[(right, _FWD)]
    if outer in (source, sink):
        raise InputError("embedding inconsistent: boundary faces collapse together")

    # number the faces (except the outer one) by a deterministic topological
    # sort of the west-to-east dual adjacency
    dual_arcs = []  # (west face, east face, hasse edge id)
    for eid in range(len(hasse)):
        west, east = face_of[(eid, _FWD)], face_of[(eid, _REV)]
        if outer in (west, east):
            raise InputError("embedding inconsistent: a crossed edge borders the outside")
        dual_arcs.append((west, east, eid))

    inner_faces = [i for i in range(len(faces)) if i != outer]
    face_key = {i: tuple(sorted(faces[i])) for i in inner_faces}
    indeg = {i: 0 for i in inner_faces}
    for west, east, _ in dual_arcs:
        indeg[east] += 1
    number = {}
    ready = sorted((i for i in inner_faces if indeg[i] == 0), key=face_key.get)
    nxt = 1
    while ready:
        fce = ready.pop(0)
        number[fce] = nxt
        nxt += 1
        for west, east, _ in dual_arcs:
            if west == fce:
                indeg[east] -= 1
                if indeg[east] == 0:
                    ready.append(east)
        ready.sort(key=face_key.get)
    if len(number) != len(inner_faces):
        raise InputError("embedding inconsistent: dual adjacency is cyclic")
    if number[source] != 1 or number[sink] != len(inner_faces):
        raise InternalCheckError("dual source/sink are not extreme in the numbering")

    dual_arcs.sort(key=lambda t: (number[t[0]], number[t[1]], t[2]))
    g = DirectedMultigraph(
        len(inner_faces), tuple((number[w], number[e]) for w, e, _ in dual_arcs)
    )

    def to_label(x):
        if x is _BOT:
            return BOTTOM
        if x is _TOPHAT:
            return TOP
        return x

    edge_sides = tuple(
        (to_label(hasse[eid][0]), to_label(hasse[eid][1])) for _, _, eid in dual_arcs
    )
    dual_id = {eid: i for i, (_, _, eid) in enumerate(dual_arcs)}

    regions = {}
    for x in elements:
        incident = [dual_id[eid] for eid, (a, b) in enumerate(hasse) if x in (a, b)]
        regions[x] = tuple(sorted(incident))

    # framing: each face's boundary cycle is one run of forward darts (its
    # east side, traversed bottom to top) and one run of reversed darts (its
    # west side, top to bottom)
    in_orders, out_orders = {}, {}
    for fce in inner_faces:
        v = number[fce]
        cycle = [d for d in faces[fce] if d[0] < len(hasse)]
        fwd_flags = [d[1] == _FWD for d in cycle]
        # rotate the cycle so it starts at a forward-run boundary
        k = len(cycle)
        start = next(
            (i for i in range(k) if fwd_flags[i] and not fwd_flags[i - 1]),
            0,
        )
        cycle = cycle[start:] + cycle[:start]
        fwd = [dual_id[d[0]] for d in cycle if d[1] == _FWD]
        rev = [dual_id[d[0]] for d in cycle if d[1] == _REV]
        if [d[1] == _FWD for d in cycle] != [True] * len(fwd) + [False] * len(rev):
            raise InternalCheckError(f"face {v} boundary is not two monotone runs")
        if 1 < v:
            in_orders[v] = tuple(rev)
        if v < len(inner_faces):
            out_orders[v] = tuple(reversed(fwd))
    framing = Framing(
        in_orders={v: in_orders[v] for v in g.inner_vertices()},
        out_orders={v: out_orders[v] for v in g.inner_vertices()},
    )
    Framing.validate(g, framing)
    return PlanarGraphData(g, regions, edge_sides, framing)


def _default_embedding(p):
    """Left-to-right cover orders by element position; fine for fixtures."""
    index = {e: i for i, e in enumerate(p.elements)}
    up = {
        x: tuple(sorted(p.upper_covers(x), key=index.get)) for x in p.elements
    }
    down = {
        x: tuple(sorted(p.lower_covers(x), key=index.get)) for x in p.elements
    }
    return HasseEmbedding(
        up=up,
        down=down,
        bottom=tuple(sorted(p.minimal_elements(), key=index.get)),
        top=tuple(sorted(p.maximal_elements(), key=index.get)),
    )


# ---------------------------------------------------------------------------
# the volume-preserving maps


def _check_flow(g, fl):
    """Validate nonnegativity and conservation; returns the total throughput."""
    if len(fl) != g.edge_count:
        raise InputError("flow vector length must equal the edge count")
    fl = tuple(Fraction(x) for x in fl)
    if any(x < 0 for x in fl):
        raise InputError("flows must be nonnegative")
    total = sum(fl[e] for e in g.out_edge_ids(1))
    for v in g.inner_vertices():
        into = sum(fl[e] for e in g.in_edge_ids(v))
        out = sum(fl[e] for e in g.out_edge_ids(v))
        if into != out:
            raise InputError(f"flow is not conserved at vertex {v}")
    if total != sum(fl[e] for e in g.in_edge_ids(g.n)):
        raise InputError("flow is not conserved at the sink")
    return fl, total


def flow_to_order_point(pg, fl):
    """Height function on the regions: f(x) = flow crossed from below up to x.

    Well-definedness is asserted by re-checking every edge after the
    breadth-first labeling, which amounts to comparing all pairs of paths.
    """
    fl, total = _check_flow(pg.graph, fl)
    values = {BOTTOM: Fraction(0)}
    frontier = [BOTTOM]
    while frontier:
        nxt = []
        for label in frontier:
            for e, (below, above) in enumerate(pg.edge_sides):
                if below == label and above not in values:
                    values[above] = values[label] + fl[e]
                    nxt.append(above)
                elif above == label and below not in values:
                    values[below] = values[label] - fl[e]
                    nxt.append(below)
        frontier = nxt
    for e, (below, above) in enumerate(pg.edge_sides):
        if values[above] - values[below] != fl[e]:
            raise InternalCheckError(
                f"region heights are inconsistent across edge {e}"
            )
    if values.get(TOP, total) != total:
        raise InternalCheckError("top of the drawing is not at the total flow value")
    return {r: values[r] for r in pg.regions}


def order_to_flow_point(pg, f, total=1):
    """Flow from a height function: fl(e) = f(above) - f(below).

    ``f`` assigns a value to every region label; BOTTOM and TOP are fixed
    at 0 and ``total``.  Monotonicity violations raise InputError.
    """
    values = dict(f)
    values[BOTTOM] = Fraction(0)
    values[TOP] = Fraction(total)
    missing = [r for r in pg.regions if r not in values]
    if missing:
        raise InputError(f"no value supplied for regions {missing}")
    fl = []
    for e, (below, above) in enumerate(pg.edge_sides):
        d = Fraction(values[above]) - Fraction(values[below])
        if d < 0:
            raise InputError(
                f"values are not order preserving across edge {e} "
                f"({below!r} -> {above!r})"
            )
        fl.append(d)
    fl, seen_total = _check_flow(pg.graph, fl)
    if seen_total != Fraction(total):
        raise InternalCheckError("reconstructed flow has the wrong throughput")
    return tuple(fl)
