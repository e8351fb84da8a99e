"""Command-line interface.

Exit codes: 0 success / property verified, 1 property violated or internal
check failed, 2 malformed input.
"""

from __future__ import annotations

import json
import sys

import click

from . import checks
from .asm import family_report
from .errors import ContractError, FlowpolyError, InputError
from .geometry import lattice_basis, triangulation_checks
from .graphs import (
    enumerate_routes,
    graph_from_json,
    id_order_framing,
    require_pruned,
    route_flow_vector,
    route_vertices,
)
from .kostant import flow_ehrhart_value, flow_polytope_volume
from .planar import arc_diagram
from .posets import (
    count_linear_extensions,
    order_ideals,
    order_polynomial,
    order_polytope_vertices,
    poset_from_json,
)
from .triangulations import (
    canonical_triangulation,
    dkk_maximal_cliques,
    dkk_triangulation,
    ps_triangulation,
    triangulation_to_json,
)


def _load_graph(data):
    """Parse a graph file; a graph with dead inner vertices is bad input here."""
    g, framing = graph_from_json(data)
    try:
        require_pruned(g)
    except ContractError as exc:
        raise InputError(str(exc)) from exc
    return g, framing


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _run(fn):
    try:
        return fn()
    except InputError as exc:
        click.echo(f"input error: {exc}", err=True)
        sys.exit(2)
    except FlowpolyError as exc:
        click.echo(f"check failed: {exc}", err=True)
        sys.exit(1)


@click.group()
def main():
    """Exact computations on flow polytopes, order polytopes and their kin."""


# ---------------------------------------------------------------------------
# graph commands


@main.group()
def graph():
    """Flow-polytope computations on a graph JSON file."""


def _resolve_framing(g, framing, spec):
    if spec == "id-order":
        return id_order_framing(g)
    if spec == "file":
        return framing
    if spec == "planar":
        return arc_diagram(g, framing).framing
    raise InputError(f"unknown framing {spec!r}")


@graph.command("volume")
@click.argument("path", type=click.Path(exists=True))
@click.option("--method", type=click.Choice(["kostant", "ps", "dkk"]), default="kostant")
@click.option("--all", "all_methods", is_flag=True, help="compute all three and compare")
def graph_volume(path, method, all_methods):
    def run():
        g, framing = _load_graph(_load_json(path))
        values = {}
        methods = ("kostant", "ps", "dkk") if all_methods else (method,)
        if "kostant" in methods:
            values["kostant"] = flow_polytope_volume(g)
        if "ps" in methods:
            values["ps"] = len(ps_triangulation(g, framing))
        if "dkk" in methods:
            values["dkk"] = len(dkk_maximal_cliques(g, framing))
        click.echo(json.dumps({"volume": values}))
        if all_methods and len(set(values.values())) != 1:
            click.echo("volume methods disagree", err=True)
            sys.exit(1)

    _run(run)


@graph.command("ehrhart")
@click.argument("path", type=click.Path(exists=True))
@click.option("--t-max", default=4, show_default=True)
def graph_ehrhart(path, t_max):
    def run():
        g, _ = _load_graph(_load_json(path))
        values = [flow_ehrhart_value(g, t) for t in range(t_max + 1)]
        click.echo(json.dumps({"t": list(range(t_max + 1)), "values": values}))

    _run(run)


@graph.command("routes")
@click.argument("path", type=click.Path(exists=True))
def graph_routes(path):
    def run():
        g, _ = _load_graph(_load_json(path))
        routes = enumerate_routes(g)
        click.echo(
            json.dumps(
                {
                    "count": len(routes),
                    "routes": [
                        {"edges": list(r), "vertices": list(route_vertices(g, r))}
                        for r in routes
                    ],
                }
            )
        )

    _run(run)


# ---------------------------------------------------------------------------
# poset commands


@main.group()
def poset():
    """Order-polytope computations on a poset JSON file."""


@poset.command("stats")
@click.argument("path", type=click.Path(exists=True))
def poset_stats(path):
    def run():
        p, _ = poset_from_json(_load_json(path))
        click.echo(
            json.dumps(
                {
                    "elements": len(p.elements),
                    "linear_extensions": count_linear_extensions(p),
                    "ideals": len(order_ideals(p)),
                }
            )
        )

    _run(run)


@poset.command("ehrhart")
@click.argument("path", type=click.Path(exists=True))
@click.option("--m-max", default=5, show_default=True)
def poset_ehrhart(path, m_max):
    def run():
        p, _ = poset_from_json(_load_json(path))
        values = [order_polynomial(p, m) for m in range(m_max + 1)]
        click.echo(json.dumps({"m": list(range(m_max + 1)), "values": values}))

    _run(run)


# ---------------------------------------------------------------------------
# triangulate


@main.command("triangulate")
@click.argument("path", type=click.Path(exists=True))
@click.option(
    "--method",
    type=click.Choice(["canonical", "dkk", "ps"]),
    default="dkk",
    show_default=True,
)
@click.option(
    "--framing",
    "framing_spec",
    default="file",
    show_default=True,
    help="file | id-order | planar",
)
@click.option("--check/--no-check", default=True, help="run the geometry checks")
def triangulate(path, method, framing_spec, check):
    """Emit a triangulation as JSON; exit 1 if its geometry checks fail."""

    def run():
        data = _load_json(path)
        if method == "canonical":
            p, _ = poset_from_json(data)
            simplices = [s.vertices for s in canonical_triangulation(p)]
            vertices = order_polytope_vertices(p)
            volume = count_linear_extensions(p)
            out = triangulation_to_json("canonical", None, simplices)
        else:
            g, framing = _load_graph(data)
            framing = _resolve_framing(g, framing, framing_spec)
            if method == "dkk":
                simplices = dkk_triangulation(g, framing)
                out = triangulation_to_json("dkk", framing, simplices, g)
            else:
                leaves = ps_triangulation(g, framing)
                simplices = [
                    tuple(route_flow_vector(g, r) for r in leaf.routes)
                    for leaf in leaves
                ]
                out = triangulation_to_json("ps", framing, simplices, g)
                out["flows"] = [list(leaf.flow) for leaf in leaves]
            vertices = [route_flow_vector(g, r) for r in enumerate_routes(g)]
            volume = flow_polytope_volume(g)
        if check:
            report = triangulation_checks(vertices, simplices, volume)
            out["checks"] = report.to_json()
            if not report.passed:
                click.echo(json.dumps(out))
                click.echo("triangulation checks failed", err=True)
                sys.exit(1)
        click.echo(json.dumps(out))

    _run(run)


# ---------------------------------------------------------------------------
# asm


@main.group()
def asm():
    """Alternating-sign-matrix family computations."""


def _parse_lambda(text):
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad partition {text!r}") from exc


@asm.command("report")
@click.option("--n", "n", type=int, required=True)
@click.option("--lambda", "lam", default="", help="comma-separated partition parts")
def asm_report(n, lam):
    def run():
        report = family_report(n, _parse_lambda(lam))
        for key, value in report.to_json().items():
            click.echo(f"{key:>22}: {value}")
        click.echo(json.dumps(report.to_json()))
        if not report.all_consistent:
            sys.exit(1)

    _run(run)


# ---------------------------------------------------------------------------
# verify


@main.command("verify")
@click.argument("prop", type=click.Choice(sorted(checks.PROPERTIES)))
@click.option("--n", "n", type=int, default=None, help="asm-family: restrict to one n")
def verify(prop, n):
    """Re-check one of the package's structural properties over the corpus."""

    def run():
        if prop == "asm-family" and n is not None:
            results = checks.verify_asm_family(ns=(n,))
        else:
            results = checks.PROPERTIES[prop]()
        failed = 0
        for name, ok, detail in results:
            click.echo(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
            failed += not ok
        click.echo(f"{len(results) - failed}/{len(results)} fixtures passed")
        if failed:
            sys.exit(1)

    _run(run)


if __name__ == "__main__":
    main()
