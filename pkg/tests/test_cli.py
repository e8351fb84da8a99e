import json

import pytest
from click.testing import CliRunner

from flowpoly.cli import main
from flowpoly.graphs import complete_graph, graph_to_json, random_framing
from flowpoly.posets import poset_to_json, skew_star, zigzag


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def k5_path(tmp_path):
    g = complete_graph(5)
    path = tmp_path / "k5.json"
    path.write_text(json.dumps(graph_to_json(g, random_framing(g, 3))))
    return str(path)


@pytest.fixture
def poset_path(tmp_path):
    path = tmp_path / "skew4.json"
    path.write_text(json.dumps(poset_to_json(*skew_star(4))))
    return str(path)


def test_graph_volume_all_methods_agree(runner, k5_path):
    result = runner.invoke(main, ["graph", "volume", k5_path, "--all"])
    assert result.exit_code == 0
    assert json.loads(result.output)["volume"] == {"kostant": 2, "ps": 2, "dkk": 2}


def test_graph_ehrhart(runner, k5_path):
    result = runner.invoke(main, ["graph", "ehrhart", k5_path, "--t-max", "2"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["values"][0] == 1 and data["values"][1] == 8


def test_graph_routes(runner, k5_path):
    result = runner.invoke(main, ["graph", "routes", k5_path])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["count"] == 8
    assert all(r["vertices"][0] == 1 and r["vertices"][-1] == 5 for r in data["routes"])


def test_poset_stats_and_ehrhart(runner, poset_path):
    result = runner.invoke(main, ["poset", "stats", poset_path])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data == {"elements": 6, "linear_extensions": 16, "ideals": 14}
    result = runner.invoke(main, ["poset", "ehrhart", poset_path, "--m-max", "3"])
    assert json.loads(result.output)["values"] == [0, 1, 14, 84]


def test_triangulate_dkk_with_checks(runner, k5_path):
    result = runner.invoke(main, ["triangulate", k5_path, "--method", "dkk"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert len(data["simplices"]) == 2
    assert data["checks"]["volume_total"] == 2
    assert data["checks"]["failures"] == []


def test_triangulate_ps_reports_flows(runner, k5_path):
    result = runner.invoke(
        main, ["triangulate", k5_path, "--method", "ps", "--framing", "id-order"]
    )
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert len(data["flows"]) == len(data["simplices"]) == 2


def test_triangulate_canonical(runner, poset_path):
    result = runner.invoke(main, ["triangulate", poset_path, "--method", "canonical"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert len(data["simplices"]) == 16
    assert data["framing"] is None


def test_asm_report(runner):
    result = runner.invoke(main, ["asm", "report", "--n", "4", "--lambda", "2,1"])
    assert result.exit_code == 0
    data = json.loads(result.output.strip().splitlines()[-1])
    assert data["all_consistent"] and data["lambda"] == [2, 1]


def test_asm_report_bad_partition(runner):
    result = runner.invoke(main, ["asm", "report", "--n", "3", "--lambda", "x"])
    assert result.exit_code == 2


def test_verify_property(runner):
    result = runner.invoke(main, ["verify", "thm2"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("fixtures passed")


def test_verify_asm_family_single_n(runner):
    result = runner.invoke(main, ["verify", "asm-family", "--n", "3"])
    assert result.exit_code == 0


def test_malformed_graph_file_exits_2(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    result = runner.invoke(main, ["graph", "volume", str(bad)])
    assert result.exit_code == 2
    bad.write_text(json.dumps({"edges": [[1, 2]]}))
    result = runner.invoke(main, ["graph", "volume", str(bad)])
    assert result.exit_code == 2


def test_degenerate_graph_exits_2(runner, tmp_path):
    path = tmp_path / "dead.json"
    path.write_text(json.dumps({"n": 3, "edges": [[1, 2], [1, 3]]}))
    result = runner.invoke(main, ["graph", "volume", str(path)])
    assert result.exit_code == 2


def test_nonplanar_framing_request_exits(runner, tmp_path):
    # K_4 admits no crossing-free arc diagram, so --framing planar must fail
    g = complete_graph(4)
    path = tmp_path / "k4.json"
    path.write_text(json.dumps(graph_to_json(g, None)))
    result = runner.invoke(
        main, ["triangulate", str(path), "--method", "dkk", "--framing", "planar"]
    )
    assert result.exit_code == 2


def test_zigzag_poset_roundtrips_through_cli(runner, tmp_path):
    path = tmp_path / "zz5.json"
    path.write_text(json.dumps(poset_to_json(*zigzag(5))))
    result = runner.invoke(main, ["poset", "stats", str(path)])
    assert json.loads(result.output)["linear_extensions"] == 16
