"""End-to-end runs of the command line interface through main()."""

import json

import pytest

from bicayley.cli import main
from bicayley.construction import build, parse_spec
from bicayley.graphs import decode_graph6
from bicayley.symmetry import certificate

GP125 = "H=[6,2]; R={(0,1)}; L={(3,0)}; S={(0,0),(1,1)}"
HEAWOOD = "H=7; S={0,1,3}"


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_build_writes_graph6(tmp_path, capsys):
    out = tmp_path / "gp125.g6"
    assert main(["build", GP125, "--graph6-out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "vertices: 24" in text and "connected: True" in text
    stored = out.read_text().strip()
    assert decode_graph6(stored) == build(parse_spec(GP125)).graph


def test_build_json(capsys):
    code, payload = run_json(capsys, ["build", GP125])
    assert code == 0
    assert payload["vertices"] == 24 and payload["edges"] == 36
    assert payload["connected"] and payload["predicted_connected"]


def test_analyze_with_selfcheck(capsys):
    code, payload = run_json(capsys, ["analyze", "H=3; S={0,1,2}", "--seed", "7"])
    assert code == 0
    assert payload["girth"] == 4
    assert payload["aut_order"] == 72
    assert payload["arc_type"] == 3 and payload["arc_regular"]
    assert payload["order_formula_ok"]
    assert payload["relabel_selfcheck"]
    assert payload["certificate"] == certificate(build(parse_spec("H=3; S={0,1,2}")).graph)


def test_iso_exit_codes(capsys):
    assert main(["iso", HEAWOOD, "H=7; S={0,1,5}"]) == 0
    assert "isomorphic: True" in capsys.readouterr().out
    assert main(["iso", HEAWOOD, "H=7; S={0,1,2}"]) == 1


def test_table_commands(capsys):
    code, payload = run_json(capsys, ["table1", "--max-vertices", "20"])
    assert code == 0 and payload["pass"]
    assert len(payload["instances"]) == 5
    assert all(rec["ok"] for rec in payload["instances"])
    code, payload = run_json(capsys, ["table2", "--max-vertices", "20"])
    assert code == 0 and payload["pass"]
    assert len(payload["instances"]) == 6


def test_theorem_a_bound_too_small(capsys):
    # groups of order <= 4 only reach K_4 and the cube
    code, payload = run_json(capsys, ["theorem-a", "--max-group-order", "4"])
    assert code == 1 and not payload["pass"]
    assert sorted(rec["name"] for rec in payload["instances"]) == ["K_4", "Q_3"]


def test_theorem_b_small(capsys):
    code, payload = run_json(capsys, ["theorem-b", "--max-vertices", "20"])
    assert code == 0 and payload["pass"]
    assert all(rec["is_bci"] for rec in payload["instances"])


def test_voltage_fig(capsys):
    code, payload = run_json(capsys, ["voltage-fig1", "--orders", "1,2,3"])
    assert code == 0 and payload["pass"] and payload["base_is_cube"]
    by_order = {rec["order"]: rec for rec in payload["instances"]}
    assert by_order[1]["alpha_lifts"] and by_order[1]["cover_vertices"] == 8
    assert not by_order[2]["alpha_lifts"]
    assert by_order[3]["alpha_lifts"] and by_order[3]["cover_is_gp_12_5"]


def test_bci_command(capsys):
    code, payload = run_json(capsys, ["bci", HEAWOOD, "--method", "cross"])
    assert code == 0 and payload["is_bci"]
    code, payload = run_json(capsys, ["bci", "H=8; S={0,1,2,5}", "--method", "oracle"])
    assert code == 1 and not payload["is_bci"]
    assert payload["counterexample"] == [[0], [1], [3], [4]]


def test_negative_controls_command(capsys):
    code, payload = run_json(capsys, ["negative-controls"])
    assert code == 0 and payload["ok"]
    assert payload["desargues_spoke_only_match"] is None


def test_requires_a_subcommand(capsys):
    with pytest.raises(SystemExit):
        main([])
    assert "usage" in capsys.readouterr().err.lower()
