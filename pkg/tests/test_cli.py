import json

from ogrlab.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(argv, capsys):
    code, out = run_cli(argv, capsys)
    return code, json.loads(out)


def test_degree_command(capsys):
    code, payload = run_json(["degree", "--k", "2", "--n", "6"], capsys)
    assert code == 0
    assert payload["dim"] == 5 and payload["degree"] == 20
    assert len(payload["hilbert"]) == 6


def test_equations_counts(capsys):
    code, payload = run_json(
        ["equations", "--k", "2", "--n", "5", "--form", "standard"], capsys
    )
    assert code == 0
    assert payload["plucker_count"] == 5
    assert payload["orthogonality_count"] == 15


def test_orthopositroids_enumerate_count(capsys):
    code, payload = run_json(
        ["orthopositroids", "enumerate", "--k", "2", "--n", "6"], capsys
    )
    assert code == 0
    assert payload["count"] == 99
    assert all(rec["is_ortho"] for rec in payload["records"])


def test_orthopositroids_test_failure_detail(capsys):
    code, payload = run_json(
        ["orthopositroids", "test", "--k", "2", "--n", "5",
         "--bases", "12,14,25,45"],
        capsys,
    )
    assert code == 0
    assert payload["is_ortho"] is False
    assert payload["failures"]


def test_matchings_map(capsys):
    code, payload = run_json(["matchings", "map", "--k", "1"], capsys)
    assert code == 0
    assert payload["count"] == 3
    words = {tuple(rec["perm"]) for rec in payload["maps"]}
    assert words == {(2, 3, 1), (2, 1, 3), (1, 3, 2)}


def test_ogr1_sample(capsys):
    code, payload = run_json(
        ["ogr1", "sample", "--n", "5", "--A", "1,3", "--B", "2", "--params", "2"],
        capsys,
    )
    assert code == 0
    assert payload["point"]["coords"]["[1]"] == "3/5"
    assert payload["quadric_residual"] == "0"


def test_ogr1_cells(capsys):
    code, payload = run_json(["ogr1", "cells", "--n", "4"], capsys)
    assert code == 0
    assert payload["count"] == 9
    assert payload["f_vector"] == [4, 4, 1]


def test_groebner_check_exit_code(capsys):
    code, payload = run_json(["groebner-check", "--k", "2", "--n", "5"], capsys)
    assert code == 0 and payload["ok"]


def test_sample_roundtrip(capsys):
    code, payload = run_json(
        ["sample", "--k", "2", "--n", "6", "--seed", "3"], capsys
    )
    assert code == 0
    assert payload["residual_zero"] is True


def test_hodge_check_cli(capsys):
    code, payload = run_json(
        ["hodge-check", "--k", "2", "--n", "5", "--count", "5"], capsys
    )
    assert code == 0 and payload["failures"] == 0


def test_phi_map_cli(capsys):
    code, payload = run_json(["phi-map", "--k", "1", "--seed", "4"], capsys)
    assert code == 0 and payload["image_residual_zero"] is True


def test_unknown_command_exit_2(capsys):
    assert main(["frobnicate"]) == 2


def test_input_error_exit_2(capsys):
    code = main(["sample", "--k", "3", "--n", "5"])
    assert code == 2
    assert "input error" in capsys.readouterr().err


def test_byte_determinism(capsys):
    args = ["sample", "--k", "2", "--n", "6", "--seed", "11"]
    _, first = run_cli(args, capsys)
    _, second = run_cli(args, capsys)
    assert first == second


def test_csv_format(capsys):
    code, out = run_cli(
        ["orthopositroids", "enumerate", "--k", "2", "--n", "5",
         "--format", "csv"],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("perm;")
    assert len(lines) == 16  # header + 15 records
