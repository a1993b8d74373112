"""End-to-end tests of the command-line interface: output format, worked
examples, determinism, and exit codes."""

import json

import pytest

from lgrpauli.cli import (
    EXIT_NONCOMMUTING,
    EXIT_NONMAXIMAL,
    EXIT_PARSE,
    EXIT_VERIFY,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_counts_n3(capsys):
    code, out, _ = run(capsys, "counts", "--n", "3")
    assert code == 0
    assert "points=63" in out
    assert "generators=135" in out
    assert "image=135" in out


def test_counts_n2(capsys):
    code, out, _ = run(capsys, "counts", "--n", "2")
    assert code == 0
    assert "generators=15" in out and "image=15" in out


def test_counts_json(capsys):
    code, out, _ = run(capsys, "counts", "--n", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data[0]["generators"] == 2295


def test_project_worked_example(capsys):
    code, out, _ = run(capsys, "project", "--n", "3", "--ops", "ZZI,XXI,IIX")
    assert code == 0
    assert "[0:0:0:1:0:0:1:0]" in out
    assert "IIXZ" in out


def test_project_two_qubits(capsys):
    code, out, _ = run(capsys, "project", "--n", "2", "--ops", "XI,IX")
    assert code == 0
    assert "[0:0:1:0]" in out and "observable=XI" in out


def test_project_non_commuting_exit_3(capsys):
    code, _, err = run(capsys, "project", "--n", "2", "--ops", "XI,ZI")
    assert code == EXIT_NONCOMMUTING
    assert "XI" in err and "ZI" in err


def test_project_non_maximal_exit_4(capsys):
    code, _, _ = run(capsys, "project", "--n", "2", "--ops", "XI,XI")
    assert code == EXIT_NONMAXIMAL


def test_project_parse_error_exit_2(capsys):
    code, _, _ = run(capsys, "project", "--n", "2", "--ops", "QQ")
    assert code == EXIT_PARSE


def test_wrong_qubit_count_exit_2(capsys):
    code, _, _ = run(capsys, "project", "--n", "3", "--ops", "XI,IX")
    assert code == EXIT_PARSE


def test_n_out_of_range_exit_2(capsys):
    code, _, _ = run(capsys, "orbits", "--n", "5")
    assert code == EXIT_PARSE


def test_lift_round_trip(capsys):
    code, out, _ = run(capsys, "lift", "--n", "3", "--point", "00010010")
    assert code == 0
    assert "ZZI" in out and "XXI" in out and "IIX" in out


def test_lift_non_image_exit_5(capsys):
    code, _, _ = run(capsys, "lift", "--n", "3", "--point", "10001000")
    assert code == EXIT_VERIFY


def test_map_command(capsys):
    code, out, _ = run(capsys, "map", "--n", "3", "--ops", "ZZI,XXI,IIX")
    assert code == 0
    assert "IIXZ" in out


def test_relations_census(capsys):
    code, out, _ = run(capsys, "relations", "--n", "3")
    assert code == 0
    assert "35 quadratic exchange relations" in out


def test_constraints_rank(capsys):
    code, out, _ = run(capsys, "constraints", "--n", "3")
    assert code == 0
    assert "rank=6" in out


def test_rank_command(capsys):
    code, out, _ = run(capsys, "rank", "--n", "2", "--point", "1010")
    assert code == 0
    assert "t_rank=2" in out and "e_rank=1" in out


def test_orbits_csv_deterministic(capsys):
    code1, out1, _ = run(capsys, "orbits", "--n", "3", "--format", "csv")
    code2, out2, _ = run(capsys, "orbits", "--n", "3", "--format", "csv")
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.count("\n") == 6  # header + 5 orbits


def test_threads_flag_does_not_change_output(capsys):
    _, out1, _ = run(capsys, "tables", "--n", "2", "--format", "json")
    _, out2, _ = run(capsys, "tables", "--n", "2", "--format", "json",
                     "--threads", "8")
    assert out1 == out2


def test_verify_all_suites_n2(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2")
    assert code == 0
    assert "FAIL" not in out
    assert "PASS" in out


def test_verify_cayley_n4(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--suite", "cayley")
    assert code == 0
    assert out.count("PASS") == 4


def test_cayley_command(capsys):
    code, out, _ = run(capsys, "cayley", "--n", "3")
    assert code == 0
    assert "x1*x5 + x2*x6 + x3*x7 + x4*x8" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "counts", "--n", "2", "--format", "json",
                       "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())[0]["generators"] == 15


def test_generators_listing(capsys):
    code, out, _ = run(capsys, "generators", "--n", "2")
    assert code == 0
    assert "15 generators" in out
