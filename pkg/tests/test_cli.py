import json

import pytest

from waring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rank_command(capsys):
    code, out, _ = run(capsys, "rank", "x1*x2*x3")
    assert code == 0
    assert out.splitlines()[0] == "4"


def test_rank_sum(capsys):
    code, out, _ = run(capsys, "rank", "x1^2*x2 + x3^3")
    assert code == 0
    assert out.splitlines()[0] == "4"


def test_rank_linear(capsys):
    code, out, _ = run(capsys, "rank", "x1 + x2")
    assert code == 0
    assert out.splitlines()[0] == "1"


def test_rank_json(capsys):
    code, out, _ = run(capsys, "rank", "x1^2*x2 + x3^3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["rank"] == 4
    assert data["per_monomial"][0]["rank"] == 3


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "rank", "x1 ++ x2")
    assert code == 1
    assert "position" in err


def test_decompose_four_cubes(capsys):
    code, out, _ = run(capsys, "decompose", "x1*x2*x3")
    assert code == 0
    assert "1/24" in out


def test_decompose_zeta3(capsys):
    code, out, _ = run(capsys, "decompose", "x1*x2^2")
    assert code == 0
    assert "z3" in out and "1/9" in out


def test_decompose_non_coprime(capsys):
    code, _, err = run(capsys, "decompose", "x1*x2 + x2*x3")
    assert code == 1
    assert "x2" in err


def test_decompose_verify_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "decompose", "x1^2*x2 + x3^3", "--json")
    assert code == 0
    path = tmp_path / "dec.json"
    path.write_text(out)
    code, out, _ = run(capsys, "verify", "x1^2*x2 + x3^3", str(path))
    assert code == 0
    assert "PASS" in out


def test_verify_detects_tampering(capsys, tmp_path):
    code, out, _ = run(capsys, "decompose", "x1*x2*x3", "--json")
    data = json.loads(out)
    data["terms"][0]["gamma"]["coeffs"][0] = "1/23"
    path = tmp_path / "dec.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "x1*x2*x3", str(path))
    assert code == 2
    assert "FAIL" in out


def test_bound_commands(capsys):
    assert run(capsys, "bound", "x1*x2*x3")[1].strip() == "3"
    assert run(capsys, "bound", "x1^2*x2^2")[1].strip() == "3"
    assert run(capsys, "bound", "x1^5")[1].strip() == "1"


def test_bound_non_coprime_flagged(capsys):
    code, out, err = run(capsys, "bound", "x1^2*x2 + x1*x2^2")
    assert code == 0
    assert "lower bound only" in err


def test_survey_single_degree(capsys):
    code, out, _ = run(capsys, "survey", "3", "7")
    assert code == 0
    assert "16" in out and "12" in out


def test_survey_range_csv(capsys):
    code, out, _ = run(capsys, "survey", "3", "--range", "3:6", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("d,")
    assert len(lines) == 5


def test_survey_ratio(capsys):
    code, out, _ = run(capsys, "survey", "4", "--ratio", "--kmax", "5")
    assert code == 0
    assert "24/27" in out or "8/9" in out


def test_survey_resource_exit_code(capsys):
    code, _, err = run(capsys, "survey", "4", "30", "--max-enum", "5")
    assert code == 3


def test_hf_table(capsys):
    code, out, _ = run(capsys, "hf", "x1^2,x2^2", "--tmax", "3")
    assert code == 0
    assert "HF(2) = 1" in out
    assert "sum = 4" in out


def test_hf_claim(capsys):
    code, out, _ = run(capsys, "hf", "--claim", "x1*x2^2 + x3^3")
    assert code == 0
    assert "PASS" in out


def test_hf_claim_random(capsys):
    code, out, _ = run(capsys, "hf", "--claim-random", "5", "--seed", "3")
    assert code == 0
    assert out.count("pass") == 5


def test_byte_identical_output(capsys):
    a = run(capsys, "decompose", "x1*x2^2 + x3^3", "--json")[1]
    b = run(capsys, "decompose", "x1*x2^2 + x3^3", "--json")[1]
    assert a == b
