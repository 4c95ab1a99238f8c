import json

import pytest

from blockalg.cli import main

WEIGHT_B = '{"charpoly": [1, 1], "central_charge": 1}'
WEIGHT_ZERO_LABELS = '{"explicit": [], "central_charge": 3}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bracket_example(capsys):
    code, out, _ = run(capsys, "bracket", "L(1,0)", "L(-1,0)")
    assert code == 0
    assert out.strip() == "-2*L(0,0)"


def test_bracket_json_matches_text(capsys):
    _, text, _ = run(capsys, "bracket", "L(1,0)", "L(-1,0)")
    code, raw, _ = run(capsys, "bracket", "L(1,0)", "L(-1,0)", "--format", "json")
    assert code == 0
    data = json.loads(raw)
    assert data["printed"] == text.strip()
    assert data["result"] == [{"alpha": 0, "i": 0, "coeff": "-2/1"}]


def test_act_command(capsys):
    code, out, _ = run(
        capsys, "act", "L(0,1)", "L(-1,-1)*v", "--weight", WEIGHT_B
    )
    assert code == 0
    assert out.strip() == "1/3*L(-1,-1)*v - 2*L(-1,0)*v"


def test_charpoly_roundtrip_command(capsys):
    code, out, _ = run(capsys, "charpoly", "--weight", WEIGHT_B, "--max-degree", "4")
    assert code == 0
    assert "t + 1" in out and "full" in out


def test_classify_order_command(capsys):
    code, out, _ = run(capsys, "classify-order", "--group", "lex-z2")
    assert code == 0
    assert out.strip() == "discrete, a=(0,1)"


def test_weight_basis_command(capsys):
    code, out, _ = run(capsys, "weight-basis", "-2", "--max-t-index", "0")
    assert code == 0
    assert "5 monomials" in out


def test_singular_search_command(capsys):
    code, out, _ = run(
        capsys,
        "singular-search",
        "--weight", WEIGHT_ZERO_LABELS,
        "--mu", "-1",
        "--max-t-index", "2",
    )
    assert code == 0
    assert "3 candidate(s)" in out
    assert "generator (minimal index horizon): L(-1,0)*v" in out


def test_delta_command(capsys):
    code, out, _ = run(capsys, "delta", "--weight", WEIGHT_B, "--horizon", "6")
    assert code == 0
    assert "1, 1, -1/2, 1/6" in out.replace("[", "").replace("]", "")
    assert "quasipolynomial, recurrence t + 1" in out


def test_theorem2_command(capsys):
    code, out, _ = run(capsys, "theorem2", "--weight", WEIGHT_B)
    assert code == 0
    assert "characteristic polynomial: t + 1" in out
    assert "verdict: reducible within horizon" in out


def test_step3_check_explicit(capsys):
    code, out, _ = run(
        capsys,
        "step3-check",
        "--eps", "1/2",
        "--part", "1,2",
        "--probe-j", "0",
    )
    assert code == 0
    _, raw, _ = run(
        capsys,
        "step3-check",
        "--eps", "1/2",
        "--part", "1,2",
        "--probe-j", "0",
        "--format", "json",
    )
    data = json.loads(raw)
    assert data["checks"][0]["expected"] == "-5/2"


def test_step3_check_random(capsys):
    code, out, _ = run(capsys, "step3-check", "--count", "10")
    assert code == 0
    assert "all exact" in out


def test_verify_suite_single_check(capsys):
    code, out, _ = run(capsys, "verify-suite", "--only", "weight-counts")
    assert code == 0
    assert "pass" in out


def test_verify_suite_unknown_check(capsys):
    code, _, err = run(capsys, "verify-suite", "--only", "bogus")
    assert code == 2
    assert "unknown check" in err


def test_verify_suite_perturbation_fails(capsys):
    code, out, _ = run(
        capsys,
        "verify-suite",
        "--only", "singular-witnesses",
        "--inject-label-perturbation",
    )
    assert code == 1
    assert "FAIL" in out


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "bracket", "L(1,-2)", "c")
    assert code == 2
    assert "index must be >= -1" in err
    code, _, err = run(capsys, "charpoly", "--weight", "{not json")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_json_determinism(capsys, tmp_path):
    args = ["theorem2", "--weight", WEIGHT_B, "--format", "json"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_out_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "charpoly", "--weight", WEIGHT_B, "--format", "json", "--out", str(path)
    )
    assert code == 0 and out == ""
    data = json.loads(path.read_text())
    assert data["printed"] == "t + 1"


FIXTURES = [
    ["bracket", "L(1,0)", "L(-1,0)"],
    ["bracket", "x^2*(t^3-1)", "x"],
    ["bracket", "L(1,-1)", "L(-1,-1)"],
    ["bracket", "c", "L(5,2)"],
    ["act", "L(1,0)", "L(-1,-1)*v", "--weight", WEIGHT_B],
    ["act", "L(-1,0)", "L(-1,-1)*v", "--weight", WEIGHT_B],
    ["act", "c", "v", "--weight", WEIGHT_B],
    ["classify-order", "--group", "integers"],
    ["classify-order", "--group", "dyadic"],
    ["classify-order", "--group", "lex-z2"],
    ["weight-basis", "-1", "--max-t-index", "2"],
    ["weight-basis", "-2", "--max-t-index", "0"],
    ["charpoly", "--weight", WEIGHT_B],
    ["charpoly", "--weight", WEIGHT_ZERO_LABELS],
    ["delta", "--weight", WEIGHT_B, "--horizon", "5"],
    ["delta", "--weight", WEIGHT_ZERO_LABELS, "--horizon", "5"],
    ["singular-search", "--weight", WEIGHT_B, "--max-t-index", "1"],
    ["singular-search", "--weight", WEIGHT_ZERO_LABELS, "--max-t-index", "2"],
    ["theorem2", "--weight", WEIGHT_B],
    ["theorem2", "--weight", WEIGHT_ZERO_LABELS],
]


@pytest.mark.parametrize("argv", FIXTURES, ids=[" ".join(f)[:40] for f in FIXTURES])
def test_text_and_json_verdicts_agree(capsys, argv):
    code_t, text, _ = run(capsys, *argv)
    code_j, raw, _ = run(capsys, *argv, "--format", "json")
    assert code_t == code_j == 0
    data = json.loads(raw)
    # every fact surfaced in the JSON verdict is worded in the text output
    if "printed" in data:
        assert data["printed"] in text
    if "verdict" in data:
        assert data["verdict"] in text
    if "count" in data:
        assert str(data["count"]) in text
    if "dimension" in data:
        assert f"{data['dimension']} candidate(s)" in text
    if "charpoly" in data and data.get("charpoly"):
        assert data.get("certificate", "") in text
    if "coefficients" in data:
        frac = data["coefficients"][0]
        num, den = frac.split("/")
        want = num if den == "1" else frac
        assert want in text
