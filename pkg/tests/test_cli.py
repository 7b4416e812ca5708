"""CLI surface: subcommands, exit codes, file round trips."""

import json

import pytest

from addhom.cli import main
from addhom.maps import (
    EXHAUSTIVE,
    build_theorem1_counterexample,
    check_homogeneous,
    map_from_json,
    report_to_dict,
)
from addhom.fields import gf


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_find_irreducible(capsys):
    code, out, _ = run(
        capsys, "field", "find-irreducible", "--p", "2", "--degree", "3",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == "1,1,0,1"
    assert payload["field"] == "Fq:2:1,1,0,1"


def test_counterexample_then_check_roundtrip(tmp_path, capsys):
    spec = tmp_path / "m.json"
    code, _, _ = run(
        capsys, "counterexample", "theorem1", "--field", "Fq:2:1,1,1",
        "--out", str(spec),
    )
    assert code == 0

    code, out, _ = run(
        capsys, "check", "--input", str(spec), "--property", "homogeneous",
        "--format", "json",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["verdict"] == "violated"
    assert payload["witness"]["inputs"] == ["[0,1]", "([1,0])"]
    assert payload["witness"]["lhs"] == "([0,1])"
    assert payload["witness"]["rhs"] == "([1,1])"

    code, out, _ = run(
        capsys, "check", "--input", str(spec), "--property", "additive",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "holds_exhaustive"

    # emitted file and in-memory construction yield identical reports
    m_file = map_from_json(spec.read_text())
    m_mem = build_theorem1_counterexample(gf(2, 2))
    assert report_to_dict(m_file, check_homogeneous(m_file, EXHAUSTIVE)) == (
        report_to_dict(m_mem, check_homogeneous(m_mem, EXHAUSTIVE))
    )


def test_check_ratio_q_sampled_default(tmp_path, capsys):
    spec = tmp_path / "ratio_q.json"
    run(capsys, "counterexample", "ratio", "--out", str(spec))
    code, out, _ = run(
        capsys, "check", "--input", str(spec), "--property", "additive",
        "--format", "json",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["witness"]["inputs"] == ["(1,0)", "(0,1)"]
    assert payload["witness"]["lhs"] == "(1/2)"


def test_text_and_json_agree(tmp_path, capsys):
    spec = tmp_path / "ind.json"
    run(capsys, "counterexample", "char2-indicator", "--out", str(spec))
    code_t, out_t, _ = run(
        capsys, "check", "--input", str(spec), "--property", "additive"
    )
    code_j, out_j, _ = run(
        capsys, "check", "--input", str(spec), "--property", "additive",
        "--format", "json",
    )
    assert code_t == code_j == 1
    payload = json.loads(out_j)
    assert payload["verdict"] in out_t
    assert payload["witness"]["lhs"] in out_t


def test_counterexample_ratio_char2_rejected(tmp_path, capsys):
    code, _, err = run(
        capsys, "counterexample", "ratio", "--field", "Fq:2:1,1,1",
        "--out", str(tmp_path / "x.json"),
    )
    assert code == 2
    assert "error" in err


def test_trace(tmp_path, capsys):
    spec = tmp_path / "ratio_q.json"
    run(capsys, "counterexample", "ratio", "--out", str(spec))
    code, out, _ = run(
        capsys, "trace", "--input", str(spec), "--m", "1", "--n", "2",
        "--x", "(1,1)", "--format", "json",
    )
    payload = json.loads(out)
    assert len(payload["identities"]) == 4
    assert payload["identities"][0]["lhs"] == "(1/4)"


def test_search_exit_codes(capsys):
    code, out, _ = run(
        capsys, "search", "--field", "Fq:2:1,1,1", "--domain-dim", "2",
        "--codomain-dim", "1", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert (payload["homogeneous"], payload["homogeneous_additive"],
            payload["non_additive"]) == ("1024", "16", "1008")

    code, _, _ = run(
        capsys, "search", "--field", "Fp:3", "--domain-dim", "1",
        "--codomain-dim", "1",
    )
    assert code == 1

    code, _, err = run(
        capsys, "search", "--field", "Fp:2", "--domain-dim", "8",
        "--codomain-dim", "8",
    )
    assert code == 3
    assert "error" in err


def test_verify_theorem1(capsys):
    code, out, _ = run(
        capsys, "verify-theorem1", "--p", "3", "--domain-dim", "2",
        "--codomain-dim", "1", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["additive"] == "9"
    assert payload["additive_nonhomogeneous"] == "0"


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["check", "--input", "x.json", "--property", "additive",
              "--bogus-flag"])
    assert exc.value.code == 2
    capsys.readouterr()

    code, _, err = run(
        capsys, "check", "--input", str(tmp_path / "missing.json"),
        "--property", "additive",
    )
    assert code == 2
    assert "error" in err

    bad = tmp_path / "bad.json"
    bad.write_text("{\"field\": \"Fp:4\"}")
    code, _, err = run(capsys, "check", "--input", str(bad),
                       "--property", "additive")
    assert code == 2
