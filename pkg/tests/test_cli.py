import json

from borelreg.cli import load_schema, main, validate_report


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    report = json.loads(out) if out else None
    return code, report, err


def test_gens(capsys):
    code, report, _ = run_json(capsys, "gens", "(x1^6,x1^13)")
    assert code == 0
    assert report["results"][0]["value"] == ["x1^6"]
    assert validate_report(report) == []


def test_reg_methods_agree(capsys):
    code, report, _ = run_json(capsys, "reg", "(x1^3,x2^2)", "--method", "auto")
    assert code == 0
    values = {r["method"]: r["value"] for r in report["results"]}
    assert values == {"chain": 4, "truncation": 4, "socle": 4}
    assert all(a["equal"] for a in report["agreements"])
    assert validate_report(report) == []


def test_reg_single_method(capsys):
    code, report, _ = run_json(
        capsys, "reg", "sbt(x2^6*x3^7)", "--method", "chain"
    )
    assert code == 0
    assert report["results"][0]["value"] == 24
    assert validate_report(report) == []


def test_reg_chi_formula_reports_as_printed_value(capsys):
    code, report, _ = run_json(
        capsys, "reg", "sbt(x2^6*x3^7)", "--method", "chi-formula"
    )
    assert code == 0
    entry = report["results"][0]
    assert entry["value"] == 23
    rows = {(r["q"], r["f"]): r["total"] for r in entry["witnesses"][0]["rows"]}
    assert rows[(2, 1)] == 22
    assert any("off by one" in note for note in report["discrepancy_notes"])


def test_reg_strict_disagreement_exit(capsys):
    code, _, _ = run_json(
        capsys, "reg", "sbt(x2^6*x3^7)", "--method", "auto", "--strict"
    )
    assert code == 5


def test_chain_command(capsys):
    code, report, _ = run_json(capsys, "chain", "sbt(x2^6*x3^7)")
    assert code == 0
    rows = report["results"][0]["value"]
    assert [row["top_variable"] for row in rows] == [3, 2]
    assert [row["top_degree"] for row in rows] == [23, 10]
    assert validate_report(report) == []


def test_socle_command(capsys):
    code, report, _ = run_json(capsys, "socle", "(x1^3,x2^2)")
    assert code == 0
    value = report["results"][0]["value"]
    assert value["socle_monomials"] == ["x1^2*x2"]
    assert value["max_degree"] == 3 and value["reg"] == 4
    assert validate_report(report) == []


def test_socle_requires_artinian(capsys):
    code, _, err = run(capsys, "socle", "sbt(x2^6*x3^7)")
    assert code == 3
    assert "artinian" in err


def test_check_command(capsys):
    code, report, _ = run_json(
        capsys, "check", "(x1^3,x2^2)", "--borel-type", "--sbt", "--stable"
    )
    assert code == 0
    values = {r["method"]: r["value"] for r in report["results"]}
    assert values == {"borel-type": True, "sbt": False, "stable": False}
    sbt_entry = next(r for r in report["results"] if r["method"] == "sbt")
    assert sbt_entry["witnesses"]
    assert validate_report(report) == []


def test_check_dfixed(capsys):
    code, report, _ = run_json(
        capsys, "check", "dfixp(x2^7;1|2|4|12)", "--dfixed", "1|2|4|12"
    )
    assert code == 0
    assert report["results"][0]["value"] is True


def test_check_needs_a_flag(capsys):
    code, _, err = run(capsys, "check", "(x1)")
    assert code == 1


def test_decomp(capsys):
    code, report, _ = run_json(capsys, "decomp", "17", "1|2|4|12")
    assert code == 0
    assert report["results"][0]["value"] == [1, 0, 1, 1]
    assert report["ambient"] is None
    assert validate_report(report) == []


def test_gamma(capsys):
    code, report, _ = run_json(
        capsys, "gamma", "x2^7,x3^10,x5^17", "1|2|4|12", "--q", "2"
    )
    assert code == 0
    assert report["results"][0]["value"] == [[0, 10], [2, 8], [4, 6], [6, 4]]
    assert validate_report(report) == []


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "gens", "(x1^")
    assert code == 2 and "syntax" in err


def test_usage_error_exit(capsys):
    code, _, err = run(capsys, "reg", "(x1)", "--method", "bogus")
    assert code == 1


def test_vars_flag(capsys):
    code, report, _ = run_json(capsys, "gens", "(x1^6,x2^6)", "--vars", "3")
    assert code == 0
    assert report["ambient"] == 3


def test_known_discrepancies_attached(capsys):
    code, report, _ = run_json(
        capsys, "socle", "dfix(x1^2,x2^7,x3^16;1|4|12)"
    )
    assert code == 0
    notes = " ".join(report["discrepancy_notes"])
    assert "chi_3 = 19" in notes or "chi = (1, 3, 15)" in notes
    assert "x1*x2^3*x3^19" in notes


def test_text_rendering_stable(capsys):
    code, out, _ = run(capsys, "reg", "(x1^3,x2^2)", "--method", "auto")
    assert code == 0
    assert out.splitlines()[0] == "command: reg"
    assert "agreement: chain == truncation" in out


def test_stdin_expression(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("(x1^3,x2^2)\n"))
    code, report, _ = run_json(capsys, "reg", "-", "--method", "truncation")
    assert code == 0
    assert report["results"][0]["value"] == 4


def test_json_error_object(capsys):
    code, out, err = run(capsys, "socle", "sbt(x2^6*x3^7)", "--format", "json")
    assert code == 3
    payload = json.loads(out)
    assert payload["error"]["kind"] == "domain"
    assert "artinian" in err


def test_schema_validator_rejects_bad_documents():
    schema = load_schema()
    assert validate_report({"command": "x"}, schema)
    bad = {
        "command": "reg",
        "input": "(x1)",
        "ambient": "two",
        "results": [],
        "agreements": [],
        "discrepancy_notes": [],
    }
    problems = validate_report(bad, schema)
    assert any("ambient" in p for p in problems)
