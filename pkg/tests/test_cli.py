import json

import pytest

from cli import format_float, render_csv, render_json
from main import main


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_constants_json(capsys):
    code = main(["constants", "--a", "1", "--b", "1", "--k", "1", "--prime-cutoff", "10000", "--format", "json"])
    assert code == 0
    payload = _json(capsys)
    assert payload["cutoff"] == 10_000
    assert payload["value"] == pytest.approx(0.3226, abs=1e-3)
    assert payload["tail_bound"] > 0
    assert payload["lambda_abk"] == "1/2"
    assert payload["c_ab_exact"] == "1"


def test_constants_csv_is_one_row(capsys):
    assert main(["constants", "--b", "2", "--prime-cutoff", "1000"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[0].split(",") == sorted(lines[0].split(","))


def test_mirsky_exact_value(capsys):
    assert main(["mirsky", "--x", "10", "--k", "1", "--prime-cutoff", "10000", "--format", "json"]) == 0
    payload = _json(capsys)
    assert payload["exact"] == 147
    assert payload["residual"] == pytest.approx(payload["exact"] - payload["main_term"])


def test_mertens_exact_value(capsys):
    assert main(["mertens", "--x", "10", "--b", "4", "--format", "json"]) == 0
    assert _json(capsys)["exact"] == 11


def test_empirical_csv(capsys):
    assert main(["empirical", "--n", "20", "--support", "-4:4", "--bins", "8"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "bin_lo,bin_hi,density"
    assert len(lines) == 9
    assert lines[1].startswith("-4,-3,")


def test_empirical_and_limit_share_edges(capsys, tmp_path):
    empirical = tmp_path / "empirical.json"
    limit = tmp_path / "limit.json"
    args = ["--n", "200", "--weights", "euler", "--scaling", "linear", "--support", "1:4", "--bins", "30", "--format", "json"]
    assert main(["empirical", *args, "--output", str(empirical)]) == 0
    assert main(["limit", *args, "--prime-cutoff", "10000", "--output", str(limit)]) == 0
    left = json.loads(empirical.read_text())
    right = json.loads(limit.read_text())
    assert left["bin_lo"] == right["bin_lo"]
    assert right["regime"] == "linear_euler"
    assert len(right["density"]) == 30


def test_perp_spectrum_csv(capsys):
    assert main(["perp", "--b", "1", "--n", "5"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "length,q,multiplicity"
    assert [line.split(",")[2] for line in lines[1:]] == ["1", "2", "2", "4"]


def test_perp_check(capsys):
    assert main(["perp", "--b", "3", "--n", "60", "--check", "--format", "json"]) == 0
    payload = _json(capsys)
    assert payload["equal"] is True
    assert payload["first_mismatch"] is None


def test_verify_writes_report(tmp_path):
    output = tmp_path / "report.json"
    assert main(["verify", "--suite", "superlinear,constants_exact", "--quick", "--output", str(output)]) == 0
    report = json.loads(output.read_text())
    assert report["passed"] is True
    assert [s["name"] for s in report["suites"]] == ["superlinear", "constants_exact"]


@pytest.mark.parametrize("argv", [
    ["empirical", "--n", "20", "--scaling", "bogus"],
    ["empirical", "--n", "20", "--support", "4:1"],
    ["empirical", "--n", "0"],
    ["empirical"],
    ["mirsky", "--k", "1"],
    ["constants", "--k", "-1"],
    ["limit", "--n", "20", "--weights", "euler", "--scaling", "power:0.5"],
    ["verify", "--suite", "nope"],
    ["nope"],
])
def test_bad_arguments_exit_2(argv, capsys):
    assert main(argv) == 2


def test_writers():
    assert format_float(0.1) == "0.10000000000000001"
    assert render_csv(["a", "b"], [(1, 0.5)]) == "a,b\n1,0.5\n"
    # JSON keeps the shortest round-trip form, CSV the fixed 17 digits
    assert render_json({"x": 0.1}) == "{\n  \"x\": 0.1\n}\n"
