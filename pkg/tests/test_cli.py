import csv
import io
import json

import pytest

from repstab.cli import main, run


def run_json(capsys, *argv):
    assert main([*argv, "--format", "json"]) == 0
    return json.loads(capsys.readouterr().out)


def test_betti_value(capsys):
    data = run_json(capsys, "betti", "--surface", "punctured", "--k", "3", "--n", "4")
    assert data["command"] == "betti"
    assert data["rows"] == [{"n": "4", "betti": "86"}]
    assert data["inputs"] == {"surface": "punctured", "k": "3", "n": "4"}
    assert data["citations"]


def test_betti_table_format(capsys):
    assert main(["betti", "--surface", "punctured", "--k", "3", "--n", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:3] == ["n  betti", "-  -----", "4     86"]


def test_betti_polynomial_and_range(capsys):
    data = run_json(capsys, "betti", "--surface", "torus", "--k", "5")
    assert [r["coefficient"] for r in data["rows"]] == ["0", "0", "0", "0", "18", "154", "490", "427", "63"]
    data = run_json(capsys, "betti", "--surface", "torus", "--k", "2", "--n-max", "4")
    assert [r["betti"] for r in data["rows"]] == ["0", "1", "5", "14", "30"]


def test_certify_nonfree(capsys):
    data = run_json(capsys, "certify-nonfree", "--actual", "0:0,2:5,4:14", "--cap", "4")
    row = data["rows"][0]
    assert row["verdict"] == "NotFree"
    assert (row["witness_degree"], row["required_dim"], row["actual_dim"]) == ("4", "30", "14")


def test_d_family_list(capsys):
    data = run_json(capsys, "d-family", "--size", "4", "--list")
    assert data["rows"] == [
        {"partition": "(3,1)", "frobenius": "(2 | 1)", "dim": "3"},
        {"partition": "total", "frobenius": "", "dim": "3"},
    ]


def test_d_family_summary_big_integers_are_strings(capsys):
    data = run_json(capsys, "d-family", "--size", "30")
    row = data["rows"][0]
    assert row["total_dim"] == row["matchings"] == "6190283353629375"


def test_generators_and_wseq(capsys):
    data = run_json(capsys, "generators", "--k", "3")
    assert [r["dim_W"] for r in data["rows"]] == ["0", "0", "0", "18", "14"]
    data = run_json(capsys, "wseq", "--i", "2", "--n-max", "10")
    kinds = [(r["kind"], r["dim"]) for r in data["rows"]]
    assert kinds[2] == ("exact", "5") and kinds[8] == ("exact", "63")
    assert kinds[3] == ("zero", "0") and kinds[10] == ("unknown", None)


def test_fim_dim(capsys):
    data = run_json(capsys, "fim-dim", "--gens", "2:5", "--N", "4")
    assert data["rows"] == [{"N": "4", "dim": "30"}]


def test_e2_page_csv(capsys):
    assert main(["e2-page", "--n", "6", "--format", "csv"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    cell = {(int(r["p"]), int(r["q"])): r for r in rows}
    assert cell[(1, 3)]["dim"] == "210"
    assert cell[(-1, 4)]["dim"] == "32" and cell[(-1, 4)]["must_vanish"] == "yes"
    assert cell[(0, 5)]["kind"] == "zero"


def test_e2_page_grid(capsys):
    assert main(["e2-page", "--n", "3", "--q-max", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].split() == ["q\\p", "-1", "0", "1", "2"]
    assert out[1].split() == ["2", "2*", "0", "0", "0"]


def test_reports(capsys):
    data = run_json(capsys, "reports", "diagonal", "--n", "8")
    assert [r["generator_degree"] for r in data["rows"]] == ["2", "3", "4", "5"]
    assert all(r["kind"] == "zero" for r in data["rows"])
    data = run_json(capsys, "reports", "vanishing-line", "--n", "1")
    assert data["rows"] == [{"p": "-1", "q": "0"}]
    data = run_json(capsys, "reports", "w1")
    dims = {(r["p"], r["q"]): r["dim"] for r in data["rows"]}
    assert dims[("-1", "2")] == "2" and dims[("1", "1")] == "6" and dims[("2", "0")] == "2"
    assert any(c.startswith("assumption:") for c in data["citations"])


def test_selfcheck(capsys):
    assert main(["selfcheck"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 8 and "FAIL" not in out


def test_selfcheck_reports_failure(capsys, monkeypatch):
    from repstab import checks

    def broken():
        raise checks.CheckFailed("forced")

    monkeypatch.setattr(checks, "CRITERIA", [(1, "forced failure", broken)])
    assert main(["selfcheck"]) == 1
    assert "FAIL" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["betti", "--surface", "torus", "--k", "6"],
        ["generators", "--k", "9"],
        ["reports", "diagonal", "--n", "7"],
        ["d-family", "--size", "32"],
        ["d-family", "--size", "5"],
        ["certify-nonfree", "--actual", "0:0,4:14", "--cap", "4"],
    ],
)
def test_domain_errors_exit_1(capsys, argv):
    assert run(argv) == 1
    err = capsys.readouterr().err
    assert err.startswith("repstab: error:") and err.count("\n") == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["betti", "--surface", "sphere", "--k", "1"],
        ["betti", "--surface", "torus", "--k", "1", "--n", "2", "--n-max", "3"],
        ["fim-dim", "--gens", "2-5", "--N", "4"],
        ["wseq", "--i", "1", "--n-max", "3", "--bogus"],
        ["e2-page", "--n", "-1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(argv) == 2


def test_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("REPSTAB_CAP", "40")
    data = run_json(capsys, "d-family", "--size", "32")
    assert data["rows"][0]["total_dim"] == data["rows"][0]["matchings"]


@pytest.mark.parametrize("argv", [["e2-page", "--n", "9", "--format", "json"], ["reports", "w1"], ["selfcheck"]])
def test_deterministic_output(capsys, argv):
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
