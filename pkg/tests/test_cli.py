"""Command-line interface: dispatch, formats, exit codes, batch mode."""

import json

import pytest

import dccc.cli as cli
from dccc.search import FilterConfig, SearchReport


def run_json(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out.strip()
    return code, json.loads(out) if out else None


def test_search_expect_empty_k7(capsys):
    code, report = run_json(capsys, ["search", "--k", "7", "--expect-empty",
                                     "--format", "json"])
    assert code == 0
    assert report["result"]["survivors"] == []
    assert report["command"] == "search"


def test_assign_unsat(capsys):
    code, report = run_json(capsys, ["assign", "10", "15", "36", "42", "66",
                                     "--format", "json"])
    assert code == 0
    assert report["result"]["status"] == "UNSAT"
    assert report["result"]["witness"] is None
    assert report["stats"]["nodes"] > 0


def test_assign_sat(capsys):
    code, report = run_json(capsys, ["assign", "3", "3", "3", "--format", "json"])
    assert code == 0
    assert report["result"]["status"] == "SAT"
    assert report["result"]["witness"] == [0, 1, 2]


def test_disjoint_partition(capsys):
    code, report = run_json(capsys, ["disjoint", "1:3", "2:3", "0:3",
                                     "--format", "json"])
    assert code == 0
    assert report["result"] == {
        "disjoint": True, "max_pairwise_gcd": 3, "dccc_consistent": True,
    }


def test_refute(capsys):
    code, report = run_json(capsys, ["refute", "12", "--format", "json"])
    assert code == 0 and report["result"]["refuted"] is True
    code, report = run_json(capsys, ["refute", "10", "--format", "json"])
    assert code == 0 and report["result"]["refuted"] is False


def test_candidates(capsys):
    code, report = run_json(capsys, ["candidates", "6", "--format", "json"])
    assert code == 0
    assert report["result"]["candidates"] == [6, 10, 12, 15, 20, 30, 60]
    assert report["result"]["lcm_range"] == 60


def test_lemma_test_with_modulus(capsys):
    code, report = run_json(capsys, ["lemma-test", "15", "12", "6", "6", "6", "6",
                                     "--modulus", "12", "--format", "json"])
    assert code == 0
    assert report["result"] == {
        "verdict": "EXCLUDED", "modulus_used": 12, "scaled_sum": 13, "threshold": 12,
    }


def test_subsets_test(capsys):
    code, report = run_json(capsys, ["subsets-test", "10", "15", "36", "42", "66",
                                     "--format", "json"])
    assert code == 0
    assert report["result"] == {"all_pass": True, "failing_subset": None}

    code, report = run_json(capsys, ["subsets-test", "20", "15", "12",
                                     "6", "6", "6", "6", "--format", "json"])
    assert code == 0
    assert report["result"]["all_pass"] is False
    assert report["result"]["failing_subset"] == [6, 6, 6, 6, 20]


def test_text_format_default(capsys):
    assert cli.run(["refute", "12"]) == 0
    assert capsys.readouterr().out == "k=12 refuted=true\n"


def test_json_schema_and_roundtrip(capsys):
    code, _ = run_json(capsys, ["search", "--k", "6", "--format", "json"])
    assert code == 0
    cli.run(["search", "--k", "6", "--format", "json"])
    line = capsys.readouterr().out.strip()
    report = json.loads(line)
    assert set(report) == {"command", "input", "result", "stats"}
    assert set(report["stats"]) == {"nodes", "leaves", "elapsed_ms"}
    # canonical serialization round-trips byte-identically
    assert json.dumps(report, sort_keys=True) == line


def test_idempotent_modulo_timing(capsys):
    argv = ["search", "--k", "8", "--format", "json"]
    outputs = []
    for _ in range(2):
        assert cli.run(argv) == 0
        report = json.loads(capsys.readouterr().out)
        report["stats"]["elapsed_ms"] = 0
        outputs.append(json.dumps(report, sort_keys=True))
    assert outputs[0] == outputs[1]


def test_expect_empty_violation_exits_1(capsys, monkeypatch):
    fake = SearchReport(k=7, config=FilterConfig(), survivors=[(6, 6, 6, 6, 6, 6, 6)],
                        nodes_explored=1, leaves_tested=1, elapsed=0.0)
    monkeypatch.setattr(cli, "grow", lambda *a, **kw: fake)
    code = cli.run(["search", "--k", "7", "--expect-empty", "--format", "json"])
    captured = capsys.readouterr()
    assert code == 1
    assert "expected no survivors" in captured.err
    assert json.loads(captured.out)["result"]["survivors"] == [[6] * 7]


def test_usage_errors_exit_2(capsys):
    assert cli.run(["disjoint", "nonsense"]) == 2
    assert cli.run(["disjoint", "1:3"]) == 2  # needs at least two classes
    assert cli.run(["assign", "6"]) == 2
    assert cli.run(["no-such-command"]) == 2
    assert cli.run(["lemma-test", "15", "12", "--modulus", "7"]) == 2
    assert cli.run(["assign", "1", "6"]) == 2  # modulus 1 not allowed
    capsys.readouterr()


def test_range_errors_exit_3(capsys):
    assert cli.run(["search", "--k", "2"]) == 3
    assert cli.run(["candidates", "40"]) == 3
    assert cli.run(["assign", "2310", "2310", "2310", "2310", "2310"]) == 3
    err = capsys.readouterr().err
    assert "range error" in err


def test_negative_residue_literal(capsys):
    # "--" stops option parsing so -1:4 is read as a class literal
    code, report = run_json(capsys, ["disjoint", "--format", "json", "--",
                                     "-1:4", "1:2"])
    assert code == 0
    assert report["input"]["classes"] == [[3, 4], [1, 2]]


def test_batch_mode(tmp_path, capsys):
    batch = tmp_path / "moduli.txt"
    batch.write_text("10 15 36 42 66\n# comment\n\n3 3 3\n")
    assert cli.run(["assign", "--input", str(batch)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    first, second = (json.loads(line) for line in lines)
    assert first["result"]["status"] == "UNSAT"
    assert second["result"]["status"] == "SAT"

    assert cli.run(["lemma-test", "--input", str(batch)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [json.loads(l)["result"]["verdict"] for l in lines] == [
        "INCONCLUSIVE", "INCONCLUSIVE",
    ]


def test_batch_and_positional_conflict(tmp_path, capsys):
    batch = tmp_path / "moduli.txt"
    batch.write_text("6 6\n")
    assert cli.run(["assign", "6", "6", "--input", str(batch)]) == 2
    capsys.readouterr()


def test_jobs_env_default(capsys, monkeypatch):
    monkeypatch.setenv("DCCC_JOBS", "2")
    code, report = run_json(capsys, ["search", "--k", "6", "--format", "json"])
    assert code == 0
    assert report["input"]["jobs"] == 2

    monkeypatch.setenv("DCCC_JOBS", "zebra")
    assert cli.run(["search", "--k", "6"]) == 2
    capsys.readouterr()


def test_jobs_flag_overrides_env(capsys, monkeypatch):
    monkeypatch.setenv("DCCC_JOBS", "4")
    code, report = run_json(capsys, ["search", "--k", "6", "--jobs", "1",
                                     "--format", "json"])
    assert code == 0
    assert report["input"]["jobs"] == 1
