import json

import pytest

from goodpoly.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gamma_poly_json(capsys):
    code, out, _ = run_cli(capsys, "gamma", "--field", "13", "--poly", "0,0,0,1")
    assert code == 0
    rec = json.loads(out)
    assert rec["gamma"] == 4 and rec["bound"] == 4
    assert rec["q"] == 13 and rec["n"] == 3
    assert "fibers" not in rec


def test_gamma_family_matches_reference(capsys):
    code, out, _ = run_cli(capsys, "gamma", "--field", "2^6",
                           "--family", "prop1:k=3,basis=1;58")
    assert code == 0
    rec = json.loads(out)
    assert rec["gamma"] == 5 and rec["bound"] == 5
    assert 12 in rec["inferred_orders"]


def test_gamma_csv(capsys):
    code, out, _ = run_cli(capsys, "gamma", "--field", "13", "--poly", "0,0,0,1",
                           "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("q,n,gamma,bound")
    assert lines[1].startswith("13,3,4,4")


def test_fibers_lists_members(capsys):
    code, out, _ = run_cli(capsys, "fibers", "--field", "13", "--poly", "0,0,0,1")
    assert code == 0
    rec = json.loads(out)
    assert rec["fibers"] == [
        {"c": 1, "members": [1, 3, 9]}, {"c": 5, "members": [7, 8, 11]},
        {"c": 8, "members": [2, 5, 6]}, {"c": 12, "members": [4, 10, 12]}]


def test_zero_polynomial_is_precondition_exit(capsys):
    code, _, err = run_cli(capsys, "gamma", "--field", "13", "--poly", "0")
    assert code == 3
    assert err


def test_parse_failure_exits_2(capsys):
    code, _, _ = run_cli(capsys, "gamma", "--field", "banana", "--poly", "0,1")
    assert code == 2
    code, _, _ = run_cli(capsys, "gamma", "--field", "13", "--poly", "zebra")
    assert code == 2
    code, _, _ = run_cli(capsys, "gamma", "--field", "13")
    assert code == 2  # neither --poly nor --family


def test_nonprime_field_is_precondition_exit(capsys):
    code, _, _ = run_cli(capsys, "gamma", "--field", "4", "--poly", "0,1")
    assert code == 3


def test_search_exhaustive_deg3_over_f7(capsys):
    code, out, _ = run_cli(capsys, "search", "--field", "7",
                           "--exhaustive", "max-degree=3")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 49
    assert rows[0]["gamma"] == 2
    gammas = [r["gamma"] for r in rows]
    assert gammas == sorted(gammas, reverse=True)
    assert max(gammas) == 2


def test_search_family_sweep(capsys):
    code, out, _ = run_cli(capsys, "search", "--field", "29",
                           "--family", "dickson:n=5")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 28
    assert {r["gamma"] for r in rows} == {2, 3}


def test_search_guard_exits_4(capsys):
    code, _, _ = run_cli(capsys, "search", "--field", "499",
                         "--exhaustive", "max-degree=5")
    assert code == 4


def test_search_empty_family_range(capsys):
    code, out, _ = run_cli(capsys, "search", "--field", "7",
                           "--exhaustive", "max-degree=1,min-degree=2")
    assert code == 0
    assert out.strip() == ""


def test_verify_squares_lemma_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "squares-lemma",
                           "--qmax", "31")
    assert code == 0
    lines = out.strip().splitlines()
    summary = json.loads(lines[-1])
    assert summary["pass"] is True and summary["failures"] == 0
    first = json.loads(lines[0])
    assert first["suite"] == "squares-lemma" and first["pass"] is True


def test_verify_unknown_suite(capsys):
    code, _, _ = run_cli(capsys, "verify", "--suite", "nonsense")
    assert code == 2


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "linearized-bounds",
                           "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "suite,params,expected,actual,pass"
    assert lines[-1].startswith("summary,linearized-bounds")


def test_lrc_pipeline(capsys):
    base = ["--field", "13", "--poly", "0,0,0,1", "--k", "6"]
    code, out, _ = run_cli(capsys, "lrc", "build", *base)
    assert code == 0
    info = json.loads(out)
    assert info["N"] == 12 and info["r"] == 2
    assert info["groups"][0] == {"c": 1, "members": [1, 3, 9]}

    code, out, _ = run_cli(capsys, "lrc", "encode", *base,
                           "--msg", "1,0,0,0,0,0")
    assert code == 0
    assert out.strip() == ",".join(["1"] * 12)

    code, out, _ = run_cli(capsys, "lrc", "encode", *base, "--msg", "0,1,0,0,0,0")
    word = out.strip().split(",")
    word[1] = "_"
    code, out, _ = run_cli(capsys, "lrc", "repair", *base, "--word", ",".join(word))
    assert code == 0
    rec = json.loads(out)
    assert rec == {"position": 1, "value": 3, "reads": 2}

    code, out, _ = run_cli(capsys, "lrc", "decode", *base, "--word", ",".join(word))
    assert code == 0
    rec = json.loads(out)
    assert rec == {"decoded": True, "message": [0, 1, 0, 0, 0, 0]}

    code, out, _ = run_cli(capsys, "lrc", "distance", *base)
    assert code == 0
    rec = json.loads(out)
    assert rec == {"min_distance": 5, "singleton_type_bound": 5, "optimal": True}


def test_lrc_repair_two_erasures_is_precondition(capsys):
    base = ["--field", "13", "--poly", "0,0,0,1", "--k", "6"]
    word = "1,_,_,1,1,1,1,1,1,1,1,1"
    code, _, _ = run_cli(capsys, "lrc", "repair", *base, "--word", word)
    assert code == 3


def test_byte_identical_reruns(capsys):
    argvs = [
        ["gamma", "--field", "2^6", "--family", "prop1:k=3,basis=1;58"],
        ["search", "--field", "7", "--exhaustive", "max-degree=3"],
        ["verify", "--suite", "linearized-bounds"],
        ["lrc", "build", "--field", "13", "--poly", "0,0,0,1", "--k", "6"],
    ]
    for argv in argvs:
        code1, out1, _ = run_cli(capsys, *argv)
        code2, out2, _ = run_cli(capsys, *argv)
        assert code1 == code2 == 0 or code1 == code2
        assert out1 == out2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["gamma"])  # missing --field
    assert exc.value.code == 2
