import json

import pytest

from thrall.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_both(capsys):
    code, out, _ = run(capsys, "expand", "--lambda", "4,2", "--method", "both")
    assert code == 0
    assert out.strip() == (
        "s(4,2) + s(4,1,1) + 2 s(3,2,1) + 2 s(3,1,1,1) + s(2,2,2) "
        "+ s(2,2,1,1) + s(2,1,1,1,1)"
    )


def test_expand_tableau_33(capsys):
    code, out, _ = run(capsys, "expand", "--lambda", "3,3", "--method", "tableau")
    assert code == 0
    assert out.strip() == "s(4,2) + s(3,2,1) + s(3,1,1,1) + s(2,2,2)"


def test_expand_empty(capsys):
    code, out, _ = run(capsys, "expand", "--lambda", "0")
    assert code == 0
    assert out.strip() == "1"


def test_expand_json_round_trip(capsys):
    code, out, _ = run(capsys, "expand", "--lambda", "3,3", "--json")
    assert code == 0
    assert json.loads(out) == {"4,2": 1, "3,2,1": 1, "3,1,1,1": 1, "2,2,2": 1}


def test_expand_parse_error(capsys):
    code, _, err = run(capsys, "expand", "--lambda", "2,4")
    assert code == 2 and "error" in err


def test_expand_unsolved(capsys):
    code, _, err = run(capsys, "expand", "--lambda", "3,3,3", "--method", "tableau")
    assert code == 3 and "no tableau formula" in err
    code, _, _ = run(capsys, "expand", "--lambda", "3,3,3", "--method", "oracle")
    assert code == 0


def test_thrall_witness(capsys):
    code, out, _ = run(capsys, "thrall", "--lambda", "3,3", "--mu", "4,2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].endswith("oracle=1 count=1 matched=true")
    assert lines[1] == "1 3 4 6/2 5"


def test_thrall_json(capsys):
    code, out, _ = run(capsys, "thrall", "--lambda", "3,3", "--mu", "4,2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["matched"] is True
    assert data["witnesses"] == [[[1, 3, 4, 6], [2, 5]]]


def test_trace_xi(capsys):
    code, out, _ = run(capsys, "trace-xi", "--tableau", "1 2 4 7 9/3 5 10/6 8")
    assert code == 0
    stages = json.loads(out)
    assert [s["stage"] for s in stages] == [
        "vartheta", "psi", "omega", "d",
        "theta[1]", "theta[2]", "theta[3]", "theta[4]", "result",
    ]
    result = stages[-1]["state"]
    assert result["spin"] == "3"
    assert result["weight"] == [5, 3, 2]
    assert stages[1]["state"]["rows"] == [
        [None, None, None, 1, 1], [None, None, 2], [1, 2],
    ]
    # open/closed chains appear with the shrink steps
    chains3 = stages[6]["step"]["chains"]
    assert sum(1 for ch in chains3 if not ch["open"]) == 1


def test_trace_xi_slides(capsys):
    code, out, _ = run(
        capsys, "trace-xi", "--tableau", "1 2 4 7 9/3 5 10/6 8", "--slides"
    )
    assert code == 0
    stages = json.loads(out)
    psi_stage = stages[1]
    assert any("entry" in line for line in psi_stage["switch_log"])


def test_trace_xi_rejects_unequal_halves(capsys):
    code, _, err = run(capsys, "trace-xi", "--tableau", "1 2 4/3 5 6")
    assert code == 2 and "error" in err


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--nmax", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11  # partitions of 1..4
    assert all(line.endswith("ok") for line in lines)


def test_verify_env_default(capsys, monkeypatch):
    monkeypatch.setenv("THRALL_NMAX", "2")
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert len(out.strip().splitlines()) == 3


def test_verify_reports_unsolved(capsys):
    code, out, _ = run(capsys, "verify", "--nmax", "9")
    assert code == 0
    assert any("no tableau formula known" in line for line in out.splitlines())


def test_enumerate_syt(capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "syt", "--shape", "2,2")
    assert code == 0
    assert sorted(out.strip().splitlines()) == ["1 2/3 4", "1 3/2 4"]


def test_enumerate_lr(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--kind", "lr", "--shape", "5,3,2/3,2",
        "--weight", "3,2",
    )
    assert code == 0
    assert ". . . 1 1/. . 2/1 2" in out.strip().splitlines()


def test_enumerate_ydt_contains_figure(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--kind", "ydt", "--shape", "6,6,4,4",
        "--weight", "5,3,2",
    )
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    target = {
        ((1, 1), (2, 1)): 1, ((1, 2), (2, 2)): 1, ((1, 3), (2, 3)): 1,
        ((1, 4), (2, 4)): 1, ((1, 5), (1, 6)): 1, ((2, 5), (2, 6)): 2,
        ((3, 1), (4, 1)): 2, ((3, 2), (3, 3)): 2, ((4, 2), (4, 3)): 3,
        ((3, 4), (4, 4)): 3,
    }
    as_sets = [
        {
            tuple(tuple(c) for c in dom["cells"]): dom["label"]
            for dom in row["dominoes"]
        }
        for row in rows
    ]
    assert target in as_sets


def test_enumerate_requires_weight(capsys):
    code, _, err = run(capsys, "enumerate", "--kind", "ydt", "--shape", "2,2")
    assert code == 2 and "weight" in err


def test_deterministic_output(capsys):
    _, out1, _ = run(capsys, "verify", "--nmax", "3")
    _, out2, _ = run(capsys, "verify", "--nmax", "3")
    assert out1 == out2
    _, a1, _ = run(capsys, "trace-xi", "--tableau", "1 3 4 6/2 5")
    _, a2, _ = run(capsys, "trace-xi", "--tableau", "1 3 4 6/2 5")
    assert a1 == a2


def test_bad_subcommand(capsys):
    assert main(["frobnicate"]) == 2
