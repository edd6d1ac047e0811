import pytest

from gdet.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--n", "4",
                       "--values", "2,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1")
    assert code == 0 and out.strip() == "17"
    code, out, _ = run(capsys, "eval", "--n", "1", "--values", "3,1")
    assert code == 0 and out.strip() == "8"


def test_eval_tree(capsys):
    code, out, _ = run(capsys, "eval", "--n", "2", "--values", "3,1,0,0", "--tree")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "D2(3, 1, 0, 0) = 64"
    assert lines[1:] == ["  D1(3, 1) = 8", "  D1(3, 1) = 8"]


def test_eval_wrong_arity(capsys):
    code, _, err = run(capsys, "eval", "--n", "2", "--values", "1,2,3")
    assert code == 2 and "4 values" in err


def test_classify_exit_codes(capsys):
    code, out, _ = run(capsys, "classify", "33")
    assert code == 0 and out.strip() == "Odd16m1 m=2"
    code, out, _ = run(capsys, "classify", str(7 << 24))
    assert code == 1 and out.startswith("NotMember")
    code, out, _ = run(capsys, "classify", str(15 << 24))
    assert code == 0 and out.startswith("V24_A")


def test_classify_lower_ranks(capsys):
    code, out, _ = run(capsys, "classify", "-16", "--group", "c2_2")
    assert code == 0 and out.strip() == "2^4 (2m+1) m=-1"
    code, out, _ = run(capsys, "classify", "3", "--group", "c2_3")
    assert code == 1


def test_classify_infeasible(capsys):
    v = (1 << 24) * (8 * 10**50 + 7)
    code, _, err = run(capsys, "classify", str(v))
    assert code == 2 and "cap" in err


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "17")
    assert code == 0
    family, values = out.splitlines()
    assert family == "F1(m=1)"
    assert values == "2," + ",".join(["1"] * 15)

    code, out, _ = run(capsys, "witness", "-196608")
    assert code == 0 and out.splitlines()[0] == "F2b(k=0)"

    code, out, _ = run(capsys, "witness", "7")
    assert code == 1 and out.startswith("NotMember")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--lemma", "2.4")
    assert code == 0 and out.strip() == "lemma 2.4: 65536 cases, pass"
    code, out, _ = run(capsys, "verify", "--lemma", "3.2", "--window", "32")
    assert code == 0 and out.strip() == "lemma 3.2: 1048576 cases, pass"
    code, _, err = run(capsys, "verify", "--lemma", "nope")
    assert code == 2 and "unknown lemma" in err
    code, _, err = run(capsys, "verify", "--lemma", "3.2", "--window", "24")
    assert code == 2


def test_sweep_command(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep", "--n", "2", "--alphabet", "-1,0,1")
    assert code == 0
    assert "tuples: 81" in out and "violations: 0" in out

    out_path = str(tmp_path / "s.jsonl")
    code, out, _ = run(
        capsys, "sweep", "--n", "4", "--alphabet", "0,1",
        "--chunk-size", "8192", "--out", out_path,
    )
    assert code == 0 and "tuples: 65536" in out

    code, _, err = run(capsys, "sweep", "--n", "7", "--alphabet", "0,1")
    assert code == 2

    code, _, err = run(capsys, "sweep", "--n", "2", "--alphabet", "0,1", "--resume")
    assert code == 2 and "--out" in err


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 2
