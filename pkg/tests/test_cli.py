import json

from kleinfour.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    doc = json.loads(out)
    assert doc["schema"] == "k4/1"
    return code, doc


def test_check_exit_codes(capsys):
    code, doc = run_json(capsys, "check", "-g", "6", "-s", "5")
    assert code == 1 and doc["exists"] is False

    code, doc = run_json(capsys, "check", "-g", "5", "-s", "1", "-p", "3,1,1")
    assert code == 0 and doc["exists"] is True and doc["clause"] == "none"

    code, _, err = run(capsys, "check", "-g", "5", "-s", "1", "-p", "4,1,0")
    assert code == 2 and "error" in err

    code, doc = run_json(capsys, "check", "-g", "6", "-s", "3", "-p", "3,2,1")
    assert code == 1 and doc["clause"] == "v"


def test_check_rank_only(capsys):
    code, doc = run_json(capsys, "check", "-g", "7", "-s", "7")
    assert code == 0 and doc["exists"] is True
    code, doc = run_json(capsys, "check", "-g", "6", "-s", "1")
    assert code == 1


def test_construct_witness(capsys):
    code, doc = run_json(capsys, "construct", "-g", "5", "-s", "2",
                         "-p", "2,2,1")
    assert code == 0
    w = doc["witness"]
    assert w["genus"] == 5 and w["two_rank"] == 2
    assert w["type"] == [2, 2, 1]
    assert doc["recipe"]["lemma"] == "S2"

    code, doc = run_json(capsys, "construct", "-g", "9", "-s", "5",
                         "-p", "3,3,3", "--verify-depth", "4")
    assert code == 0
    assert doc["report"]["status"] == "confirmed"

    code, doc = run_json(capsys, "construct", "-g", "9", "-s", "2",
                         "-p", "3,3,3")
    assert code == 1 and doc["clause"] == "iii"


def test_invariants(capsys):
    code, doc = run_json(capsys, "invariants", "-f", "x^3")
    assert code == 0 and (doc["genus"], doc["two_rank"]) == (1, 0)
    code, doc = run_json(capsys, "invariants", "-f", "1/(x^2+x+1)")
    assert code == 0 and (doc["genus"], doc["two_rank"]) == (1, 1)
    code, _, err = run(capsys, "invariants", "-f", "1/(x^2) + 1/x")
    assert code == 2  # degenerate
    code, _, err = run(capsys, "invariants", "-f", "a*x", "--field", "gf4")
    assert code == 0


def test_invariants_env_field(capsys, monkeypatch):
    monkeypatch.setenv("K4_DEFAULT_FIELD", "gf4")
    code, doc = run_json(capsys, "invariants", "-f", "a*x^3")
    assert code == 0 and doc["genus"] == 1


def test_table_tsv(capsys):
    code, out, _ = run(capsys, "table", "-g", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == ["g", "sigma", "type", "exists", "clause"]
    rows = [ln.split("\t") for ln in lines[1:]]
    # sigma = 3 (= g-1) impossible throughout, clause iv; sigma = 1 clause ii
    for row in rows:
        if row[1] == "3":
            assert row[3] == "False" and row[4] == "iv"
        if row[1] == "1":
            assert row[3] == "False" and row[4] == "ii"


def test_table_g3_balanced_row(capsys):
    code, doc = run_json(capsys, "table", "-g", "3", "--json")
    assert code == 0
    rows = {(r["sigma"], tuple(r["type"])): r for r in doc["rows"]}
    assert rows[(2, (1, 1, 1))]["clause"] == "iii"


def test_table_verify(capsys):
    code, doc = run_json(capsys, "table", "-g", "5", "--verify", "--json")
    assert code == 0
    for row in doc["rows"]:
        if row["exists"]:
            assert row["verified"] is True


def test_table_verify_g12(capsys):
    code, doc = run_json(capsys, "table", "-g", "12", "--verify", "--json")
    assert code == 0
    verified = [r for r in doc["rows"] if r["exists"]]
    assert verified and all(r["verified"] for r in verified)


def test_census_command(capsys):
    code, doc = run_json(capsys, "census", "--field", "gf4", "--max-deg", "1",
                         "--json")
    assert code == 0
    cells = {(c["g"], c["sigma"], tuple(c["type"])) for c in doc["cells"]}
    assert (0, 0, (0, 0, 0)) in cells
    assert (1, 1, (1, 0, 0)) in cells
    code, _, err = run(capsys, "census", "--max-deg", "9")
    assert code == 2


def test_hyperelliptic(capsys):
    code, doc = run_json(capsys, "hyperelliptic", "-g", "5", "-s", "3")
    assert code == 0 and doc["extra_involution"] is True
    code, doc = run_json(capsys, "hyperelliptic", "-g", "5", "-s", "2")
    assert code == 0 and doc["extra_involution"] is False
    code, doc = run_json(capsys, "hyperelliptic", "-g", "0", "-s", "0")
    assert code == 0 and doc["extra_involution"] is True


def test_seed_flag_accepted(capsys):
    code, _ = run_json(capsys, "--seed", "7", "invariants", "-f", "x^3")
    assert code == 0
