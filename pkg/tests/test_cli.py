import csv
import io
import json

import jsonschema
import pytest

from charfact.cli import main
from charfact.schema import SCHEMAS


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--id", "fact1", "--lambda", "1,0", "--k", "2",
                       "--trials", "10", "--seed", "42", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS["verify"])
    assert doc["failures"] == 0 and doc["seed"] == 42 and doc["witness"] is None


def test_count_asm(capsys):
    assert run(capsys, "count", "--family", "asm", "--size", "3")[:2] == (0, "7\n")


def test_precondition_is_usage_error(capsys):
    code, out, err = run(capsys, "verify", "--id", "fact1", "--lambda", "1,0", "--k", "0")
    assert code == 2 and out == "" and "error" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--id", "nope", "--lambda", "1"],
    ["count", "--family", "dpp", "--size", "3"],
    ["count", "--family", "tspp", "--size", "3"],
    ["eval", "--family", "sp", "--lambda", "1", "--x", "2"],
    ["eval", "--family", "so_odd", "--negate", "--lambda", "1/2", "--roots", "2"],
    ["oracle", "--kind", "brute", "--family", "r", "--size", "2"],
    ["oracle", "--kind", "brute", "--size", "2"],
    ["verify", "--id", "fact1", "--lambda", "1", "--k", "1", "--seed", "-3"],
    ["bogus"],
    [],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_witness_exit_code(capsys, monkeypatch):
    from charfact import identities as ids

    def broken(params):
        return ids.fact2_sides(params, with_delta=False)
    monkeypatch.setitem(ids.REGISTRY, ids.IdentityId.FACT2, broken)
    code, out, _ = run(capsys, "verify", "--id", "fact2", "--lambda", "2,1,0", "--k1", "2", "--k2", "3",
                       "--format", "json")
    assert code == 1
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS["verify"])
    assert doc["failures"] == 10 and doc["witness"]["point"]


COMMANDS = {
    "eval": ["eval", "--family", "so_odd", "--lambda", "1", "--x", "4"],
    "dim": ["dim", "--family", "schur", "--lambda", "2,2,0,0"],
    "verify": ["verify", "--id", "rect1", "--m", "1", "--n", "2", "--trials", "3"],
    "sweep": ["sweep", "--id", "ast1", "--trials", "3"],
    "table": ["table", "--id", "rect3,qast2", "--trials", "3"],
    "count": ["count", "--family", "pp", "--size", "2,2,2"],
    "oracle": ["oracle", "--kind", "brute", "--family", "tcpp", "--size", "1,3"],
    "detcheck": ["detcheck", "--which", "d2", "--size", "3", "--seeds", "3"],
}


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_every_command_json_schema(capsys, name):
    code, out, _ = run(capsys, *COMMANDS[name], "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), SCHEMAS[name])


@pytest.mark.parametrize("name", sorted(COMMANDS))
@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_byte_identical_reruns(capsys, name, fmt):
    first = run(capsys, *COMMANDS[name], "--format", fmt)
    second = run(capsys, *COMMANDS[name], "--format", fmt)
    assert first == second and first[1]


@pytest.mark.parametrize("kind,extra", [
    ("ssyt", ["--lambda", "2,1,0"]),
    ("ssyt", ["--lambda", "2,1", "--x", "4,9"]),
    ("bridge", ["--family", "vsasm", "--size", "3"]),
    ("bridge", ["--family", "spp", "--size", "2,3"]),
    ("countid", ["--id", "ds2", "--size", "3"]),
    ("countid", ["--id", "pp4", "--size", "2,3"]),
])
def test_oracle_kinds(capsys, kind, extra):
    code, out, _ = run(capsys, "oracle", "--kind", kind, *extra, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMAS["oracle"])
    assert doc["passed"] and len(set(doc["values"])) == 1


def test_eval_values(capsys):
    _, out, _ = run(capsys, "eval", "--family", "schur", "--lambda", "1,0", "--x", "4,9", "--format", "json")
    assert json.loads(out)["value"] == "13"
    _, out, _ = run(capsys, "eval", "--family", "so_odd", "--lambda", "1/2", "--roots", "2", "--format", "json")
    assert json.loads(out)["value"] == "5/2"
    _, out, _ = run(capsys, "eval", "--family", "oe", "--lambda", "1,0", "--roots", "2", "--extra-one")
    assert "value=" in out


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--id", "rect1", "--trials", "3")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["identity", "params", "trials", "failures", "status"]
    assert len(rows) == 1 + 12 and all(r[-1] == "PASS" for r in rows[1:])


def test_seed_from_environment(capsys, monkeypatch):
    argv = ["verify", "--id", "fact1", "--lambda", "1,0", "--k", "1", "--format", "json"]
    monkeypatch.setenv("CHARFACT_SEED", "99")
    assert json.loads(run(capsys, *argv)[1])["seed"] == 99
    assert json.loads(run(capsys, *argv, "--seed", "3")[1])["seed"] == 3
    monkeypatch.setenv("CHARFACT_SEED", "x")
    assert run(capsys, *argv)[0] == 2
    monkeypatch.delenv("CHARFACT_SEED")
    assert json.loads(run(capsys, *argv)[1])["seed"] == 0


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "count", "--family", "cspp", "--size", "3", "--format", "json",
                       "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["value"] == "20"
