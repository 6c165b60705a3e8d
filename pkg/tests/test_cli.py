import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from perimod import cli, corpus
from perimod.errors import InputError

CLASSICAL = str(corpus.bundled_path("classical"))
VIRTUAL = str(corpus.bundled_path("virtual"))
DEFS = {"parse": "parse", "invariants": "invariants", "longitudes": "longitudes",
        "verify": "identities", "lemma": "lemma", "corpus": "corpus"}


@pytest.fixture(scope="module")
def schema():
    return json.loads((resources.files("perimod") / "report_schema.json").read_text())


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def validate(schema, payload):
    jsonschema.validate(payload, schema)
    for res in payload["results"]:
        if "report" in res:
            sub = {"$defs": schema["$defs"], "$ref": f"#/$defs/{DEFS[payload['command']]}"}
            jsonschema.validate(res["report"], sub)


def test_verify_classical_corpus(capsys, schema):
    code, out, _ = run(capsys, "verify", CLASSICAL, "--out", "json")
    assert code == 0
    payload = json.loads(out)
    validate(schema, payload)
    assert payload["schema"] == cli.SCHEMA
    assert all(r["ok"] and r["report"]["checks"][0]["holds"] for r in payload["results"])


def test_longitudes_of_virtual_hopf(capsys, monkeypatch, schema):
    code, out, _ = run(capsys, "longitudes", "--format", "gauss", "--out", "json",
                       stdin="O1+\nU1+\n", monkeypatch=monkeypatch)
    assert code == 0
    payload = json.loads(out)
    validate(schema, payload)
    rep = payload["results"][0]["report"]
    assert [(x["class"], x["is_zero"]) for x in rep["longitudes"]] == [("0", True), ("m1 - m2", False)]
    assert rep["sum"] == "m1 - m2" and rep["sum_is_zero"] is False


def test_longitudes_text(capsys, tmp_path):
    f = tmp_path / "vhopf.txt"
    f.write_text("O1+\nU1+\n")
    code, out, _ = run(capsys, "longitudes", str(f))
    assert code == 0
    assert "chi_1 = 0  (zero" in out and "chi_2 = m1 - m2  (nonzero" in out


def test_parse_bad_file(capsys, tmp_path, schema):
    f = tmp_path / "bad.txt"
    f.write_text("O1+ X2-\n")
    code, out, err = run(capsys, "parse", str(f), "--out", "json")
    assert code == 2
    assert "line 1, token 2: cannot parse 'X2-'" in err
    payload = json.loads(out)
    validate(schema, payload)
    assert payload["results"][0]["error"]["type"] == "MalformedToken"


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "parse", str(tmp_path / "nope.txt"))
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize("command", cli.COMMANDS)
def test_every_command_on_both_corpora(capsys, schema, command):
    for path in (CLASSICAL, VIRTUAL):
        code, out, _ = run(capsys, command, path, "--out", "json")
        payload = json.loads(out)
        validate(schema, payload)
        assert code == 0, (command, path)
        assert len(payload["results"]) == len(corpus.load(path))


def test_corpus_defaults_to_bundled(capsys, schema):
    code, out, _ = run(capsys, "corpus", "--out", "json")
    assert code == 0
    payload = json.loads(out)
    validate(schema, payload)
    names = [r["name"] for r in payload["results"]]
    assert names == [e.name for e in corpus.load_bundled()]
    assert all(r["report"]["expectation_mismatches"] == [] for r in payload["results"])


def test_expectation_mismatch_fails(capsys, tmp_path):
    f = tmp_path / "wrong.jsonl"
    f.write_text(json.dumps({"name": "vh", "gauss": "O1+\nU1+", "expect": {"sum_zero": True}}) + "\n")
    code, out, _ = run(capsys, "corpus", str(f))
    assert code == 1
    assert "expectation mismatches: sum_zero" in out


def test_seifert_disagreement_fails(capsys, tmp_path):
    f = tmp_path / "wrong.jsonl"
    f.write_text(json.dumps({"name": "t", "gauss": "O1+ U2+ O3+ U1+ O2+ U3+",
                             "seifert_matrix": [[1, 1], [0, -1]]}) + "\n")
    code, out, _ = run(capsys, "invariants", str(f), "--out", "json")
    assert code == 1
    assert json.loads(out)["results"][0]["report"]["seifert_agrees"] is False


def test_resource_limit_exit(capsys):
    code, out, err = run(capsys, "verify", CLASSICAL, "--max-degree", "0")
    assert code == 3 and "ResourceLimit" in err


def test_env_overrides_max_degree(capsys, monkeypatch):
    monkeypatch.setenv("PERIMOD_MAX_DEGREE", "0")
    code, _, _ = run(capsys, "verify", CLASSICAL, "--max-degree", "64")
    assert code == 3
    monkeypatch.setenv("PERIMOD_MAX_DEGREE", "lots")
    code, _, err = run(capsys, "verify", CLASSICAL)
    assert code == 2 and "PERIMOD_MAX_DEGREE" in err


def test_pd_input(capsys, monkeypatch):
    code, out, _ = run(capsys, "invariants", "--out", "json",
                       stdin="X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]", monkeypatch=monkeypatch)
    assert code == 0
    rep = json.loads(out)["results"][0]["report"]
    assert rep["alexander_polynomial"] == "1 - t + t^2" and rep["classical"]


def test_output_is_deterministic():
    outs = []
    for _ in range(2):
        proc = subprocess.run([sys.executable, "-m", "perimod", "corpus", "--out", "json"],
                              capture_output=True, check=True)
        outs.append(proc.stdout)
    assert outs[0] == outs[1]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "perimod", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("perimod ")
    proc = subprocess.run([sys.executable, "-m", "perimod"], capture_output=True, text=True)
    assert proc.returncode == 2


# -- corpus loader ---------------------------------------------------------------

@pytest.mark.parametrize("line, fragment", [
    ("not json", "invalid JSON"),
    ("[1, 2]", "expected a JSON object"),
    ('{"gauss": "-"}', "missing 'name'"),
    ('{"name": "x"}', "exactly one of"),
    ('{"name": "x", "gauss": "-", "pd": "X[1,1,2,2]"}', "exactly one of"),
    ('{"name": "x", "gauss": 3}', "must be a string"),
    ('{"name": "x", "gauss": "-", "seifert_matrix": [[1.5]]}', "integer lists"),
    ('{"name": "x", "gauss": "-", "expect": {"bogus": true}}', "'expect' takes"),
])
def test_corpus_loader_errors(line, fragment):
    with pytest.raises(InputError, match=fragment):
        list(corpus.parse_lines([line]))


def test_corpus_round_trip(bundled):
    for e in bundled.values():
        again = corpus.CorpusEntry.from_record(json.loads(json.dumps(e.to_record())))
        assert again == e and again.expect == e.expect


def test_bundled_corpus_contents(bundled):
    classical = {"hopf", "trefoil", "figure-eight", "trefoil-unknot", "whitehead", "borromean", "torus-2-4"}
    assert classical <= set(bundled)
    assert {"virtual-hopf", "virtual-trefoil"} <= set(bundled)
    with pytest.raises(KeyError):
        corpus.bundled_path("nope")


def test_repository_corpus_link_matches_package():
    link = Path(__file__).resolve().parent.parent / "corpus" / "classical.jsonl"
    if link.exists():
        assert link.read_text() == Path(CLASSICAL).read_text()
