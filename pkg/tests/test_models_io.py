import csv
import io
import json
import subprocess
import sys

import pytest

from branecalc.audit import ground_intersection_report
from branecalc.charges import charge_table
from branecalc.cli import main
from branecalc.emit import emit
from branecalc.errors import ModelError
from branecalc.models import (BUILTINS, P11222_8, P11226_12, dump_model, load_model,
                              parse_model_text)
from branecalc.monodromy import ChargeVector


def test_builtins():
    m8, m12 = load_model("p11222-8"), load_model("p11226-12")
    assert (m8.K, m8.weights, m8.intersection_coeffs[0]) == (8, (1, 1, 2, 2, 2), 8)
    assert (m12.K, m12.weights, m12.intersection_coeffs[0]) == (12, (1, 1, 2, 2, 6), 4)


def test_unknown_model():
    with pytest.raises(ModelError):
        load_model("no-such-model")


def test_four_levels_is_a_parse_error():
    text = dump_model(P11222_8).replace("levels = 6, 6, 2, 2, 2", "levels = 6, 6, 2, 2")
    with pytest.raises(ModelError, match=r"line 2, field 'levels'"):
        parse_model_text(text)


@pytest.mark.parametrize("mutate, where", [
    (lambda t: t.replace("monodromy = -1, 1,", "monodromy = 1,"), "monodromy"),
    (lambda t: t.replace("monodromy = -1, 1,", "monodromy = -1, x,"), "monodromy"),
    (lambda t: t.replace("pivots = 6, 7", "pivots = 7, 6"), "relations"),
    (lambda t: t + "colour = blue\n", "colour"),
])
def test_parse_diagnostics_name_line_and_field(mutate, where):
    text = mutate(dump_model(P11222_8))
    with pytest.raises(ModelError) as err:
        parse_model_text(text)
    assert err.value.field == where
    assert err.value.line is not None


def test_singular_monodromy_diagnostic():
    text = dump_model(P11222_8)
    lines = text.splitlines()
    lines[2] = "monodromy = " + ", ".join(["1"] * 36)
    with pytest.raises(ModelError, match="singular"):
        parse_model_text("\n".join(lines))


def test_cyclotomic_keyword():
    text = dump_model(P11226_12)
    text = "\n".join(l for l in text.splitlines() if not l.startswith(("relations", "pivots")))
    m = parse_model_text(text + "\nrelations = cyclotomic\n")
    assert m.relations == P11226_12.relations


@pytest.mark.parametrize("model", list(BUILTINS.values()), ids=list(BUILTINS))
def test_round_trips(model, tmp_path):
    assert parse_model_text(dump_model(model)) == model
    path = tmp_path / "m.json"
    path.write_text(emit(model, "json"))
    assert load_model(path) == model


def test_model_path_lookup(tmp_path, monkeypatch):
    (tmp_path / "custom.model").write_text(dump_model(P11222_8).replace("p11222-8", "custom"))
    monkeypatch.setenv("BRANECALC_MODEL_PATH", str(tmp_path))
    assert load_model("custom").levels == P11222_8.levels


def test_emit_zero_charge():
    assert json.loads(emit(ChargeVector.of([0] * 6))) == dict.fromkeys(
        ["n6", "n41", "n42", "n0", "n21", "n22"], 0)


def test_emit_charge_table_csv():
    out = emit(charge_table(P11222_8, (1, 0, 0, 0, 0)), "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["M", "n6", "n41", "n42", "n0", "n21", "n22"]
    assert len(rows) == 9


def test_emit_table_is_aligned():
    out = emit(charge_table(P11222_8, (1, 0, 0, 0, 0)), "table").splitlines()
    assert len({len(x) for x in out[:2]}) == 1


def test_emit_report_json():
    d = json.loads(emit(ground_intersection_report(P11222_8)))
    assert {"computed", "paper", "match"} <= d.keys()
    assert d["match"] is False


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "branecalc", *args], capture_output=True, text=True)


def test_cli_exit_codes(capsys):
    assert main(["models", "list"]) == 0
    assert main(["charge", "--model", "p11222-8", "--L", "1,0,0,0,0", "--M", "1"]) == 0
    assert main(["charge", "--model", "p11222-8", "--L", "1,0,0,0,0", "--M", "2"]) == 2
    assert main(["ext", "normal", "--split=0,0"]) == 2
    assert main(["audit"]) == 3
    with pytest.raises(SystemExit) as exc:
        main(["charge", "--model", "p11222-8"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_cli_commands_produce_expected_values(capsys):
    def run(*args):
        capsys.readouterr()
        assert main(list(args)) == 0
        return json.loads(capsys.readouterr().out)

    assert run("ext", "normal", "--split=1,-3")["ext1"] == 2
    assert run("central-charge", "--model", "p11222-8", "--n", "0,1,0,-2,0,1",
               "--t1", "1", "--t2", "1")["Z"] == "-20/3"
    assert run("quiver", "paths", "--from", "6", "--to", "0", "--max-len", "3")[0]["path"] == "c^*.b^*.a^*"
    assert run("mukai", "--r", "1", "--c1", "0,0", "--c2", "0")["moduli_dimension"] == 0
    assert run("stability", "--sub", "1:2,0", "--whole", "2:1,0", "--omega", "1,1")["semistable"] is False
    d = run("intersect", "--model", "p11222-8", "--state1", "0,0,0,0,0", "--state2", "0,0,0,0,0",
            "--method", "direct")
    assert d["value_at_g=1"] == 0
    assert run("marginal", "--model", "p11222-8", "--state", "2,0,0,0,0", "--factors", "0,1")["vac"] == 1


def test_cli_spectral_table(tmp_path, capsys):
    path = tmp_path / "k3.txt"
    path.write_text("1 1\n0 0\n1 1\n")
    assert main(["ext", "spectral", "--table", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["ext"] == [1, 1, 1, 1]


def test_cli_is_deterministic():
    args = ["charge", "--model", "p11222-8", "--L", "2,0,0,0,0", "--all-M", "--format", "csv"]
    a, b = run_cli(*args), run_cli(*args)
    assert a.returncode == 0
    assert a.stdout == b.stdout and a.stdout.startswith("M,n6,n41,n42,n0,n21,n22\n")
