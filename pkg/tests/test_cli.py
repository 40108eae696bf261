import json
import subprocess
import sys
from pathlib import Path

import pytest

from colorhopf import corpus
from colorhopf.cli import main
from colorhopf.serialize import corpus_workspace, dumps, load_workspace, workspace_from_json
from colorhopf.suite import run_suite

ROOT = Path(__file__).resolve().parents[1]
SHIPPED = ROOT / "workspaces" / "corpus.json"


def run(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture(scope="module")
def mutated(tmp_path_factory):
    path = tmp_path_factory.mktemp("ws") / "mutated.json"
    path.write_text(dumps(corpus_workspace(corpus.MUTATIONS).to_json()))
    return path


def test_round_trip_bit_identical(tmp_path):
    text = dumps(corpus_workspace().to_json())
    path = tmp_path / "ws.json"
    path.write_text(text)
    again = dumps(load_workspace(path).to_json())
    assert again == text


def test_shipped_workspace_is_current():
    assert SHIPPED.read_text() == dumps(corpus_workspace().to_json())


def test_round_trip_structure():
    ws = corpus_workspace()
    back = workspace_from_json(json.loads(dumps(ws.to_json())))
    for name, H in ws.algebras.items():
        assert back.algebras[name].structure_equal(H)


def test_verify_exit_codes(capsys, mutated):
    code, report = run(capsys, "--workspace", str(SHIPPED), "verify", "lambda_v")
    assert code == 0 and report["ok"]
    code, report = run(capsys, "--workspace", str(mutated), "verify", "mutated_lambda_v")
    assert code == 1
    failed = [c["check"] for c in report["checks"] if c["status"] == "fail"]
    assert failed[0] == "antipode_left"
    code, report = run(capsys, "--workspace", str(SHIPPED), "verify", "missing")
    assert code == 2 and "unknown name" in report["error"]


def test_verify_morphism(capsys):
    code, report = run(capsys, "verify", "pi_z4_z2")
    assert code == 0


def test_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, report = run(capsys, "--workspace", str(bad), "suite")
    assert code == 2
    bad.write_text(json.dumps({"group": {"free_rank": 0, "torsion": [4]}, "field": {"kind": "PrimeField", "p": 5}, "phi": [["2"]]}))
    code, report = run(capsys, "--workspace", str(bad), "suite")
    assert code == 2 and "commutation factor" in report["error"]
    ws = corpus_workspace().to_json()
    ws["morphisms"]["pi_z4_z2"]["source"] = "nowhere"
    bad.write_text(json.dumps(ws))
    code, report = run(capsys, "--workspace", str(bad), "suite")
    assert code == 2


def test_constructions(capsys):
    code, report = run(capsys, "hker", "pi_z4_z2")
    assert code == 0 and report["result"]["hker"]["dim"] == 2
    code, report = run(capsys, "factorize", "pi_z4_z2")
    assert code == 0 and "i injective: pass" in report["assertions"]
    assert "ker(f)=A(Hker f)+A: pass" in report["assertions"]
    code, report = run(capsys, "twist", "lambda_v")
    assert code == 0 and report["result"]["gamma"] == [["1"]]
    assert report["result"]["algebra"]["group"] == {"free_rank": 0, "torsion": [2]}
    code, report = run(capsys, "normal", "k_s3", "k_s3.c12")
    assert code == 0 and report["result"]["normal"] is False
    code, report = run(capsys, "newman_phi", "k_s3", "k_s3.a3")
    assert code == 0 and report["result"]["kind"] == "hopf_quotient"
    code, report = run(capsys, "abelian", "k_s3")
    assert code == 0 and report["result"]["abelian"] is False
    for argv in (["coker", "incl_z2_z4"], ["equalizer", "inverse_z4", "inverse_z4"], ["coequalizer", "pi_z4_z2", "pi_z4_z2"],
                 ["product", "lambda_v", "k_z2"], ["pullback", "pi_z4_z2", "k_z2.unit"], ["newman_psi", "sign_s3"],
                 ["newman", "k_z4", "k_z4.z2"]):
        code, report = run(capsys, *argv)
        assert code == 0, argv
        assert all(line.endswith(": pass") for line in report["assertions"]), argv


def test_construction_precondition_failure(capsys, mutated):
    code, report = run(capsys, "--workspace", str(mutated), "twist", "mutated_lambda_v")
    assert code == 1 and "antipode_left" in report["failed"]
    code, report = run(capsys, "equalizer", "pi_z4_z2", "inverse_z4")
    assert code == 1 and "NotParallel" in report["error"]
    code, report = run(capsys, "hker", "k_z2")
    assert code == 2


def test_out_file(capsys, tmp_path):
    out = tmp_path / "hker.json"
    code = main(["--json", "--out", str(out), "hker", "pi_z4_z2"])
    assert code == 0
    assert json.loads(out.read_text()) == json.loads(capsys.readouterr().out)


def test_suite_on_shipped_workspace(capsys):
    code, report = run(capsys, "--workspace", str(SHIPPED), "suite")
    assert code == 0 and report["failed"] == 0 and report["checks"] > 500


@pytest.mark.parametrize("name, kind", corpus.MUTATIONS)
def test_suite_names_single_mutation(name, kind):
    res = run_suite(corpus_workspace([(name, kind)]))
    assert not res.ok
    first = res.first_failure
    assert first.subject == f"mutated_{name}"
    failing = {o.check for o in res.outcomes if not o.passed and o.subject == f"mutated_{name}"}
    assert corpus.MUTATION_TARGETS[kind] in failing


def test_suite_on_empty_workspace(capsys, tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("{}")
    code, report = run(capsys, "--workspace", str(empty), "suite")
    assert code == 0 and report["checks"] == 0


def test_corpus_emit_single(capsys):
    code, report = run(capsys, "corpus", "emit", "lambda_vw")
    assert code == 0 and list(report["algebras"]) == ["lambda_vw"]
    assert workspace_from_json(report).algebras["lambda_vw"].dim == 4


def test_human_summary_on_stderr():
    proc = subprocess.run(
        [sys.executable, "-m", "colorhopf", "verify", "lambda_v"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert "verify lambda_v: pass" in proc.stderr
    assert json.loads(proc.stdout)["ok"] is True
