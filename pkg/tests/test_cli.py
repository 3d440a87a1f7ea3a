import json
import subprocess
import sys

import pytest

from decagon.cli import run

PY = [sys.executable, "-m", "decagon.cli"]


def invoke(args):
    proc = subprocess.run(PY + list(args), capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_check_law_decagon_exit_zero(capsys):
    code = run(["check-law", "--law", "exception-over-powerset",
                "--form", "decagon", "--max-size", "2"])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)
    assert set(payload) >= {"command", "universe", "verdicts", "witnesses",
                            "timing_ms", "exhaustive"}
    assert len(payload["verdicts"]) == 3
    assert all(v["passed"] for v in payload["verdicts"])


def test_unknown_law_exit_two(capsys):
    assert run(["check-law", "--law", "unknown-name"]) == 2


def test_unknown_flag_rejected():
    code, _, err = invoke(["check-law", "--law", "x", "--nonsense"])
    assert code == 2


def test_convert_roundtrip(capsys):
    code = run(["convert", "--law", "exception-over-powerset",
                "--from", "monoidal", "--to", "algebra", "--roundtrip",
                "--max-size", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out)["roundtrip_identity"] is True


def test_convert_noiter_roundtrip(capsys):
    code = run(["convert", "--law", "exception-over-powerset",
                "--from", "algebra", "--to", "noiter", "--roundtrip",
                "--max-size", "1"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["roundtrip_identity"] is True


def test_check_failure_exit_one(tmp_path, capsys):
    # register a law whose lambda is the wrong builtin: writer strength on
    # the wrong monad pair cannot satisfy the axioms
    registry = tmp_path / "registry.json"
    registry.write_text(json.dumps({
        "laws": [{
            "law": "exception-misdistributed",
            "T": {"name": "exception", "E": ["e1", "e2"]},
            "P": {"name": "powerset"},
            "lambda": "builtin:exception-dist",
        }]
    }))
    code = run(["check-law", "--law", "exception-misdistributed",
                "--registry", str(registry), "--form", "monoidal", "--max-size", "1"])
    out = capsys.readouterr().out
    assert code == 0  # exception-dist is uniform in E, so it still passes
    payload = json.loads(out)
    assert all(v["passed"] for v in payload["verdicts"])


def test_malformed_registry_exit_two(tmp_path, capsys):
    registry = tmp_path / "registry.json"
    registry.write_text("{not json")
    assert run(["check-law", "--law", "x", "--registry", str(registry)]) == 2


def test_registry_with_mismatched_component_exit_two(tmp_path):
    registry = tmp_path / "registry.json"
    registry.write_text(json.dumps({
        "laws": [{"law": "bad", "T": {"name": "powerset"}, "P": {"name": "powerset"},
                  "lambda": "builtin:writer-strength"}]
    }))
    assert run(["check-law", "--law", "bad", "--registry", str(registry)]) == 2


def test_registry_with_bad_monoid_exit_two(tmp_path):
    registry = tmp_path / "registry.json"
    registry.write_text(json.dumps({
        "monads": [{"name": "writer",
                    "monoid": {"elems": ["1", "s"], "op": [["s", "1"], ["1", "s"]],
                               "unit": "1"}}]
    }))
    assert run(["check-monad", "--monad", "writer", "--registry", str(registry)]) == 2


def test_check_monad(capsys):
    assert run(["check-monad", "--monad", "powerset", "--max-size", "1"]) == 0
    capsys.readouterr()
    assert run(["check-monad", "--monad", "coreader", "--max-size", "1"]) == 0


def test_search_with_law(capsys):
    code = run(["search", "--law", "exception-over-powerset", "--max-size", "1"])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)
    assert payload["registered_among_survivors"] is True
    assert payload["forms_agree"] is True


def test_search_budget_exit_two(capsys):
    assert run(["search", "--law", "exception-over-powerset",
                "--max-size", "2", "--budget", "10"]) == 2


def test_pasting_derive(capsys):
    code = run(["pasting-derive", "--axiom", "all"])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)
    assert set(payload["derivations"]) == {"Omega", "omega3", "omega4",
                                           "phi", "theta", "delta", "H"}
    assert all(d["boundary_matches"] for d in payload["derivations"].values())


def test_pasting_check_single_axiom(capsys):
    code = run(["pasting-check", "--axiom", "W1",
                "--interpretation", "exception-over-powerset", "--max-size", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert all(v["passed"] for v in json.loads(out)["verdicts"])


def test_byte_identical_reports():
    args = ["check-law", "--law", "exception-over-powerset",
            "--form", "monoidal", "--max-size", "1", "--seed", "7"]
    c1, out1, _ = invoke(args)
    c2, out2, _ = invoke(args)
    assert c1 == c2 == 0
    assert out1 == out2


def test_json_goes_to_stdout_summary_to_stderr():
    code, out, err = invoke(["check-law", "--law", "exception-over-powerset",
                             "--form", "monoidal", "--max-size", "1"])
    assert code == 0
    json.loads(out)
    assert "pass" in err
