import json
import subprocess
import sys

from quivdef.cli import build_parser, run_command
from quivdef.families import a_presentation


def run_cli(args):
    proc = subprocess.run(
        [sys.executable, "-m", "quivdef.cli"] + args,
        capture_output=True,
        text=True,
    )
    return proc


def test_families_k3_dimension_check():
    proc = run_cli(["families", "--k", "3"])
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    dim = [c for c in doc["checks"] if c["name"] == "dim_A3"][0]
    assert dim["status"] == "pass" and dim["actual"] == 10


def test_hochschild_k2_dims():
    proc = run_cli(["hochschild", "--k", "2", "--max-degree", "3"])
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    hh = [c for c in doc["checks"] if c["name"] == "hh_dims_A2"][0]
    assert hh["actual"] == [3, 1, 1, 1]


def test_exit_code_reflects_failures(tmp_path):
    # a presentation whose quotient is not symmetric: one failing check
    pres = """{
      "vertices": ["1", "2"],
      "arrows": [{"name": "c", "source": "1", "target": "2", "degree": 1}],
      "relations": []
    }"""
    path = tmp_path / "triangular.json"
    path.write_text(pres, encoding="utf-8")
    proc = run_cli(["families", "--presentation", str(path), "--bound", "2"])
    assert proc.returncode == 1
    doc = json.loads(proc.stdout)
    assert doc["summary"]["failed"] == 1
    sym = [c for c in doc["checks"] if c["name"] == "symmetric"][0]
    assert sym["status"] == "fail"


def test_emit_and_reload_presentation(tmp_path):
    path = tmp_path / "a3.json"
    proc = run_cli(["families", "--k", "3", "--emit-presentation", "--output", str(path)])
    assert proc.returncode == 0
    text = path.read_text(encoding="utf-8")
    assert text.strip() == a_presentation(3).to_json()
    proc2 = run_cli(["families", "--presentation", str(path), "--bound", "3"])
    assert proc2.returncode == 0
    doc = json.loads(proc2.stdout)
    dim = [c for c in doc["checks"] if c["name"] == "dimension"][0]
    assert dim["actual"] == 10


def test_emit_bhat_presentation():
    proc = run_cli(["families", "--k", "2", "--emit-presentation", "--family", "bhat"])
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert {a["name"] for a in doc["arrows"]} == {"x1", "x2", "y1", "y2"}


def test_seeded_subcommand_reports_are_deterministic():
    parser = build_parser()
    args = parser.parse_args(["slnlab", "--n", "2", "--radius", "2", "--seed", "7"])
    assert run_command(args).to_json() == run_command(args).to_json()


def test_timings_flag_adds_elapsed():
    parser = build_parser()
    args = parser.parse_args(["families", "--k", "2"])
    report = run_command(args)
    plain = json.loads(report.to_json())
    timed = json.loads(report.to_json(with_timings=True))
    assert "elapsed_ms" not in plain["checks"][0]
    assert "elapsed_ms" in timed["checks"][0]
