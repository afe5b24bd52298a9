import json
import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run_script(name, *args):
    return subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True)


def test_formula_check(tmp_path):
    out = tmp_path / "f.json"
    proc = run_script("formula_check.py", "--max-d", "4", "--cross-check", "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    rows = json.loads(out.read_text())["rows"]
    assert [r["raw"] for r in rows] == [1, 6, 21]
    assert all(r["exhaustive_agrees"] for r in rows)


def test_necessity_scan(tmp_path):
    out = tmp_path / "n.json"
    proc = run_script("necessity_scan.py", "--base", "k4", "--bound", "4", "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(out.read_text())
    assert doc["violations"] == [] and doc["candidates"] == 4 ** 6 and doc["geodetic"] > 0


def test_hs_system_dump(tmp_path):
    out = tmp_path / "hs.json"
    proc = run_script("hs_system_dump.py", "--d", "2", "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    assert len(json.loads(out.read_text())["vars"]) == 175
    proc = run_script("hs_system_dump.py", "--d", "3", "--search", "--max-nodes", "5")
    assert proc.returncode == 3
