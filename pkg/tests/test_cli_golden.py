"""Golden transcripts for the ``ncmotive`` command line.

Regenerate with ``UPDATE_GOLDEN=1 pytest tests/test_cli_golden.py``.
"""

import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from ncmotive.cli import main

GOLDEN = Path(__file__).parent / "golden"

LOCAL_EXAMPLE = (
    "field local; A = csa(class=1/6, deg=6); "
    "iso U(A) (+) U(k)^1 , U(csa(class=1/2,deg=2)) (+) U(csa(class=2/3,deg=3))"
)
SOD_PAIR = "field local; iso sod(csa(class=1/3, deg=9)) , sod(csa(class=2/3, deg=9))"

# name -> (argv, stdin)
CASES = {
    "info_local": (["info", "-e", "field local; info csa(class=1/6, deg=12)"], None),
    "info_abstract_json": (["info", "--json", "-e", "field abstract 12; info csa(class=(1), deg=24, name=B)"], None),
    "info_trivial": (["info", "-e", "field trivial; csa(class=0, deg=3)"], None),
    "decompose_local": (["decompose", "-e", "field local; decompose 1/6"], None),
    "decompose_global_json": (["decompose", "--json", "-e", "field global; decompose 1/2@2 + 1/3@3 + 1/6@5"], None),
    "decompose_zero_json": (["decompose", "--json", "-e", "field abstract 4,9; decompose (0,0)"], None),
    "iso_per_prime": (["iso", "-e", LOCAL_EXAMPLE], None),
    "iso_per_prime_json": (["iso", "--json", "-e", LOCAL_EXAMPLE], None),
    "iso_per_prime_file": (["iso", "-f", "{golden}/programs/per_prime.ncm"], None),
    "iso_negative": (["iso", "-e", "field local; iso U(csa(class=1/2, deg=2)) , U(k)^1"], None),
    "iso_rank_mismatch_json": (["iso", "--json", "-e", "field local; iso U(k)^1 , U(k)^2"], None),
    "iso_witness_skipped": (["iso", "-e", SOD_PAIR], None),
    "iso_limit": (["iso", "--require-witness", "-e", SOD_PAIR], None),
    "iso_limit_json": (["iso", "--json", "--require-witness", "--oracle-bound", "2", "-e", "field real; iso U(k)^3 , U(k)^3"], None),
    "bs_real_file": (["bs-check", "-f", "{golden}/programs/quaternions.ncm"], None),
    "bs_split_json": (["bs-check", "--json", "-e", "field local; bs-check csa(class=0, deg=3)"], None),
    "bs_local_json": (["bs-check", "--json", "-e", "field local; bs-check csa(class=1/6, deg=6)"], None),
    "bs_global_stdin": (["bs-check"], "field global\nA = csa(class=1/2@2 + 1/2@3, deg=4)\nA\n"),
    "error_syntax": (["iso", "-e", "field local; iso U(k)^1 U(k)^1"], None),
    "error_reciprocity": (["bs-check", "-e", "field global; A = csa(class=1/2@2, deg=2); bs-check A"], None),
    "error_index_degree_json": (["info", "--json", "-e", "field local; info csa(class=1/2, deg=3)"], None),
    "error_unknown_name": (["bs-check", "-e", "field local; bs-check Q"], None),
    "error_command_mismatch": (["info", "-e", "field local; decompose 1/2"], None),
    "error_missing_file": (["info", "-f", "{golden}/programs/does-not-exist.ncm"], None),
}


def _argv(argv):
    return [a.replace("{golden}", str(GOLDEN)) for a in argv]


def run_case(name):
    argv, stdin = CASES[name]
    out, err = io.StringIO(), io.StringIO()
    code = main(_argv(argv), stdin=io.StringIO(stdin or ""), stdout=out, stderr=err)
    return {"exit": code, "stdout": out.getvalue(), "stderr": err.getvalue().replace(str(GOLDEN), "{golden}")}


def _golden_path(name):
    return GOLDEN / f"{name}.json"


def _transcript(name, result):
    argv, stdin = CASES[name]
    return json.dumps({"argv": argv, "stdin": stdin, **result}, indent=2, ensure_ascii=False) + "\n"


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    first = _transcript(name, run_case(name))
    second = _transcript(name, run_case(name))
    assert first == second
    path = _golden_path(name)
    if os.environ.get("UPDATE_GOLDEN") or not path.exists():
        path.write_text(first, encoding="utf-8")
    assert path.read_text(encoding="utf-8") == first


def test_golden_suite_covers_contract():
    codes = {json.loads(_golden_path(n).read_text())["exit"] for n in CASES}
    commands = {CASES[n][0][0] for n in CASES}
    assert codes == {0, 1, 2, 3}
    assert commands == {"info", "decompose", "iso", "bs-check"}
    assert any("--json" in CASES[n][0] for n in CASES)
    assert any("--json" not in CASES[n][0] for n in CASES)
    assert len(CASES) >= 12


def test_json_field_sets_are_fixed():
    keys = {}
    for name in CASES:
        data = json.loads(_golden_path(name).read_text())
        if "--json" in data["argv"] and data["exit"] in (0, 1):
            report = json.loads(data["stdout"])
            keys.setdefault(report["kind"], set()).add(tuple(report))
    assert all(len(v) == 1 for v in keys.values())


def test_console_script_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ncmotive", "iso", "-e", LOCAL_EXAMPLE],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == json.loads(_golden_path("iso_per_prime").read_text())["stdout"]


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
