import json
import shutil
import subprocess

import pytest

from g2forge.cli import main
from g2forge.verify import REGISTRY, Report, run_checks, select


def test_registry_ids_unique_and_anchored():
    assert len(REGISTRY) == len(set(REGISTRY))
    assert all(c.paper_ref for c in REGISTRY.values())


def test_filter_selects_only_matching():
    ids = [c.id for c in select("h8.*")]
    assert ids and all(i.startswith("h8.") for i in ids)
    assert ids == sorted(ids)


def test_report_json_round_trip():
    r = run_checks("models.cayley_base")
    assert Report.from_json(r.to_json()) == r


def test_full_suite_fails_only_on_literal_pointwise_formula():
    r = run_checks()
    failed = [c.id for c in r.checks if c.status != "pass"]
    assert failed == ["g2.D.pointwise_literal"]
    assert [c.id for c in r.checks] == sorted(c.id for c in r.checks)


def test_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "--filter", "h8.b*", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert [c["id"] for c in data["checks"]] == ["h8.brackets"]
    assert main(["verify", "--filter", "g2.D.*"]) == 1
    assert main(["verify", "--filter", "nothing.*"]) == 2
    assert "PASS" in capsys.readouterr().out


def test_verify_is_deterministic():
    a = run_checks("models.*", seed=4)
    b = run_checks("models.*", seed=4)
    assert [(c.id, c.status, c.witness) for c in a.checks] == [(c.id, c.status, c.witness) for c in b.checks]


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["decompose", "h8", "g2"], "V(2) ⊕ V(10); dim z(e)=2, dim z(h)=2"),
        (["decompose", "h3", "g2"], "4V(1) ⊕ V(2) ⊕ 3V(0); dim z(e)=8, dim z(h)=4"),
        (["decompose", "h8", "o0"], "V(6)"),
        (["index", "h8"], "28"),
        (["index", "h3"], "1"),
    ],
)
def test_computations(argv, expected, capsys):
    assert main(argv) == 0
    assert capsys.readouterr().out.strip() == expected


def test_errors(capsys):
    assert main(["index", "h1"]) == 2
    assert "not three-dimensional" in capsys.readouterr().err
    assert main(["decompose", "h9", "g2"]) == 2
    assert main(["decompose", "h8", "r7"]) == 2
    assert main([]) == 2


def test_console_script():
    exe = shutil.which("g2forge")
    if exe is None:
        pytest.skip("package not installed")
    res = subprocess.run([exe, "index", "h7"], capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout.strip() == "4"
