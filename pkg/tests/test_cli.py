import json
import subprocess
import sys

import pytest

from annigraph.cli import main
from annigraph.verify import TheoremId

from test_graphs import Z16_AI_DOT


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "Z16")
    assert code == 0
    lines = out.splitlines()
    assert "order: 16" in lines and "reduced: false" in lines
    assert "Nil(R): {0, 2, 4, 6, 8, 10, 12, 14}" in lines
    assert "Z(R) is an ideal: true" in lines and "|Min(R)|: 1" in lines
    assert "ideals: 5" in lines


def test_ideals(capsys):
    code, out, _ = run(capsys, "ideals", "N(2,2)")
    assert code == 0
    assert out.splitlines()[0] == "N(2,2): 6 ideals"
    assert "  I4 size=4 {0,2,4,6} [vertex maximal prime nilpotent]" in out


def test_graph_ai(capsys):
    code, out, _ = run(capsys, "graph", "Z16", "--kind", "ai")
    assert code == 0
    assert out.splitlines()[:2] == ["A_I(R) of Z16", "shape=K3 girth=3 diam=1"]


def test_graph_both_and_dot(capsys, tmp_path):
    target = tmp_path / "z16.dot"
    code, out, _ = run(capsys, "graph", "Z16", "--dot", str(target))
    assert code == 0
    assert "shape=K1,2 girth=inf diam=2" in out and "shape=K3 girth=3 diam=1" in out
    text = target.read_text()
    assert text.endswith(Z16_AI_DOT) and text.startswith("// AG(R) of Z16")


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "Z2 x Z4")
    assert code == 0
    assert "extra edges (in A_I(R), not in AG(R)): 1" in out
    code, out, _ = run(capsys, "compare", "Z6")
    assert "no extra edges" in out


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "Z2 x Z4")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert [r[1] for r in rows] == [t.value for t in TheoremId]
    code, out, _ = run(capsys, "verify", "Z16", "--theorem", "T-thm8")
    assert code == 0 and out == "Z16\tT-thm8\tholds\n"


def test_verify_corpus_json(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--corpus", "16", "--json", str(target))
    assert code == 0
    assert out.splitlines()[0] == "corpus: 115 rings, max order 16"
    assert out.splitlines()[-1] == "result: all checks hold"
    payload = json.loads(target.read_text())
    assert set(payload) == {"corpus", "summary", "failures"}
    assert payload["failures"] == []
    assert len(payload["corpus"]) == 115 and payload["corpus"][0] == {"label": "N(2,1)", "order": 4}
    assert set(payload["summary"]) == {t.value for t in TheoremId}
    assert set(payload["summary"]["L2.1"]) == {"holds", "fails", "not-applicable"}


def test_verify_corpus_jobs_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    _, out1, _ = run(capsys, "verify", "--corpus", "12", "--json", str(a))
    _, out2, _ = run(capsys, "verify", "--corpus", "12", "--jobs", "3", "--json", str(b))
    assert out1 == out2
    assert a.read_bytes() == b.read_bytes()


def test_verify_families(capsys):
    code, out, _ = run(capsys, "verify", "--corpus", "10", "--families", "cyclic")
    assert code == 0 and out.startswith("corpus: 9 rings")


@pytest.mark.parametrize("argv", [
    ["info", "Z2 y Z3"],
    ["graph", "Z4[x]/(x^2)"],
    ["verify"],
    ["verify", "--corpus", "1"],
    ["verify", "--corpus", "8", "--families", "matrices"],
    ["ideals", "Z1"],
])
def test_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("annigraph: error:")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["graph", "Z16", "--kind", "xy"])
    assert info.value.code == 2


def test_failure_exit_1(capsys, monkeypatch):
    from annigraph import verify
    from annigraph.verify import Status, VerificationReport, Witness

    def broken(ring, theorems=None):
        return [VerificationReport(TheoremId.L2_1, ring.label, Status.FAILS, Witness("1", ((0, 8),)))]

    monkeypatch.setattr("annigraph.cli.run_all", broken)
    code, out, _ = run(capsys, "verify", "Z16")
    assert code == 1
    assert '"clause": "1"' in out and "fails" in out


def test_subprocess_byte_identical():
    cmd = [sys.executable, "-m", "annigraph", "graph", "Z2 x Z2[x]/(x^2)"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and b"shape=C4 girth=4 diam=2" in first
