import json
from fractions import Fraction

import pytest

from su21dual.cli import main

F = Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_classify_vertex(capsys):
    code, doc = run_json(capsys, "classify", "--r", "4", "--s", "3")
    assert code == 0
    assert doc["label"] == "W(4,3)"
    assert doc["unitary"] is True


def test_classify_cone_threshold(capsys):
    code, doc = run_json(capsys, "classify", "--c", "-1/2", "--t", "1")
    assert code == 0
    assert doc["label"] == "U(2)"


def test_classify_roundtrip_through_label(capsys):
    code, doc = run_json(capsys, "classify", "--c", "-7/3", "--t", "2")
    assert code == 0
    code2, doc2 = run_json(capsys, "spectrum", "--family", doc["label"], "--max-n", "4")
    assert code2 == 0
    assert doc2["family"] == doc["label"]


def test_build_verify_cycle(tmp_path, capsys):
    out_file = tmp_path / "mod.json"
    code, doc = run_json(
        capsys, "build", "--c", "-1", "--t", "0", "--max-n", "8", "--out", str(out_file)
    )
    assert code == 0
    assert doc["basis_size"] == sum(n * n for n in range(1, 9))
    saved = json.loads(out_file.read_text())
    assert "norms" in saved  # unitary module gets its inner product attached
    code, report = run_json(capsys, "verify", str(out_file))
    assert code == 0
    assert report["verified"] is True


def test_verify_rejects_tampered_module(tmp_path, capsys):
    out_file = tmp_path / "mod.json"
    run_json(capsys, "build", "--c", "-1", "--t", "0", "--max-n", "5", "--out", str(out_file))
    doc = json.loads(out_file.read_text())
    entry = doc["action"]["X_alphabeta"][0]
    entry["terms"][0][1] = "17"
    out_file.write_text(json.dumps(doc))
    code, report = run_json(capsys, "verify", str(out_file))
    assert code == 1
    assert report["verified"] is False


def test_unitary_command(capsys):
    code, doc = run_json(capsys, "unitary", "--c", "-1", "--t", "0", "--max-n", "20")
    assert code == 0 and doc["status"] == "unitary"
    code, doc = run_json(capsys, "unitary", "--r", "2", "--s", "5")
    assert code == 0 and doc["status"] == "nonunitary"


def test_spectrum_json_matches_members(capsys):
    code, doc = run_json(capsys, "spectrum", "--family", "U(2)", "--max-n", "5")
    assert code == 0
    assert doc["ktypes"] == [[1, 2], [2, 5], [3, 8], [4, 11], [5, 14]]


GOLDEN_TEXT = """\
n=  4 |         ●
n=  3 |      ●
n=  2 |   ●
n=  1 |●
      +----------
       m=2..11
"""

GOLDEN_SVG = """\
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="184" height="112">
<circle cx="92" cy="44" r="4" fill="#d62728"><title>V(4,3)</title></circle>
<circle cx="56" cy="32" r="4" fill="#d62728"><title>V(5,0)</title></circle>
<circle cx="128" cy="32" r="4" fill="#d62728"><title>V(5,6)</title></circle>
<circle cx="20" cy="20" r="4" fill="#d62728"><title>V(6,-3)</title></circle>
<circle cx="92" cy="20" r="4" fill="#1f77b4"><title>V(6,3)</title></circle>
<circle cx="164" cy="20" r="4" fill="#d62728"><title>V(6,9)</title></circle>
<text x="20" y="108" font-size="10">m: -3..9, n: 1..6</text>
</svg>
"""


def test_spectrum_text_golden(capsys):
    code, out = run(capsys, "spectrum", "--family", "U(2)", "--max-n", "4", "--format", "text")
    assert code == 0
    assert out == GOLDEN_TEXT


def test_spectrum_svg_golden(capsys):
    code, out = run(capsys, "spectrum", "--family", "W(4,3)", "--max-n", "6", "--format", "svg")
    assert code == 0
    assert out == GOLDEN_SVG


def test_enumerate(capsys):
    code, docs = run_json(capsys, "enumerate", "--t-max", "1", "--r-max", "2")
    assert code == 0
    labels = [d["label"] for d in docs]
    assert "U(0)" in labels and "W(2,1)" in labels
    assert len(labels) == len(set(labels))


def test_sl2_classify(capsys):
    code, doc = run_json(capsys, "sl2", "classify", "--lambda", "3/2*i", "--parity", "even")
    assert code == 0 and doc["kind"] == "principal"
    code, doc = run_json(capsys, "sl2", "classify", "--lambda", "1/2", "--parity", "even")
    assert doc["kind"] == "complementary"


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "--r", "1", "--s", "2"),  # r too small
        ("classify", "--r", "2", "--s", "2"),  # parity violation
        ("classify", "--c", "nonsense", "--t", "0"),
        ("classify",),  # no parameters at all
        ("build", "--c", "-1", "--t", "0", "--max-n", "0", "--out", "/tmp/x.json"),
        ("spectrum", "--family", "Q(1)", "--max-n", "3"),
        ("frobnicate",),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code = main(list(argv))
    capsys.readouterr()
    assert code == 2
