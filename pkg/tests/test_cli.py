"""End-to-end tests of the command line interface, invoked in-process via
main(argv).  Exit codes: 0 success/PASS, 1 verification FAIL, 2 bad input,
3 coset capacity exceeded."""

import json
import re
import shutil
import subprocess

import pytest

from ebrmaps import families
from ebrmaps.cli import main
from ebrmaps.maps import load_map, map_file_text

TRIANGLE_237 = """\
gens a b c
rel a^2
rel b^2
rel c^2
rel (a b)^2
rel (b c)^3
rel (a c)^7
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- a tiny structural checker for DOT output (no graphviz dependency) ----

_DOT_NODE = re.compile(r"^  (\d+);$")
_DOT_EDGE = re.compile(r'^  (\d+) -- (\d+) \[label="(\w+)", style="(\w+)"\];$')


def parse_dot(text: str):
    lines = text.splitlines()
    assert lines[0].startswith("graph ") and lines[0].endswith(" {")
    assert lines[1] == "  node [shape=circle];"
    assert lines[-1] == "}"
    nodes, edges = [], []
    for line in lines[2:-1]:
        m = _DOT_NODE.match(line)
        if m:
            nodes.append(int(m.group(1)))
            continue
        m = _DOT_EDGE.match(line)
        assert m, f"unrecognized DOT line: {line!r}"
        edges.append((int(m.group(1)), int(m.group(2)), m.group(3), m.group(4)))
    return nodes, edges


# --- order ----------------------------------------------------------------


def test_order_of_presentation(tmp_path, capsys):
    f = tmp_path / "d12.txt"
    f.write_text("gens a b\nrel a^2\nrel b^2\nrel (a b)^6\n")
    code, out, _ = run(capsys, "order", str(f))
    assert code == 0
    assert out.strip() == "12"


def test_order_ignores_mark_line(tmp_path, capsys):
    f = tmp_path / "h3.map"
    f.write_text(map_file_text(families.exceptional_order36_text(), families.MARK_NAMES))
    code, out, _ = run(capsys, "order", str(f))
    assert code == 0
    assert out.strip() == "36"


def test_order_parse_error_exit_2(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("gens a b\nrel a q\n")
    code, _, err = run(capsys, "order", str(f))
    assert code == 2
    assert "error:" in err


def test_missing_file_exit_2(tmp_path, capsys):
    code, _, err = run(capsys, "order", str(tmp_path / "nope.txt"))
    assert code == 2
    assert "error:" in err


def test_capacity_exceeded_exit_3(tmp_path, capsys):
    f = tmp_path / "hyperbolic.txt"
    f.write_text(TRIANGLE_237)
    code, _, err = run(capsys, "order", str(f), "--max-cosets", "300")
    assert code == 3
    assert "capacity" in err


# --- invariants -----------------------------------------------------------


def test_invariants_self_dual_map(tmp_path, capsys):
    f = tmp_path / "m3.map"
    f.write_text(map_file_text(families.chi_minus_2_text(3), families.MARK_NAMES))
    code, out, _ = run(capsys, "invariants", str(f))
    assert code == 0
    inv = json.loads(out)
    assert inv["type"] == [6, 6]
    assert inv["chi"] == -2
    assert inv["self_dual"] is True
    assert inv["orientable"] is True
    assert inv["fully_regular"] is True
    assert list(inv.keys()) == [
        "type", "vertices", "edges", "faces", "chi",
        "orientable", "fully_regular", "self_dual",
    ]


def test_invariants_exceptional_map(tmp_path, capsys):
    f = tmp_path / "h3.map"
    f.write_text(map_file_text(families.exceptional_order36_text(), families.MARK_NAMES))
    code, out, _ = run(capsys, "invariants", str(f))
    assert code == 0
    inv = json.loads(out)
    assert inv["type"] == [4, 6]
    assert (inv["vertices"], inv["edges"], inv["faces"]) == (9, 18, 6)
    assert inv["chi"] == -3
    assert inv["fully_regular"] is True
    assert inv["orientable"] is False


def test_invariants_rejects_bad_quadruple(tmp_path, capsys):
    # x = s collapses the quadruple: distinctness fails at map construction
    f = tmp_path / "degenerate.map"
    text = families.presentation_text(("x s", "(t y)^4", "(s x)^2"))
    f.write_text(map_file_text(text, families.MARK_NAMES))
    code, _, err = run(capsys, "invariants", str(f))
    assert code == 2
    assert "error:" in err


# --- construct ------------------------------------------------------------


def test_construct_families_round_trip(tmp_path, capsys):
    cases = [
        (("--family", "dh1", "--p", "3"), 16),
        (("--family", "dh2", "--p", "3"), 20),
        (("--family", "hpj", "--kappa", "1", "--lambda", "5", "--j", "4"), 20),
        (("--family", "hp", "--m", "1"), 24),
        (("--family", "h3"), 36),
        (("--family", "chi2", "--index", "7"), 16),
    ]
    for extra, order in cases:
        out_file = tmp_path / ("out-" + extra[1] + ".map")
        code = main(["construct", *extra, "--out", str(out_file)])
        assert code == 0
        m = load_map(out_file.read_text())
        assert m.group.order == order


def test_construct_requires_family_parameters(capsys):
    code, _, err = run(capsys, "construct", "--family", "dh1")
    assert code == 2
    assert "--p" in err
    code, _, err = run(capsys, "construct", "--family", "hpj", "--kappa", "1")
    assert code == 2


def test_construct_rejects_invalid_parameters(capsys):
    code, _, err = run(capsys, "construct", "--family", "dh1", "--p", "4")
    assert code == 2
    code, _, err = run(
        capsys, "construct", "--family", "hpj",
        "--kappa", "1", "--lambda", "5", "--j", "2",
    )
    assert code == 2
    code, _, err = run(capsys, "construct", "--family", "chi2", "--index", "13")
    assert code == 2


def test_construct_deterministic(capsys):
    code, first, _ = run(capsys, "construct", "--family", "dh2", "--p", "5")
    assert code == 0
    code, second, _ = run(capsys, "construct", "--family", "dh2", "--p", "5")
    assert code == 0
    assert first == second


# --- classify -------------------------------------------------------------


def test_classify_p2_stdout(capsys):
    code, out, _ = run(capsys, "classify", "--p", "2")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 12
    assert [r["group_order"] for r in rows] == [8, 12, 12] + [16] * 6 + [24] * 3


def test_classify_constructive_profile(capsys):
    code, out, _ = run(capsys, "classify", "--p", "5", "--profile", "constructive")
    assert code == 0
    rows = json.loads(out)
    assert [r["family"] for r in rows] == ["dh1", "hp(1)", "dh2"]


def test_classify_outputs_are_identical_across_profiles(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["classify", "--p", "3", "--profile", "exhaustive", "--out", str(a)]) == 0
    assert main(["classify", "--p", "3", "--profile", "constructive", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_classify_unsupported_prime_exit_2(capsys):
    code, _, err = run(capsys, "classify", "--p", "7")
    assert code == 2
    assert "32" in err


def test_classify_non_prime_exit_2(capsys):
    code, _, err = run(capsys, "classify", "--p", "4")
    assert code == 2


def test_classify_with_jobs(capsys):
    serial = run(capsys, "classify", "--p", "2")[1]
    parallel = run(capsys, "classify", "--p", "2", "--jobs", "2")[1]
    assert serial == parallel


# --- verify ---------------------------------------------------------------


def test_verify_thm_even(capsys):
    code, out, _ = run(capsys, "verify", "thm-even")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "verify thm-even: PASS"
    assert "12/12 matched" in out


def test_verify_thm_odd_p3(capsys):
    code, out, _ = run(capsys, "verify", "thm-odd", "--p", "3")
    assert code == 0
    assert out.splitlines()[0] == "verify thm-odd: PASS"
    assert "catalogs identical: True" in out


def test_verify_thm_odd_requires_p(capsys):
    code, _, err = run(capsys, "verify", "thm-odd")
    assert code == 2
    assert "--p" in err


def test_verify_lemma_4_2(capsys):
    code, out, _ = run(capsys, "verify", "lemma-4-2")
    assert code == 0
    assert out.splitlines()[0] == "verify lemma-4-2: PASS"


def test_verify_lemma_4_3(capsys):
    code, out, _ = run(capsys, "verify", "lemma-4-3")
    assert code == 0
    assert out.splitlines()[0] == "verify lemma-4-3: PASS"
    assert "COUNTEREXAMPLE" not in out


def test_verify_exclusions_p5(capsys):
    code, out, _ = run(capsys, "verify", "exclusions", "--p", "5")
    assert code == 0
    assert out.splitlines()[0] == "verify exclusions: PASS"


# --- export ---------------------------------------------------------------


def _write_hp1(tmp_path):
    f = tmp_path / "hp1.map"
    f.write_text(map_file_text(families.valency_eight_text(1), families.MARK_NAMES))
    return f


def test_export_cayley_dot(tmp_path, capsys):
    f = _write_hp1(tmp_path)
    code, out, _ = run(capsys, "export", "cayley", str(f))
    assert code == 0
    nodes, edges = parse_dot(out)
    assert nodes == list(range(24))
    # one edge per unordered pair {h, h*g} per generator: 12 per mark
    by_label = {}
    for a, b, label, style in edges:
        assert a < b
        by_label.setdefault(label, []).append((a, b))
        assert style == {"x": "bold", "y": "solid", "s": "dashed", "t": "dotted"}[label]
    assert {lbl: len(es) for lbl, es in by_label.items()} == {
        "x": 12, "y": 12, "s": 12, "t": 12,
    }


def test_export_cayley_witnesses_defining_relation(tmp_path, capsys):
    # in the valency-eight family, t x t y = 1, i.e. x = t y t: the bold
    # x-edges must coincide with the t-y-t paths
    f = _write_hp1(tmp_path)
    code, out, _ = run(capsys, "export", "cayley", str(f))
    assert code == 0
    _, edges = parse_dot(out)
    x_edges = {frozenset((a, b)) for a, b, label, _ in edges if label == "x"}

    m = load_map(f.read_text())
    mul = m.group.mul
    t, y = m.t, m.y
    tyt_edges = {
        frozenset((h, mul[mul[mul[h][t]][y]][t])) for h in range(m.group.order)
    }
    assert x_edges == tyt_edges


def test_export_flags_dot(tmp_path, capsys):
    f = tmp_path / "m1.map"
    f.write_text(map_file_text(families.chi_minus_2_text(1), families.MARK_NAMES))
    code, out, _ = run(capsys, "export", "flags", str(f))
    assert code == 0
    nodes, edges = parse_dot(out)
    assert nodes == list(range(16))  # 2|H| flags
    degree = {v: 0 for v in nodes}
    labels_at = {v: set() for v in nodes}
    for a, b, label, _ in edges:
        assert label in ("rho0", "rho1", "rho2")
        degree[a] += 1
        degree[b] += 1
        labels_at[a].add(label)
        labels_at[b].add(label)
    # the three flag involutions are fixed-point-free: 3-regular graph
    assert all(d == 3 for d in degree.values())
    assert all(ls == {"rho0", "rho1", "rho2"} for ls in labels_at.values())


def test_export_json_format(tmp_path, capsys):
    f = _write_hp1(tmp_path)
    code, out, _ = run(capsys, "export", "cayley", str(f), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["nodes"] == list(range(24))
    assert len(payload["edges"]) == 48
    assert set(payload["edges"][0]) == {"source", "target", "label"}


def test_export_deterministic(tmp_path):
    f = _write_hp1(tmp_path)
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    assert main(["export", "flags", str(f), "--out", str(a)]) == 0
    assert main(["export", "flags", str(f), "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


# --- console script -------------------------------------------------------


def test_console_script_installed(tmp_path):
    exe = shutil.which("ebrmaps")
    if exe is None:
        pytest.skip("console script not on PATH")
    f = tmp_path / "d12.txt"
    f.write_text("gens a b\nrel a^2\nrel b^2\nrel (a b)^6\n")
    proc = subprocess.run([exe, "order", str(f)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "12"
