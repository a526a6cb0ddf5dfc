"""Command-line surface: parsing, reports, determinism, exit codes."""

import json

import pytest

from tdual_lie.cli import main, parse_args, run
from tdual_lie.errors import UsageError


def run_json(argv):
    config = parse_args(argv + ["--format", "json"])
    code, payload = run(config)
    # Round-trip through the serialized form the user actually sees.
    return code, json.loads(json.dumps(payload, sort_keys=True))


def test_parse_examples():
    cfg = parse_args(["cohomology", "--group", "SU(3)"])
    assert cfg.verb == "cohomology" and cfg.groups == ("SU(3)",)

    cfg = parse_args(["dualize", "--group", "SU(2)", "--twist", "level:1"])
    assert cfg.twist_spec == "level:1"

    cfg = parse_args(["langlands", "--group", "B3"])
    assert cfg.verb == "langlands"

    with pytest.raises(SystemExit) as exc:
        parse_args(["frobnicate"])
    assert exc.value.code == 2

    with pytest.raises(UsageError):
        parse_args(["cohomology"])  # no group


def test_group_report():
    code, payload = run_json(["group", "--group", "SU(3)"])
    assert code == 0
    rep = payload["reports"][0]
    assert rep["rank"] == 2
    assert rep["center"]["invariant_factors"] == [3]
    assert rep["root_count"] == 6


def test_cohomology_so3():
    code, payload = run_json(["cohomology", "--group", "SO(3)"])
    assert code == 0
    rep = payload["reports"][0]
    assert rep["H2_K"]["invariant_factors"] == [2]
    assert rep["H3_K"]["free_rank"] == 1 and rep["H3_K"]["invariant_factors"] == []


def test_extension_su3_level1():
    code, payload = run_json(["extension", "--group", "SU(3)", "--level", "1"])
    assert code == 0
    rep = payload["reports"][0]
    assert rep["trivializable"] is False
    assert rep["witness_value"] == "1/2"
    assert rep["admissibility"]["passed"] is True


def test_extension_requires_explicit_b():
    code, payload = run_json(["extension", "--group", "B3", "--level", "1"])
    assert code == 0
    assert payload["reports"][0]["requires_explicit_b"] is True

    code, payload = run_json([
        "extension", "--group", "Spin(5)", "--level", "0",
        "--b", "[[0, 0], [0, 0]]",
    ])
    assert code == 0
    assert payload["reports"][0]["trivializable"] is True


def test_langlands_su2():
    code, payload = run_json(["langlands", "--group", "SU(2)"])
    assert code == 0
    rep = payload["reports"][0]
    assert rep["match"] is True
    assert rep["dual_chern_lattice"] == [[2]]
    assert rep["dual_group"] == "SO(3)"


def test_langlands_b3_unavailable():
    code, payload = run_json(["langlands", "--group", "B3"])
    assert code == 0  # a negative finding is reported, not asserted
    assert payload["reports"][0]["available"] is False

    code, _ = run_json(["langlands", "--group", "B3", "--expect", "available"])
    assert code == 1


def test_twist_verb():
    code, payload = run_json(["twist", "--group", "SU(2)", "--twist", "[[3]]"])
    assert code == 0
    rep = payload["reports"][0]
    assert rep["twist_is_cycle"] is True
    assert rep["dual_chern_lattice"] == [[3]]
    assert rep["dualizable"] is True


def test_dualize_with_shift():
    code, payload = run_json([
        "dualize", "--group", "SU(3)", "--twist", "level:1",
        "--shift", "[[0, 1], [0, 0]]",
    ])
    assert code == 0
    rep = payload["reports"][0]
    assert "shifted" in rep
    assert rep["shifted"]["h3_class"] == rep["h3_class"]


def test_group_list_batch():
    code, payload = run_json(["cohomology", "--group-list", "SU(2),SO(3)"])
    assert code == 0
    assert len(payload["reports"]) == 2


def test_json_group_spec(tmp_path):
    spec = {"components": [{"series": "A", "rank": 1}], "fundamental_group": "adjoint",
            "label": "SO(3)-from-json"}
    path = tmp_path / "group.json"
    path.write_text(json.dumps(spec))
    code, payload = run_json(["cohomology", "--group", f"@{path}"])
    assert code == 0
    assert payload["reports"][0]["H2_K"]["invariant_factors"] == [2]


def test_expect_passing_and_failing():
    code, _ = run_json(["extension", "--group", "SU(3)", "--level", "2",
                        "--expect", "trivializable"])
    assert code == 0
    code, _ = run_json(["extension", "--group", "SU(3)", "--level", "1",
                        "--expect", "trivializable"])
    assert code == 1


def test_determinism_byte_identical(capsys):
    argv = ["langlands", "--group", "SU(3)", "--format", "json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second and first.strip()


def test_output_file(tmp_path):
    out = tmp_path / "report.json"
    code = main(["group", "--group", "G2", "--format", "json", "--output", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["reports"][0]["root_count"] == 12


def test_text_format_renders(capsys):
    assert main(["group", "--group", "SU(2)"]) == 0
    text = capsys.readouterr().out
    assert "root_count: 2" in text


def test_usage_error_exit_2(capsys):
    assert main(["cohomology", "--group", "NotAGroup(3)"]) == 2
    assert main(["twist", "--group", "SU(2)", "--twist", "[[1,2],[3"]) == 2


def test_contcheck_verb():
    code, payload = run_json(["contcheck"])
    assert code == 0
    assert payload["reports"][0]["passed"] is True


def test_contcheck_grid_env(monkeypatch):
    monkeypatch.setenv("TDUAL_PRECISION", "4096")
    cfg = parse_args(["contcheck"])
    assert cfg.grid == 4096
    monkeypatch.setenv("TDUAL_PRECISION", "oops")
    with pytest.raises(UsageError):
        parse_args(["contcheck"])
