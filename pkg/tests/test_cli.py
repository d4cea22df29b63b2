"""Command-line interface: formats, exit codes, reproducibility."""

import io
import json

import pytest

from polebounds.cli import main, parse_complex, parse_grid


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


# -------------------------------------------------------------------- parsing


def test_parse_complex_forms():
    assert parse_complex("0,2") == 2j
    assert parse_complex("1+2j") == 1 + 2j
    assert parse_complex("-0.5,-0.25") == complex(-0.5, -0.25)


def test_parse_grid():
    assert parse_grid("0.1:0.9:0.1") == [pytest.approx(v) for v in
                                         (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)]


# --------------------------------------------------------------------- bounds


def test_bounds_measure_value():
    code, text = run(["bounds", "--p", "0.5", "--kind", "measure", "--format", "json"])
    assert code == 0
    rec = json.loads(text)[0]
    assert rec["value"] == pytest.approx(124.383, abs=5e-3)
    assert rec["q_star"] is not None


def test_bounds_lower_value():
    code, text = run(["bounds", "--p", "0.5", "--kind", "lb", "--format", "json"])
    assert code == 0
    assert json.loads(text)[0]["value"] == pytest.approx(3.534, abs=5e-4)


def test_bounds_angle_guard_exits_2(capsys):
    code, _ = run(["bounds", "--p", "0.3", "--kind", "angle"])
    assert code == 2
    assert "(sqrt(2)-1, 1)" in capsys.readouterr().err


def test_bounds_domain_error_names_range(capsys):
    code, _ = run(["bounds", "--p", "1.5", "--kind", "lb"])
    assert code == 2
    assert "(0, 1)" in capsys.readouterr().err


# ---------------------------------------------------------------------- table


def test_table_default_text():
    code, text = run(["table"])
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 12  # header + 11 rows
    assert "73.250" in lines[1]  # p = 0.999 measure column (unrounded: 73.25030)
    assert "---" in text  # angle column absent below threshold


def test_table_csv_shape():
    code, text = run(["table", "--format", "csv"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "p,lower,angle_min,closed_form,measure_min"
    assert len(lines) == 12
    assert all(line.count(",") == 4 for line in lines)


def test_table_json_round_trips():
    code, text = run(["table", "--p", "0.5", "0.3", "--format", "json"])
    assert code == 0
    parsed = json.loads(text)
    assert json.dumps(parsed, sort_keys=True) == text.strip()
    assert parsed[0]["measure_min"] == pytest.approx(124.383, abs=5e-3)
    assert parsed[1]["angle_min"] is None


# --------------------------------------------------------------------- verify


def test_verify_single_pole():
    code, text = run(["verify", "--family", "mobius", "--p", "0.5", "--format", "json"])
    assert code == 0
    rec = json.loads(text)[0]
    assert rec["passed"] is True


def test_verify_grid_runs_all():
    code, text = run(["verify", "--family", "koebe", "--grid", "0.1:0.9:0.1",
                      "--format", "json"])
    assert code == 0
    recs = json.loads(text)
    assert len(recs) == 9
    assert all(r["passed"] for r in recs)


def test_verify_bad_family_exits_2():
    code, _ = run(["verify", "--family", "cubic", "--p", "0.5"])
    assert code == 2


# ------------------------------------------------------------------------ arc


@pytest.fixture
def instance_file(tmp_path):
    path = tmp_path / "inside.txt"
    path.write_text(
        "pole 0.2 0.0\n0.0 -0.5\n-0.45 -0.25\n-0.45 0.25\n0.0 0.5\n"
    )
    return str(path)


def test_arc_inside_branch(instance_file):
    code, text = run(["arc", "--file", instance_file, "--family", "mobius",
                      "--format", "json"])
    assert code == 0
    rec = json.loads(text)[0]
    assert rec["branch"] == "inside_hull"
    assert rec["tau"] == pytest.approx(0.2, abs=1e-10)
    assert rec["passed"] is True


def test_arc_a1_override(tmp_path):
    path = tmp_path / "outside.txt"
    path.write_text("pole 0.7 0.0\n0.0 -0.5\n-0.45 -0.25\n-0.45 0.25\n0.0 0.5\n")
    code, text = run(["arc", "--file", str(path), "--family", "koebe",
                      "--a1-value", "20.0", "--format", "json"])
    assert code == 0
    rec = json.loads(text)[0]
    assert rec["branch"] == "outside_hull"
    assert rec["constant"] == 20.0


def test_arc_missing_file_exits_2():
    code, _ = run(["arc", "--file", "/nonexistent.txt", "--family", "mobius"])
    assert code == 2


# ------------------------------------------------------------------- harmonic


def test_harmonic_exact_with_sandwich():
    code, text = run(["harmonic", "--z", "0,2", "--a", "1", "--b", "4",
                      "--p", "0.5", "--format", "json"])
    assert code == 0
    rec = json.loads(text)[0]
    assert rec["value"] == pytest.approx(0.18716704181099877, abs=1e-12)
    assert rec["sandwich_lo"] <= rec["value"] <= rec["sandwich_hi"]


def test_harmonic_with_wos_estimate():
    code, text = run(["harmonic", "--z", "0,2", "--a", "1", "--b", "4", "--p", "0.5",
                      "--wos", "20000", "--format", "json"])
    assert code == 0
    rec = json.loads(text)[0]
    assert abs(rec["wos_mean"] - rec["value"]) <= 3 * rec["wos_stderr"]


def test_harmonic_off_axis_point_has_no_sandwich():
    code, text = run(["harmonic", "--z", "1,1", "--a", "1", "--b", "4",
                      "--p", "0.5", "--format", "json"])
    assert code == 0
    assert "sandwich_lo" not in json.loads(text)[0]


def test_harmonic_lower_halfplane_exits_2():
    code, _ = run(["harmonic", "--z", "1,-1", "--a", "1", "--b", "4", "--p", "0.5"])
    assert code == 2


# -------------------------------------------------------------- reproducibility


def test_identical_invocations_are_byte_identical():
    argv = ["harmonic", "--z", "0,2", "--a", "1", "--b", "4", "--p", "0.5",
            "--wos", "5000", "--seed", "123", "--format", "json"]
    _, first = run(argv)
    _, second = run(argv)
    assert first == second


def test_format_env_var_default(monkeypatch):
    monkeypatch.setenv("POLEBOUNDS_FORMAT", "json")
    code, text = run(["bounds", "--p", "0.5", "--kind", "lb"])
    assert code == 0
    json.loads(text)  # parses: the env default applied
