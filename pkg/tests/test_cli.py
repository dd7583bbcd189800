import json
import math

import pytest
from click.testing import CliRunner

from mott_ti.cli import main

SQRT2 = math.sqrt(2.0)


@pytest.fixture
def runner():
    return CliRunner()


def parse_csv(text):
    """Split a CSV document into (comments dict, header list, rows of str)."""
    comments, header, rows = {}, None, []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            comments[key] = value
        elif header is None:
            header = line.split(",")
        else:
            rows.append(line.split(","))
    return comments, header, rows


def csv_table(text):
    comments, header, rows = parse_csv(text)
    return [dict(zip(header, row)) for row in rows]


# -------------------------------------------------------------------- critical

def test_critical_spin0(runner):
    result = runner.invoke(main, ["critical", "--spin", "0"])
    assert result.exit_code == 0
    table = csv_table(result.output)
    assert float(table[0]["eta_critical"]) == pytest.approx(SQRT2, rel=1e-8)
    assert "1.41421356" in result.output


def test_critical_numeric_agrees(runner):
    result = runner.invoke(main, ["critical", "--spin", "1", "--numeric"])
    assert result.exit_code == 0
    row = csv_table(result.output)[0]
    assert abs(float(row["difference"])) < 1e-6
    assert float(row["eta_critical"]) == pytest.approx(math.sqrt(5.0), rel=1e-8)


def test_critical_negative_spin_usage_error(runner):
    result = runner.invoke(main, ["critical", "--spin", "-1"])
    assert result.exit_code == 2


def test_critical_numeric_bad_bracket_exits_3(runner):
    result = runner.invoke(main, ["critical", "--spin", "0", "--numeric",
                                  "--bracket", "3", "4"])
    assert result.exit_code == 3


def test_critical_numeric_fermion_exits_3(runner):
    # fermions have no Coulomb transition; asserting a root is a numerical failure
    result = runner.invoke(main, ["critical", "--spin", "1/2", "--numeric"])
    assert result.exit_code == 3


# --------------------------------------------------------------------- angular

def test_angular_normalized_90_is_4(runner):
    result = runner.invoke(main, [
        "angular", "--eta", "1.4142135623730951", "--spin", "0",
        "--normalize", "rutherford90",
        "--theta-min", "89", "--theta-max", "91", "--theta-step", "1",
    ])
    assert result.exit_code == 0
    table = {row["theta_deg"]: row for row in csv_table(result.output)}
    assert float(table["90"]["sigma_over_ruth90"]) == pytest.approx(4.0, rel=1e-8)


def test_angular_incoherent_only_90_is_2(runner):
    result = runner.invoke(main, [
        "angular", "--eta", "1.0", "--incoherent-only", "--normalize", "rutherford90",
        "--theta-min", "90", "--theta-max", "91", "--theta-step", "0.5",
    ])
    assert result.exit_code == 0
    table = csv_table(result.output)
    assert float(table[0]["sigma_over_ruth90"]) == pytest.approx(2.0, rel=1e-8)


def test_angular_dimensional_alpha_system(runner):
    result = runner.invoke(main, [
        "angular", "--system", "alpha-alpha", "--energy", "397",
        "--theta-min", "60", "--theta-max", "120", "--theta-step", "30",
    ])
    assert result.exit_code == 0
    comments, header, rows = parse_csv(result.output)
    assert header == ["theta_deg", "sigma_fm2_per_sr", "sigma_barn_per_sr"]
    a = 4 * 1.4399645 / (2 * 0.397)  # q^2/(2E) ~ 7.254 fm
    assert float(comments["a_fm"]) == pytest.approx(a, rel=1e-8)
    table = {row[0]: row for row in rows}
    # eta at 397 keV is within a whisker of critical, so sigma(90) ~ 4 a^2
    sigma90_fm2 = float(table["90"][1])
    assert sigma90_fm2 == pytest.approx(4 * a * a, rel=1e-4)
    assert float(table["90"][2]) == pytest.approx(sigma90_fm2 / 100.0, rel=1e-8)
    assert float(table["60"][1]) == pytest.approx(float(table["120"][1]), rel=1e-10)


def test_angular_endpoint_grid_rejected(runner):
    result = runner.invoke(main, ["angular", "--eta", "1", "--spin", "0",
                                  "--theta-min", "0", "--theta-max", "90"])
    assert result.exit_code == 2


def test_angular_stat_mismatch_rejected(runner):
    result = runner.invoke(main, ["angular", "--eta", "1", "--spin", "0",
                                  "--stat", "fermion"])
    assert result.exit_code == 2


def test_angular_unknown_species(runner):
    result = runner.invoke(main, ["angular", "--system", "muon", "--energy", "10"])
    assert result.exit_code == 2


def test_angular_custom_catalog(runner, tmp_path):
    cat = tmp_path / "cat.txt"
    cat.write_text("t 1 3 1\n")
    result = runner.invoke(main, [
        "angular", "--system", "t", "--energy", "10", "--catalog", str(cat),
        "--theta-min", "89", "--theta-max", "91", "--theta-step", "1",
    ])
    assert result.exit_code == 0


# ----------------------------------------------------------------------- table

def test_table_output(runner):
    result = runner.invoke(main, ["table"])
    assert result.exit_code == 0
    table = {row["name"]: row for row in csv_table(result.output)}
    assert set(table) == {"d", "alpha", "6Li"}
    assert float(table["alpha"]["e_critical_kev"]) == pytest.approx(400.0, rel=0.05)
    assert float(table["alpha"]["barrier_kev"]) == pytest.approx(1260.0, rel=0.05)
    assert table["alpha"]["feasible"] == "true"
    assert "inconsistent" in table["d"]["note"]
    assert table["6Li"]["note"] == ""


# --------------------------------------------------------------------- plateau

def test_plateau_critical_spin0(runner):
    result = runner.invoke(main, ["plateau", "--spin", "0", "--eta-critical",
                                  "--epsilon", "0.05"])
    assert result.exit_code == 0
    row = csv_table(result.output)[0]
    assert float(row["theta_lo_deg"]) <= 66.0
    assert float(row["theta_hi_deg"]) >= 114.0


def test_plateau_requires_eta_choice(runner):
    assert runner.invoke(main, ["plateau", "--spin", "0"]).exit_code == 2
    assert runner.invoke(main, ["plateau", "--spin", "0", "--eta", "1",
                                "--eta-critical"]).exit_code == 2


def test_plateau_hard_sphere_mode(runner):
    result = runner.invoke(main, ["plateau", "--spin", "0", "--kr", "1.447",
                                  "--epsilon", "0.05"])
    assert result.exit_code == 0
    row = csv_table(result.output)[0]
    assert float(row["width_deg"]) > 30.0  # near-critical kR is flat


# ----------------------------------------------------------------------- sweep

def test_sweep_classification_line(runner):
    result = runner.invoke(main, ["sweep", "--spin", "0", "--delta", "0.05",
                                  "--theta-min", "80", "--theta-max", "100",
                                  "--theta-step", "1"])
    assert result.exit_code == 0
    comments, header, rows = parse_csv(result.output)
    assert comments["classification"] == "min,flat,max"
    assert float(comments["energy_shift_first_order"]) == pytest.approx(0.10)
    branches = {row[0] for row in rows}
    assert branches == {"below", "critical", "above"}
    assert len(rows) == 3 * 21


# ------------------------------------------------------------------ hardsphere

def test_hardsphere_scan_boson(runner):
    result = runner.invoke(main, ["hardsphere", "--critical-scan", "0.2", "3",
                                  "--spin", "0", "--stat", "boson"])
    assert result.exit_code == 0
    row = csv_table(result.output)[0]
    assert float(row["critical_kR"]) == pytest.approx(1.5, abs=0.5)


def test_hardsphere_scan_none_result(runner):
    result = runner.invoke(main, ["hardsphere", "--critical-scan", "0.2", "3",
                                  "--spin", "1/2"])
    assert result.exit_code == 0  # absence is a result, not a failure
    row = csv_table(result.output)[0]
    assert row["critical_kR"] == "none"


def test_hardsphere_curve(runner):
    result = runner.invoke(main, ["hardsphere", "--kr", "1.5", "--spin", "0",
                                  "--theta-min", "30", "--theta-max", "150",
                                  "--theta-step", "30"])
    assert result.exit_code == 0
    table = {row["theta_deg"]: row for row in csv_table(result.output)}
    assert float(table["60"]["sigma_over_R2"]) == pytest.approx(
        float(table["120"]["sigma_over_R2"]), rel=1e-9
    )


def test_hardsphere_requires_mode(runner):
    assert runner.invoke(main, ["hardsphere", "--spin", "0"]).exit_code == 2


# ------------------------------------------------------- envelope and formats

def test_outputs_are_deterministic(runner):
    args = ["table"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.output == second.output
    args = ["angular", "--eta", "2", "--spin", "1", "--theta-min", "10",
            "--theta-max", "170", "--theta-step", "10"]
    assert runner.invoke(main, args).output == runner.invoke(main, args).output


def test_json_and_csv_agree_numerically(runner):
    base = ["critical", "--spin", "0", "--numeric"]
    csv_out = runner.invoke(main, base).output
    json_out = json.loads(runner.invoke(main, base + ["--format", "json"]).output)
    row = csv_table(csv_out)[0]
    assert float(row["eta_critical"]) == pytest.approx(
        json_out["data"]["eta_critical"], rel=1e-8
    )
    assert float(row["eta_critical_numeric"]) == pytest.approx(
        json_out["data"]["eta_critical_numeric"], rel=1e-8
    )


def test_json_envelope_structure(runner):
    out = runner.invoke(main, ["table", "--format", "json"]).output
    doc = json.loads(out)
    assert set(doc) == {"metadata", "params", "data"}
    assert doc["metadata"]["tool"] == "mott-ti"
    assert "constants_fingerprint" in doc["metadata"]
    assert doc["params"]["command"] == "table"
    assert doc["data"]["columns"][0] == "name"


def test_csv_embeds_parameters(runner):
    out = runner.invoke(main, ["angular", "--eta", "2.5", "--spin", "0",
                               "--theta-min", "45", "--theta-max", "135",
                               "--theta-step", "45"]).output
    comments, _, _ = parse_csv(out)
    assert comments["eta"] == "2.5"
    assert comments["command"] == "angular"
    assert "constants_fingerprint" in comments


def test_constants_env_override(runner, tmp_path):
    consts = tmp_path / "alt.txt"
    consts.write_text("e_squared 1.44\n")
    args = ["angular", "--system", "alpha", "--energy", "400",
            "--theta-min", "90", "--theta-max", "91", "--theta-step", "1"]
    plain = runner.invoke(main, args)
    alt = runner.invoke(main, args, env={"MOTT_TI_CONSTANTS": str(consts)})
    assert plain.exit_code == 0 and alt.exit_code == 0
    c_plain, _, _ = parse_csv(plain.output)
    c_alt, _, _ = parse_csv(alt.output)
    assert c_plain["constants_fingerprint"] != c_alt["constants_fingerprint"]
    # a = q^2/(2E) scales with e_squared
    assert float(c_alt["a_fm"]) == pytest.approx(
        float(c_plain["a_fm"]) * 1.44 / 1.4399645, rel=1e-6
    )


def test_constants_env_bad_file(runner, tmp_path):
    consts = tmp_path / "bad.txt"
    consts.write_text("nonsense 1 2 3\n")
    result = runner.invoke(main, ["critical", "--spin", "0"],
                           env={"MOTT_TI_CONSTANTS": str(consts)})
    assert result.exit_code == 2
