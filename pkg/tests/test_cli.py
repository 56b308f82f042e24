import json

import pytest

from quditcost.cli import CONFIG_ENV_VAR, is_prime, main
from quditcost.endtoend import ratio_and_budget
from quditcost.grid import make_grid


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    header = lines[0].split(",")
    rows = []
    for line in lines[1:]:
        rows.append(dict(zip(header, line.split(","))))
    return rows


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_pf_thresholds_default_rows(capsys):
    code, out, _ = run_cli(capsys, "pf-thresholds")
    assert code == 0
    rows = {int(r["d"]): r for r in parse_csv(out)}
    assert sorted(rows) == [3, 5, 7, 11, 13, 17, 19]
    assert float(rows[3]["a_max_pf"]) == pytest.approx(1.51, abs=0.01)
    assert float(rows[5]["a_max_pf"]) == pytest.approx(1.48, abs=0.01)
    assert float(rows[7]["a_max_pf"]) == pytest.approx(0.96, abs=0.01)
    assert [d for d, r in sorted(rows.items()) if r["favorable"] == "true"] == [3, 5]


def test_pf_thresholds_all_odd_includes_nonprime(capsys):
    code, out, _ = run_cli(capsys, "pf-thresholds", "--all-odd", "--d-max", "9")
    assert code == 0
    assert [int(r["d"]) for r in parse_csv(out)] == [3, 5, 7, 9]


def test_empty_scan_range_is_config_error(capsys):
    code, _, err = run_cli(capsys, "scan-ratio", "--d-min", "10", "--d-max", "9")
    assert code == 2
    assert "empty scan range" in err


def test_scan_ratio_golden_row(capsys):
    code, out, _ = run_cli(capsys, "scan-ratio", "--t", "0.1", "--d-min", "3", "--d-max", "7")
    assert code == 0
    rows = {int(r["d"]): r for r in parse_csv(out)}
    assert float(rows[3]["ratio"]) == pytest.approx(2.033787, rel=1e-6)
    assert float(rows[5]["ratio"]) == pytest.approx(1.006205, rel=1e-6)
    assert float(rows[7]["ratio"]) == pytest.approx(0.999963, rel=1e-6)


def test_scan_ratio_t_zero_well_defined(capsys):
    code, out, _ = run_cli(capsys, "scan-ratio", "--t", "0", "--d-max", "5")
    assert code == 0
    for row in parse_csv(out):
        assert float(row["ratio"]) > 0


def test_scan_ratio_csv_schema(capsys):
    _, out, _ = run_cli(capsys, "scan-ratio", "--d-max", "5")
    header = [ln for ln in out.splitlines() if not ln.startswith("#")][0]
    assert header == (
        "d,n_b,alpha_qb,alpha_qd,q_qb,q_qd,per_call_qb,per_call_qd,"
        "t_tot_qb,t_tot_qd,ratio,delta_tot,budget_per_switch"
    )


def test_scan_ratio_rows_reproducible_from_library(capsys):
    _, out, _ = run_cli(capsys, "scan-ratio", "--t", "3000", "--d-min", "3", "--d-max", "11")
    for row in parse_csv(out):
        report = ratio_and_budget(make_grid(1.0, int(row["d"])), 3000.0, 1e-6, k=2)
        for column in ("ratio", "t_tot_qb", "t_tot_qd", "budget_per_switch"):
            assert float(row[column]) == pytest.approx(getattr(report, column), rel=1e-8)


def test_output_determinism(tmp_path, capsys):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert main(["scan-ratio", "--t", "3000", "--d-max", "23", "--out", str(first)]) == 0
    assert main(["scan-ratio", "--t", "3000", "--d-max", "23", "--out", str(second)]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()


def test_lcu_table_t3000_values(capsys):
    code, out, _ = run_cli(capsys, "lcu-table", "--t", "3000", "--d-max", "23")
    assert code == 0
    rows = {int(r["d"]): r for r in parse_csv(out)}
    assert float(rows[19]["a_max_lcu"]) == pytest.approx(1.339724, rel=1e-5)
    assert float(rows[23]["a_max_lcu"]) < float(rows[23]["a_rz_lcu"])


def test_lcu_table_json_meta(capsys):
    code, out, _ = run_cli(capsys, "lcu-table", "--format", "json", "--d-max", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["meta"]["command"] == "lcu-table"
    assert payload["meta"]["version"]
    assert payload["meta"]["t"] == 0.1
    assert [row["d"] for row in payload["rows"]] == [3, 5]
    # JSON carries full-precision floats
    a_max = payload["rows"][0]["a_max_lcu"]
    assert a_max == pytest.approx(2.56, abs=0.01)
    assert isinstance(a_max, float)


def test_verify_passes_quickly(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--d-max", "9", "--census-max", "15"
    )
    assert code == 0
    assert out.count("pass") == 6
    assert "FAIL" not in out


def test_verify_detects_injected_angle_error(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--d-max", "9", "--census-max", "15",
        "--inject-angle-error", "1e-3",
    )
    assert code == 1
    assert any("select-schedule" in ln and "FAIL" in ln for ln in out.splitlines())


def test_verify_rejects_oversized_dense_cap(capsys):
    code, _, err = run_cli(capsys, "verify", "--d-max", "100")
    assert code == 2
    assert "cap" in err


def test_eps_flag_synonyms(capsys):
    _, out_a, _ = run_cli(capsys, "pf-thresholds", "--eps", "1e-4", "--d-max", "5")
    _, out_b, _ = run_cli(capsys, "pf-thresholds", "--eps-sim", "1e-4", "--d-max", "5")
    assert out_a == out_b


def test_config_file_overrides_model(tmp_path, capsys, monkeypatch):
    config = tmp_path / "model.json"
    config.write_text(json.dumps({"rz_slope": 0.0, "rz_intercept": 1.0}))
    monkeypatch.setenv(CONFIG_ENV_VAR, str(config))
    _, out, _ = run_cli(capsys, "pf-thresholds", "--d-max", "3")
    row = parse_csv(out)[0]
    # with a flat unit-cost model the break-even prefactor is L_qb / (L_qd log2(L_qd/eps))
    assert float(row["a_max_pf"]) == pytest.approx(3 / (2 * 20.93156857), rel=1e-6)


def test_config_file_missing_is_config_error(capsys, monkeypatch):
    monkeypatch.setenv(CONFIG_ENV_VAR, "/nonexistent/config.json")
    code, _, err = run_cli(capsys, "pf-thresholds")
    assert code == 2
    assert "config" in err
