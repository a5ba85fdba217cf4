import csv
import io
import json
import math

import pytest

from starlike import cli


def run(argv):
    return cli.execute(argv)


def table(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestGrowth:
    def test_booth_upper_example(self):
        code, text, _, _ = run(["growth", "--family", "booth", "--alpha", "0.25", "--r", "0.5"])
        assert code == 0
        row = table(text)[0]
        assert float(row["upper"]) == pytest.approx(0.833333333333, abs=1e-12)
        assert row["sharp"] == "true"

    def test_linear_example(self):
        _, text, _, _ = run(["growth", "--family", "linear", "--eta", "1", "--r", "0.5"])
        row = table(text)[0]
        assert float(row["lower"]) == pytest.approx(0.303265329856, abs=1e-12)
        assert float(row["upper"]) == pytest.approx(0.824360635350, abs=1e-12)

    def test_default_radii(self):
        _, text, _, _ = run(["growth", "--family", "cissoid", "--beta", "0.5"])
        assert [float(r["r"]) for r in table(text)] == pytest.approx([k / 10 for k in range(1, 10)])

    def test_csv_uses_lf_and_full_precision(self):
        _, text, _, _ = run(["growth", "--family", "linear", "--eta", "1", "--r", "0.5"])
        assert "\r" not in text and text.endswith("\n")
        assert "0.824360635350064" in text

    def test_json_format(self):
        _, text, _, _ = run(["growth", "--family", "linear", "--eta", "1", "--r", "0.5", "--format", "json"])
        data = json.loads(text)
        rows = data["rows"] if isinstance(data, dict) else data
        assert rows[0]["upper"] == pytest.approx(math.exp(0.5) / 2, abs=1e-14)


@pytest.mark.parametrize(
    "argv, code, message",
    [
        (["growth", "--family", "booth", "--alpha", "1.5"], 2, "alpha must lie in [0,1)"),
        (["growth", "--family", "booth", "--alpha", "0.2", "--r", "1.0"], 2, ""),
        (["growth", "--family", "booth", "--alpha", "0.2", "--grid", "8"], 2, "grid"),
        (["radius", "bohr", "--alpha", "0.5"], 3, "hypothesis"),
        (["radius", "eta0", "--gamma", "1.5"], 3, "hypothesis"),
        (["verify", "growth", "--family", "linear", "--eta", "1", "--r", "0.999"], 2, ""),
        (["verify", "bohr", "--alpha", "0.5"], 3, ""),
        (["verify", "subordination", "--family", "modkoebe", "--gamma", "0.5", "--eta", "0.5"], 3, "2-sqrt(3)"),
        (["plot", "--family", "cissoid", "--beta", "0.5", "--rho", "1"], 2, "pole"),
    ],
)
def test_exit_codes(argv, code, message):
    got, _, err, _ = run(argv)
    assert got == code
    assert message in err


class TestRadius:
    def test_koebe_booth(self):
        _, text, _, _ = run(["radius", "koebe", "--family", "booth", "--alpha", "0.25"])
        assert float(table(text)[0]["value"]) == pytest.approx(1 / 3, abs=1e-12)

    def test_bohr_at_upper_alpha(self):
        _, text, _, _ = run(["radius", "bohr", "--alpha", "0.17157287525381"])
        row = table(text)[0]
        assert 0 < float(row["value"]) < 1 / 3
        assert abs(float(row["residual"])) < 1e-12

    def test_starlike(self):
        _, text, _, _ = run(["radius", "starlike", "--gamma", "2", "--eta", "0"])
        assert float(table(text)[0]["value"]) == pytest.approx(0.5, abs=1e-15)

    def test_columns(self):
        _, text, _, _ = run(["radius", "convexity-threshold"])
        assert text.splitlines()[0] == ",".join(cli.RADIUS_COLUMNS)


class TestPlot:
    def test_dilog_anchor(self):
        _, text, _, _ = run(["plot", "--family", "dilog", "--samples", "1024"])
        rows = table(text)
        at_pi = rows[512]
        assert float(at_pi["theta"]) == pytest.approx(math.pi)
        assert float(at_pi["re_psi"]) == pytest.approx(math.log(1 + 0.999), abs=1e-12)

    def test_secant_anchor(self):
        _, text, _, _ = run(["plot", "--family", "secant", "--beta", "1", "--rho", "1"])
        assert float(table(text)[0]["re_psi"]) == pytest.approx(1.85081571768093, abs=1e-12)

    def test_svg_is_deterministic(self):
        argv = ["plot", "--family", "cissoid", "--beta", "0.5", "--format", "svg"]
        first, second = run(argv)[1], run(argv)[1]
        assert first == second
        assert first.startswith("<svg") and first.count("<polyline") == 1

    def test_samples_floor(self):
        assert run(["plot", "--family", "dilog", "--samples", "10"])[0] == 2


class TestVerify:
    def test_seed_from_environment(self, monkeypatch):
        argv = ["verify", "growth", "--family", "booth", "--alpha", "0.25", "--samples", "3"]
        monkeypatch.setenv("STARLIKE_SEED", "123")
        data = json.loads(run(argv + ["--seed", "9"])[1])
        assert data["seed"] == 123
        monkeypatch.delenv("STARLIKE_SEED")
        assert json.loads(run(argv)[1])["seed"] == 7

    def test_bad_seed_environment(self, monkeypatch):
        monkeypatch.setenv("STARLIKE_SEED", "seven")
        assert run(["verify", "growth", "--family", "linear", "--eta", "1", "--samples", "1"])[0] == 2

    def test_runs_are_reproducible(self):
        argv = ["verify", "subordination", "--family", "modkoebe", "--gamma", "0.5", "--eta", "0.2", "--samples", "4"]
        assert run(argv)[1] == run(argv)[1]

    def test_bohr_suite_passes(self):
        code, text, _, _ = run(["verify", "bohr", "--alpha", "0.1", "--samples", "5"])
        assert code == 0 and json.loads(text)["passed"]

    def test_csv_output(self):
        code, text, _, _ = run(["verify", "growth", "--family", "linear", "--eta", "1", "--samples", "2", "--format", "csv"])
        assert code == 0
        assert len(table(text)) == 2


class TestSweep:
    def test_bohr_sweep_is_decreasing_and_in_range(self):
        _, text, _, _ = run(["sweep", "bohr"])
        rows = table(text)
        values = [float(r["value"]) for r in rows]
        assert all(0 < v < 1 / 3 for v in values)
        assert all(x > y for x, y in zip(values, values[1:]))
        assert all(r["status"] == "ok" for r in rows)

    def test_sweep_flags_hypothesis_violations(self):
        _, text, _, _ = run(["sweep", "bohr", "--start", "0.15", "--stop", "0.2", "--step", "0.01"])
        statuses = {r["status"] for r in table(text)}
        assert "ok" in statuses and len(statuses) == 2


def test_main_writes_output_file(tmp_path, capsys):
    target = tmp_path / "out.csv"
    code = cli.main(["radius", "starlike", "--gamma", "1", "--eta", "0.25", "--output", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert target.read_bytes().decode().startswith("value,")


def test_main_reports_errors_on_stderr(capsys):
    assert cli.main(["growth", "--family", "booth", "--alpha", "1.5"]) == 2
    assert capsys.readouterr().err.startswith("starlike: ")
