import csv
import json
import math
import os
import subprocess
import sys

import pytest

from zetaforge.cli import main, parse_law_spec, table_rows


def run_cli(args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "zetaforge.cli", *args],
                          capture_output=True, text=True, env=env)


class TestTable:
    def test_table_rows_content(self):
        rows = table_rows()
        by_name = {r["name"]: r for r in rows}
        r124 = by_name["rho<=1.24"]
        assert r124["n_min"] == 4
        assert r124["B"] <= 0.83
        assert by_name["geometric_p=0.1"]["n_min"] == 83
        assert by_name["bernoulli_p>=0.45"]["n_min"] == 1
        assert by_name["exponential"]["n_min"] == 82
        assert by_name["uniform"]["n_min"] == 5

    def test_table_csv_output(self, tmp_path):
        out = tmp_path / "table.csv"
        assert main(["table", "--out", str(out)]) == 0
        with open(out, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 12 + 2 + 6 + 4 + 1
        assert rows[0]["kind"] == "table"

    def test_table_figures(self, tmp_path):
        figs = tmp_path / "figs"
        assert main(["table", "--out", str(tmp_path / "t.csv"),
                     "--figures", str(figs)]) == 0
        assert (figs / "improvement_table.png").exists()


class TestZetaCommand:
    def test_rademacher_vs_normal_s3(self, capsys):
        assert main(["zeta", "--law-a", "rademacher", "--law-b", "normal",
                     "--s", "3"]) == 0
        out = capsys.readouterr().out
        value = float(out.split("=")[1].split("(")[0])
        assert value == pytest.approx((4 / math.sqrt(2 * math.pi) - 1) / 6,
                                      abs=1e-8)

    def test_rademacher_vs_normal_s4(self, capsys):
        assert main(["zeta", "--law-a", "rademacher", "--law-b", "normal",
                     "--s", "4"]) == 0
        value = float(capsys.readouterr().out.split("=")[1].split("(")[0])
        assert value == pytest.approx(1.0 / 12.0, abs=1e-8)

    def test_moment_mismatch_exit_two(self, tmp_path, capsys):
        path = tmp_path / "shifted.json"
        path.write_text(json.dumps({"atoms": [0.0, 1.0],
                                    "masses": [0.5, 0.5]}))
        code = main(["zeta", "--law-a", str(path), "--law-b", "rademacher",
                     "--s", "3"])
        assert code == 2
        assert "infinite (moment 1" in capsys.readouterr().out

    def test_builtin_specs(self):
        law = parse_law_spec("binomial:4")
        assert abs(law.raw_moment(1)) < 1e-12
        assert law.raw_moment(2) == pytest.approx(1.0)
        law = parse_law_spec("tworho:1.5")
        assert law.n_atoms == 2
        law = parse_law_spec("bernoulli:0.3")
        assert law.n_atoms == 2
        assert abs(law.raw_moment(1)) < 1e-12

    def test_bad_file_exit_two(self, capsys):
        assert main(["zeta", "--law-a", "/nonexistent.json",
                     "--law-b", "rademacher"]) == 2


class TestVerifyCommand:
    def test_exit_zero_and_deterministic(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        assert main(["verify", "--suite", "main", "--trials", "20",
                     "--seed", "42", "--out", str(a)]) == 0
        assert main(["verify", "--suite", "main", "--trials", "20",
                     "--seed", "42", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_threaded_run_identical(self, tmp_path):
        base = tmp_path / "base.csv"
        thr = tmp_path / "thr.csv"
        res = run_cli(["verify", "--suite", "charfn", "--trials", "24",
                       "--seed", "9", "--out", str(base)])
        assert res.returncode == 0
        res = run_cli(["verify", "--suite", "charfn", "--trials", "24",
                       "--seed", "9", "--out", str(thr)],
                      env_extra={"ZETA_FORGE_THREADS": "4"})
        assert res.returncode == 0
        assert base.read_bytes() == thr.read_bytes()

    def test_zero_trials_exit_two(self):
        assert main(["verify", "--suite", "all", "--trials", "0"]) == 2

    def test_epsilon_suite(self, tmp_path):
        out = tmp_path / "eps.csv"
        assert main(["verify", "--suite", "epsilon", "--trials", "40",
                     "--seed", "1", "--out", str(out)]) == 0
        with open(out, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert all(r["status"] == "ok" for r in rows)
        assert all(float(r["margin"]) >= 0.0 for r in rows)

    def test_verify_figures(self, tmp_path):
        figs = tmp_path / "figs"
        assert main(["verify", "--suite", "epsilon", "--trials", "20",
                     "--seed", "1", "--out", str(tmp_path / "e.csv"),
                     "--figures", str(figs)]) == 0
        assert (figs / "margins_epsilon.png").exists()
        assert (figs / "epsilon_trend.png").exists()

    def test_violated_report_exits_one(self, tmp_path, monkeypatch, capsys):
        import zetaforge.bounds as bounds

        def fake_suite(name, trials, seed, tol=1e-9, executor=None):
            return [bounds.BoundReport(bound_name="main", lhs=1.0, rhs=0.5,
                                       inputs={"n": 1, "rho_summary": "x"},
                                       status="violated")]

        monkeypatch.setattr(bounds, "run_suite", fake_suite)
        code = main(["verify", "--suite", "main", "--trials", "1",
                     "--out", str(tmp_path / "v.csv")])
        assert code == 1

    def test_csv_float_format_is_12_significant(self, tmp_path):
        out = tmp_path / "m.csv"
        main(["verify", "--suite", "main", "--trials", "5", "--seed", "2",
              "--out", str(out)])
        body = out.read_text().strip().split("\n")[1:]
        for line in body:
            lhs = line.split(",")[3]
            assert len(lhs.replace(".", "").replace("-", "").lstrip("0")) <= 13
