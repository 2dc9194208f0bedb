import json
from pathlib import Path

import pytest

from carlitz_toolbox import cli


GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("var,golden", [("lambda", "appendix1.txt"), ("zeta", "appendix2.txt")])
def test_sequence_golden(capsys, var, golden):
    code, out, _ = run(capsys, "sequence", "--var", var, "--m-min", "-5", "--m-max", "6", "--format", "text")
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_deterministic(capsys):
    _, first, _ = run(capsys, "sequence", "--var", "zeta", "--m-min", "-3", "--m-max", "3")
    _, second, _ = run(capsys, "sequence", "--var", "zeta", "--m-min", "-3", "--m-max", "3")
    assert first == second


class TestSequence:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "sequence", "--var", "lambda", "--m-min", "0", "--m-max", "0", "--format", "json")
        assert code == 0
        assert json.loads(out) == dict(m=0, variable="lambda", numerator_coeffs=["0", "1"], base="1-lambda", power=1)

    def test_json_lines(self, capsys):
        _, out, _ = run(capsys, "sequence", "--m-min", "-1", "--m-max", "1", "--format", "json")
        assert [json.loads(line)["m"] for line in out.splitlines()] == [-1, 0, 1]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "sequence", "--m-min", "-3", "--m-max", "-3", "--format", "csv")
        assert code == 0
        assert out.splitlines() == [
            "m,variable,power,k,coefficient",
            "-3,lambda,7,0,0",
            "-3,lambda,7,1,1",
            "-3,lambda,7,2,8",
            "-3,lambda,7,3,6",
        ]

    def test_bound(self, capsys):
        code, out, err = run(capsys, "sequence", "--m-min", "-70", "--m-max", "-70")
        assert code == 2
        assert out == ""
        assert "bound" in err

    def test_reversed_range(self, capsys):
        code, _, _ = run(capsys, "sequence", "--m-min", "3", "--m-max", "1")
        assert code == 2


class TestTable:
    def test_g_csv(self, capsys):
        code, out, _ = run(capsys, "table", "--triangle", "g", "--max-m", "6", "--format", "csv")
        assert code == 0
        assert "6,4,415/3456" in out.splitlines()

    def test_eulerian_text(self, capsys):
        _, out, _ = run(capsys, "table", "--triangle", "eulerian2", "--max-m", "5", "--format", "text")
        assert out.splitlines()[-1] == "1 52 328 444 120"

    def test_numerators_text(self, capsys):
        _, out, _ = run(capsys, "table", "--triangle", "N", "--max-m", "3")
        assert out == "1\n1 1\n1 3 1\n"

    def test_json(self, capsys):
        _, out, _ = run(capsys, "table", "--triangle", "h", "--max-m", "2", "--format", "json")
        data = json.loads(out)
        assert data["triangle"] == "h"
        assert data["rows"][1] == dict(m=2, k_min=1, values=["1", "1/2"])

    def test_unknown(self, capsys):
        code, _, _ = run(capsys, "table", "--triangle", "bell")
        assert code == 2


class TestVerify:
    @pytest.mark.parametrize("suite", ["identities", "formulas", "integrality"])
    def test_suites(self, capsys, suite):
        code, out, _ = run(capsys, "verify", "--suite", suite, "--depth", "12")
        assert code == 0
        assert out.splitlines()[-1].startswith("PASSED: ")
        assert "FAIL" not in out

    def test_identities_families(self, capsys):
        _, out, _ = run(capsys, "verify", "--suite", "identities", "--depth", "12")
        assert out.splitlines()[-1] == "PASSED: 4 checks at depth 12"

    def test_oracle(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "oracle", "--depth", "12")
        assert code == 0
        assert "21/21" in out

    def test_all_depth_one(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "all", "--depth", "1")
        assert code == 0

    def test_failure(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "verify_eq5", lambda m: m != 3)
        code, out, _ = run(capsys, "verify", "--suite", "identities", "--depth", "4")
        assert code == 1
        assert out.splitlines()[-1] == "FAILED: identities/eq5 first counterexample (3)"

    def test_bad_depth(self, capsys):
        code, _, _ = run(capsys, "verify", "--depth", "0")
        assert code == 2


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--m-min", "-3", "--m-max", "3", "--order", "8")
    assert code == 0
    assert out.splitlines()[-1] == "PASSED"
    assert len(out.splitlines()) == 7 + 2


class TestAsym:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "asym", "--k", "2", "--m-max", "40", "--format", "text")
        assert code == 0
        assert "p_2(m) = -2+m" in out
        assert "p_2(m) = 1+(m-3)" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "asym", "--k", "3", "--m-max", "60", "--format", "json")
        assert code == 0
        assert json.loads(out)["fitted_polynomial"]["coeffs"] == ["7", "-5", "1"]

    def test_rejects_k1(self, capsys):
        code, _, err = run(capsys, "asym", "--k", "1", "--m-max", "40")
        assert code == 2
        assert "identically 1" in err


class TestConfig:
    def test_overlay(self, capsys, tmp_path):
        path = tmp_path / "g0.yaml"
        path.write_text("sequence:\n  m_min: 0\n  m_max: 0\n  format: json\n")
        code, out, _ = run(capsys, "--config", str(path), "sequence")
        assert code == 0
        assert json.loads(out)["power"] == 1

    def test_later_file_wins(self, capsys, tmp_path):
        a, b = tmp_path / "a.yaml", tmp_path / "b.yaml"
        a.write_text("table:\n  triangle: g\n  max_m: 6\n")
        b.write_text("table:\n  triangle: N\n  max_m: 3\n")
        code, out, _ = run(capsys, "--config", str(a), "--config", str(b), "table")
        assert code == 0
        assert out == "1\n1 1\n1 3 1\n"

    def test_flag_beats_config(self, capsys, tmp_path):
        path = tmp_path / "t.yaml"
        path.write_text("table:\n  triangle: N\n  max_m: 3\n")
        _, out, _ = run(capsys, "--config", str(path), "table", "--max-m", "2")
        assert out == "1\n1 1\n"

    def test_repo_configs(self, capsys):
        root = Path(__file__).parents[1] / "configs"
        code, out, _ = run(
            capsys, "--config", str(root / "base.yaml"), "--config", str(root / "appendix.yaml"), "sequence"
        )
        assert code == 0
        assert out == (GOLDEN / "appendix1.txt").read_text()

    @pytest.mark.parametrize(
        "text", ["sequence:\n  colour: red\n", "plot:\n  m_max: 3\n"],
    )
    def test_unknown_keys(self, capsys, tmp_path, text):
        path = tmp_path / "bad.yaml"
        path.write_text(text)
        code, _, _ = run(capsys, "--config", str(path), "sequence")
        assert code == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "--config", str(tmp_path / "nope.yaml"), "sequence")
        assert code == 2

    @pytest.mark.parametrize("text", ["- sequence\n- table\n", "sequence: 5\n", "sequence:\n  m_min: five\n"])
    def test_malformed(self, capsys, tmp_path, text):
        path = tmp_path / "bad.yaml"
        path.write_text(text)
        code, out, _ = run(capsys, "--config", str(path), "sequence")
        assert code == 2
        assert out == ""

    def test_base_config_keeps_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("CARLITZ_ENUM_BUDGET", "5")
        base = str(Path(__file__).parents[1] / "configs" / "base.yaml")

        def probability_line(*extra):
            _, out, _ = run(capsys, "--config", base, "verify", "--suite", "oracle", "--depth", "3", *extra)
            return next(line for line in out.splitlines() if " probability " in line)

        assert "5/5" in probability_line()
        assert "6/6" in probability_line("--budget", "200000")

    def test_tolerance_from_config(self, capsys, tmp_path):
        path = tmp_path / "asym.yaml"
        path.write_text("asym:\n  k: 3\n  m_max: 60\n  tolerance: 1/1000000\n")
        code, out, _ = run(capsys, "--config", str(path), "asym")
        assert code == 0
        assert "p_3(m) = 1+(m-3)+(m-3)^2" in out


def test_bad_tolerance(capsys):
    code, _, err = run(capsys, "asym", "--tolerance", "tiny")
    assert code == 2
    assert "exact fraction" in err


def test_command_config(tmp_path):
    path = tmp_path / "t.yaml"
    path.write_text("table:\n  max_m: 3\n")
    cfg = cli.build_parser().parse_args(["--config", str(path), "table", "--format", "csv"])
    config = cli.CommandConfig.from_namespace(cfg)
    assert (config.command, config.format) == ("table", "csv")
    assert config.parameters["max_m"] == 3
    assert config.parameters["triangle"] == "g"
