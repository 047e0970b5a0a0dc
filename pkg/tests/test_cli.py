import json

import pytest

from riskset import theorem_lab as lab
from riskset.cli import RunConfig, UsageError, main


class TestEval:
    def test_es_text(self, cli):
        res = cli("eval", "--measure", "es", "--alpha", "0.5", "--vector=-4,-2,0,2")
        assert res.returncode == 0
        assert res.stdout.strip() == "3"

    def test_json_input_with_probs(self, cli, tmp_path):
        f = tmp_path / "x.json"
        f.write_text(json.dumps({"probs": [0.25, 0.75], "vectors": {"A": [0, 4], "B": [1, 1]}}))
        res = cli("eval", "--measure", "neg-expectation", "--input", str(f), "--format", "json")
        assert res.returncode == 0
        assert json.loads(res.stdout)["values"] == {"A": -3.0, "B": -1.0}

    def test_stdin(self, cli):
        res = cli("eval", "--measure", "sd", "--input", "-", stdin='{"values": [-1, 1]}')
        assert res.returncode == 0 and res.stdout.strip() == "1"

    def test_bad_json_reports_position(self, cli, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text('{"values": [1, 2,\n  oops]}')
        res = cli("eval", "--measure", "sd", "--input", str(f))
        assert res.returncode == 2
        assert "line 2 column 3" in res.stderr

    def test_ragged_vectors(self, cli):
        res = cli("eval", "--measure", "sd", "--input", "-", stdin='{"vectors": {"A": [1, 2], "B": [1]}}')
        assert res.returncode == 2 and "same length" in res.stderr

    def test_bad_probs(self, cli):
        res = cli("eval", "--measure", "sd", "--vector", "1,2", "--probs", "0.5,0.6")
        assert res.returncode == 2

    def test_missing_alpha(self, cli):
        res = cli("eval", "--measure", "es", "--vector", "1,2")
        assert res.returncode == 2 and "alpha" in res.stderr


class TestGauge:
    def test_rho_json(self, cli):
        res = cli("gauge", "--set", "catalog:es?alpha=0.5", "--vector=-4,-2,0,2")
        out = json.loads(res.stdout)
        assert res.returncode == 0
        assert abs(out["value"] - 3.0) <= 1e-9 and out["status"] == "converged"

    def test_dev_of_fig1(self, cli):
        res = cli("gauge", "--set", "catalog:fig1", "--kind", "dev", "--vector", "1,2")
        assert abs(json.loads(res.stdout)["value"] - 1.0) <= 1e-9

    def test_dimension_mismatch(self, cli):
        res = cli("gauge", "--set", "catalog:fig1", "--kind", "dev", "--vector", "1,2,3")
        assert res.returncode == 2 and "2-outcome" in res.stderr

    def test_contract_error(self, cli):
        res = cli("gauge", "--set", "catalog:sd_ball?r=1", "--kind", "rho", "--vector", "1,2")
        assert res.returncode == 2

    def test_bad_set(self, cli):
        res = cli("gauge", "--set", "catalog:nope", "--vector", "1,2")
        assert res.returncode == 2 and "unknown catalog set" in res.stderr


class TestVerify:
    def test_pass(self, cli):
        res = cli("verify", "--theorem", "risk-corisk", "--set", "catalog:expectation", "--trials", "50")
        assert res.returncode == 0
        assert json.loads(res.stdout)["verdict"] == "pass"

    def test_inconclusive(self, cli):
        res = cli("verify", "--theorem", "risk-corisk", "--set", "catalog:sd_ball?r=1", "--trials", "50")
        assert res.returncode == 3

    def test_fail(self, cli):
        res = cli("verify", "--theorem", "additivity-in-class", "--set", "catalog:var?alpha=0.25",
                  "--cone-spec", "independent", "--trials", "200", "--seed", "1")
        assert res.returncode == 1
        report = json.loads(res.stdout)
        assert report["verdict"] == "fail"
        replay = cli("replay", "--witness", json.dumps(report["counterexample"]))
        assert replay.returncode == 0 and json.loads(replay.stdout)["reproduced"]

    def test_report_file(self, cli, tmp_path):
        out = tmp_path / "r.json"
        out.write_text("stale")
        res = cli("verify", "--theorem", "cone-comonotonicity", "--trials", "30", "--seed", "4",
                  "--report", str(out))
        assert res.returncode == 0
        assert res.stdout.startswith("cone-comonotonicity: pass")
        assert out.read_text() == lab.verify_cone_comono(30, 4).dumps()
        assert sorted(p.name for p in tmp_path.iterdir()) == ["r.json"]

    def test_report_dir_must_exist(self, cli, tmp_path):
        res = cli("verify", "--theorem", "cone-comonotonicity", "--trials", "5",
                  "--report", str(tmp_path / "missing" / "r.json"))
        assert res.returncode == 2

    def test_seed_from_environment(self, cli):
        args = ("verify", "--theorem", "cone-comonotonicity", "--trials", "20")
        env_run = cli(*args, env={"RISKSET_SEED": "9"})
        flag_run = cli(*args, "--seed", "9")
        assert json.loads(env_run.stdout)["check"]["seed"] == 9
        assert env_run.stdout == flag_run.stdout
        assert json.loads(cli(*args).stdout)["check"]["seed"] == 0

    def test_bad_seed_environment(self, cli):
        res = cli("verify", "--theorem", "cone-comonotonicity", "--trials", "5", env={"RISKSET_SEED": "x"})
        assert res.returncode == 2

    def test_csv(self, cli):
        res = cli("verify", "--theorem", "risk-corisk", "--set", "catalog:expectation", "--trials", "5",
                  "--seed", "3", "--format", "csv")
        lines = res.stdout.splitlines()
        assert lines[0] == "trial,defect,seed-path"
        assert len(lines) == 6 and lines[-1].endswith(",3/1/4")

    @pytest.mark.parametrize("args", [
        ("--theorem", "no-such-suite", "--set", "catalog:es?alpha=0.1"),
        ("--theorem", "sandwich"),
        ("--theorem", "sandwich", "--set", "catalog:fig1", "--trials", "0"),
        ("--theorem", "sandwich", "--set", "catalog:fig1", "--dims", "2,x"),
    ])
    def test_usage_errors(self, cli, args):
        assert cli("verify", *args).returncode == 2

    def test_dims_pin_set_size(self, cli):
        res = cli("verify", "--theorem", "sandwich", "--set", "catalog:fig1", "--dims", "3", "--trials", "5")
        assert res.returncode == 2


class TestCounterexampleAndReplay:
    def test_fig1(self, cli):
        res = cli("counterexample", "fig1")
        assert res.returncode == 0
        stats = json.loads(res.stdout)["stats"]
        assert abs(stats["lambda"] - 1 / 3) <= 1e-12

    def test_unknown_counterexample(self, cli):
        assert cli("counterexample", "fig2").returncode == 2

    def test_replay_fig1_evidence(self, cli):
        report = json.loads(cli("counterexample", "fig1").stdout)
        res = cli("replay", "--witness", json.dumps(report["evidence"][0]["witness"]))
        assert res.returncode == 0

    def test_replay_not_reproduced(self, cli):
        w = {"kind": "convexity", "points": [{"values": [1, 2]}, {"values": [1, 0.5]}], "scalar": 0.5,
             "tolerance": 1e-9, "threshold": 1e-8, "set": "catalog:sd_ball?r=1", "functionals": ["dev"]}
        res = cli("replay", "--witness", json.dumps(w))
        assert res.returncode == 1 and not json.loads(res.stdout)["reproduced"]

    def test_replay_bad_json(self, cli):
        res = cli("replay", "--witness", "{not json")
        assert res.returncode == 2 and "line 1 column 2" in res.stderr

    def test_replay_missing_field(self, cli):
        res = cli("replay", "--witness", '{"kind": "identity"}')
        assert res.returncode == 2 and "points" in res.stderr


class TestAudit:
    def test_declared_flags(self, cli):
        res = cli("audit", "--set", "catalog:es?alpha=0.5", "--trials", "100", "--seed", "2")
        doc = json.loads(res.stdout)
        assert res.returncode == 0
        assert [a["axiom"] for a in doc["audits"]] == [
            "monotone", "normalized", "convex", "comonotonic-convex", "complement-comonotonic-convex",
            "star-shaped"]

    def test_failing_flag(self, cli):
        res = cli("audit", "--set", "catalog:sd_ball?r=1", "--flags", "monotone", "--trials", "200")
        assert res.returncode == 1
        audit = json.loads(res.stdout)["audits"][0]
        assert audit["verdict"] == "fail" and "witness" in audit

    def test_closed_is_inconclusive(self, cli):
        assert cli("audit", "--set", "catalog:fig1", "--flags", "closed").returncode == 3

    def test_unknown_flag(self, cli):
        assert cli("audit", "--set", "catalog:fig1", "--flags", "wobbly").returncode == 2


class TestInProcess:
    def test_main_returns_exit_status(self, capsys):
        assert main(["eval", "--measure", "var", "--alpha", "0.25", "--vector=-4,-2,0,2"]) == 0
        assert capsys.readouterr().out.strip() == "4"

    def test_config_validation(self):
        with pytest.raises(UsageError):
            RunConfig("verify", trials=0)
        with pytest.raises(UsageError):
            RunConfig("verify", tol=-1.0)
