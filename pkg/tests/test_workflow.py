import json
import os

import pytest

from icausal.app.app import main
from icausal.app.workflows.acceptance_workflow import CRITERIA, format_table, run_acceptance_suite
from icausal.app.workflows.scenario_workflow import ScenarioConfig, ScenarioWorkflow, run_scenario
from icausal.core.errors import ConfigError

UNIT_SPACETIME = {"G": 1.0, "c": 1.0, "M": 1.0, "R": 10.0, "h": 1.0, "tau_star": 300.0}


class TestScenarioConfig:
    def test_unknown_protocol(self):
        with pytest.raises(ConfigError):
            ScenarioConfig(protocol="warp")

    def test_single_input_source(self):
        with pytest.raises(ConfigError):
            ScenarioConfig(protocol="bell", input="random", preset="B1")

    def test_sample_mode_needs_seed(self):
        with pytest.raises(ConfigError):
            ScenarioConfig(protocol="teleport", mode="sample")

    def test_teleport_order_count(self):
        with pytest.raises(ConfigError):
            ScenarioConfig(protocol="teleport", m=5)

    def test_from_dict_ignores_unrelated_keys(self):
        config = ScenarioConfig.from_dict({"protocol": "bell", "workers": 3, "log_level": "INFO"})
        assert config.protocol == "bell"


class TestRunScenario:
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_teleport(self, m):
        report = run_scenario(ScenarioConfig(protocol="teleport", m=m, seed=7))
        assert report.passed, report.failed_checks
        assert len(report.results["branches"]) == m * m
        assert report.input_digest

    def test_backteleport_and_roundtrip(self):
        assert run_scenario(ScenarioConfig(protocol="backteleport", d=3, seed=2)).passed
        assert run_scenario(ScenarioConfig(protocol="roundtrip", seed=2)).passed

    def test_sample_mode_reports_one_path(self):
        report = run_scenario(ScenarioConfig(protocol="teleport", mode="sample", seed=5))
        assert len(report.results["branches"]) == 1
        assert report.passed

    def test_same_seed_same_report(self):
        first = run_scenario(ScenarioConfig(protocol="teleport", seed=9)).to_json(include_timing=False)
        second = run_scenario(ScenarioConfig(protocol="teleport", seed=9)).to_json(include_timing=False)
        assert first == second

    @pytest.mark.parametrize("preset", ["B1", "B2", "B3", "B4"])
    def test_bell(self, preset):
        report = run_scenario(ScenarioConfig(protocol="bell", preset=preset))
        assert report.checks["identified_all"]
        assert report.checks["charlie_deterministic"]

    def test_channel_swap_preset(self):
        report = run_scenario(ScenarioConfig(protocol="channel", preset="swap01"))
        assert report.passed, report.failed_checks

    def test_channel_random(self):
        assert run_scenario(ScenarioConfig(protocol="channel", d=3, seed=4)).passed

    def test_entangle(self):
        report = run_scenario(ScenarioConfig(protocol="entangle", u1="I", u2="Z", psi="+", phi="+"))
        assert report.passed
        assert [b["entropy"] for b in report.results["branches"]] == pytest.approx([1.0, 1.0])

    def test_entangle_gate_from_file(self, tmp_path):
        path = tmp_path / "x.json"
        path.write_text(json.dumps({"label": "X", "matrix": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]}), encoding="utf-8")
        report = run_scenario(ScenarioConfig(protocol="entangle", u1="I", u2=str(path)))
        assert report.passed
        assert [b["entropy"] for b in report.results["branches"]] == pytest.approx([1.0, 1.0])

    def test_entangle_unknown_gate(self):
        with pytest.raises(ConfigError):
            run_scenario(ScenarioConfig(protocol="entangle", u1="H"))

    def test_smolin_and_nlwe(self):
        assert run_scenario(ScenarioConfig(protocol="smolin")).passed
        assert run_scenario(ScenarioConfig(protocol="nlwe")).passed

    def test_search_matches_published_table(self):
        report = run_scenario(ScenarioConfig(protocol="search", m=4))
        assert report.checks["found"]
        assert report.checks["matches_published_table"]
        assert report.passed

    def test_search_failure(self):
        report = run_scenario(ScenarioConfig(protocol="search", m=2, powers=[0, 0]))
        assert not report.passed
        assert report.results["failing"] == ["+", 0]

    def test_spacetime_three_orders(self):
        report = run_scenario(ScenarioConfig(
            protocol="spacetime", m=3, spacetime=UNIT_SPACETIME,
            geometries=[{"M": 4.0, "mass_near": "B"}, {"mass_near": "B"}, {"mass_near": "A"}],
            alice_times=[300.0, 330.0],
        ))
        assert report.passed, report.failed_checks
        assert report.results["mics"]["valid"]

    def test_spacetime_zero_mass(self):
        report = run_scenario(ScenarioConfig(protocol="spacetime", spacetime={**UNIT_SPACETIME, "M": 0.0}))
        assert not report.checks["tau_star_finite"]
        assert "diagnostic" in report.results

    def test_input_dimension_mismatch(self):
        with pytest.raises(ConfigError):
            run_scenario(ScenarioConfig(protocol="teleport", m=3, preset="B1"))


def test_workflow_writes_xlsx(tmp_path):
    out = str(tmp_path / "report.json")
    xlsx = str(tmp_path / "branches.xlsx")
    code = ScenarioWorkflow().execute({"protocol": "teleport", "seed": 3}, out, xlsx)
    assert code == 0
    assert os.path.exists(xlsx)
    assert json.loads(open(out, encoding="utf-8").read())["checks"]["fidelity_ok"]


class TestCli:
    def test_bell_preset(self, capsys):
        assert main(["bell", "--preset", "B3"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["scenario"]["preset"] == "B3"
        assert report["checks"]["identified_all"]

    def test_report_file(self, tmp_path):
        path = tmp_path / "teleport.json"
        assert main(["teleport", "--m", "3", "--seed", "4", "--out", str(path)]) == 0
        assert json.loads(path.read_text(encoding="utf-8"))["scenario"]["m"] == 3

    def test_divergent_threshold_exits_one(self, capsys):
        assert main(["spacetime", "--M", "0"]) == 1
        report = json.loads(capsys.readouterr().out)
        assert report["checks"]["tau_star_finite"] is False

    def test_spacetime_below_threshold_still_reports(self, capsys):
        assert main(["spacetime", "--tau-star", "10"]) == 1
        report = json.loads(capsys.readouterr().out)
        assert report["results"]["tau_tilde"] is None
        assert report["checks"]["definite_order"] is False
        assert report["checks"]["mics_valid"] is False
        assert "spacelike" in report["results"]["mics"]["failing"]

    def test_spacetime_three_orders_without_geometries_exits_two(self):
        assert main(["spacetime", "--m", "3"]) == 2

    def test_malformed_config_exits_two(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{oops", encoding="utf-8")
        assert main(["teleport", "--config", str(path)]) == 2

    def test_config_file_values_are_overridden_by_flags(self, tmp_path, capsys):
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps({"m": 4, "seed": 1}), encoding="utf-8")
        assert main(["teleport", "--config", str(path), "--m", "3"]) == 0
        assert json.loads(capsys.readouterr().out)["scenario"]["m"] == 3

    def test_sample_without_seed_exits_two(self):
        assert main(["teleport", "--mode", "sample"]) == 2

    def test_bad_powers_exit_two(self):
        assert main(["search", "--powers", "a,b"]) == 2

    def test_save_uses_output_dir(self, isolated_home):
        assert main(["bell", "--preset", "B1", "--save"]) == 0
        assert main(["bell", "--preset", "B2", "--save"]) == 0
        saved = sorted(p.name for p in (isolated_home / "icausal_reports").iterdir())
        assert len(saved) == 2
        assert saved[0].startswith("bell")

    def test_accept_filter(self, capsys):
        assert main(["accept", "bell"]) == 0
        assert "1/1 criteria passed" in capsys.readouterr().out


def test_acceptance_prefix_filter():
    results = run_acceptance_suite("teleport-", workers=2)
    assert [r.name for r in results] == ["teleport-2ics", "teleport-roundtrip", "teleport-3ics", "teleport-4ics"]
    assert all(r.passed for r in results), format_table(results)


@pytest.mark.parametrize("name", ["smolin", "entangle", "search-corrections", "spacetime", "branch-engine", "nlwe"])
def test_acceptance_criterion(name):
    (result,) = run_acceptance_suite(name, workers=1)
    assert result.passed, result.detail


def test_every_criterion_is_named_once():
    names = [name for name, _ in CRITERIA]
    assert len(names) == len(set(names)) == 12
