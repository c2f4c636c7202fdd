import json

import pytest

from icausal.config.loader import ConfigLoader, merge_config
from icausal.config.paths import get_config_path, get_default_corpus_path
from icausal.core.errors import ConfigError


def test_defaults_without_file():
    config = ConfigLoader().load()
    assert config["tolerance"] == 1e-10
    assert config["mode"] == "exhaustive"
    assert config["spacetime"]["tau_star"] is None


def test_user_file_merges_nested_blocks(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps({"m": 3, "spacetime": {"M": 2.0}}), encoding="utf-8")
    config = ConfigLoader(str(path)).load()
    assert config["m"] == 3
    assert config["spacetime"]["M"] == 2.0
    assert config["spacetime"]["c"] == 299792458.0


def test_missing_explicit_file(tmp_path):
    with pytest.raises(ConfigError):
        ConfigLoader(str(tmp_path / "missing.json")).load()


@pytest.mark.parametrize("text", ["{not json", "[1, 2]"])
def test_malformed_file(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigError):
        ConfigLoader(str(path)).load()


def test_tolerance_environment_override(monkeypatch):
    monkeypatch.setenv("ICAUSAL_TOL", "1e-8")
    assert ConfigLoader().load()["tolerance"] == 1e-8
    monkeypatch.setenv("ICAUSAL_TOL", "tight")
    with pytest.raises(ConfigError):
        ConfigLoader().load()


def test_save_then_load(tmp_path):
    loader = ConfigLoader()
    config = loader.load()
    config["workers"] = 2
    loader.save(config)
    assert get_config_path().startswith(str(tmp_path))
    assert ConfigLoader().load()["workers"] == 2


def test_merge_config_replaces_leaves():
    base = {"a": 1, "block": {"x": 1, "y": 2}}
    merge_config(base, {"block": {"y": 3}, "b": [1]})
    assert base == {"a": 1, "block": {"x": 1, "y": 3}, "b": [1]}


def test_default_corpus_is_packaged():
    with open(get_default_corpus_path(), encoding="utf-8") as f:
        assert len(json.load(f)["states"]) == 4
