import pytest
from hypothesis import settings

settings.register_profile("icausal", max_examples=25, deadline=None)
settings.load_profile("icausal")


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """配置文件与日志写入临时目录"""
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.setenv("APPDATA", str(tmp_path))
    monkeypatch.delenv("ICAUSAL_TOL", raising=False)
    return tmp_path
