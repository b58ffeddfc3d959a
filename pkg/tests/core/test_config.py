#!/usr/bin/env python3
"""Tests for settings and experiment files"""
import pytest

from src.core.config import Settings, load_config_file
from src.core.errors import InvalidArgumentError


@pytest.mark.unit
class TestSettings:
    """Test environment-driven settings"""

    def test_defaults(self, monkeypatch):
        for name in ("MARC_PROFILE", "MARC_WORKERS", "MARC_DEFAULT_SEED"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings(_env_file=None)
        assert settings.profile == "standard"
        assert settings.default_trials == 100_000
        assert settings.default_seed == 12345
        assert settings.workers == 1

    @pytest.mark.parametrize("profile,trials", [("quick", 10_000), ("standard", 100_000), ("thorough", 1_000_000)])
    def test_profiles(self, profile, trials):
        assert Settings(profile=profile).default_trials == trials

    def test_unknown_profile_falls_back(self):
        assert Settings(profile="huge").default_trials == 100_000

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("MARC_WORKERS", "4")
        monkeypatch.setenv("MARC_PROFILE", "quick")
        settings = Settings(_env_file=None)
        assert settings.workers == 4
        assert settings.default_trials == 10_000

    def test_rejects_zero_workers(self):
        with pytest.raises(ValueError):
            Settings(workers=0)


@pytest.mark.unit
class TestConfigFile:
    """Test flat key = value experiment files"""

    def test_parses_keys(self, tmp_path):
        path = tmp_path / "fig2.conf"
        path.write_text(
            "# relay sweep base\n"
            "k = 20\n"
            "n = 30\n"
            "\n"
            "P1D = 0.3\n"
            "n-r = 10\n"
            "scheme = sys\n",
            encoding="utf-8",
        )
        assert load_config_file(path) == {"k": "20", "n": "30", "p1d": "0.3", "nr": "10", "scheme": "sys"}

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "bad.conf"
        path.write_text("k = 3\nalpha = 2\n", encoding="utf-8")
        with pytest.raises(InvalidArgumentError) as excinfo:
            load_config_file(path)
        assert "alpha" in str(excinfo.value)
        assert ":2:" in str(excinfo.value)

    def test_missing_equals(self, tmp_path):
        path = tmp_path / "bad.conf"
        path.write_text("k 3\n", encoding="utf-8")
        with pytest.raises(InvalidArgumentError):
            load_config_file(path)

    def test_last_value_wins(self, tmp_path):
        path = tmp_path / "twice.conf"
        path.write_text("seed = 1\nseed = 2\n", encoding="utf-8")
        assert load_config_file(path) == {"seed": "2"}

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_config_file(tmp_path / "absent.conf")
